#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qcong/congruence_engine.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/qcombinatorics.hpp"
#include "support.hpp"

using namespace qcong;
using qcong::testing::poly;

namespace {

struct Sample {
  TheoremId id;
  ParamTuple p;
};

// One admissible tuple per theorem, away from the known-false corners.
std::vector<Sample> samples() {
  return {
      {TheoremId::LEMMA1, {.n = 6}},
      {TheoremId::LEMMA2, {.n = 7}},
      {TheoremId::PROP1, {.n = 9}},
      {TheoremId::STRAUB, {.n = 4, .a = 3, .b = 1}},
      {TheoremId::THM_EQ26, {.n = 5}},
      {TheoremId::THM_EQ7, {.n = 4, .a = 3}},
      {TheoremId::THM_EQ8, {.n = 5, .a = 3}},
      {TheoremId::THM_EQ9, {.n = 5, .a = 2, .j = 3}},
      {TheoremId::THM_EQ10, {.n = 5, .a = 2, .j = 5}},
      {TheoremId::THM_EQ11, {.n = 5, .a = 3, .b = 2}},
      {TheoremId::THM7_SUM, {.n = 7, .j = 2}},
      {TheoremId::EQ22, {.n = 9}},
      {TheoremId::REMARK, {.n = 7, .a = 4}},
      {TheoremId::EQ18, {.n = 6, .a = 3}},
  };
}

}  // namespace

TEST_CASE("left-hand side values") {
  CHECK(lhs_value(TheoremId::THM_EQ7, {.n = 3, .a = 1}).num() == qcong::testing::qtrinom_reference(3, 0));
  const auto expect = poly({1}) + poly({1, 1}, -2) + qcong::testing::qbinom_by_quotient(4, 2).shifted(-6);
  CHECK(lhs_value(TheoremId::THM7_SUM, {.n = 3, .j = 0}) == RatFun(expect));
  CHECK(lhs_value(TheoremId::LEMMA2, {.n = 2}).is_zero());
  CHECK(lhs_value(TheoremId::EQ18, {.n = 2, .a = 2}) == RatFun(poly({1, 1, 2, 1, 1})));
}

TEST_CASE("right-hand side values") {
  CHECK(rhs_value(TheoremId::THM_EQ11, {.n = 3, .a = 2, .b = 1}) == RatFun(poly({2, 1})));
  CHECK(rhs_value(TheoremId::THM_EQ7, {.n = 3, .a = 1}) == RatFun(poly({0, -1, -1})));
  CHECK(rhs_value(TheoremId::LEMMA2, {.n = 2}).is_zero());
  CHECK(rhs_value(TheoremId::EQ22, {.n = 5}) == RatFun(LaurentPoly::monomial(-1, 2)));
  CHECK(rhs_value(TheoremId::EQ18, {.n = 2, .a = 2}) == RatFun(poly({0, 0, 2})));
}

TEST_CASE("run_check examples") {
  const auto r = run_check(TheoremId::LEMMA2, {.n = 3});
  CHECK(r.passed);
  CHECK(r.witness.is_zero());
  CHECK(run_check(TheoremId::THM_EQ9, {.n = 3, .a = 1, .j = 0}).passed);
  CHECK(run_check(TheoremId::EQ22, {.n = 5}).passed);
  const auto lemma1 = run_check(TheoremId::LEMMA1, {.n = 6});
  CHECK(lemma1.passed);
  REQUIRE(lemma1.valuation.has_value());
  CHECK_FALSE(lemma1.valuation->has_value());
  const auto prop1 = run_check(TheoremId::PROP1, {.n = 8});
  CHECK(prop1.passed);
  CHECK(prop1.note.empty());
}

TEST_CASE("check_eq18") {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t a = 1; a <= 4; ++a) {
      const auto r = check_eq18(n, a);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(r.passed);
      CHECK(r.theorem == TheoremId::EQ18);
    }
  // Modulo Phi_n^3 the statement is too strong, so the reducer must notice.
  const auto diff = (lhs_value(TheoremId::EQ18, {.n = 5, .a = 3}) - rhs_value(TheoremId::EQ18, {.n = 5, .a = 3})).num();
  CHECK_FALSE(lp_congruent_zero(diff, cyclo_pow(5, 3)).zero);
}

TEST_CASE("every sample passes and its witness is zero") {
  for (const auto& s : samples()) {
    const auto r = run_check(s.id, s.p);
    CAPTURE(to_string(s.id));
    CHECK(r.passed);
    CHECK(r.witness.is_zero());
    CHECK(r.note.empty());
    CHECK(r.params == s.p);
  }
}

TEST_CASE("falsification probes never pass") {
  for (const auto& s : samples()) {
    for (std::int64_t perturb : {1, -1, 2, 7}) {
      const auto r = falsification_probe(s.id, s.p, perturb);
      CAPTURE(to_string(s.id));
      CAPTURE(perturb);
      CHECK_FALSE(r.passed);
      CHECK_FALSE(r.witness.is_zero());
      CHECK(r.perturb == perturb);
    }
  }
  CHECK_THROWS_AS(falsification_probe(TheoremId::EQ22, {.n = 5}, 0), std::invalid_argument);
}

TEST_CASE("witness is zero exactly when the check passes") {
  for (std::int64_t n = 1; n <= 9; n += 2) {
    for (std::int64_t a = 2; a <= 4; ++a) {
      for (std::int64_t b = std::max<std::int64_t>(1, a - 2); b <= a + 1; ++b) {
        const auto r = run_check(TheoremId::THM_EQ11, {.n = n, .a = a, .b = b});
        CHECK(r.passed == r.witness.is_zero());
      }
    }
  }
  for (std::int64_t n = 0; n <= 6; ++n) {
    const auto r = run_check(TheoremId::LEMMA1, {.n = n});
    CHECK(r.passed == r.witness.is_zero());
  }
}

TEST_CASE("STRAUB holds modulo Phi_n^3 for every n, prime or not") {
  for (std::int64_t n = 1; n <= 10; ++n)
    for (std::int64_t a = 0; a <= 4; ++a)
      for (std::int64_t b = 0; b <= a; ++b) {
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(run_check(TheoremId::STRAUB, {.n = n, .a = a, .b = b}).passed);
      }
}

TEST_CASE("PROP1 raw and rewritten sums agree") {
  for (std::int64_t n = 1; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(prop1_lhs_raw(n) == lhs_value(TheoremId::PROP1, {.n = n}));
    const auto r = run_check(TheoremId::PROP1, {.n = n});
    CHECK(r.passed);
    if (r.valuation && r.valuation->has_value()) CHECK(**r.valuation >= 1);
  }
}

TEST_CASE("schema violations throw") {
  CHECK_THROWS_AS(run_check(TheoremId::THM_EQ9, {.n = 4, .a = 1, .j = 0}), SchemaError);
  CHECK_THROWS_AS(run_check(TheoremId::THM_EQ9, {.n = 3, .a = 1, .j = 3}), SchemaError);
  CHECK_THROWS_AS(run_check(TheoremId::THM_EQ10, {.n = 3, .a = 1, .j = 0}), SchemaError);
  CHECK_THROWS_AS(run_check(TheoremId::THM_EQ11, {.n = 3, .a = 5, .b = 2}), SchemaError);
  CHECK_THROWS_AS(run_check(TheoremId::STRAUB, {.n = 3, .a = 1, .b = 2}), SchemaError);
  CHECK_THROWS_AS(run_check(TheoremId::EQ22, {.n = 5, .a = 2}), SchemaError);
  CHECK_THROWS_AS(run_check(TheoremId::THM_EQ7, {.n = 5}), SchemaError);
  CHECK_THROWS_AS(run_check(TheoremId::LEMMA1, {.n = -1}), SchemaError);
  CHECK_THROWS_AS(lhs_value(TheoremId::REMARK, {.n = 2, .a = 3}), SchemaError);
  CHECK(schema_violation(TheoremId::THM_EQ10, {.n = 3, .a = 2, .j = 3}) == std::nullopt);
}

TEST_CASE("congruent helper") {
  const RatFun a(poly({1, 1, 1}));
  CHECK(congruent(a, RatFun(), 3, 1));
  CHECK_FALSE(congruent(a, RatFun(), 3, 2));
  CHECK(congruent(a, a, 3, 0));
  CHECK_FALSE(congruent(a, RatFun(), 3, 0));
}

TEST_CASE("theorem names round-trip") {
  for (auto id : kAllTheorems) CHECK(parse_theorem(to_string(id)) == id);
  CHECK_FALSE(parse_theorem("THM_EQ99").has_value());
  CHECK(ParamTuple{.n = 3, .a = 1, .j = 0}.to_string() == "n=3 a=1 j=0");
}
