#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <vector>

#include "qcong/cyclotomic.hpp"
#include "support.hpp"

using namespace qcong;
using qcong::testing::poly;

namespace {

bool is_prime_power(std::int64_t n, std::int64_t& p) {
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    p = d;
    while (n % d == 0) n /= d;
    return n == 1;
  }
  return false;
}

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
  CHECK(cyclo(1) == poly({-1, 1}));
  CHECK(cyclo(2) == poly({1, 1}));
  CHECK(cyclo(5) == poly({1, 1, 1, 1, 1}));
  CHECK(cyclo(6) == poly({1, -1, 1}));
  CHECK(cyclo(12) == poly({1, 0, -1, 0, 1}));
  CHECK_THROWS(cyclo(0));
}

TEST_CASE("first coefficient outside {-1, 0, 1} appears at n = 105") {
  const auto phi = cyclo(105);
  CHECK(phi.coeff(7) == -2);
  CHECK(phi.coeff(41) == -2);
  for (Exponent e = 0; e <= phi.max_exp(); ++e)
    if (e != 7 && e != 41) CHECK(abs(phi.coeff(e)) <= 1);
}

TEST_CASE("agrees with the product over primitive roots") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(cyclo(n) == qcong::testing::cyclotomic_by_roots(n));
  }
}

TEST_CASE("cyclo_pow") {
  const auto m = cyclo_pow(3, 2);
  CHECK(m.n == 3);
  CHECK(m.k == 2);
  CHECK(m.poly == poly({1, 2, 3, 2, 1}));
  CHECK(cyclo_pow(7, 1).poly == cyclo(7));
  CHECK(cyclo_pow(4, 3).poly == poly({1, 0, 3, 0, 3, 0, 1}));
}

TEST_CASE("degree is k * totient(n), leading coefficient 1") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      const auto m = cyclo_pow(n, k);
      CHECK(m.poly.min_exp() == 0);
      CHECK(m.poly.max_exp() == k * euler_totient(n));
      CHECK(m.poly.coeffs().back() == 1);
    }
  }
}

TEST_CASE("product over divisors is q^n - 1") {
  for (std::int64_t n = 1; n <= 100; ++n) {
    LaurentPoly prod = LaurentPoly::constant(1);
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclo(d);
    CAPTURE(n);
    CHECK(prod == LaurentPoly::q_power(n) - LaurentPoly::constant(1));
  }
}

TEST_CASE("value at q = 1") {
  CHECK(cyclo(1).eval_at_one() == 0);
  for (std::int64_t n = 2; n <= 120; ++n) {
    std::int64_t p = 0;
    const Integer expect = is_prime_power(n, p) ? Integer(p) : Integer(1);
    CAPTURE(n);
    CHECK(cyclo(n).eval_at_one() == expect);
  }
}

TEST_CASE("Phi_n has integral value +-1 at q = 0") {
  for (std::int64_t n = 1; n <= 80; ++n) CHECK(abs(cyclo(n).coeff(0)) == 1);
}

TEST_CASE("concurrent first use returns one consistent value") {
  std::vector<std::future<LaurentPoly>> futures;
  for (int t = 0; t < 8; ++t) futures.push_back(std::async(std::launch::async, [] { return cyclo_pow(210, 2).poly; }));
  const auto expect = cyclo(210) * cyclo(210);
  for (auto& f : futures) CHECK(f.get() == expect);
}
