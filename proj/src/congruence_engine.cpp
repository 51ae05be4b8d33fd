#include "qcong/congruence_engine.hpp"

#include "qcong/cyclotomic.hpp"
#include "qcong/qcombinatorics.hpp"

namespace qcong {

namespace {

using Clock = std::chrono::steady_clock;

LaurentPoly one() { return LaurentPoly::constant(1); }
LaurentPoly q_pow(Exponent e) { return LaurentPoly::q_power(e); }
LaurentPoly one_minus_q_pow(Exponent e) { return one() - q_pow(e); }
Integer sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

// N (1 - q^N) for the branch's N in {3m, 3m+1, 3m-1}; N always equals n.
LaurentPoly branch_tail(std::int64_t n) {
  const auto [branch, m] = mod3_case(n);
  std::int64_t big_n = 0;
  switch (branch) {
    case Mod3Branch::three_m: big_n = 3 * m; break;
    case Mod3Branch::three_m_plus_one: big_n = 3 * m + 1; break;
    case Mod3Branch::three_m_minus_one: big_n = 3 * m - 1; break;
  }
  return one_minus_q_pow(big_n) * Integer(big_n);
}

// Liu's closed form, extended to n = 0 through the n = 3m branch at m = 0.
LaurentPoly liu_closed_form(std::int64_t n) {
  if (n == 0) return LaurentPoly::constant(2);
  return r_n(n);
}

RatFun lemma1_lhs(std::int64_t n) {
  // The k = 0 summand's factor (1 - q^n)/(1 - q^n) cancels for every n, so
  // that summand is [n 0] = 1.
  RatFun tail;
  for (std::int64_t k = 1; k <= n / 2; ++k) {
    LaurentPoly num = qbinom(n - k, k).shifted(k * (k - 1) / 2) * sign_pow(k);
    tail += RatFun(std::move(num), one_minus_q_pow(n - k));
  }
  if (tail.is_zero()) return RatFun(one());
  return RatFun(one()) + tail * RatFun(one_minus_q_pow(n));
}

LaurentPoly lemma2_lhs(std::int64_t n) {
  LaurentPoly acc;
  for (std::int64_t k = 0; k <= n; ++k) acc.add_scaled_shifted(qbinom(n - k, k), sign_pow(k), k * (k - 1) / 2);
  return acc;
}

RatFun prop1_lhs_rewritten(std::int64_t n) {
  RatFun acc;
  for (std::int64_t k = 1; k <= n / 2; ++k) {
    LaurentPoly num = qbinom(2 * k - 1, k).times_one_minus_q_pow(1).shifted(-k * (k - 1));
    acc += RatFun(std::move(num), one_minus_q_pow(k));
  }
  return acc;
}

LaurentPoly central_sum(std::int64_t n, std::int64_t j) {
  LaurentPoly acc;
  for (std::int64_t k = 0; k <= n - j - 1; ++k) acc.add_scaled_shifted(qbinom(2 * k + j, k), 1, -k * (k + 1 + j));
  return acc;
}

// The Legendre-symbol monomial shared by the mod-Phi_n trinomial theorems:
// ((n-j)/3) q^((n-j-1)(n-j-2)/6 - (j^2+j)/2).
LaurentPoly contiguous_term(std::int64_t n, std::int64_t j) {
  return symbol_monomial(legendre3(n - j), (n - j - 1) * (n - j - 2) - 3 * (j * j + j), 6);
}

RatFun lhs_impl(TheoremId id, const ParamTuple& p) {
  const std::int64_t n = p.n;
  const std::int64_t a = p.a.value_or(0);
  const std::int64_t b = p.b.value_or(0);
  const std::int64_t j = p.j.value_or(0);
  switch (id) {
    case TheoremId::LEMMA1: return lemma1_lhs(n);
    case TheoremId::LEMMA2: return lemma2_lhs(n);
    case TheoremId::PROP1: return prop1_lhs_rewritten(n);
    case TheoremId::STRAUB: return qbinom(a * n, b * n) * Integer(24);
    case TheoremId::THM_EQ26: return qtrinom(2 * n, 0);
    case TheoremId::THM_EQ7: return qtrinom(a * n, a * n - n);
    case TheoremId::THM_EQ8: return qtrinom(a * n, a * n - 2 * n);
    case TheoremId::THM_EQ9: return qtrinom(a * n - 1, a * n - n + j);
    case TheoremId::THM_EQ10: return qtrinom(a * n - 1, a * n - 2 * n + j);
    case TheoremId::THM_EQ11: return qtrinom(a * n - 1, b * n - 1);
    case TheoremId::THM7_SUM: return central_sum(n, j);
    case TheoremId::EQ22: return central_sum(n, 0);
    case TheoremId::REMARK:
      return LaurentPoly::constant(a) + symbol_monomial(legendre3(n + 1), n * (n - 1), 6);
    case TheoremId::EQ18: return qbinom(a * n, n);
  }
  throw std::logic_error("lhs_value: unknown theorem");
}

RatFun rhs_impl(TheoremId id, const ParamTuple& p) {
  const std::int64_t n = p.n;
  const std::int64_t a = p.a.value_or(0);
  const std::int64_t b = p.b.value_or(0);
  const std::int64_t j = p.j.value_or(0);
  switch (id) {
    case TheoremId::LEMMA1: return liu_closed_form(n);
    case TheoremId::LEMMA2: return symbol_monomial(legendre3(n + 1), n * (n - 1), 6) * sign_pow(n);
    case TheoremId::PROP1:
      return RatFun((one() - r_n(n)).times_one_minus_q_pow(1), one_minus_q_pow(n));
    case TheoremId::STRAUB: {
      const LaurentPoly base = qbinom(a, b).substitute_power(n * n) * Integer(24);
      const LaurentPoly q_n_minus_one = q_pow(n) - one();
      const Integer scale = Integer(a - b) * b * binom(a, b) * (n * n - 1);
      return base - q_n_minus_one * q_n_minus_one * scale;
    }
    case TheoremId::THM_EQ26:
      return r_n(n) * Integer(2) - branch_tail(n) * Integer(3) + one();
    case TheoremId::THM_EQ7:
      return r_n(n) * Integer(a) - branch_tail(n) * binom(a, 2);
    case TheoremId::THM_EQ8:
      return r_n(n) * (binom(a, 2) * 2) - branch_tail(n) * (binom(a + 1, 3) * 3) +
             LaurentPoly::constant((3 * a - a * a) / 2);
    case TheoremId::THM_EQ9: return contiguous_term(n, j);
    case TheoremId::THM_EQ10:
      return contiguous_term(n, j) * Integer(a - 1) + symbol_monomial(legendre3(j), 1 - j * j, 3);
    case TheoremId::THM_EQ11:
      return LaurentPoly::constant(binom(a, b)) +
             symbol_monomial(legendre3(n + 1), n * (n - 1), 6) * binom(a - 1, b);
    case TheoremId::THM7_SUM:
      return symbol_monomial(legendre3(n - j), (n - j - 1) * (n - j - 2), 6) * sign_pow(j);
    case TheoremId::EQ22: return symbol_monomial(legendre3(n), (n - 1) * (n - 2), 6);
    case TheoremId::REMARK:
      return LaurentPoly::monomial(a - 1, -n * (n - 1) / 2) + symbol_monomial(legendre3(n - 1), -n * (n - 2), 3);
    case TheoremId::EQ18:
      return LaurentPoly::constant(a) - one_minus_q_pow(n) * (Integer(n) * a * (a - 1) / 2);
  }
  throw std::logic_error("rhs_value: unknown theorem");
}

void decide(TheoremId id, const ParamTuple& p, const RatFun& lhs, const RatFun& rhs, CheckResult& out) {
  const int k = modulus_power(id);
  const RatFun diff = lhs - rhs;
  const bool rational = !lhs.is_polynomial() || !rhs.is_polynomial();

  if (k == 0) {
    out.passed = diff.is_zero();
    out.witness = diff.num();
    if (out.passed) out.valuation = Valuation{};
    else if (p.n >= 1) out.valuation = rf_valuation_diff(lhs, rhs, p.n);
    return;
  }
  if (!rational) {
    auto cong = lp_congruent_zero(diff.num(), cyclo_pow(p.n, k));
    out.passed = cong.zero;
    out.witness = std::move(cong.remainder);
    return;
  }
  if (diff.is_zero()) {
    out.passed = true;
    out.valuation = Valuation{};
    return;
  }
  const std::int64_t den_mult = phi_multiplicity(diff.den(), p.n);
  const std::int64_t num_mult = phi_multiplicity(diff.num(), p.n);
  out.valuation = Valuation{num_mult - den_mult};
  out.passed = num_mult - den_mult >= k;
  // Zero exactly when Phi_n^(k + den_mult) divides the numerator.
  out.witness = lp_congruent_zero(diff.num(), cyclo_pow(p.n, k + den_mult)).remainder;
}

CheckResult evaluate(TheoremId id, const ParamTuple& p, std::optional<std::int64_t> perturb) {
  validate(id, p);
  CheckResult out;
  out.theorem = id;
  out.params = p;
  out.perturb = perturb;
  const auto start = Clock::now();
  try {
    const RatFun lhs = lhs_impl(id, p);
    RatFun rhs = rhs_impl(id, p);
    if (perturb) rhs += RatFun(LaurentPoly::monomial(*perturb, p.n - 1));
    decide(id, p, lhs, rhs, out);
    if (id == TheoremId::PROP1 && !(prop1_lhs_raw(p.n) == lhs)) {
      out.passed = false;
      out.note = "raw and rewritten left-hand sides differ";
    }
  } catch (const ExponentError& e) {
    out.passed = false;
    out.note = std::string("exponent integrality violated: ") + e.what();
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return out;
}

}  // namespace

RatFun lhs_value(TheoremId id, const ParamTuple& p) {
  validate(id, p);
  return lhs_impl(id, p);
}

RatFun rhs_value(TheoremId id, const ParamTuple& p) {
  validate(id, p);
  return rhs_impl(id, p);
}

RatFun prop1_lhs_raw(std::int64_t n) {
  RatFun acc;
  for (std::int64_t k = 1; k <= n / 2; ++k) acc += RatFun(qbinom(2 * k, k).shifted(-k * (k - 1)), qint(2 * k));
  return acc;
}

CheckResult run_check(TheoremId id, const ParamTuple& p) { return evaluate(id, p, std::nullopt); }

CheckResult check_eq18(std::int64_t n, std::int64_t a) {
  return run_check(TheoremId::EQ18, ParamTuple{.n = n, .a = a});
}

CheckResult falsification_probe(TheoremId id, const ParamTuple& p, std::int64_t perturb) {
  if (perturb == 0) throw std::invalid_argument("falsification_probe: perturb must be nonzero");
  return evaluate(id, p, perturb);
}

bool congruent(const RatFun& lhs, const RatFun& rhs, std::int64_t n, int k) {
  const auto v = rf_valuation_diff(lhs, rhs, n);
  if (k == 0) return !v.has_value();
  return !v.has_value() || *v >= k;
}

}  // namespace qcong
