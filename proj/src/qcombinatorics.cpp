#include "qcong/qcombinatorics.hpp"

#include <utility>

#include "qcong/once_memo.hpp"

namespace qcong {

namespace {

using QBinomKey = std::pair<std::int64_t, std::int64_t>;

// Roughly 6M stored coefficients before the table is flushed.
constexpr std::size_t kQBinomBudget = std::size_t{6} << 20;

OnceMemo<QBinomKey, LaurentPoly>& qbinom_memo() {
  static OnceMemo<QBinomKey, LaurentPoly> memo(kQBinomBudget,
                                               [](const LaurentPoly& p) { return p.span(); });
  return memo;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LaurentPoly qint(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("qint: m must be >= 0");
  if (m == 0) return {};
  return LaurentPoly::from_coeffs(0, std::vector<Integer>(static_cast<std::size_t>(m), Integer(1)));
}

LaurentPoly qpoch(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("qpoch: n must be >= 0");
  LaurentPoly acc = LaurentPoly::constant(1);
  for (std::int64_t i = 1; i <= n; ++i) acc = acc.times_one_minus_q_pow(i);
  return acc;
}

LaurentPoly qbinom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return {};
  if (2 * k > n) k = n - k;
  if (k == 0) return LaurentPoly::constant(1);
  // [n k] = [n k-1] (1 - q^(n-k+1)) / (1 - q^k); each division is exact.
  return *qbinom_memo().get({n, k}, [n, k] {
    return qbinom(n, k - 1).times_one_minus_q_pow(n - k + 1).div_one_minus_q_pow(k);
  });
}

LaurentPoly qtrinom(std::int64_t n, std::int64_t j) {
  if (n < 0) throw std::invalid_argument("qtrinom: n must be >= 0");
  LaurentPoly acc;
  // Nonzero terms need 0 <= k + j <= n - k.
  const std::int64_t k_lo = std::max<std::int64_t>(0, -j);
  const std::int64_t k_hi = floor_div(n - j, 2);
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const LaurentPoly term = qbinom(n, k) * qbinom(n - k, k + j);
    acc.add_scaled_shifted(term, 1, k * (k + j));
  }
  return acc;
}

Integer binom(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (a >= 0) {
    if (b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  }
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(b));
  return r;
}

Integer trinom(std::int64_t n, std::int64_t j) {
  if (n < 0) throw std::invalid_argument("trinom: n must be >= 0");
  Integer acc = 0;
  for (std::int64_t k = 0; k <= n; ++k) acc += binom(n, k) * binom(n - k, k + j);
  return acc;
}

Mod3Symbol legendre3(std::int64_t x) {
  switch (((x % 3) + 3) % 3) {
    case 0: return {0};
    case 1: return {1};
    default: return {-1};
  }
}

Mod3Case mod3_case(std::int64_t n) {
  switch (n % 3) {
    case 0: return {Mod3Branch::three_m, n / 3};
    case 1: return {Mod3Branch::three_m_plus_one, (n - 1) / 3};
    default: return {Mod3Branch::three_m_minus_one, (n + 1) / 3};
  }
}

LaurentPoly r_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("r_n: n must be >= 1");
  const auto [branch, m] = mod3_case(n);
  const Integer sign = (m % 2 == 0) ? 1 : -1;
  switch (branch) {
    case Mod3Branch::three_m:
      return (LaurentPoly::constant(1) + LaurentPoly::q_power(m)).shifted(m * (3 * m - 1) / 2) * sign;
    case Mod3Branch::three_m_plus_one:
      return LaurentPoly::monomial(sign, m * (3 * m + 1) / 2);
    case Mod3Branch::three_m_minus_one:
      return LaurentPoly::monomial(sign, m * (3 * m - 1) / 2);
  }
  throw std::logic_error("r_n: unreachable");
}

LaurentPoly symbol_monomial(Mod3Symbol s, std::int64_t num, std::int64_t den) {
  if (den != 1 && den != 2 && den != 3 && den != 6)
    throw std::invalid_argument("symbol_monomial: den must be one of 1, 2, 3, 6");
  if (s.value == 0) return {};
  if (num % den != 0) throw ExponentError("non-integral exponent with nonzero symbol");
  return LaurentPoly::monomial(s.value, num / den);
}

std::size_t qbinom_table_size() { return qbinom_memo().size(); }

void qbinom_table_clear() { qbinom_memo().clear(); }

}  // namespace qcong
