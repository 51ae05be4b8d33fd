#include "qcong/cyclotomic.hpp"

#include <stdexcept>
#include <utility>

#include "qcong/once_memo.hpp"

namespace qcong {

namespace {

OnceMemo<std::int64_t, LaurentPoly>& cyclo_memo() {
  static OnceMemo<std::int64_t, LaurentPoly> memo;
  return memo;
}

OnceMemo<std::pair<std::int64_t, std::int64_t>, LaurentPoly>& cyclo_pow_memo() {
  static OnceMemo<std::pair<std::int64_t, std::int64_t>, LaurentPoly> memo;
  return memo;
}

LaurentPoly build_cyclo(std::int64_t n) {
  // q^n - 1 divided by Phi_d for every proper divisor d of n.
  LaurentPoly acc = LaurentPoly::q_power(n) - LaurentPoly::constant(1);
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [quot, rem] = lp_divmod_monic(acc, cyclo(d));
    if (!rem.is_zero()) throw std::logic_error("cyclo: inexact division by Phi_" + std::to_string(d));
    acc = std::move(quot);
  }
  return acc;
}

}  // namespace

LaurentPoly cyclo(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclo: n must be >= 1");
  return *cyclo_memo().get(n, [n] { return build_cyclo(n); });
}

CyclotomicModulus cyclo_pow(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("cyclo_pow: n and k must be >= 1");
  auto poly = cyclo_pow_memo().get({n, k}, [n, k] {
    const LaurentPoly base = cyclo(n);
    LaurentPoly acc = base;
    for (std::int64_t i = 1; i < k; ++i) acc = acc * base;
    return acc;
  });
  return {n, k, *poly};
}

std::int64_t euler_totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_totient: n must be >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CongruenceResult lp_congruent_zero(const LaurentPoly& f, const CyclotomicModulus& m) {
  if (f.is_zero()) return {true, {}};
  auto [quot, rem] = lp_divmod_monic(f.shifted(-f.min_exp()), m.poly);
  const bool zero = rem.is_zero();
  return {zero, std::move(rem)};
}

}  // namespace qcong
