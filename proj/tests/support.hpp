#pragma once

// Test-only generators and independent reference routes. Nothing here calls
// the q-combinatorics constructors under test.

#include <complex>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "qcong/laurent_poly.hpp"

namespace qcong::testing {

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_len = 8, int min_exp_lo = -4, int min_exp_hi = 4,
                               long coeff_bound = 20) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> exp_dist(min_exp_lo, min_exp_hi);
  std::uniform_int_distribution<long> c_dist(-coeff_bound, coeff_bound);
  std::vector<Integer> coeffs(static_cast<std::size_t>(len_dist(rng)));
  for (auto& c : coeffs) c = c_dist(rng);
  return LaurentPoly::from_coeffs(exp_dist(rng), std::move(coeffs));
}

/// Random coefficients of roughly `bits` bits, both signs, with some zeros.
inline std::vector<Integer> random_big_coeffs(std::mt19937_64& rng, std::size_t len, unsigned bits) {
  std::vector<Integer> v(len);
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(rng()));
  for (auto& c : v) {
    const auto r = rng() % 8;
    if (r == 0) continue;
    c = gen.get_z_bits(bits);
    if (r % 2 == 1) c = -c;
  }
  return v;
}

/// Polynomial with the given dense coefficients starting at q^0.
inline LaurentPoly poly(std::initializer_list<long> coeffs, Exponent min_exp = 0) {
  std::vector<Integer> v;
  for (long c : coeffs) v.emplace_back(c);
  return LaurentPoly::from_coeffs(min_exp, std::move(v));
}

/// prod_{gcd(k,n)=1} (q - e^(2 pi i k / n)), rounded to integers. Only valid
/// while the coefficients stay well inside double precision (n <= ~60).
inline LaurentPoly cyclotomic_by_roots(long n) {
  std::vector<std::complex<long double>> c{1.0L};
  for (long k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const long double theta = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
    const std::complex<long double> root(std::cos(theta), std::sin(theta));
    std::vector<std::complex<long double>> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  std::vector<Integer> out;
  for (const auto& z : c) out.emplace_back(static_cast<long>(std::llround(z.real())));
  return LaurentPoly::from_coeffs(0, std::move(out));
}

/// Exact quotient f / g where g has leading coefficient +-1 and g(0) != 0,
/// by plain long division on dense vectors.
inline LaurentPoly exact_quotient(const LaurentPoly& f, const LaurentPoly& g) {
  std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
  const auto gc = g.coeffs();
  const Integer lead = gc.back();
  const std::size_t d = gc.size() - 1;
  if (r.size() < gc.size()) throw std::domain_error("exact_quotient: degree too small");
  std::vector<Integer> quot(r.size() - d);
  for (std::size_t i = r.size(); i-- > d;) {
    const Integer c = r[i] * lead;  // lead is +-1
    quot[i - d] = c;
    for (std::size_t t = 0; t <= d; ++t) r[i - d + t] -= c * gc[t];
  }
  for (const auto& x : r)
    if (x != 0) throw std::domain_error("exact_quotient: nonzero remainder");
  return LaurentPoly::from_coeffs(f.min_exp() - g.min_exp(), std::move(quot));
}

/// (q;q)_n expanded by direct products.
inline LaurentPoly poch_by_product(long n) {
  LaurentPoly acc = LaurentPoly::constant(1);
  for (long i = 1; i <= n; ++i) acc = acc * (LaurentPoly::constant(1) - LaurentPoly::q_power(i));
  return acc;
}

/// [n k]_q from the factorial quotient definition.
inline LaurentPoly qbinom_by_quotient(long n, long k) {
  if (k < 0 || k > n) return {};
  return exact_quotient(exact_quotient(poch_by_product(n), poch_by_product(k)), poch_by_product(n - k));
}

/// Andrews-Baxter sum with factorial-quotient q-binomials.
inline LaurentPoly qtrinom_reference(long n, long j) {
  LaurentPoly acc;
  for (long k = 0; k <= n; ++k) acc += (qbinom_by_quotient(n, k) * qbinom_by_quotient(n - k, k + j)).shifted(k * (k + j));
  return acc;
}

}  // namespace qcong::testing
