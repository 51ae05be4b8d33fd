#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qcong {

using Integer = mpz_class;
using Exponent = std::int64_t;

/// Exact univariate Laurent polynomial in q with arbitrary-precision integer
/// coefficients.
///
/// Storage is dense: coeffs()[i] is the coefficient of q^(min_exp() + i).
/// Every value is canonical: the first and last stored coefficients are
/// nonzero, and zero is the empty sequence with min_exp() == 0. Structural
/// equality is therefore mathematical equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, Exponent e);
  static LaurentPoly q_power(Exponent e) { return monomial(1, e); }
  static LaurentPoly from_coeffs(Exponent min_exp, std::vector<Integer> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  Exponent min_exp() const { return min_exp_; }
  /// Highest exponent present; min_exp() - 1 for the zero polynomial.
  Exponent max_exp() const { return min_exp_ + static_cast<Exponent>(coeffs_.size()) - 1; }
  /// Length of the dense exponent span.
  std::size_t span() const { return coeffs_.size(); }
  std::size_t term_count() const;
  std::span<const Integer> coeffs() const { return coeffs_; }
  Integer coeff(Exponent e) const;

  Integer eval_at_one() const;

  /// this * q^e
  LaurentPoly shifted(Exponent e) const;
  /// Exponent substitution q -> q^s, s >= 1.
  LaurentPoly substitute_power(Exponent s) const;
  /// this * (1 - q^e), e >= 1.
  LaurentPoly times_one_minus_q_pow(Exponent e) const;
  /// Exact quotient this / (1 - q^e), e >= 1; throws std::domain_error when
  /// the division leaves a remainder.
  LaurentPoly div_one_minus_q_pow(Exponent e) const;

  /// In place: this += c * q^e * f.
  void add_scaled_shifted(const LaurentPoly& f, const Integer& c, Exponent e);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  LaurentPoly& operator*=(const LaurentPoly& g);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(LaurentPoly f, const Integer& c) { return f *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly f) { return f *= c; }

  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
    return f.min_exp_ == g.min_exp_ && f.coeffs_ == g.coeffs_;
  }

  /// Canonical rendering, increasing exponent: "q^-2 + 1 + 3*q^5".
  std::string to_string() const;

 private:
  LaurentPoly(Exponent min_exp, std::vector<Integer> coeffs)
      : min_exp_(min_exp), coeffs_(std::move(coeffs)) {}
  void canonicalize();

  Exponent min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

struct DivMod {
  LaurentPoly quot;
  LaurentPoly rem;
};

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g);

/// Division by a monic ordinary polynomial of degree >= 1. f must not carry
/// negative exponents. Throws std::invalid_argument on precondition failure.
DivMod lp_divmod_monic(const LaurentPoly& f, const LaurentPoly& g);

namespace detail {

// Both return bit-identical results; lp_mul picks one by operand size.
LaurentPoly mul_schoolbook(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul_kronecker(const LaurentPoly& f, const LaurentPoly& g);

// Dense coefficient products, no exponent bookkeeping.
std::vector<Integer> convolve_schoolbook(std::span<const Integer> f, std::span<const Integer> g);
std::vector<Integer> convolve_kronecker(std::span<const Integer> f, std::span<const Integer> g);

inline constexpr std::size_t kKroneckerThreshold = 24;

}  // namespace detail

}  // namespace qcong
