#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qcong/laurent_poly.hpp"

namespace qcong {

/// Quotient of two Laurent polynomials. Only monomial content is normalized
/// (the denominator is kept with min_exp() == 0); no gcd reduction is done, so
/// equality is decided by cross-multiplication.
class RatFun {
 public:
  RatFun() : num_(), den_(LaurentPoly::constant(1)) {}
  RatFun(LaurentPoly num)  // NOLINT(google-explicit-constructor): polynomials embed
      : num_(std::move(num)), den_(LaurentPoly::constant(1)) {}
  RatFun(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly::constant(1); }

  RatFun operator-() const { return {-num_, den_}; }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

  /// Equality as rational functions.
  friend bool operator==(const RatFun& a, const RatFun& b);

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

enum class RatOp { add, sub, mul };

RatFun rf_arith(const RatFun& a, const RatFun& b, RatOp op);

/// Phi_n-adic valuation; std::nullopt stands for +infinity (zero input).
using Valuation = std::optional<std::int64_t>;

/// Multiplicity of Phi_n(q) in a nonzero Laurent polynomial, after clearing
/// the unit power of q.
std::int64_t phi_multiplicity(const LaurentPoly& f, std::int64_t n);

/// Valuation of (a - b) at Phi_n. Congruence modulo Phi_n^k means >= k.
Valuation rf_valuation_diff(const RatFun& a, const RatFun& b, std::int64_t n);

std::string valuation_to_string(const Valuation& v);

}  // namespace qcong
