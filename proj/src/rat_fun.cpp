#include "qcong/rat_fun.hpp"

#include <stdexcept>

#include "qcong/cyclotomic.hpp"

namespace qcong {

RatFun::RatFun(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  // Strip monomial content: move q^min_exp(den) over to the numerator.
  const Exponent e = den_.min_exp();
  if (e != 0) {
    den_ = den_.shifted(-e);
    num_ = num_.shifted(-e);
  }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RatFun operator*(const RatFun& a, const RatFun& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFun rf_arith(const RatFun& a, const RatFun& b, RatOp op) {
  switch (op) {
    case RatOp::add: return a + b;
    case RatOp::sub: return a - b;
    case RatOp::mul: return a * b;
  }
  throw std::invalid_argument("rf_arith: unknown op");
}

std::int64_t phi_multiplicity(const LaurentPoly& f, std::int64_t n) {
  if (f.is_zero()) throw std::invalid_argument("phi_multiplicity: zero polynomial");
  const LaurentPoly phi = cyclo(n);
  LaurentPoly cur = f.shifted(-f.min_exp());
  std::int64_t count = 0;
  while (cur.max_exp() >= phi.max_exp()) {
    auto [quot, rem] = lp_divmod_monic(cur, phi);
    if (!rem.is_zero()) break;
    cur = std::move(quot);
    ++count;
  }
  return count;
}

Valuation rf_valuation_diff(const RatFun& a, const RatFun& b, std::int64_t n) {
  const RatFun diff = a - b;
  if (diff.is_zero()) return std::nullopt;
  return phi_multiplicity(diff.num(), n) - phi_multiplicity(diff.den(), n);
}

std::string valuation_to_string(const Valuation& v) { return v ? std::to_string(*v) : "inf"; }

}  // namespace qcong
