#include "qcong/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

namespace qcong {

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  if (c == 0) return {};
  return LaurentPoly(e, std::vector<Integer>{c});
}

LaurentPoly LaurentPoly::from_coeffs(Exponent min_exp, std::vector<Integer> coeffs) {
  LaurentPoly p(min_exp, std::move(coeffs));
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  auto lead = first - coeffs_.begin();
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    min_exp_ += lead;
  }
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer LaurentPoly::coeff(Exponent e) const {
  if (is_zero() || e < min_exp_ || e > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(Exponent e) const {
  if (is_zero()) return {};
  return LaurentPoly(min_exp_ + e, coeffs_);
}

LaurentPoly LaurentPoly::substitute_power(Exponent s) const {
  if (s < 1) throw std::invalid_argument("substitute_power: exponent scale must be >= 1");
  if (is_zero() || s == 1) return *this;
  std::vector<Integer> out((coeffs_.size() - 1) * static_cast<std::size_t>(s) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(s)] = coeffs_[i];
  return LaurentPoly(min_exp_ * s, std::move(out));
}

LaurentPoly LaurentPoly::times_one_minus_q_pow(Exponent e) const {
  if (e < 1) throw std::invalid_argument("times_one_minus_q_pow: e must be >= 1");
  if (is_zero()) return {};
  const auto shift = static_cast<std::size_t>(e);
  std::vector<Integer> out(coeffs_.size() + shift);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] += coeffs_[i];
    out[i + shift] -= coeffs_[i];
  }
  return from_coeffs(min_exp_, std::move(out));
}

LaurentPoly LaurentPoly::div_one_minus_q_pow(Exponent e) const {
  if (e < 1) throw std::invalid_argument("div_one_minus_q_pow: e must be >= 1");
  if (is_zero()) return {};
  const auto shift = static_cast<std::size_t>(e);
  if (coeffs_.size() <= shift) throw std::domain_error("div_one_minus_q_pow: inexact division");
  // f = h - q^e h  =>  h_i = f_i + h_{i-e}
  const std::size_t hlen = coeffs_.size() - shift;
  std::vector<Integer> h(hlen);
  for (std::size_t i = 0; i < hlen; ++i) {
    h[i] = coeffs_[i];
    if (i >= shift) h[i] += h[i - shift];
  }
  for (std::size_t i = hlen; i < coeffs_.size(); ++i) {
    Integer expect = (i >= shift) ? -h[i - shift] : Integer(0);
    if (i < hlen) expect += h[i];
    if (coeffs_[i] != expect) throw std::domain_error("div_one_minus_q_pow: inexact division");
  }
  return from_coeffs(min_exp_, std::move(h));
}

void LaurentPoly::add_scaled_shifted(const LaurentPoly& f, const Integer& c, Exponent e) {
  if (f.is_zero() || c == 0) return;
  const Exponent lo = f.min_exp_ + e;
  const Exponent hi = f.max_exp() + e;
  if (is_zero()) {
    coeffs_.assign(f.coeffs_.size(), Integer(0));
    min_exp_ = lo;
  } else {
    if (lo < min_exp_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), Integer(0));
      min_exp_ = lo;
    }
    if (hi > max_exp()) coeffs_.resize(static_cast<std::size_t>(hi - min_exp_ + 1));
  }
  const auto offset = static_cast<std::size_t>(lo - min_exp_);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
    mpz_addmul(coeffs_[offset + i].get_mpz_t(), f.coeffs_[i].get_mpz_t(), c.get_mpz_t());
  canonicalize();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  add_scaled_shifted(g, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  add_scaled_shifted(g, -1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& g) {
  *this = *this * g;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    *this = {};
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  if (std::min(f.span(), g.span()) < detail::kKroneckerThreshold) return detail::mul_schoolbook(f, g);
  return detail::mul_kronecker(f, g);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const Exponent e = min_exp_ + static_cast<Exponent>(i);
    const bool neg = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }

LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

DivMod lp_divmod_monic(const LaurentPoly& f, const LaurentPoly& g) {
  if (!f.is_zero() && f.min_exp() < 0)
    throw std::invalid_argument("lp_divmod_monic: dividend has a negative exponent");
  if (g.is_zero() || g.min_exp() != 0 || g.max_exp() < 1 || g.coeffs().back() != 1)
    throw std::invalid_argument("lp_divmod_monic: divisor must be a monic polynomial of degree >= 1");
  if (f.is_zero()) return {};

  const auto d = static_cast<std::size_t>(g.max_exp());
  const auto top = static_cast<std::size_t>(f.max_exp());
  if (top < d) return {LaurentPoly{}, f};

  std::vector<Integer> r(top + 1);
  auto fc = f.coeffs();
  std::copy(fc.begin(), fc.end(), r.begin() + f.min_exp());

  // Small divisor coefficients go through the _ui kernels.
  auto gc = g.coeffs();
  std::vector<long> small(d);
  std::vector<bool> fits(d);
  for (std::size_t t = 0; t < d; ++t) {
    fits[t] = gc[t].fits_slong_p();
    small[t] = fits[t] ? gc[t].get_si() : 0;
  }

  std::vector<Integer> quot(top - d + 1);
  for (std::size_t i = top + 1; i-- > d;) {
    if (r[i] == 0) continue;
    const Integer c = r[i];
    quot[i - d] = c;
    for (std::size_t t = 0; t < d; ++t) {
      mpz_ptr base = r[i - d + t].get_mpz_t();
      if (fits[t]) {
        const long s = small[t];
        if (s > 0) mpz_submul_ui(base, c.get_mpz_t(), static_cast<unsigned long>(s));
        else if (s < 0) mpz_addmul_ui(base, c.get_mpz_t(), static_cast<unsigned long>(-(s + 1)) + 1UL);
      } else {
        mpz_submul(base, c.get_mpz_t(), gc[t].get_mpz_t());
      }
    }
    r[i] = 0;
  }
  r.resize(d);
  return {LaurentPoly::from_coeffs(0, std::move(quot)), LaurentPoly::from_coeffs(0, std::move(r))};
}

namespace detail {

std::vector<Integer> convolve_schoolbook(std::span<const Integer> f, std::span<const Integer> g) {
  if (f.empty() || g.empty()) return {};
  std::vector<Integer> out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
  }
  return out;
}

LaurentPoly mul_schoolbook(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return LaurentPoly::from_coeffs(f.min_exp() + g.min_exp(), convolve_schoolbook(f.coeffs(), g.coeffs()));
}

LaurentPoly mul_kronecker(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return LaurentPoly::from_coeffs(f.min_exp() + g.min_exp(), convolve_kronecker(f.coeffs(), g.coeffs()));
}

}  // namespace detail

}  // namespace qcong
