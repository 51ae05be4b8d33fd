#pragma once

#include <cstdint>
#include <stdexcept>

#include "qcong/laurent_poly.hpp"

namespace qcong {

/// Legendre symbol modulo 3: 0, +1 or -1 as x = 0, 1, 2 (mod 3).
struct Mod3Symbol {
  int value = 0;
  friend bool operator==(Mod3Symbol, Mod3Symbol) = default;
};

/// Thrown when a symbol-guarded monomial has a nonzero symbol but a
/// non-integral exponent.
class ExponentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// [m]_q = 1 + q + ... + q^(m-1); qint(0) = 0.
LaurentPoly qint(std::int64_t m);

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n).
LaurentPoly qpoch(std::int64_t n);

/// Gaussian binomial [n k]_q; zero unless 0 <= k <= n. Memoized per (n, k).
LaurentPoly qbinom(std::int64_t n, std::int64_t k);

/// Andrews-Baxter q-trinomial
///   ((n j))_q = sum_k q^(k(k+j)) [n k]_q [n-k k+j]_q.
/// Any integer j is accepted; terms whose inner q-binomial is out of range
/// vanish.
LaurentPoly qtrinom(std::int64_t n, std::int64_t j);

/// C(a, b), zero when b < 0 or b > a (a >= 0). For negative a the
/// generalized falling-factorial value is returned.
Integer binom(std::int64_t a, std::int64_t b);

/// Coefficient of x^j in (1 + x + 1/x)^n, via sum_k C(n,k) C(n-k,k+j).
Integer trinom(std::int64_t n, std::int64_t j);

Mod3Symbol legendre3(std::int64_t x);

/// Right-hand side of Liu's three-case identity:
///   n = 3m:   (-1)^m (1 + q^m) q^(m(3m-1)/2)
///   n = 3m+1: (-1)^m q^(m(3m+1)/2)
///   n = 3m-1: (-1)^m q^(m(3m-1)/2)
/// Requires n >= 1.
LaurentPoly r_n(std::int64_t n);

/// Branch selection shared by every three-case right-hand side.
enum class Mod3Branch { three_m, three_m_plus_one, three_m_minus_one };

struct Mod3Case {
  Mod3Branch branch;
  std::int64_t m;
};

Mod3Case mod3_case(std::int64_t n);

/// s * q^(num/den). Zero when s is 0, in which case the exponent is never
/// evaluated. den must be one of 1, 2, 3, 6.
LaurentPoly symbol_monomial(Mod3Symbol s, std::int64_t num, std::int64_t den);

/// Memo statistics for the q-binomial table.
std::size_t qbinom_table_size();
void qbinom_table_clear();

}  // namespace qcong
