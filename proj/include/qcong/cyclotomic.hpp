#pragma once

#include <cstdint>

#include "qcong/laurent_poly.hpp"

namespace qcong {

/// Phi_n(q)^k, expanded. poly is monic of degree k * totient(n).
struct CyclotomicModulus {
  std::int64_t n = 1;
  std::int64_t k = 1;
  LaurentPoly poly;
};

/// n-th cyclotomic polynomial, by exact division of q^n - 1 by the
/// cyclotomic factors of the proper divisors of n. Memoized; thread-safe.
LaurentPoly cyclo(std::int64_t n);

CyclotomicModulus cyclo_pow(std::int64_t n, std::int64_t k);

std::int64_t euler_totient(std::int64_t n);

/// Residue test modulo Phi_n^k. f is first multiplied by q^(-min_exp(f));
/// q is a unit modulo Phi_n^k because Phi_n(0) = +-1, so zero-ness of the
/// residue class is preserved. Returns the remainder as witness.
struct CongruenceResult {
  bool zero = false;
  LaurentPoly remainder;
};

CongruenceResult lp_congruent_zero(const LaurentPoly& f, const CyclotomicModulus& m);

}  // namespace qcong
