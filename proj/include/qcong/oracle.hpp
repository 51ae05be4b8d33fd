#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "qcong/laurent_poly.hpp"

namespace qcong {

using PolyFn2 = std::function<LaurentPoly(std::int64_t, std::int64_t)>;

struct OracleOutcome {
  bool ok = true;
  std::size_t comparisons = 0;
  std::string counterexample;
};

/// Cross-checks the q-objects against integer brute force for every n <= max_n:
///  - qbinom(n,k) at q=1 against Pascal's triangle;
///  - qtrinom(n,j) at q=1 against both the binomial sum and the direct
///    expansion of (1 + x + 1/x)^n;
///  - qtrinom(n,j) == qtrinom(n,-j), which q=1 evaluation alone cannot see.
/// The q-object constructors are injectable so mutated versions can be fed in.
OracleOutcome run_oracle(std::int64_t max_n, const PolyFn2& qbinom_fn, const PolyFn2& qtrinom_fn);
OracleOutcome run_oracle(std::int64_t max_n);

}  // namespace qcong
