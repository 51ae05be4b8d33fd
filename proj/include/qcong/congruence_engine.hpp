#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "qcong/laurent_poly.hpp"
#include "qcong/rat_fun.hpp"
#include "qcong/theorem.hpp"

namespace qcong {

struct CheckResult {
  TheoremId theorem = TheoremId::LEMMA1;
  ParamTuple params;
  bool passed = false;
  /// Reduced difference; zero iff passed.
  LaurentPoly witness;
  /// Phi_n-adic valuation of lhs - rhs, reported for exact identities and
  /// rational-function checks.
  std::optional<Valuation> valuation;
  std::chrono::nanoseconds elapsed{0};
  /// Set for falsification probes.
  std::optional<std::int64_t> perturb;
  /// Free-form diagnostics (e.g. an exponent-integrality violation).
  std::string note;
};

/// Exact left-hand side of the statement, as displayed.
RatFun lhs_value(TheoremId id, const ParamTuple& p);

/// Exact right-hand side. STRAUB is returned in its 24-cleared form, with
/// lhs_value scaled to match.
RatFun rhs_value(TheoremId id, const ParamTuple& p);

/// Raw form of the Prop-1 left-hand side, with [2k]_q denominators. For even
/// n its last denominator is divisible by Phi_n; run_check evaluates the
/// algebraically equal (1-q)/(1-q^k) form and asserts equality with this one.
RatFun prop1_lhs_raw(std::int64_t n);

/// Decides the statement. Failing checks are data (passed == false); only
/// schema violations throw (SchemaError).
CheckResult run_check(TheoremId id, const ParamTuple& p);

/// Binomial congruence [an n] = a - n(1-q^n) a(a-1)/2 (mod Phi_n^2).
CheckResult check_eq18(std::int64_t n, std::int64_t a);

/// run_check with perturb * q^(n-1) added to the right-hand side. A sound
/// checker must report failure.
CheckResult falsification_probe(TheoremId id, const ParamTuple& p, std::int64_t perturb);

/// lhs == rhs modulo Phi_n^k; k == 0 asks for exact equality.
bool congruent(const RatFun& lhs, const RatFun& rhs, std::int64_t n, int k);

}  // namespace qcong
