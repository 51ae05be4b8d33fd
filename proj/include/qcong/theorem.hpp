#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcong {

enum class TheoremId {
  LEMMA1,
  LEMMA2,
  PROP1,
  STRAUB,
  THM_EQ26,
  THM_EQ7,
  THM_EQ8,
  THM_EQ9,
  THM_EQ10,
  THM_EQ11,
  THM7_SUM,
  EQ22,
  REMARK,
  EQ18,
};

inline constexpr std::array kAllTheorems = {
    TheoremId::LEMMA1,   TheoremId::LEMMA2,   TheoremId::PROP1,    TheoremId::STRAUB, TheoremId::THM_EQ26,
    TheoremId::THM_EQ7,  TheoremId::THM_EQ8,  TheoremId::THM_EQ9,  TheoremId::THM_EQ10,
    TheoremId::THM_EQ11, TheoremId::THM7_SUM, TheoremId::EQ22,     TheoremId::REMARK, TheoremId::EQ18,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

struct ParamTuple {
  std::int64_t n = 1;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::optional<std::int64_t> j;

  friend auto operator<=>(const ParamTuple&, const ParamTuple&) = default;
  std::string to_string() const;
};

/// Which of a, b, j a theorem takes.
struct ParamSchema {
  bool a = false;
  bool b = false;
  bool j = false;
};

ParamSchema schema_of(TheoremId id);

/// Power k of Phi_n(q) the statement is taken modulo; 0 for exact identities.
int modulus_power(TheoremId id);

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws SchemaError describing the first violated hypothesis.
void validate(TheoremId id, const ParamTuple& p);

/// Non-throwing form; returns the violation message, if any.
std::optional<std::string> schema_violation(TheoremId id, const ParamTuple& p);

}  // namespace qcong
