#include "qcong/theorem.hpp"

#include <sstream>

namespace qcong {

namespace {

constexpr std::array<std::string_view, kAllTheorems.size()> kNames = {
    "LEMMA1", "LEMMA2",   "PROP1",    "STRAUB", "THM_EQ26", "THM_EQ7", "THM_EQ8",
    "THM_EQ9", "THM_EQ10", "THM_EQ11", "THM7_SUM", "EQ22",   "REMARK",  "EQ18",
};

bool odd(std::int64_t n) { return n % 2 != 0; }

}  // namespace

std::string_view to_string(TheoremId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kAllTheorems[i];
  return std::nullopt;
}

std::string ParamTuple::to_string() const {
  std::ostringstream os;
  os << "n=" << n;
  if (a) os << " a=" << *a;
  if (b) os << " b=" << *b;
  if (j) os << " j=" << *j;
  return os.str();
}

ParamSchema schema_of(TheoremId id) {
  switch (id) {
    case TheoremId::LEMMA1:
    case TheoremId::LEMMA2:
    case TheoremId::PROP1:
    case TheoremId::THM_EQ26:
    case TheoremId::EQ22: return {};
    case TheoremId::STRAUB:
    case TheoremId::THM_EQ11: return {.a = true, .b = true};
    case TheoremId::THM_EQ7:
    case TheoremId::THM_EQ8:
    case TheoremId::REMARK:
    case TheoremId::EQ18: return {.a = true};
    case TheoremId::THM_EQ9:
    case TheoremId::THM_EQ10: return {.a = true, .j = true};
    case TheoremId::THM7_SUM: return {.j = true};
  }
  return {};
}

int modulus_power(TheoremId id) {
  switch (id) {
    case TheoremId::LEMMA1:
    case TheoremId::LEMMA2: return 0;
    case TheoremId::STRAUB: return 3;
    case TheoremId::THM_EQ26:
    case TheoremId::THM_EQ7:
    case TheoremId::THM_EQ8:
    case TheoremId::EQ18: return 2;
    default: return 1;
  }
}

std::optional<std::string> schema_violation(TheoremId id, const ParamTuple& p) {
  const auto schema = schema_of(id);
  const std::string name(to_string(id));
  if (schema.a != p.a.has_value()) return name + (schema.a ? " requires a" : " takes no a");
  if (schema.b != p.b.has_value()) return name + (schema.b ? " requires b" : " takes no b");
  if (schema.j != p.j.has_value()) return name + (schema.j ? " requires j" : " takes no j");

  const std::int64_t n = p.n;
  const std::int64_t a = p.a.value_or(0);
  const std::int64_t b = p.b.value_or(0);
  const std::int64_t j = p.j.value_or(0);

  switch (id) {
    case TheoremId::LEMMA1:
    case TheoremId::LEMMA2:
      if (n < 0) return "n must be >= 0";
      break;
    case TheoremId::PROP1:
    case TheoremId::THM_EQ26:
      if (n < 1) return "n must be >= 1";
      break;
    case TheoremId::STRAUB:
      if (n < 1) return "n must be >= 1";
      if (b < 0) return "b must be >= 0";
      if (a < b) return "a must be >= b";
      break;
    case TheoremId::THM_EQ7:
    case TheoremId::EQ18:
      if (n < 1) return "n must be >= 1";
      if (a < 1) return "a must be >= 1";
      break;
    case TheoremId::THM_EQ8:
      if (n < 1) return "n must be >= 1";
      if (a < 2) return "a must be >= 2";
      break;
    case TheoremId::THM_EQ9:
      if (n < 1 || !odd(n)) return "n must be a positive odd integer";
      if (a < 1) return "a must be >= 1";
      if (j < 0 || j > n - 1) return "j must satisfy 0 <= j <= n-1";
      break;
    case TheoremId::THM_EQ10:
      if (n < 1 || !odd(n)) return "n must be a positive odd integer";
      if (a < 2) return "a must be >= 2";
      if (j < 0 || j > n) return "j must satisfy 0 <= j <= n";
      break;
    case TheoremId::THM_EQ11:
      if (n < 1 || !odd(n)) return "n must be a positive odd integer";
      if (a < 2) return "a must be >= 2";
      if (b < 1) return "b must be >= 1";
      if (a > b + 2) return "a must satisfy a <= b+2";
      break;
    case TheoremId::THM7_SUM:
      if (n < 1 || !odd(n)) return "n must be a positive odd integer";
      if (j < 0 || j > n - 1) return "j must satisfy 0 <= j <= n-1";
      break;
    case TheoremId::EQ22:
      if (n < 1 || !odd(n)) return "n must be a positive odd integer";
      break;
    case TheoremId::REMARK:
      if (n < 1 || !odd(n)) return "n must be a positive odd integer";
      if (a < 2) return "a must be >= 2";
      break;
  }
  return std::nullopt;
}

void validate(TheoremId id, const ParamTuple& p) {
  if (auto msg = schema_violation(id, p)) throw SchemaError(std::string(to_string(id)) + ": " + *msg);
}

}  // namespace qcong
