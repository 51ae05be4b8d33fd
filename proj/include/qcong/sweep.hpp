#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcong/congruence_engine.hpp"
#include "qcong/theorem.hpp"

namespace qcong {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// One theorem's parameter ranges. Absent ranges take the engine defaults,
/// which only ever produce tuples that satisfy the theorem's hypotheses.
struct SweepEntry {
  TheoremId theorem = TheoremId::LEMMA1;
  std::optional<IntRange> n, a, b, j;
};

struct ProbeEntry {
  TheoremId theorem = TheoremId::LEMMA1;
  ParamTuple params;
  std::int64_t perturb = 1;
};

struct SweepConfig {
  std::vector<SweepEntry> checks;
  std::vector<ProbeEntry> probes;
  bool parallel = false;
  bool fail_fast = false;
};

/// Config documents are JSON:
///   {"parallel": false, "fail_fast": false,
///    "checks": [{"theorem": "THM_EQ7", "n": [1, 30], "a": [1, 5]}, {"theorem": "EQ22"}],
///    "probes": [{"theorem": "EQ22", "n": 5, "perturb": 2}]}
/// A range is [lo, hi] (inclusive) or a single integer.
SweepConfig parse_sweep_config(const nlohmann::json& doc);
SweepConfig load_sweep_config(const std::filesystem::path& path);
nlohmann::json to_json(const SweepConfig& config);

/// Every theorem over its engine-default ranges.
SweepConfig default_sweep_config();

struct SweepTask {
  TheoremId theorem = TheoremId::LEMMA1;
  ParamTuple params;
  std::optional<std::int64_t> perturb;
};

struct SkippedTuple {
  TheoremId theorem = TheoremId::LEMMA1;
  ParamTuple params;
  std::string reason;
};

struct SweepPlan {
  std::vector<SweepTask> tasks;
  std::vector<SkippedTuple> skipped;
};

SweepPlan expand(const SweepConfig& config);

struct Report {
  nlohmann::json config;
  std::vector<CheckResult> records;
  std::vector<CheckResult> probes;
  std::vector<SkippedTuple> skipped;
  std::size_t passed = 0;
  /// Failing checks plus probes that unexpectedly passed.
  std::size_t failed = 0;
  std::size_t expected_fail = 0;
  bool stopped_early = false;
  std::chrono::nanoseconds elapsed{0};
};

struct RunOptions {
  /// 0 picks the hardware concurrency (at least two workers).
  unsigned threads = 0;
};

Report run_sweep(const SweepConfig& config, RunOptions options = {});

/// Witness text: canonical rendering, or a digest above 200 terms unless
/// full is set.
std::string render_witness(const LaurentPoly& witness, bool full);

nlohmann::json report_to_json(const Report& report, bool full_witness);

/// The report without its summary block (timings live there) and without
/// the execution-mode flag, so serial and parallel runs compare equal.
nlohmann::json golden_view(const nlohmann::json& report);

inline constexpr std::size_t kWitnessElisionTerms = 200;

}  // namespace qcong
