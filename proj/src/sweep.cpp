#include "qcong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace qcong {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::int64_t kDefaultMaxN = 30;
constexpr std::int64_t kDefaultMaxA = 5;

bool needs_odd_n(TheoremId id) {
  switch (id) {
    case TheoremId::THM_EQ9:
    case TheoremId::THM_EQ10:
    case TheoremId::THM_EQ11:
    case TheoremId::THM7_SUM:
    case TheoremId::EQ22:
    case TheoremId::REMARK: return true;
    default: return false;
  }
}

std::vector<std::int64_t> values(const IntRange& r) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = r.lo; x <= r.hi; ++x) v.push_back(x);
  return v;
}

std::vector<std::int64_t> default_n(TheoremId id) {
  std::vector<std::int64_t> v;
  for (std::int64_t n = 1; n <= kDefaultMaxN; ++n)
    if (!needs_odd_n(id) || n % 2 == 1) v.push_back(n);
  return v;
}

std::vector<std::int64_t> default_a(TheoremId id) {
  switch (id) {
    case TheoremId::STRAUB: return values({0, kDefaultMaxA});
    case TheoremId::THM_EQ7:
    case TheoremId::THM_EQ9:
    case TheoremId::EQ18: return values({1, kDefaultMaxA});
    default: return values({2, kDefaultMaxA});
  }
}

std::vector<std::int64_t> default_b(TheoremId id, std::int64_t a) {
  if (id == TheoremId::STRAUB) return values({0, a});
  std::vector<std::int64_t> v;
  for (std::int64_t b : {a - 2, a - 1})
    if (b >= 1) v.push_back(b);
  return v;
}

std::vector<std::int64_t> default_j(TheoremId id, std::int64_t n) {
  return values({0, id == TheoremId::THM_EQ10 ? n : n - 1});
}

IntRange parse_range(const json& v, const char* field) {
  if (v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    return {x, x};
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
    IntRange r{v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
    if (r.lo > r.hi) throw ConfigError(std::string("empty range for ") + field);
    return r;
  }
  throw ConfigError(std::string("field ") + field + " must be an integer or [lo, hi]");
}

json range_json(const IntRange& r) { return json::array({r.lo, r.hi}); }

TheoremId parse_theorem_field(const json& obj) {
  if (!obj.contains("theorem") || !obj["theorem"].is_string()) throw ConfigError("entry without a theorem name");
  const auto name = obj["theorem"].get<std::string>();
  auto id = parse_theorem(name);
  if (!id) throw ConfigError("unknown theorem " + name);
  return *id;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const char* where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; }))
      throw ConfigError(std::string("unknown key '") + key + "' in " + where);
  }
}

json params_json(TheoremId id, const ParamTuple& p) {
  json o;
  o["theorem"] = std::string(to_string(id));
  o["n"] = p.n;
  if (p.a) o["a"] = *p.a;
  if (p.b) o["b"] = *p.b;
  if (p.j) o["j"] = *p.j;
  return o;
}

json record_json(const CheckResult& r, bool full_witness) {
  json o = params_json(r.theorem, r.params);
  if (r.perturb) o["perturb"] = *r.perturb;
  o["passed"] = r.passed;
  o["witness"] = render_witness(r.witness, full_witness);
  if (r.valuation) o["valuation"] = valuation_to_string(*r.valuation);
  else o["valuation"] = nullptr;
  if (!r.note.empty()) o["note"] = r.note;
  return o;
}

double to_ms(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

auto sort_key(const CheckResult& r) { return std::tuple(r.theorem, r.params, r.perturb); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

SweepConfig parse_sweep_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(doc, {"checks", "probes", "parallel", "fail_fast"}, "config");
  SweepConfig cfg;
  if (doc.contains("parallel")) cfg.parallel = doc["parallel"].get<bool>();
  if (doc.contains("fail_fast")) cfg.fail_fast = doc["fail_fast"].get<bool>();

  if (doc.contains("checks")) {
    if (!doc["checks"].is_array()) throw ConfigError("checks must be a list");
    for (const auto& e : doc["checks"]) {
      if (!e.is_object()) throw ConfigError("check entry must be an object");
      reject_unknown_keys(e, {"theorem", "n", "a", "b", "j"}, "check entry");
      SweepEntry entry;
      entry.theorem = parse_theorem_field(e);
      const auto schema = schema_of(entry.theorem);
      if (e.contains("n")) entry.n = parse_range(e["n"], "n");
      if (e.contains("a")) entry.a = parse_range(e["a"], "a");
      if (e.contains("b")) entry.b = parse_range(e["b"], "b");
      if (e.contains("j")) entry.j = parse_range(e["j"], "j");
      const std::string name(to_string(entry.theorem));
      if (entry.a && !schema.a) throw ConfigError(name + " takes no a");
      if (entry.b && !schema.b) throw ConfigError(name + " takes no b");
      if (entry.j && !schema.j) throw ConfigError(name + " takes no j");
      cfg.checks.push_back(entry);
    }
  }

  if (doc.contains("probes")) {
    if (!doc["probes"].is_array()) throw ConfigError("probes must be a list");
    for (const auto& e : doc["probes"]) {
      if (!e.is_object()) throw ConfigError("probe entry must be an object");
      reject_unknown_keys(e, {"theorem", "n", "a", "b", "j", "perturb"}, "probe entry");
      ProbeEntry probe;
      probe.theorem = parse_theorem_field(e);
      if (!e.contains("n") || !e["n"].is_number_integer()) throw ConfigError("probe needs an integer n");
      probe.params.n = e["n"].get<std::int64_t>();
      if (e.contains("a")) probe.params.a = e["a"].get<std::int64_t>();
      if (e.contains("b")) probe.params.b = e["b"].get<std::int64_t>();
      if (e.contains("j")) probe.params.j = e["j"].get<std::int64_t>();
      if (e.contains("perturb")) probe.perturb = e["perturb"].get<std::int64_t>();
      if (probe.perturb == 0) throw ConfigError("probe perturb must be nonzero");
      if (auto msg = schema_violation(probe.theorem, probe.params))
        throw ConfigError("probe " + std::string(to_string(probe.theorem)) + ": " + *msg);
      cfg.probes.push_back(probe);
    }
  }

  if (cfg.checks.empty() && cfg.probes.empty()) throw ConfigError("config lists no checks and no probes");
  return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }
  try {
    return parse_sweep_config(doc);
  } catch (const json::exception& e) {
    throw ConfigError("config type error: " + std::string(e.what()));
  }
}

json to_json(const SweepConfig& config) {
  json doc;
  doc["parallel"] = config.parallel;
  doc["fail_fast"] = config.fail_fast;
  doc["checks"] = json::array();
  for (const auto& e : config.checks) {
    json o;
    o["theorem"] = std::string(to_string(e.theorem));
    if (e.n) o["n"] = range_json(*e.n);
    if (e.a) o["a"] = range_json(*e.a);
    if (e.b) o["b"] = range_json(*e.b);
    if (e.j) o["j"] = range_json(*e.j);
    doc["checks"].push_back(o);
  }
  doc["probes"] = json::array();
  for (const auto& p : config.probes) {
    json o = params_json(p.theorem, p.params);
    o["perturb"] = p.perturb;
    doc["probes"].push_back(o);
  }
  return doc;
}

SweepConfig default_sweep_config() {
  SweepConfig cfg;
  for (auto id : kAllTheorems) cfg.checks.push_back({.theorem = id});
  return cfg;
}

SweepPlan expand(const SweepConfig& config) {
  SweepPlan plan;
  for (const auto& e : config.checks) {
    const auto schema = schema_of(e.theorem);
    const auto ns = e.n ? values(*e.n) : default_n(e.theorem);
    for (std::int64_t n : ns) {
      const auto as = !schema.a ? std::vector<std::int64_t>{0} : e.a ? values(*e.a) : default_a(e.theorem);
      for (std::int64_t a : as) {
        const auto bs = !schema.b ? std::vector<std::int64_t>{0} : e.b ? values(*e.b) : default_b(e.theorem, a);
        for (std::int64_t b : bs) {
          const auto js = !schema.j ? std::vector<std::int64_t>{0} : e.j ? values(*e.j) : default_j(e.theorem, n);
          for (std::int64_t j : js) {
            ParamTuple p{.n = n};
            if (schema.a) p.a = a;
            if (schema.b) p.b = b;
            if (schema.j) p.j = j;
            if (auto msg = schema_violation(e.theorem, p)) plan.skipped.push_back({e.theorem, p, *msg});
            else plan.tasks.push_back({e.theorem, p, std::nullopt});
          }
        }
      }
    }
  }
  for (const auto& probe : config.probes) {
    if (auto msg = schema_violation(probe.theorem, probe.params)) plan.skipped.push_back({probe.theorem, probe.params, *msg});
    else plan.tasks.push_back({probe.theorem, probe.params, probe.perturb});
  }
  return plan;
}

Report run_sweep(const SweepConfig& config, RunOptions options) {
  const auto start = Clock::now();
  SweepPlan plan = expand(config);
  std::vector<std::optional<CheckResult>> results(plan.tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (config.fail_fast && stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= plan.tasks.size()) return;
      const auto& task = plan.tasks[i];
      CheckResult r = task.perturb ? falsification_probe(task.theorem, task.params, *task.perturb)
                                   : run_check(task.theorem, task.params);
      const bool bad = task.perturb ? r.passed : !r.passed;
      if (bad) stop.store(true);
      results[i] = std::move(r);
    }
  };

  if (config.parallel) {
    unsigned threads = options.threads != 0 ? options.threads : std::max(2u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  } else {
    worker();
  }

  Report report;
  report.config = to_json(config);
  report.skipped = std::move(plan.skipped);
  for (auto& r : results) {
    if (!r) {
      report.stopped_early = true;
      continue;
    }
    if (r->perturb) {
      if (r->passed) ++report.failed;
      else ++report.expected_fail;
      report.probes.push_back(std::move(*r));
    } else {
      if (r->passed) ++report.passed;
      else ++report.failed;
      report.records.push_back(std::move(*r));
    }
  }
  auto by_key = [](const CheckResult& x, const CheckResult& y) { return sort_key(x) < sort_key(y); };
  std::sort(report.records.begin(), report.records.end(), by_key);
  std::sort(report.probes.begin(), report.probes.end(), by_key);
  std::sort(report.skipped.begin(), report.skipped.end(), [](const SkippedTuple& x, const SkippedTuple& y) {
    return std::tie(x.theorem, x.params) < std::tie(y.theorem, y.params);
  });
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

std::string render_witness(const LaurentPoly& witness, bool full) {
  const std::size_t terms = witness.term_count();
  if (full || terms <= kWitnessElisionTerms) return witness.to_string();
  std::ostringstream os;
  os << "digest: q^" << witness.min_exp() << "..q^" << witness.max_exp() << ", " << terms << " terms, fnv1a64 "
     << std::hex << std::setw(16) << std::setfill('0') << fnv1a(witness.to_string());
  return os.str();
}

json report_to_json(const Report& report, bool full_witness) {
  json doc;
  doc["tool"] = "qcong";
#ifdef QCONG_VERSION
  doc["version"] = QCONG_VERSION;
#endif
  doc["config"] = report.config;
  doc["records"] = json::array();
  for (const auto& r : report.records) doc["records"].push_back(record_json(r, full_witness));
  doc["probes"] = json::array();
  for (const auto& r : report.probes) doc["probes"].push_back(record_json(r, full_witness));
  doc["skipped"] = json::array();
  for (const auto& s : report.skipped) {
    json o = params_json(s.theorem, s.params);
    o["reason"] = s.reason;
    doc["skipped"].push_back(o);
  }

  json timings = json::array();
  for (const auto* list : {&report.records, &report.probes}) {
    for (const auto& r : *list) {
      json o = params_json(r.theorem, r.params);
      if (r.perturb) o["perturb"] = *r.perturb;
      o["elapsed_ms"] = to_ms(r.elapsed);
      timings.push_back(o);
    }
  }
  doc["summary"] = {
      {"passed", report.passed},
      {"failed", report.failed},
      {"skipped", report.skipped.size()},
      {"expected_fail", report.expected_fail},
      {"stopped_early", report.stopped_early},
      {"elapsed_ms", to_ms(report.elapsed)},
      {"timings", timings},
  };
  return doc;
}

json golden_view(const json& report) {
  json copy = report;
  copy.erase("summary");
  if (copy.contains("config")) copy["config"].erase("parallel");
  return copy;
}

}  // namespace qcong
