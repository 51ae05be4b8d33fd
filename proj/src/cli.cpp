#include "qcong/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "qcong/congruence_engine.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/oracle.hpp"
#include "qcong/qcombinatorics.hpp"
#include "qcong/sweep.hpp"

namespace qcong {

namespace {

struct CheckArgs {
  std::string theorem;
  std::optional<std::int64_t> n, a, b, j;
  bool full_witness = false;
};

struct SweepArgs {
  std::string config;
  std::string out;
  bool parallel = false;
  bool fail_fast = false;
  bool full_witness = false;
};

struct TableArgs {
  std::string kind;
  std::optional<std::int64_t> n, j, k;
};

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  auto id = parse_theorem(args.theorem);
  if (!id) {
    err << "unknown theorem: " << args.theorem << "\n";
    return kExitUsage;
  }
  if (!args.n) {
    err << "--n is required\n";
    return kExitUsage;
  }
  ParamTuple p{.n = *args.n, .a = args.a, .b = args.b, .j = args.j};
  CheckResult r;
  try {
    r = run_check(*id, p);
  } catch (const SchemaError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  out << to_string(r.theorem) << " " << p.to_string() << ": " << (r.passed ? "PASS" : "FAIL");
  if (r.valuation && (!r.passed || r.valuation->has_value()))
    out << " valuation=" << valuation_to_string(*r.valuation);
  if (!r.passed) out << " witness: " << render_witness(r.witness, args.full_witness);
  if (!r.note.empty()) out << " (" << r.note << ")";
  out << "\n";
  return r.passed ? kExitOk : kExitFail;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  try {
    cfg = load_sweep_config(args.config);
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (args.parallel) cfg.parallel = true;
  if (args.fail_fast) cfg.fail_fast = true;

  const Report report = run_sweep(cfg);
  const auto doc = report_to_json(report, args.full_witness);
  if (args.out.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    std::ofstream file(args.out);
    if (!file) {
      err << "cannot write " << args.out << "\n";
      return kExitUsage;
    }
    file << doc.dump(2) << "\n";
    out << "passed " << report.passed << ", failed " << report.failed << ", skipped " << report.skipped.size()
        << ", expected-fail " << report.expected_fail << "\n";
  }
  return report.failed == 0 ? kExitOk : kExitFail;
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  auto need = [&](const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) err << "table " << args.kind << " requires " << flag << "\n";
    return v.has_value();
  };
  if (args.kind == "qtrinom") {
    if (!need(args.n, "--n") || !need(args.j, "--j")) return kExitUsage;
    if (*args.n < 0) {
      err << "n must be >= 0\n";
      return kExitUsage;
    }
    out << qtrinom(*args.n, *args.j).to_string() << "\n";
  } else if (args.kind == "qbinom") {
    if (!need(args.n, "--n") || !need(args.k, "--k")) return kExitUsage;
    out << qbinom(*args.n, *args.k).to_string() << "\n";
  } else if (args.kind == "cyclo" || args.kind == "rn") {
    if (!need(args.n, "--n")) return kExitUsage;
    if (*args.n < 1) {
      err << "n must be >= 1\n";
      return kExitUsage;
    }
    out << (args.kind == "cyclo" ? cyclo(*args.n) : r_n(*args.n)).to_string() << "\n";
  } else {
    err << "unknown table kind: " << args.kind << " (expected qtrinom, qbinom, cyclo or rn)\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_oracle(std::int64_t max_n, std::ostream& out, std::ostream& err) {
  if (max_n < 1) {
    err << "max-n must be >= 1\n";
    return kExitUsage;
  }
  const auto outcome = run_oracle(max_n);
  if (!outcome.ok) {
    out << "MISMATCH: " << outcome.counterexample << "\n";
    return kExitFail;
  }
  out << "oracle agreement for n <= " << max_n << " (" << outcome.comparisons << " comparisons)\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-binomial / q-trinomial congruence checker", "qcong"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide one statement for one parameter tuple");
  check_cmd->add_option("theorem", check.theorem, "Theorem id, e.g. THM_EQ7")->required();
  check_cmd->add_option("--n", check.n);
  check_cmd->add_option("--a", check.a);
  check_cmd->add_option("--b", check.b);
  check_cmd->add_option("--j", check.j);
  check_cmd->add_flag("--full-witness", check.full_witness);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a configured parameter sweep and emit a JSON report");
  sweep_cmd->add_option("--config", sweep.config)->required();
  sweep_cmd->add_option("--out", sweep.out);
  sweep_cmd->add_flag("--parallel", sweep.parallel);
  sweep_cmd->add_flag("--fail-fast", sweep.fail_fast);
  sweep_cmd->add_flag("--full-witness", sweep.full_witness);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a polynomial: qtrinom, qbinom, cyclo or rn");
  table_cmd->add_option("kind", table.kind)->required();
  table_cmd->add_option("--n", table.n);
  table_cmd->add_option("--j", table.j);
  table_cmd->add_option("--k", table.k);

  std::int64_t max_n = 20;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check q=1 specializations against integer brute force");
  oracle_cmd->add_option("--max-n,max_n", max_n);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  if (*check_cmd) return cmd_check(check, out, err);
  if (*sweep_cmd) return cmd_sweep(sweep, out, err);
  if (*table_cmd) return cmd_table(table, out, err);
  if (*oracle_cmd) return cmd_oracle(max_n, out, err);
  return kExitUsage;
}

}  // namespace qcong
