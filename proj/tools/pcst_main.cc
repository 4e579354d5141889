// Copyright 2026 The pcst Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: solve, exact, gen, verify.
//
// Exit codes: 0 success, 1 usage, 2 parse, 3 verification failure,
// 4 internal invariant failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pcst/instance.hpp"
#include "pcst/oracle.hpp"
#include "pcst/serialize.hpp"
#include "pcst/solver.hpp"
#include "pcst/verify.hpp"

namespace {

using pcst::OrderedJson;
using pcst::Rational;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerification = 3;
constexpr int kExitInvariant = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pcst::ParseError("cannot read " + path, 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << contents;
}

pcst::InstanceFormat ResolveFormat(const std::string& flag, const std::string& path) {
  if (flag.empty()) return pcst::FormatForPath(path);
  try {
    return pcst::ParseInstanceFormat(flag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

pcst::Instance LoadInstance(const std::string& path, const std::string& format) {
  const pcst::InstanceFormat resolved = ResolveFormat(format, path);
  const std::string text = ReadFile(path);
  try {
    return pcst::ParseInstance(text, resolved);
  } catch (const pcst::ParseError& e) {
    throw pcst::ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

Rational RationalFlag(const std::string& text, const char* name) {
  try {
    return pcst::ParseRational(text);
  } catch (const pcst::RationalSyntaxError&) {
    throw UsageError(std::string("--") + name + " expects a number or p/q, got '" + text + "'");
  }
}

std::string Exact(const Rational& value) {
  return pcst::ToFractionString(value) + " (" + pcst::ToDecimalString(value) + ")";
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

OrderedJson InstanceSummary(const pcst::Instance& instance) {
  OrderedJson out;
  out["n"] = instance.vertex_count();
  out["m"] = instance.edge_count();
  return out;
}

// ---------------------------------------------------------------------------

struct SolveFlags {
  std::string path;
  std::string format;
  std::string trace_path;
  bool check_invariants = false;
  bool json = false;
  bool timings = false;
};

int RunSolve(const SolveFlags& flags) {
  const pcst::Instance instance = LoadInstance(flags.path, flags.format);
  pcst::SolveOptions options;
  if (flags.check_invariants) options.check_invariants = true;
  options.emit_trace = !flags.trace_path.empty();

  const auto start = std::chrono::steady_clock::now();
  const pcst::Solution solution = pcst::Solve(instance, options);
  const double elapsed = Seconds(start);
  if (!flags.trace_path.empty()) WriteFile(flags.trace_path, pcst::TraceToJsonLines(instance, solution.trace));

  if (flags.json) {
    OrderedJson report;
    report["instance"] = InstanceSummary(instance);
    report["solution"] = pcst::SolutionToJson(instance, solution);
    if (!flags.trace_path.empty()) report["trace"] = flags.trace_path;
    if (flags.timings) report["seconds"] = elapsed;
    std::cout << report.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "instance: n=" << instance.vertex_count() << " m=" << instance.edge_count() << '\n'
            << "tree: " << solution.tree.vertices.size() << " vertices, " << solution.tree.edges.size()
            << " edges\n"
            << "cost c(T): " << Exact(solution.cost) << '\n'
            << "penalty pi(V\\T): " << Exact(solution.penalty) << '\n'
            << "objective: " << Exact(solution.objective) << '\n'
            << "lagrangean objective c(T)+2pi(V\\T): " << Exact(solution.lagrangean_objective) << '\n'
            << "lower bound: " << Exact(solution.lower_bound) << '\n';
  if (sgn(solution.lower_bound) > 0) {
    std::cout << "ratio vs lower bound: " << Exact(solution.objective / solution.lower_bound) << '\n';
  }
  std::cout << "iterations: growth " << solution.growth_iterations << ", prune " << solution.prune_iterations
            << '\n';
  if (!flags.trace_path.empty()) std::cout << "trace: " << flags.trace_path << '\n';
  if (flags.timings) std::cout << "seconds: " << elapsed << '\n';
  return kExitOk;
}

struct ExactFlags {
  std::string path;
  std::string format;
  int limit = pcst::kDefaultOracleLimit;
  bool compare = false;
  bool json = false;
  bool timings = false;
};

int RunExact(const ExactFlags& flags) {
  const pcst::Instance instance = LoadInstance(flags.path, flags.format);
  const auto start = std::chrono::steady_clock::now();
  pcst::ExactResult exact;
  try {
    exact = pcst::ExactSolve(instance, flags.limit);
  } catch (const pcst::OracleLimitError& e) {
    throw UsageError(e.what());
  }
  const double elapsed = Seconds(start);
  std::optional<pcst::Solution> approx;
  if (flags.compare) {
    pcst::SolveOptions options;
    options.emit_trace = false;
    approx = pcst::Solve(instance, options);
  }
  std::optional<Rational> ratio;
  if (approx && sgn(exact.optimum) > 0) ratio = approx->objective / exact.optimum;

  if (flags.json) {
    OrderedJson report;
    report["instance"] = InstanceSummary(instance);
    report["exact"] = pcst::ExactResultToJson(instance, exact);
    if (approx) {
      report["solution"] = pcst::SolutionToJson(instance, *approx);
      report["ratio"] = ratio ? OrderedJson(pcst::RationalToJson(*ratio)) : OrderedJson(nullptr);
      report["ratio_approx"] = ratio ? OrderedJson(ratio->get_d()) : OrderedJson(nullptr);
    }
    if (flags.timings) report["seconds"] = elapsed;
    std::cout << report.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "instance: n=" << instance.vertex_count() << " m=" << instance.edge_count() << '\n'
            << "opt: " << Exact(exact.optimum) << '\n'
            << "witness: " << exact.witness.vertices.size() << " vertices, " << exact.witness.edges.size()
            << " edges\n"
            << "connected subsets explored: " << exact.explored << '\n';
  if (approx) {
    std::cout << "approx objective: " << Exact(approx->objective) << '\n';
    if (ratio) {
      std::cout << "ratio: " << Exact(*ratio) << '\n';
    } else {
      std::cout << "ratio: undefined (opt = 0, approx " << (sgn(approx->objective) == 0 ? "= 0" : "> 0") << ")\n";
    }
  }
  if (flags.timings) std::cout << "seconds: " << elapsed << '\n';
  return kExitOk;
}

struct GenFlags {
  std::string kind;
  std::string rho = "1";
  int k = 2;
  int n = 1;
  std::string p = "1/2";
  std::int64_t max_cost = 10;
  std::int64_t max_prize = 10;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

int RunGen(const GenFlags& flags) {
  const pcst::InstanceFormat format = ResolveFormat(flags.format, flags.out);
  std::optional<pcst::Instance> instance;
  try {
    if (flags.kind == "fig1-star") {
      instance = pcst::GenerateFigure1Star(RationalFlag(flags.rho, "rho"));
    } else if (flags.kind == "fig1-path") {
      instance = pcst::GenerateFigure1Path(flags.k, RationalFlag(flags.rho, "rho"));
    } else {
      pcst::RandomInstanceParams params;
      params.n = flags.n;
      params.edge_probability = RationalFlag(flags.p, "p");
      params.max_cost = flags.max_cost;
      params.max_prize = flags.max_prize;
      params.seed = flags.seed;
      instance = pcst::GenerateRandom(params);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = pcst::EmitInstance(*instance, format);
  if (flags.out.empty() || flags.out == "-") {
    std::cout << text;
  } else {
    WriteFile(flags.out, text);
  }
  return kExitOk;
}

struct VerifyFlags {
  std::string solution_path;
  std::string instance_path;
  std::string format;
  bool json = false;
};

int RunVerify(const VerifyFlags& flags) {
  const pcst::Instance instance = LoadInstance(flags.instance_path, flags.format);
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(ReadFile(flags.solution_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw pcst::ParseError(flags.solution_path + ": " + e.what(), 0, 0);
  }

  pcst::VerificationReport report;
  try {
    if (document.contains("instance")) {
      const auto& summary = document["instance"];
      if (summary.value("n", -1) != instance.vertex_count() || summary.value("m", -1) != instance.edge_count()) {
        throw pcst::SerializeError("solution was produced for a different instance");
      }
    }
    const nlohmann::json& solution = document.contains("solution") ? document["solution"] : document;
    if (!solution.contains("duals") || !solution.contains("tree")) {
      throw pcst::SerializeError("solution lacks the \"duals\" snapshot or the \"tree\"");
    }
    auto [family, duals] = pcst::FamilyFromJson(solution["duals"], instance.vertex_count());
    const pcst::Tree tree = pcst::TreeFromJson(solution["tree"]);
    report = pcst::AuditSolution(instance, family, duals, tree);

    // The reported numbers must match what the tree and duals imply.
    if (pcst::IsTree(instance, tree)) {
      const Rational cost = pcst::TreeCost(instance, tree);
      const Rational penalty = pcst::TreePenalty(instance, tree);
      const Rational claimed = pcst::RationalFromJson(solution.at("objective"));
      report.checks.push_back({"reported_objective", claimed, cost + penalty, claimed == cost + penalty, ""});
      if (pcst::CheckFeasibility(family, duals, instance).feasible()) {
        const Rational bound = pcst::ComputeCertificate(family, duals, instance).lower_bound;
        const Rational claimed_bound = pcst::RationalFromJson(solution.at("lower_bound"));
        report.checks.push_back({"reported_lower_bound", claimed_bound, bound, claimed_bound == bound, ""});
      }
    }
  } catch (const pcst::SerializeError& e) {
    report.checks.push_back({"solution_document", Rational(1), Rational(0), false, e.what()});
  } catch (const nlohmann::json::exception& e) {
    report.checks.push_back({"solution_document", Rational(1), Rational(0), false, e.what()});
  }

  if (flags.json) {
    std::cout << pcst::VerificationReportToJson(report).dump(2) << '\n';
  } else {
    for (const pcst::CheckResult& check : report.checks) {
      std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << ": lhs " << Exact(check.lhs) << ", rhs "
                << Exact(check.rhs);
      if (!check.detail.empty()) std::cout << " [" << check.detail << "]";
      std::cout << '\n';
    }
    std::cout << (report.pass() ? "all checks passed" : "verification FAILED") << '\n';
  }
  return report.pass() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prize-collecting Steiner tree: primal-dual 2-approximation with exact certificates"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run the primal-dual approximation");
  solve_cmd->add_option("instance", solve.path, "Instance file")->required();
  solve_cmd->add_option("--format", solve.format, "stp or json (default: by extension)");
  solve_cmd->add_option("--trace", solve.trace_path, "Write the event trace as JSON lines");
  solve_cmd->add_flag("--check-invariants", solve.check_invariants, "Check every invariant after each step");
  solve_cmd->add_flag("--json", solve.json, "Machine-readable report");
  solve_cmd->add_flag("--timings", solve.timings, "Include wall-clock time in the report");

  ExactFlags exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum by exhaustive enumeration");
  exact_cmd->add_option("instance", exact.path, "Instance file")->required();
  exact_cmd->add_option("--format", exact.format, "stp or json (default: by extension)");
  exact_cmd->add_option("--limit", exact.limit, "Refuse instances with more vertices")->check(CLI::Range(1, 63));
  exact_cmd->add_flag("--compare", exact.compare, "Also run the approximation and report the ratio");
  exact_cmd->add_flag("--json", exact.json, "Machine-readable report");
  exact_cmd->add_flag("--timings", exact.timings, "Include wall-clock time in the report");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen.kind, "fig1-star, fig1-path or random")
      ->required()
      ->check(CLI::IsMember({"fig1-star", "fig1-path", "random"}));
  gen_cmd->add_option("--rho", gen.rho, "Positive rational, fig1 families");
  gen_cmd->add_option("--k", gen.k, "Path length, fig1-path");
  gen_cmd->add_option("--n", gen.n, "Vertex count, random");
  gen_cmd->add_option("--p", gen.p, "Edge probability, random");
  gen_cmd->add_option("--max-cost", gen.max_cost, "Largest edge cost, random");
  gen_cmd->add_option("--max-prize", gen.max_prize, "Largest prize, random");
  gen_cmd->add_option("--seed", gen.seed, "Seed, random");
  gen_cmd->add_option("--format", gen.format, "json or stp");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default: stdout)");

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "Audit a solution produced by `solve --json`");
  verify_cmd->add_option("solution", verify.solution_path, "Solution JSON")->required();
  verify_cmd->add_option("instance", verify.instance_path, "Instance file")->required();
  verify_cmd->add_option("--format", verify.format, "stp or json (default: by extension)");
  verify_cmd->add_flag("--json", verify.json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*exact_cmd) return RunExact(exact);
    if (*gen_cmd) return RunGen(gen);
    if (*verify_cmd) return RunVerify(verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pcst::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const pcst::InvariantViolation& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}
