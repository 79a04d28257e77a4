#include "bribery/cli.hpp"

#include <chrono>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bribery/bench.hpp"
#include "bribery/dispatch.hpp"
#include "bribery/gadgets.hpp"
#include "bribery/io.hpp"

namespace bribery {
namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

// Thrown for invalid command-line input that CLI11 does not catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceFlags {
  std::string instance;
  std::string params;
  std::string rule;
  std::string op;
  std::optional<int> k;
  std::optional<std::int64_t> ell;
  std::optional<int> r;
  std::string distinguished;
};

struct CapFlags {
  Limits limits;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f, bool full) {
  cmd->add_option("--instance", f.instance, "Election file")->required();
  cmd->add_option("--params", f.params, "Parameter JSON (flags override its fields)");
  cmd->add_option("--rule", f.rule, "av|sav|nsav|ccav|pav");
  cmd->add_option("--k", f.k, "Committee size");
  if (!full) return;
  cmd->add_option("--op", f.op, "appadd|appdel|vc|vac|vdc");
  cmd->add_option("--ell", f.ell, "Budget");
  cmd->add_option("--r", f.r, "Hamming bound per vote (default 2m)");
  cmd->add_option("--distinguished", f.distinguished, "Comma-separated candidate indices");
}

void add_cap_flags(CLI::App* cmd, CapFlags& c) {
  cmd->add_option("--committee-cap", c.limits.committee_cap, "Max committees per winner determination");
  cmd->add_option("--script-cap", c.limits.script_cap, "Max scripts for the oracle");
  cmd->add_option("--subset-cap", c.limits.subset_cap, "Max vote subsets for flow/enum");
  cmd->add_option("--ip-node-cap", c.limits.ip_node_cap, "Max integer-program search nodes");
  cmd->add_option("--ip-variable-cap", c.limits.ip_variable_cap, "Max integer-program variables");
  cmd->add_option("--source-cap", c.limits.source_cap, "Max subsets for source-problem solvers");
}

CandidateSet parse_index_list(const std::string& text) {
  CandidateSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw UsageError("empty entry in --distinguished");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    int c = -1;
    try {
      c = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || c < 0) throw UsageError("bad candidate index '" + item + "' in --distinguished");
    out.insert(c);
  }
  return out;
}

// Assembles the instance from the election file, the optional parameter JSON
// and the flags, in increasing priority.
Instance load_instance(const InstanceFlags& f, bool full) {
  Instance inst;
  inst.election = parse_election(read_file(f.instance));
  bool have_rule = false;
  bool have_op = false;
  bool have_k = false;
  bool have_ell = false;
  bool have_r = false;
  bool have_j = false;
  if (!f.params.empty()) {
    const auto j = nlohmann::json::parse(read_file(f.params));
    apply_params(j, inst);
    have_rule = j.contains("rule");
    have_op = j.contains("operation");
    have_k = j.contains("k");
    have_ell = j.contains("ell");
    have_r = j.contains("r");
    have_j = j.contains("distinguished");
  }
  if (!f.rule.empty()) {
    const auto rule = parse_rule(f.rule);
    if (!rule) throw UsageError("unknown rule '" + f.rule + "'");
    inst.rule = *rule;
    have_rule = true;
  }
  if (f.k) {
    inst.committee_size = *f.k;
    have_k = true;
  }
  if (!have_rule) throw UsageError("--rule is required");
  if (!have_k) throw UsageError("--k is required");
  if (!full) {
    if (!have_j) inst.distinguished = CandidateSet{0};
    return inst;
  }

  if (!f.op.empty()) {
    const auto op = parse_operation(f.op);
    if (!op) throw UsageError("unknown operation '" + f.op + "'");
    inst.operation = *op;
    have_op = true;
  }
  if (f.ell) {
    inst.budget = *f.ell;
    have_ell = true;
  }
  if (f.r) {
    inst.distance = *f.r;
    have_r = true;
  }
  if (!f.distinguished.empty()) {
    inst.distinguished = parse_index_list(f.distinguished);
    have_j = true;
  }
  if (!have_op) throw UsageError("--op is required");
  if (!have_ell) throw UsageError("--ell is required");
  if (!have_j) throw UsageError("--distinguished is required");
  if (!have_r) inst.distance = 2 * inst.election.candidate_count();
  inst.validate();
  return inst;
}

nlohmann::json committees_json(const std::vector<Committee>& committees) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : committees) out.push_back(c.elements());
  return out;
}

int solve_command(const InstanceFlags& f, const CapFlags& caps, const std::string& algorithm_name, std::ostream& out) {
  const auto algorithm = parse_algorithm(algorithm_name);
  if (!algorithm) throw UsageError("unknown algorithm '" + algorithm_name + "'");
  const Instance inst = load_instance(f, true);
  RunReport report;
  report.digest = instance_digest(inst);
  const auto start = std::chrono::steady_clock::now();
  report.decision = run_algorithm(*algorithm, inst, caps.limits);
  report.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report_to_json(inst, report).dump(2) << '\n';
  return report.decision.answer ? kYes : kNo;
}

int winners_command(const InstanceFlags& f, const CapFlags& caps, std::ostream& out) {
  const Instance inst = load_instance(f, false);
  const int m = inst.election.candidate_count();
  if (inst.committee_size < 1 || inst.committee_size > m) {
    throw UsageError("--k must lie in 1.." + std::to_string(m));
  }
  const WinnerSet w = winning_committees(inst.election, inst.rule, inst.committee_size, caps.limits.committee_cap);
  const nlohmann::json j = {{"rule", std::string(to_string(inst.rule))},
                            {"k", inst.committee_size},
                            {"score", w.score.to_string()},
                            {"committees", committees_json(w.committees)}};
  out << j.dump(2) << '\n';
  return kYes;
}

int verify_command(const InstanceFlags& f, const CapFlags& caps, const std::string& script_path, std::ostream& out) {
  const Instance inst = load_instance(f, true);
  const ScriptFile file = script_from_json(nlohmann::json::parse(read_file(script_path)));
  nlohmann::json j;
  if (file.operation != inst.operation) {
    j = {{"valid", false},
         {"violation",
          {{"vote", -1},
           {"rule", "operation"},
           {"message", "script is for " + std::string(to_string(file.operation)) + ", instance uses " +
                           std::string(to_string(inst.operation))}}}};
    out << j.dump(2) << '\n';
    return kNo;
  }
  if (const auto v = validate_script(inst, file.script)) {
    j = {{"valid", false}, {"violation", {{"vote", v->vote}, {"rule", v->rule}, {"message", v->message}}}};
    out << j.dump(2) << '\n';
    return kNo;
  }
  const bool ok = check_solution(inst, file.script, caps.limits.committee_cap);
  j = {{"valid", ok}, {"cost", script_cost(inst, file.script)}};
  if (!ok) {
    const Election after = apply_script(inst.election, file.script);
    const WinnerSet w = winning_committees(after, inst.rule, inst.committee_size, caps.limits.committee_cap);
    j["reason"] = "a distinguished candidate is still in a winning committee";
    j["score"] = w.score.to_string();
    j["winners"] = committees_json(w.committees);
  }
  out << j.dump(2) << '\n';
  return ok ? kYes : kNo;
}

struct GadgetFlags {
  std::string kind;
  std::string graph;
  std::string rx3c;
  int kappa = 0;
  std::optional<int> r;
  bool unsafe = false;
  std::string output;
};

int gadget_command(const GadgetFlags& g, const CapFlags& caps, std::ostream& out, std::ostream& err) {
  const auto kind = parse_gadget_kind(g.kind);
  if (!kind) throw UsageError("unknown gadget kind '" + g.kind + "'");
  GadgetSource source;
  if (uses_graph(*kind)) {
    if (g.graph.empty()) throw UsageError("--graph is required for " + g.kind);
    if (g.kappa < 1) throw UsageError("--kappa is required for " + g.kind);
    source = parse_graph(read_file(g.graph));
  } else {
    if (g.rx3c.empty()) throw UsageError("--rx3c is required for " + g.kind);
    source = parse_rx3c(read_file(g.rx3c));
  }
  GadgetOptions options;
  options.unsafe = g.unsafe;
  options.distance = g.r;
  if (g.unsafe) err << "warning: construction size assumptions are not enforced (--unsafe)\n";
  const Gadget gadget = build_gadget(*kind, std::move(source), g.kappa, options);

  namespace fs = std::filesystem;
  fs::create_directories(g.output);
  const std::string instance_path = (fs::path(g.output) / "instance.txt").string();
  const std::string params_path = (fs::path(g.output) / "params.json").string();
  write_file(instance_path, write_election(gadget.instance.election));
  nlohmann::json params = params_to_json(gadget.instance);
  params["kind"] = g.kind;
  params["kappa"] = gadget.kappa;
  write_file(params_path, params.dump(2) + "\n");

  nlohmann::json summary = {{"kind", g.kind},
                            {"candidates", gadget.instance.election.candidate_count()},
                            {"votes", gadget.instance.election.vote_count()},
                            {"instance", instance_path},
                            {"params", params_path}};
  try {
    const auto witness = solve_source(gadget, caps.limits);
    summary["source_witness"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
    if (witness) {
      const std::string script_path = (fs::path(g.output) / "script.json").string();
      write_file(script_path, script_to_json(gadget.instance.operation, plant_witness(gadget, *witness)).dump(2) + "\n");
      summary["script"] = script_path;
    }
  } catch (const CapExceeded& ex) {
    summary["source_witness"] = nullptr;
    summary["source_error"] = ex.what();
  }
  out << summary.dump(2) << '\n';
  return kYes;
}

int bench_command(const std::string& suite_path, std::optional<std::uint64_t> seed, bool timing,
                  const std::string& output, std::ostream& out) {
  const auto j = nlohmann::json::parse(read_file(suite_path));
  const std::string base = std::filesystem::path(suite_path).parent_path().string();
  const BenchSuite suite = load_suite(j, base, seed);
  bool agree = true;
  const std::string csv = run_bench(suite, timing, &agree);
  if (output.empty()) {
    out << csv;
  } else {
    write_file(output, csv);
  }
  return agree ? kYes : kNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Destructive bribery solvers for approval-based committee elections", "bribery"};
  app.require_subcommand(1);

  InstanceFlags solve_flags;
  CapFlags solve_caps;
  std::string algorithm = "auto";
  auto* solve = app.add_subcommand("solve", "Decide a bribery instance");
  add_instance_flags(solve, solve_flags, true);
  add_cap_flags(solve, solve_caps);
  solve->add_option("--algorithm", algorithm, "auto|oracle|poly|ilp-m|ilp-j|flow|enum");

  InstanceFlags winners_flags;
  CapFlags winners_caps;
  auto* winners = app.add_subcommand("winners", "List the winning committees");
  add_instance_flags(winners, winners_flags, false);
  add_cap_flags(winners, winners_caps);

  InstanceFlags verify_flags;
  CapFlags verify_caps;
  std::string script_path;
  auto* verify = app.add_subcommand("verify", "Check a bribery script");
  add_instance_flags(verify, verify_flags, true);
  add_cap_flags(verify, verify_caps);
  verify->add_option("--script", script_path, "Script JSON")->required();

  GadgetFlags gadget_flags;
  CapFlags gadget_caps;
  auto* gadget = app.add_subcommand("gadget", "Generate a reduction instance");
  gadget->add_option("--kind", gadget_flags.kind,
                     "nwd-ccav|nwd-pav|appadd-sav-rx3c|vc-av-rx3c|vdc-av-rx3c|vc-av-clique")
      ->required();
  gadget->add_option("--graph", gadget_flags.graph, "Graph file");
  gadget->add_option("--rx3c", gadget_flags.rx3c, "RX3C file");
  gadget->add_option("--kappa", gadget_flags.kappa, "Solution size for graph sources");
  gadget->add_option("--r", gadget_flags.r, "Hamming bound for vote-level gadgets");
  gadget->add_flag("--unsafe", gadget_flags.unsafe, "Skip the construction's size assumptions");
  gadget->add_option("-o,--output", gadget_flags.output, "Output directory")->required();
  add_cap_flags(gadget, gadget_caps);

  std::string suite_path;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  std::string bench_output;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and print CSV");
  bench->add_option("--suite", suite_path, "Suite JSON")->required();
  bench->add_option("--seed", seed, "Seed for the random part of the suite");
  bench->add_flag("--timing", timing, "Add a wall-time column (breaks byte-for-byte reproducibility)");
  bench->add_option("-o,--output", bench_output, "Write the CSV here instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*solve) return solve_command(solve_flags, solve_caps, algorithm, out);
    if (*winners) return winners_command(winners_flags, winners_caps, out);
    if (*verify) return verify_command(verify_flags, verify_caps, script_path, out);
    if (*gadget) return gadget_command(gadget_flags, gadget_caps, out, err);
    if (*bench) return bench_command(suite_path, seed, timing, bench_output, out);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace bribery
