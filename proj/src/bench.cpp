#include "bribery/bench.hpp"

#include <chrono>
#include <filesystem>
#include <optional>
#include <set>
#include <sstream>

#include "bribery/io.hpp"

namespace bribery {
namespace {

struct RunRow {
  std::string answer;
  SolverStats stats;
  std::string error;
  double time_ms = 0;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

template <typename T>
void read_range(const nlohmann::json& j, const char* key, T& lo, T& hi) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2) throw std::invalid_argument(std::string("random.") + key + " must be [lo, hi]");
  lo = v[0].get<T>();
  hi = v[1].get<T>();
  if (lo > hi) throw std::invalid_argument(std::string("random.") + key + " has lo > hi");
}

RandomSpec random_spec_from_json(const nlohmann::json& j) {
  RandomSpec spec;
  read_range(j, "m", spec.m_min, spec.m_max);
  read_range(j, "n", spec.n_min, spec.n_max);
  read_range(j, "k", spec.k_min, spec.k_max);
  read_range(j, "ell", spec.ell_min, spec.ell_max);
  read_range(j, "r", spec.r_min, spec.r_max);
  spec.unrestricted_distance = j.value("unrestricted_distance", false);
  if (spec.m_min < 1 || spec.m_max > 20 || spec.n_min < 0 || spec.k_min < 1 || spec.ell_min < 0 || spec.r_min < 0) {
    throw std::invalid_argument("random ranges out of bounds");
  }
  if (j.contains("rules")) {
    spec.rules.clear();
    for (const auto& r : j.at("rules")) {
      const auto rule = parse_rule(r.get<std::string>());
      if (!rule) throw std::invalid_argument("unknown rule " + r.get<std::string>());
      spec.rules.push_back(*rule);
    }
  }
  if (j.contains("operations")) {
    spec.operations.clear();
    for (const auto& o : j.at("operations")) {
      const auto op = parse_operation(o.get<std::string>());
      if (!op) throw std::invalid_argument("unknown operation " + o.get<std::string>());
      spec.operations.push_back(*op);
    }
  }
  if (spec.rules.empty() || spec.operations.empty()) throw std::invalid_argument("random suite needs rules and operations");
  return spec;
}

Election election_from_json(const nlohmann::json& j) {
  const int m = j.at("m").get<int>();
  std::vector<Ballot> votes;
  for (const auto& v : j.at("votes")) {
    Ballot b;
    for (const auto& c : v) b.insert(c.get<int>());
    votes.push_back(std::move(b));
  }
  return Election(m, std::move(votes));
}

Limits limits_from_json(const nlohmann::json& j) {
  static const std::set<std::string> known = {"committee_cap", "script_cap",      "subset_cap",
                                              "ip_node_cap",   "ip_variable_cap", "source_cap"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw std::invalid_argument("unknown cap " + key);
  }
  Limits limits;
  limits.committee_cap = j.value("committee_cap", limits.committee_cap);
  limits.script_cap = j.value("script_cap", limits.script_cap);
  limits.subset_cap = j.value("subset_cap", limits.subset_cap);
  limits.ip_node_cap = j.value("ip_node_cap", limits.ip_node_cap);
  limits.ip_variable_cap = j.value("ip_variable_cap", limits.ip_variable_cap);
  limits.source_cap = j.value("source_cap", limits.source_cap);
  return limits;
}

RunRow run_one(Algorithm algorithm, const Instance& inst, const Limits& limits) {
  RunRow row;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Decision d = run_algorithm(algorithm, inst, limits);
    row.answer = d.answer ? "yes" : "no";
    row.stats = d.stats;
  } catch (const CapExceeded& ex) {
    row.answer = "cap";
    row.error = ex.what();
  } catch (const std::invalid_argument& ex) {
    row.answer = "inapplicable";
    row.error = ex.what();
  } catch (const std::exception& ex) {
    row.answer = "error";
    row.error = ex.what();
  }
  row.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % width);
}

Election random_election(std::mt19937_64& rng, int m, int n) {
  std::vector<Ballot> votes;
  votes.reserve(static_cast<std::size_t>(n));
  const std::uint64_t patterns = std::uint64_t{1} << m;
  for (int i = 0; i < n; ++i) votes.push_back(CandidateSet::from_mask(rng() % patterns));
  return Election(m, std::move(votes));
}

Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec) {
  Instance inst;
  const int m = static_cast<int>(draw(rng, spec.m_min, spec.m_max));
  const int n = static_cast<int>(draw(rng, spec.n_min, spec.n_max));
  inst.election = random_election(rng, m, n);
  inst.rule = spec.rules[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(spec.rules.size()) - 1))];
  inst.operation =
      spec.operations[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(spec.operations.size()) - 1))];
  inst.committee_size = static_cast<int>(draw(rng, std::min(spec.k_min, m), std::min(spec.k_max, m)));
  inst.distinguished = CandidateSet::from_mask(static_cast<std::uint64_t>(draw(rng, 1, (std::int64_t{1} << m) - 1)));
  inst.budget = draw(rng, spec.ell_min, spec.ell_max);
  inst.distance = spec.unrestricted_distance ? 2 * m : static_cast<int>(draw(rng, spec.r_min, spec.r_max));
  return inst;
}

BenchSuite load_suite(const nlohmann::json& j, const std::string& base_dir, std::optional<std::uint64_t> seed) {
  if (!j.is_object()) throw std::invalid_argument("suite must be a JSON object");
  BenchSuite suite;
  if (j.contains("caps")) suite.limits = limits_from_json(j.at("caps"));
  const auto names = j.value("algorithms", std::vector<std::string>{"oracle", "ilp-m"});
  for (const auto& name : names) {
    const auto a = parse_algorithm(name);
    if (!a) throw std::invalid_argument("unknown algorithm " + name);
    suite.algorithms.push_back(*a);
  }

  if (j.contains("instances")) {
    int index = 0;
    for (const auto& entry : j.at("instances")) {
      BenchCase c;
      c.name = entry.value("name", "instance-" + std::to_string(index));
      if (entry.contains("file")) {
        const auto path = std::filesystem::path(base_dir) / entry.at("file").get<std::string>();
        c.instance.election = parse_election(read_file(path.string()));
      } else {
        c.instance.election = election_from_json(entry.at("election"));
      }
      apply_params(entry, c.instance);
      c.instance.validate();
      suite.cases.push_back(std::move(c));
      ++index;
    }
  }

  if (j.contains("random")) {
    const auto& r = j.at("random");
    const RandomSpec spec = random_spec_from_json(r);
    std::mt19937_64 rng(seed.value_or(r.value("seed", std::uint64_t{1})));
    const int count = r.value("count", 0);
    for (int i = 0; i < count; ++i) suite.cases.push_back({"random-" + std::to_string(i), random_instance(rng, spec)});
  }
  return suite;
}

std::string run_bench(const BenchSuite& suite, bool timing, bool* all_agree) {
  const std::size_t algorithms = suite.algorithms.size();
  std::vector<std::vector<RunRow>> rows(suite.cases.size());
  const auto count = static_cast<std::int64_t>(suite.cases.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& out = rows[static_cast<std::size_t>(i)];
    for (Algorithm a : suite.algorithms) out.push_back(run_one(a, suite.cases[static_cast<std::size_t>(i)].instance, suite.limits));
  }

  std::ostringstream csv;
  csv << "index,instance,digest,m,n,rule,operation,k,ell,r,distinguished,algorithm,answer,nodes,committees,agreement,"
         "error";
  if (timing) csv << ",time_ms";
  csv << '\n';
  if (all_agree != nullptr) *all_agree = true;
  for (std::size_t i = 0; i < suite.cases.size(); ++i) {
    const Instance& inst = suite.cases[i].instance;
    std::optional<std::string> first;
    bool agree = true;
    for (const auto& row : rows[i]) {
      if (row.answer != "yes" && row.answer != "no") continue;
      if (!first) first = row.answer;
      agree = agree && row.answer == *first;
    }
    if (all_agree != nullptr && !agree) *all_agree = false;
    std::string distinguished;
    inst.distinguished.for_each([&](int c) { distinguished += (distinguished.empty() ? "" : " ") + std::to_string(c); });
    for (std::size_t a = 0; a < algorithms; ++a) {
      const RunRow& row = rows[i][a];
      csv << i << ',' << csv_field(suite.cases[i].name) << ',' << instance_digest(inst) << ','
          << inst.election.candidate_count() << ',' << inst.election.vote_count() << ',' << to_string(inst.rule) << ','
          << to_string(inst.operation) << ',' << inst.committee_size << ',' << inst.budget << ',' << inst.distance << ','
          << distinguished << ',' << to_string(suite.algorithms[a]) << ',' << row.answer << ',' << row.stats.nodes << ','
          << row.stats.committees << ',' << (agree ? "true" : "false") << ',' << csv_field(row.error);
      if (timing) csv << ',' << row.time_ms;
      csv << '\n';
    }
  }
  return csv.str();
}

}  // namespace bribery
