#include "bribery/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

namespace bribery {
namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      const std::size_t from = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({raw.substr(from, i - from), static_cast<int>(from) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

int to_int(const Line& line, const Token& token, const char* what) {
  int value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw ParseError(line.number, token.column,
                     std::string("expected a non-negative integer for ") + what + ", found '" + std::string(token.text) + "'");
  }
  return value;
}

void expect_count(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, line.tokens.size() > count ? line.tokens[count].column : 1,
                     std::string("malformed ") + what + ": expected " + std::to_string(count) + " fields");
  }
}

int end_line(std::string_view text) {
  int lines = 1;
  for (char c : text) lines += c == '\n' ? 1 : 0;
  return lines;
}

nlohmann::json set_to_json(const CandidateSet& s) { return s.elements(); }

CandidateSet set_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of candidate indices");
  CandidateSet out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > 1'000'000) {
      throw std::invalid_argument(std::string(what) + " holds an invalid candidate index");
    }
    const int c = x.get<int>();
    if (out.contains(c)) throw std::invalid_argument(std::string(what) + " repeats candidate " + std::to_string(c));
    out.insert(c);
  }
  return out;
}

std::int64_t int_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("\"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Election parse_election(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header \"m n\"");
  const Line& header = lines.front();
  expect_count(header, 2, "header \"m n\"");
  const int m = to_int(header, header.tokens[0], "m");
  const int n = to_int(header, header.tokens[1], "n");
  if (m < 1) throw ParseError(header.number, header.tokens[0].column, "m must be at least 1");
  if (static_cast<int>(lines.size()) - 1 < n) {
    throw ParseError(end_line(text), 1,
                     "expected " + std::to_string(n) + " ballots, found " + std::to_string(lines.size() - 1));
  }
  if (static_cast<int>(lines.size()) - 1 > n) {
    const Line& extra = lines[static_cast<std::size_t>(n) + 1];
    throw ParseError(extra.number, 1, "more ballot lines than the header announces");
  }

  std::vector<Ballot> votes;
  votes.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    Ballot ballot;
    if (line.tokens.size() == 1 && line.tokens[0].text == "-") {
      votes.push_back(ballot);
      continue;
    }
    for (const auto& token : line.tokens) {
      const int c = to_int(line, token, "a candidate index");
      if (c >= m) {
        throw ParseError(line.number, token.column,
                         "candidate index " + std::to_string(c) + " out of range for m = " + std::to_string(m));
      }
      if (ballot.contains(c)) throw ParseError(line.number, token.column, "duplicate candidate index " + std::to_string(c));
      ballot.insert(c);
    }
    votes.push_back(std::move(ballot));
  }
  return Election(m, std::move(votes));
}

std::string write_election(const Election& e) {
  std::ostringstream out;
  out << e.candidate_count() << ' ' << e.vote_count() << '\n';
  for (const auto& v : e.votes()) {
    if (v.empty()) {
      out << "-\n";
      continue;
    }
    bool first = true;
    v.for_each([&](int c) {
      out << (first ? "" : " ") << c;
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

Graph parse_graph(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header \"n m\"");
  const Line& header = lines.front();
  expect_count(header, 2, "header \"n m\"");
  Graph g;
  g.vertices = to_int(header, header.tokens[0], "n");
  const int edges = to_int(header, header.tokens[1], "m");
  if (static_cast<int>(lines.size()) - 1 != edges) {
    throw ParseError(lines.size() > static_cast<std::size_t>(edges) + 1 ? lines[static_cast<std::size_t>(edges) + 1].number
                                                                       : end_line(text),
                     1, "expected " + std::to_string(edges) + " edge lines, found " + std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_count(line, 2, "edge \"u v\"");
    const int u = to_int(line, line.tokens[0], "u");
    const int v = to_int(line, line.tokens[1], "v");
    if (u >= g.vertices || v >= g.vertices) throw ParseError(line.number, 1, "edge endpoint out of range");
    g.edges.emplace_back(u, v);
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& ex) {
    throw ParseError(lines.front().number, 1, ex.what());
  }
  return g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertices << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

RX3CInstance parse_rx3c(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header \"kappa\"");
  const Line& header = lines.front();
  expect_count(header, 1, "header \"kappa\"");
  RX3CInstance inst;
  inst.kappa = to_int(header, header.tokens[0], "kappa");
  if (inst.kappa < 1) throw ParseError(header.number, 1, "kappa must be positive");
  const auto expected = static_cast<std::size_t>(3 * inst.kappa);
  if (lines.size() - 1 != expected) {
    throw ParseError(lines.size() - 1 > expected ? lines[expected + 1].number : end_line(text), 1,
                     "expected " + std::to_string(expected) + " triple lines, found " + std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_count(line, 3, "triple");
    std::array<int, 3> t{};
    for (std::size_t k = 0; k < 3; ++k) {
      t[k] = to_int(line, line.tokens[k], "a universe index");
      if (t[k] >= 3 * inst.kappa) throw ParseError(line.number, line.tokens[k].column, "universe index out of range");
    }
    inst.triples.push_back(t);
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& ex) {
    throw ParseError(header.number, 1, ex.what());
  }
  return inst;
}

std::string write_rx3c(const RX3CInstance& inst) {
  std::ostringstream out;
  out << inst.kappa << '\n';
  for (const auto& t : inst.triples) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

nlohmann::json script_to_json(Operation op, const Script& script) {
  nlohmann::json edits = nlohmann::json::array();
  for (const auto& [vote, ballot] : script.edits) edits.push_back({{"vote", vote}, {"ballot", set_to_json(ballot)}});
  return {{"operation", std::string(to_string(op))}, {"edits", std::move(edits)}};
}

ScriptFile script_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("script must be a JSON object");
  ScriptFile out;
  if (!j.contains("operation") || !j.at("operation").is_string()) {
    throw std::invalid_argument("script needs an \"operation\" string");
  }
  const auto op = parse_operation(j.at("operation").get<std::string>());
  if (!op) throw std::invalid_argument("unknown operation " + j.at("operation").get<std::string>());
  out.operation = *op;
  if (!j.contains("edits") || !j.at("edits").is_array()) throw std::invalid_argument("script needs an \"edits\" array");
  for (const auto& edit : j.at("edits")) {
    if (!edit.is_object() || !edit.contains("vote") || !edit.contains("ballot")) {
      throw std::invalid_argument("each edit needs \"vote\" and \"ballot\"");
    }
    const std::int64_t vote = int_field(edit, "vote");
    if (vote < 0 || vote > std::numeric_limits<int>::max()) throw std::invalid_argument("vote index out of range");
    if (!out.script.edits.emplace(static_cast<int>(vote), set_from_json(edit.at("ballot"), "ballot")).second) {
      throw std::invalid_argument("vote " + std::to_string(vote) + " is edited twice");
    }
  }
  return out;
}

nlohmann::json params_to_json(const Instance& inst) {
  return {{"rule", std::string(to_string(inst.rule))},
          {"operation", std::string(to_string(inst.operation))},
          {"k", inst.committee_size},
          {"ell", inst.budget},
          {"r", inst.distance},
          {"distinguished", set_to_json(inst.distinguished)}};
}

void apply_params(const nlohmann::json& j, Instance& inst) {
  if (!j.is_object()) throw std::invalid_argument("parameters must be a JSON object");
  if (j.contains("rule")) {
    const auto rule = parse_rule(j.at("rule").get<std::string>());
    if (!rule) throw std::invalid_argument("unknown rule " + j.at("rule").get<std::string>());
    inst.rule = *rule;
  }
  if (j.contains("operation")) {
    const auto op = parse_operation(j.at("operation").get<std::string>());
    if (!op) throw std::invalid_argument("unknown operation " + j.at("operation").get<std::string>());
    inst.operation = *op;
  }
  if (j.contains("k")) inst.committee_size = static_cast<int>(int_field(j, "k"));
  if (j.contains("ell")) inst.budget = int_field(j, "ell");
  if (j.contains("r")) inst.distance = static_cast<int>(int_field(j, "r"));
  if (j.contains("distinguished")) inst.distinguished = set_from_json(j.at("distinguished"), "distinguished");
}

std::string canonical_instance(const Instance& inst) {
  std::ostringstream out;
  out << write_election(inst.election);
  out << "rule " << to_string(inst.rule) << '\n';
  out << "operation " << to_string(inst.operation) << '\n';
  out << "k " << inst.committee_size << '\n';
  out << "ell " << inst.budget << '\n';
  out << "r " << inst.distance << '\n';
  out << "distinguished";
  inst.distinguished.for_each([&](int c) { out << ' ' << c; });
  out << '\n';
  return out.str();
}

std::string instance_digest(const Instance& inst) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_instance(inst)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

nlohmann::json report_to_json(const Instance& inst, const RunReport& report) {
  const Decision& d = report.decision;
  nlohmann::json out;
  out["answer"] = d.answer ? "yes" : "no";
  out["witness"] = d.witness ? script_to_json(inst.operation, *d.witness) : nlohmann::json(nullptr);
  out["algorithm"] = d.algorithm;
  out["stats"] = {{"nodes", d.stats.nodes}, {"committees", d.stats.committees}};
  out["time_ms"] = report.time_ms;
  out["instance_digest"] = report.digest;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace bribery
