#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bribery/bribery.hpp"
#include "bribery/gadgets.hpp"

namespace bribery {

// Syntax or content error in an input file, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Election text: optional '#' comment lines and blank lines anywhere; header
// "m n"; then n ballot lines of space-separated candidate indices, "-" for the
// empty ballot. Indices may come in any order on input; duplicates and
// indices >= m are errors.
Election parse_election(std::string_view text);
// Canonical form: header, then one line per ballot in ascending order.
std::string write_election(const Election& e);

// Graph text: "n m", then m lines "u v".
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

// RX3C text: "kappa", then 3*kappa lines of three universe indices.
RX3CInstance parse_rx3c(std::string_view text);
std::string write_rx3c(const RX3CInstance& inst);

// {"operation": "vc", "edits": [{"vote": 1, "ballot": [0, 2]}, ...]}
nlohmann::json script_to_json(Operation op, const Script& script);
struct ScriptFile {
  Operation operation = Operation::kVC;
  Script script;
};
// Throws std::invalid_argument on schema violations or repeated votes.
ScriptFile script_from_json(const nlohmann::json& j);

// Instance parameters as written next to generated instances and accepted by
// --params: {"rule", "operation", "k", "ell", "r", "distinguished"}.
nlohmann::json params_to_json(const Instance& inst);
// Fills the fields present in `j` into `inst`; absent fields stay untouched.
void apply_params(const nlohmann::json& j, Instance& inst);

// Election text followed by one line per parameter; the digest input.
std::string canonical_instance(const Instance& inst);
// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string instance_digest(const Instance& inst);

struct RunReport {
  std::string digest;
  Decision decision;
  double time_ms = 0;
};

// {"answer": "yes"|"no", "witness": script|null, "algorithm", "stats",
//  "time_ms", "instance_digest"}
nlohmann::json report_to_json(const Instance& inst, const RunReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace bribery
