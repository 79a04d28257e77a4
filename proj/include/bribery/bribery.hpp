#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "bribery/candidate_set.hpp"
#include "bribery/common.hpp"
#include "bribery/election.hpp"

namespace bribery {

// AppAdd/AppDel add or delete single approvals; VC/VAC/VDC rewrite whole
// votes within Hamming distance r.
enum class Operation { kAppAdd, kAppDel, kVC, kVAC, kVDC };

inline constexpr std::array<Operation, 5> kAllOperations = {Operation::kAppAdd, Operation::kAppDel, Operation::kVC,
                                                            Operation::kVAC, Operation::kVDC};

constexpr bool is_atomic(Operation op) { return op == Operation::kAppAdd || op == Operation::kAppDel; }

std::string_view to_string(Operation op);
std::optional<Operation> parse_operation(std::string_view name);

struct Instance {
  Election election;
  Rule rule = Rule::kAV;
  Operation operation = Operation::kAppAdd;
  CandidateSet distinguished;
  int committee_size = 1;
  // Atomic operations: number of single additions/deletions. Vote-level
  // operations: number of modified votes.
  std::int64_t budget = 0;
  // Hamming bound per modified vote; ignored for atomic operations.
  int distance = 0;

  // Throws std::invalid_argument on a malformed instance.
  void validate() const;
};

// Canonical witness: the final ballot of every touched vote.
struct Script {
  std::map<int, Ballot> edits;

  bool empty() const { return edits.empty(); }
  friend bool operator==(const Script&, const Script&) = default;
};

struct Violation {
  int vote = -1;     // offending vote, or -1 for script-wide rules
  std::string rule;  // "index", "range", "unchanged", "direction", "distance", "budget"
  std::string message;
};

struct SolverStats {
  std::uint64_t nodes = 0;       // search nodes / scripts / subproblems explored
  std::uint64_t committees = 0;  // committees scored or guessed
};

struct Decision {
  bool answer = false;
  std::optional<Script> witness;
  std::string algorithm;
  SolverStats stats;
};

// Atomic: total symmetric difference. Vote-level: number of touched votes.
std::int64_t script_cost(const Instance& inst, const Script& script);

std::optional<Violation> validate_script(const Instance& inst, const Script& script);

// Throws std::out_of_range on an invalid vote index.
Election apply_script(const Election& e, const Script& script);

// validate_script passes and J is excluded afterwards. Propagates
// CapExceeded from winner determination.
bool check_solution(const Instance& inst, const Script& script, std::uint64_t committee_cap = Limits{}.committee_cap);

}  // namespace bribery
