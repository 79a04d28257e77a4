#include "bribery/bribery.hpp"

#include <stdexcept>

namespace bribery {

std::string_view to_string(Operation op) {
  switch (op) {
    case Operation::kAppAdd: return "appadd";
    case Operation::kAppDel: return "appdel";
    case Operation::kVC: return "vc";
    case Operation::kVAC: return "vac";
    case Operation::kVDC: return "vdc";
  }
  return "?";
}

std::optional<Operation> parse_operation(std::string_view name) {
  for (Operation op : kAllOperations) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

void Instance::validate() const {
  const int m = election.candidate_count();
  if (distinguished.empty()) throw std::invalid_argument("distinguished set is empty");
  if (distinguished.max_element() >= m) throw std::invalid_argument("distinguished candidate outside the election");
  if (committee_size < 1 || committee_size > m) {
    throw std::invalid_argument("committee size must lie in 1.." + std::to_string(m));
  }
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  if (distance < 0) throw std::invalid_argument("distance bound must be non-negative");
}

std::int64_t script_cost(const Instance& inst, const Script& script) {
  if (!is_atomic(inst.operation)) return static_cast<std::int64_t>(script.edits.size());
  std::int64_t cost = 0;
  for (const auto& [vote, ballot] : script.edits) cost += hamming(inst.election.vote(vote), ballot);
  return cost;
}

std::optional<Violation> validate_script(const Instance& inst, const Script& script) {
  const Election& e = inst.election;
  for (const auto& [vote, ballot] : script.edits) {
    if (vote < 0 || vote >= e.vote_count()) {
      return Violation{vote, "index", "vote " + std::to_string(vote) + " does not exist"};
    }
    if (ballot.max_element() >= e.candidate_count()) {
      return Violation{vote, "range", "replacement ballot " + ballot.to_string() + " leaves the candidate set"};
    }
    const Ballot& original = e.vote(vote);
    if (ballot == original) {
      return Violation{vote, "unchanged", "edit of vote " + std::to_string(vote) + " does not change the ballot"};
    }
    const bool adds = inst.operation == Operation::kAppAdd || inst.operation == Operation::kVAC;
    const bool deletes = inst.operation == Operation::kAppDel || inst.operation == Operation::kVDC;
    if (adds && !original.is_subset_of(ballot)) {
      return Violation{vote, "direction",
                       "vote " + std::to_string(vote) + ": " + ballot.to_string() + " is not a superset of " +
                           original.to_string()};
    }
    if (deletes && !ballot.is_subset_of(original)) {
      return Violation{vote, "direction",
                       "vote " + std::to_string(vote) + ": " + ballot.to_string() + " is not a subset of " +
                           original.to_string()};
    }
    if (!is_atomic(inst.operation)) {
      const int d = hamming(original, ballot);
      if (d > inst.distance) {
        return Violation{vote, "distance",
                         "vote " + std::to_string(vote) + " moved distance " + std::to_string(d) + " > r=" +
                             std::to_string(inst.distance)};
      }
    }
  }
  const std::int64_t cost = script_cost(inst, script);
  if (cost > inst.budget) {
    return Violation{-1, "budget",
                     "script cost " + std::to_string(cost) + " exceeds budget " + std::to_string(inst.budget)};
  }
  return std::nullopt;
}

Election apply_script(const Election& e, const Script& script) {
  std::vector<Ballot> votes = e.votes();
  for (const auto& [vote, ballot] : script.edits) {
    if (vote < 0 || vote >= e.vote_count()) throw std::out_of_range("script edits vote " + std::to_string(vote));
    votes[static_cast<std::size_t>(vote)] = ballot;
  }
  return Election(e.candidate_count(), std::move(votes));
}

bool check_solution(const Instance& inst, const Script& script, std::uint64_t committee_cap) {
  if (validate_script(inst, script)) return false;
  return is_excluded(apply_script(inst.election, script), inst.rule, inst.committee_size, inst.distinguished,
                     committee_cap);
}

}  // namespace bribery
