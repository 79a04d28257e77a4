#include "bribery/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ballot_flips.hpp"
#include "ordered_search.hpp"

namespace bribery {
namespace {

using detail::flip_count;
using detail::flippable;
using detail::flippable_count;
using detail::flips;

constexpr int kMaxOracleCandidates = 63;

class Oracle {
 public:
  Oracle(const Instance& inst, const Limits& limits) : inst_(inst), limits_(limits) {
    inst_.validate();
    estimate_ = estimate_search_space(inst_);
    if (estimate_ > limits_.script_cap) throw CapExceeded("script", estimate_, limits_.script_cap);
    const Election& e = inst_.election;
    m_ = e.candidate_count();
    if (m_ > kMaxOracleCandidates) throw std::invalid_argument("the brute-force oracle supports at most 63 candidates");
    full_ = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
    for (const auto& v : e.votes()) original_.push_back(v.to_mask());
    distinguished_ = inst_.distinguished.to_mask();
    if (m_ <= kMaxMaskCandidates) scorer_.emplace(m_, inst_.rule);

    const int max_flips = detail::max_flips(inst_);
    for (auto ballot : original_) options_.push_back(flips(ballot, flippable(inst_.operation, ballot, full_), max_flips));
  }

  Decision solve(bool parallel) {
    Decision d;
    d.algorithm = "oracle";
    std::optional<std::vector<std::uint64_t>> found =
        is_atomic(inst_.operation) ? solve_atomic(d.stats) : solve_vote_level(d.stats, parallel);
    d.answer = found.has_value();
    if (found) {
      Script script;
      for (std::size_t i = 0; i < original_.size(); ++i) {
        if ((*found)[i] != original_[i]) script.edits.emplace(static_cast<int>(i), CandidateSet::from_mask((*found)[i]));
      }
      d.witness = std::move(script);
    }
    return d;
  }

 private:
  bool excluded(const std::vector<std::uint64_t>& ballots) const {
    if (scorer_) return scorer_->excluded(ballots, inst_.committee_size, distinguished_);
    std::vector<Ballot> votes;
    votes.reserve(ballots.size());
    for (auto b : ballots) votes.push_back(CandidateSet::from_mask(b));
    return is_excluded(Election(m_, std::move(votes)), inst_.rule, inst_.committee_size, inst_.distinguished,
                       limits_.committee_cap);
  }

  std::optional<std::vector<std::uint64_t>> solve_atomic(SolverStats& stats) const {
    std::vector<std::uint64_t> current = original_;
    std::optional<std::vector<std::uint64_t>> found;
    const std::size_t n = original_.size();
    std::function<bool(std::size_t, std::int64_t)> dfs = [&](std::size_t i, std::int64_t remaining) -> bool {
      if (i == n) {
        ++stats.nodes;
        if (excluded(current)) {
          found = current;
          return true;
        }
        return false;
      }
      if (dfs(i + 1, remaining)) return true;
      for (auto option : options_[i]) {
        const int cost = std::popcount(option ^ original_[i]);
        if (cost > remaining) continue;
        current[i] = option;
        if (dfs(i + 1, remaining - cost)) return true;
      }
      current[i] = original_[i];
      return false;
    };
    dfs(0, inst_.budget);
    return found;
  }

  // First successful assignment for one subset of touched votes, in odometer
  // order with the first vote most significant.
  std::optional<std::vector<std::uint64_t>> try_subset(const std::vector<int>& subset, std::uint64_t& nodes) const {
    std::vector<std::uint64_t> ballots = original_;
    std::vector<std::size_t> digit(subset.size(), 0);
    while (true) {
      for (std::size_t j = 0; j < subset.size(); ++j) {
        const auto v = static_cast<std::size_t>(subset[j]);
        ballots[v] = options_[v][digit[j]];
      }
      ++nodes;
      if (excluded(ballots)) return ballots;
      std::size_t j = subset.size();
      while (j > 0) {
        --j;
        const auto v = static_cast<std::size_t>(subset[j]);
        if (++digit[j] < options_[v].size()) break;
        digit[j] = 0;
        if (j == 0) return std::nullopt;
      }
      if (subset.empty()) return std::nullopt;
    }
  }

  std::optional<std::vector<std::uint64_t>> solve_vote_level(SolverStats& stats, bool parallel) const {
    std::vector<int> touchable;
    for (std::size_t i = 0; i < options_.size(); ++i) {
      if (!options_[i].empty()) touchable.push_back(static_cast<int>(i));
    }
    const int t = static_cast<int>(touchable.size());
    const int max_size = static_cast<int>(std::min<std::int64_t>(inst_.budget, t));
    std::uint64_t subsets = 0;
    return detail::first_subset_success<std::vector<std::uint64_t>>(
        t, 0, max_size, parallel, stats.nodes, subsets, [&](const std::vector<int>& pick, std::uint64_t& nodes) {
          std::vector<int> subset;
          subset.reserve(pick.size());
          for (int p : pick) subset.push_back(touchable[static_cast<std::size_t>(p)]);
          return try_subset(subset, nodes);
        });
  }

  Instance inst_;
  Limits limits_;
  std::uint64_t estimate_ = 0;
  int m_ = 0;
  std::uint64_t full_ = 0;
  std::uint64_t distinguished_ = 0;
  std::vector<std::uint64_t> original_;
  std::vector<std::vector<std::uint64_t>> options_;
  std::optional<MaskScorer> scorer_;
};

}  // namespace

std::uint64_t estimate_search_space(const Instance& inst) {
  const Election& e = inst.election;
  const int m = e.candidate_count();
  if (inst.budget == 0) return 1;

  if (!is_atomic(inst.operation)) {
    // Elementary symmetric sums of the per-vote replacement counts.
    const auto top = static_cast<std::size_t>(std::min<std::int64_t>(inst.budget, e.vote_count()));
    std::vector<std::uint64_t> ways(top + 1, 0);
    ways[0] = 1;
    for (const auto& v : e.votes()) {
      const std::uint64_t r = flip_count(flippable_count(inst.operation, v, m), inst.distance);
      if (r == 0) continue;
      for (std::size_t j = top; j >= 1; --j) ways[j] = saturating_add(ways[j], saturating_mul(ways[j - 1], r));
    }
    std::uint64_t total = 0;
    for (auto w : ways) total = saturating_add(total, w);
    return total;
  }

  // Atomic: final-ballot assignments with total cost <= budget.
  std::int64_t reachable = 0;
  for (const auto& v : e.votes()) reachable += flippable_count(inst.operation, v, m);
  const auto top = static_cast<std::size_t>(std::min(inst.budget, reachable));
  std::vector<std::uint64_t> ways(top + 1, 0);
  ways[0] = 1;
  for (const auto& v : e.votes()) {
    const int available = flippable_count(inst.operation, v, m);
    if (available == 0) continue;
    std::vector<std::uint64_t> next(top + 1, 0);
    for (std::size_t spent = 0; spent <= top; ++spent) {
      if (ways[spent] == 0) continue;
      for (std::size_t c = 0; c <= static_cast<std::size_t>(available) && spent + c <= top; ++c) {
        next[spent + c] = saturating_add(next[spent + c], saturating_mul(ways[spent], binomial(available, static_cast<int>(c))));
      }
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total = saturating_add(total, w);
  return total;
}

namespace {

// With no budget the only script is the empty one, for any election size.
Decision solve_unbribed(const Instance& inst, const Limits& limits) {
  inst.validate();
  Decision d;
  d.algorithm = "oracle";
  d.stats.nodes = 1;
  d.answer = is_excluded(inst.election, inst.rule, inst.committee_size, inst.distinguished, limits.committee_cap);
  if (d.answer) d.witness = Script{};
  return d;
}

}  // namespace

Decision solve_bruteforce(const Instance& inst, const Limits& limits) {
  if (inst.budget == 0) return solve_unbribed(inst, limits);
  return Oracle(inst, limits).solve(true);
}

Decision solve_bruteforce_serial(const Instance& inst, const Limits& limits) {
  if (inst.budget == 0) return solve_unbribed(inst, limits);
  return Oracle(inst, limits).solve(false);
}

}  // namespace bribery
