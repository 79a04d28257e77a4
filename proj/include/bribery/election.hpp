#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bribery/candidate_set.hpp"
#include "bribery/common.hpp"
#include "bribery/rational.hpp"

namespace bribery {

// Approval election over candidates 0..m-1. Votes form an ordered multiset
// of ballots; empty and full ballots are allowed.
class Election {
 public:
  Election() : Election(1, {}) {}
  // Throws std::invalid_argument if m < 1 or a ballot mentions a candidate
  // outside 0..m-1.
  Election(int candidates, std::vector<Ballot> votes);

  int candidate_count() const { return m_; }
  int vote_count() const { return static_cast<int>(votes_.size()); }
  const std::vector<Ballot>& votes() const { return votes_; }
  const Ballot& vote(int i) const { return votes_.at(static_cast<std::size_t>(i)); }
  CandidateSet all_candidates() const { return CandidateSet::range(m_); }

  // Number of ballots approving c.
  int approval_count(int c) const;
  std::vector<int> approval_counts() const;

  friend bool operator==(const Election&, const Election&) = default;

 private:
  int m_;
  std::vector<Ballot> votes_;
};

enum class Rule { kAV, kSAV, kNSAV, kCCAV, kPAV };

inline constexpr std::array<Rule, 5> kAllRules = {Rule::kAV, Rule::kSAV, Rule::kNSAV, Rule::kCCAV,
                                                  Rule::kPAV};

std::string_view to_string(Rule rule);
std::optional<Rule> parse_rule(std::string_view name);

// AV, SAV and NSAV score a committee as the sum of its members' scores.
constexpr bool is_separable(Rule rule) {
  return rule == Rule::kAV || rule == Rule::kSAV || rule == Rule::kNSAV;
}

// Contribution of one ballot to the score of `committee` in an election with
// m candidates.
Rational ballot_score(int m, Rule rule, const Ballot& ballot, const Committee& committee);

// Throws std::invalid_argument unless `committee` is a nonempty subset of the
// candidates.
Rational score_committee(const Election& e, Rule rule, const Committee& committee);
Rational score_candidate(const Election& e, Rule rule, int candidate);
// score_candidate for every candidate, computed in one pass over the votes.
std::vector<Rational> candidate_scores(const Election& e, Rule rule);

struct WinnerSet {
  // Every maximum-score committee, ordered lexicographically by members.
  std::vector<Committee> committees;
  Rational score;
  std::uint64_t enumerated = 0;
};

// All maximum-score k-committees. Uses the parallel integer-scaled kernel
// when the election is small enough and the exact rational reference
// otherwise. Throws CapExceeded if C(m, k) > cap.
WinnerSet winning_committees(const Election& e, Rule rule, int k,
                             std::uint64_t cap = Limits{}.committee_cap);
// Serial rational-arithmetic reference.
WinnerSet winning_committees_serial(const Election& e, Rule rule, int k,
                                    std::uint64_t cap = Limits{}.committee_cap);

// True iff no winning k-committee contains a member of `distinguished`.
// Separable rules always take the per-candidate path; CCAV and PAV enumerate.
bool is_excluded(const Election& e, Rule rule, int k, const CandidateSet& distinguished,
                 std::uint64_t cap = Limits{}.committee_cap);
bool is_excluded_by_enumeration(const Election& e, Rule rule, int k, const CandidateSet& distinguished,
                                std::uint64_t cap = Limits{}.committee_cap);
// Separable rules only: every p in J has at least k candidates strictly above it.
bool separable_excluded(const Election& e, Rule rule, int k, const CandidateSet& distinguished);

// lcm(1, ..., m). Throws std::overflow_error beyond m = 42.
std::int64_t scale_factor(int m);
// scale_factor(m) * ballot_score(m, rule, ballot, committee), always an integer.
std::int64_t scaled_ballot_score(int m, Rule rule, const Ballot& ballot, const Committee& committee);

// Largest m served by MaskScorer; keeps n * scale * H_m inside 64 bits.
inline constexpr int kMaxMaskCandidates = 20;

// Integer-scaled scoring over 64-bit ballot masks, for the inner loops of the
// exhaustive solvers. All values are scale_factor(m) times the exact score.
class MaskScorer {
 public:
  MaskScorer(int m, Rule rule);

  int candidates() const { return m_; }
  Rule rule() const { return rule_; }
  std::int64_t scale() const { return scale_; }
  std::uint64_t full() const { return full_; }

  std::int64_t ballot_score(std::uint64_t ballot, std::uint64_t committee) const;
  // Per-candidate contributions of one ballot, added with `sign`. Separable
  // rules only.
  void accumulate(std::uint64_t ballot, std::span<std::int64_t> scores, std::int64_t sign = 1) const;
  bool excluded(std::span<const std::uint64_t> ballots, int k, std::uint64_t distinguished) const;

 private:
  int m_;
  Rule rule_;
  std::int64_t scale_;
  std::uint64_t full_;
  std::vector<std::int64_t> harmonic_;  // scale * H_i
};

// Calls f(mask) for every k-subset of {0..m-1} in increasing mask order.
template <typename F>
void for_each_k_subset(int m, int k, F&& f) {
  if (k < 0 || k > m || m > 64) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = m == 64 ? 0 : (std::uint64_t{1} << m);
  std::uint64_t mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    f(mask);
    // Gosper's hack.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    if (ripple == 0) return;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
    if (limit != 0 && mask >= limit) return;
  }
}

}  // namespace bribery
