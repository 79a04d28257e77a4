#include "bribery/election.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bribery {
namespace {

void require_committee_size(const Election& e, int k) {
  if (k < 1 || k > e.candidate_count()) {
    throw std::invalid_argument("committee size " + std::to_string(k) + " outside 1.." +
                                std::to_string(e.candidate_count()));
  }
}

void require_distinguished(const Election& e, const CandidateSet& distinguished) {
  if (distinguished.empty()) throw std::invalid_argument("distinguished set is empty");
  if (distinguished.max_element() >= e.candidate_count()) {
    throw std::invalid_argument("distinguished candidate outside the election");
  }
}

Rational harmonic(int i) {
  Rational h;
  for (int j = 1; j <= i; ++j) h += Rational(1, j);
  return h;
}

// Ballots collapsed to (mask, multiplicity) for the integer kernels.
struct MaskProfile {
  std::vector<std::uint64_t> ballots;
  std::vector<std::int64_t> counts;
};

MaskProfile mask_profile(const Election& e) {
  std::map<std::uint64_t, std::int64_t> grouped;
  for (const auto& v : e.votes()) ++grouped[v.to_mask()];
  MaskProfile profile;
  for (const auto& [mask, count] : grouped) {
    profile.ballots.push_back(mask);
    profile.counts.push_back(count);
  }
  return profile;
}

void sort_committees(std::vector<Committee>& committees) {
  std::sort(committees.begin(), committees.end(), lexicographically_less);
}

WinnerSet winning_committees_kernel(const Election& e, Rule rule, int k) {
  const int m = e.candidate_count();
  const MaskScorer scorer(m, rule);
  const MaskProfile profile = mask_profile(e);
  const std::size_t groups = profile.ballots.size();

  // Committees are partitioned by their smallest member; each block is
  // independent and results are merged in block order.
  const int blocks = m - k + 1;
  std::vector<std::int64_t> block_best(static_cast<std::size_t>(blocks), std::numeric_limits<std::int64_t>::min());
  std::vector<std::vector<std::uint64_t>> block_winners(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 0; first < blocks; ++first) {
    auto& best = block_best[static_cast<std::size_t>(first)];
    auto& winners = block_winners[static_cast<std::size_t>(first)];
    const std::uint64_t head = std::uint64_t{1} << first;
    for_each_k_subset(m - 1 - first, k - 1, [&](std::uint64_t tail) {
      const std::uint64_t w = head | (tail << (first + 1));
      std::int64_t score = 0;
      for (std::size_t g = 0; g < groups; ++g) score += profile.counts[g] * scorer.ballot_score(profile.ballots[g], w);
      if (score > best) {
        best = score;
        winners.clear();
      }
      if (score == best) winners.push_back(w);
    });
  }

  const std::int64_t best = *std::max_element(block_best.begin(), block_best.end());
  WinnerSet out;
  out.score = Rational(best, scorer.scale());
  out.enumerated = binomial(m, k);
  for (int b = 0; b < blocks; ++b) {
    if (block_best[static_cast<std::size_t>(b)] != best) continue;
    for (auto w : block_winners[static_cast<std::size_t>(b)]) out.committees.push_back(CandidateSet::from_mask(w));
  }
  sort_committees(out.committees);
  return out;
}

}  // namespace

Election::Election(int candidates, std::vector<Ballot> votes) : m_(candidates), votes_(std::move(votes)) {
  if (m_ < 1) throw std::invalid_argument("an election needs at least one candidate");
  for (std::size_t i = 0; i < votes_.size(); ++i) {
    if (votes_[i].max_element() >= m_) {
      throw std::invalid_argument("vote " + std::to_string(i) + " approves a candidate outside 0.." +
                                  std::to_string(m_ - 1));
    }
  }
}

int Election::approval_count(int c) const {
  int count = 0;
  for (const auto& v : votes_) count += v.contains(c) ? 1 : 0;
  return count;
}

std::vector<int> Election::approval_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(m_), 0);
  for (const auto& v : votes_) v.for_each([&](int c) { ++counts[static_cast<std::size_t>(c)]; });
  return counts;
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::kAV: return "av";
    case Rule::kSAV: return "sav";
    case Rule::kNSAV: return "nsav";
    case Rule::kCCAV: return "ccav";
    case Rule::kPAV: return "pav";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (Rule r : kAllRules) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

Rational ballot_score(int m, Rule rule, const Ballot& ballot, const Committee& committee) {
  const int common = ballot.intersection_size(committee);
  const int size = ballot.size();
  switch (rule) {
    case Rule::kAV:
      return common;
    case Rule::kSAV:
      return size == 0 ? Rational(0) : Rational(common, size);
    case Rule::kNSAV: {
      Rational score = size == 0 ? Rational(0) : Rational(common, size);
      if (size != m) score -= Rational((committee - ballot).size(), m - size);
      return score;
    }
    case Rule::kCCAV:
      return common > 0 ? 1 : 0;
    case Rule::kPAV:
      return harmonic(common);
  }
  return 0;
}

Rational score_committee(const Election& e, Rule rule, const Committee& committee) {
  if (committee.empty()) throw std::invalid_argument("empty committee");
  if (committee.max_element() >= e.candidate_count()) throw std::invalid_argument("committee outside the election");
  Rational total;
  for (const auto& v : e.votes()) total += ballot_score(e.candidate_count(), rule, v, committee);
  return total;
}

Rational score_candidate(const Election& e, Rule rule, int candidate) {
  if (candidate < 0 || candidate >= e.candidate_count()) throw std::invalid_argument("candidate outside the election");
  return score_committee(e, rule, CandidateSet{candidate});
}

std::vector<Rational> candidate_scores(const Election& e, Rule rule) {
  const int m = e.candidate_count();
  std::vector<Rational> scores(static_cast<std::size_t>(m));
  // Singletons: CCAV and PAV reduce to approval counts.
  for (const auto& v : e.votes()) {
    const int size = v.size();
    if (size > 0) {
      const Rational share = (rule == Rule::kSAV || rule == Rule::kNSAV) ? Rational(1, size) : Rational(1);
      v.for_each([&](int c) { scores[static_cast<std::size_t>(c)] += share; });
    }
    if (rule == Rule::kNSAV && size != m) {
      const Rational penalty(1, m - size);
      for (int c = 0; c < m; ++c) {
        if (!v.contains(c)) scores[static_cast<std::size_t>(c)] -= penalty;
      }
    }
  }
  return scores;
}

WinnerSet winning_committees(const Election& e, Rule rule, int k, std::uint64_t cap) {
  require_committee_size(e, k);
  const std::uint64_t count = binomial(e.candidate_count(), k);
  if (count > cap) throw CapExceeded("committee", count, cap);
  if (e.candidate_count() <= kMaxMaskCandidates) return winning_committees_kernel(e, rule, k);
  return winning_committees_serial(e, rule, k, cap);
}

WinnerSet winning_committees_serial(const Election& e, Rule rule, int k, std::uint64_t cap) {
  require_committee_size(e, k);
  const int m = e.candidate_count();
  const std::uint64_t count = binomial(m, k);
  if (count > cap) throw CapExceeded("committee", count, cap);

  WinnerSet out;
  std::optional<Rational> best;
  std::vector<int> members(static_cast<std::size_t>(k));
  std::iota(members.begin(), members.end(), 0);
  while (true) {
    const Committee w{std::span<const int>(members)};
    const Rational score = score_committee(e, rule, w);
    ++out.enumerated;
    if (!best || score > *best) {
      best = score;
      out.committees.clear();
    }
    if (score == *best) out.committees.push_back(w);

    int i = k - 1;
    while (i >= 0 && members[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++members[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) members[static_cast<std::size_t>(j)] = members[static_cast<std::size_t>(j - 1)] + 1;
  }
  out.score = *best;
  return out;
}

bool is_excluded(const Election& e, Rule rule, int k, const CandidateSet& distinguished, std::uint64_t cap) {
  require_committee_size(e, k);
  require_distinguished(e, distinguished);
  if (is_separable(rule)) return separable_excluded(e, rule, k, distinguished);
  return is_excluded_by_enumeration(e, rule, k, distinguished, cap);
}

bool is_excluded_by_enumeration(const Election& e, Rule rule, int k, const CandidateSet& distinguished,
                                std::uint64_t cap) {
  require_committee_size(e, k);
  require_distinguished(e, distinguished);
  const WinnerSet winners = winning_committees(e, rule, k, cap);
  return std::none_of(winners.committees.begin(), winners.committees.end(),
                      [&](const Committee& w) { return w.intersects(distinguished); });
}

bool separable_excluded(const Election& e, Rule rule, int k, const CandidateSet& distinguished) {
  if (!is_separable(rule)) throw std::invalid_argument("separable_excluded needs AV, SAV or NSAV");
  require_committee_size(e, k);
  require_distinguished(e, distinguished);
  const auto scores = candidate_scores(e, rule);
  bool excluded = true;
  distinguished.for_each([&](int p) {
    if (!excluded) return;
    const auto above = std::count_if(scores.begin(), scores.end(),
                                     [&](const Rational& s) { return s > scores[static_cast<std::size_t>(p)]; });
    excluded = above >= k;
  });
  return excluded;
}

std::int64_t scale_factor(int m) {
  if (m < 1) throw std::invalid_argument("scale factor needs m >= 1");
  if (m > 42) throw std::overflow_error("lcm(1..m) exceeds 64 bits for m > 42");
  std::int64_t l = 1;
  for (std::int64_t i = 2; i <= m; ++i) l = l / std::gcd(l, i) * i;
  return l;
}

std::int64_t scaled_ballot_score(int m, Rule rule, const Ballot& ballot, const Committee& committee) {
  const Rational scaled = Rational(scale_factor(m)) * ballot_score(m, rule, ballot, committee);
  if (!scaled.is_integer()) throw std::logic_error("scaled ballot score is not integral");
  return scaled.numerator();
}

MaskScorer::MaskScorer(int m, Rule rule)
    : m_(m), rule_(rule), scale_(0), full_(0) {
  if (m < 1 || m > kMaxMaskCandidates) {
    throw std::invalid_argument("MaskScorer supports 1.." + std::to_string(kMaxMaskCandidates) + " candidates");
  }
  scale_ = scale_factor(m);
  full_ = (std::uint64_t{1} << m) - 1;
  harmonic_.assign(static_cast<std::size_t>(m + 1), 0);
  for (int i = 1; i <= m; ++i) harmonic_[static_cast<std::size_t>(i)] = harmonic_[static_cast<std::size_t>(i - 1)] + scale_ / i;
}

std::int64_t MaskScorer::ballot_score(std::uint64_t ballot, std::uint64_t committee) const {
  const int common = std::popcount(ballot & committee);
  const int size = std::popcount(ballot);
  switch (rule_) {
    case Rule::kAV:
      return common * scale_;
    case Rule::kSAV:
      return size == 0 ? 0 : common * (scale_ / size);
    case Rule::kNSAV: {
      std::int64_t score = size == 0 ? 0 : common * (scale_ / size);
      if (size != m_) score -= std::popcount(committee & ~ballot) * (scale_ / (m_ - size));
      return score;
    }
    case Rule::kCCAV:
      return common > 0 ? scale_ : 0;
    case Rule::kPAV:
      return harmonic_[static_cast<std::size_t>(common)];
  }
  return 0;
}

void MaskScorer::accumulate(std::uint64_t ballot, std::span<std::int64_t> scores, std::int64_t sign) const {
  const int size = std::popcount(ballot);
  std::int64_t share = 0;
  switch (rule_) {
    case Rule::kAV: share = scale_; break;
    case Rule::kSAV:
    case Rule::kNSAV: share = size == 0 ? 0 : scale_ / size; break;
    default: throw std::logic_error("accumulate needs a separable rule");
  }
  for (std::uint64_t bits = ballot; bits != 0; bits &= bits - 1) {
    scores[static_cast<std::size_t>(std::countr_zero(bits))] += sign * share;
  }
  if (rule_ == Rule::kNSAV && size != m_) {
    const std::int64_t penalty = scale_ / (m_ - size);
    for (std::uint64_t bits = full_ & ~ballot; bits != 0; bits &= bits - 1) {
      scores[static_cast<std::size_t>(std::countr_zero(bits))] -= sign * penalty;
    }
  }
}

bool MaskScorer::excluded(std::span<const std::uint64_t> ballots, int k, std::uint64_t distinguished) const {
  if (is_separable(rule_)) {
    std::array<std::int64_t, kMaxMaskCandidates> scores{};
    for (auto b : ballots) accumulate(b, scores);
    std::int64_t top = std::numeric_limits<std::int64_t>::min();
    for (std::uint64_t bits = distinguished; bits != 0; bits &= bits - 1) {
      top = std::max(top, scores[static_cast<std::size_t>(std::countr_zero(bits))]);
    }
    int above = 0;
    for (int c = 0; c < m_; ++c) above += scores[static_cast<std::size_t>(c)] > top ? 1 : 0;
    return above >= k;
  }
  std::int64_t best_outside = std::numeric_limits<std::int64_t>::min();
  std::int64_t best_inside = std::numeric_limits<std::int64_t>::min();
  for_each_k_subset(m_, k, [&](std::uint64_t w) {
    std::int64_t score = 0;
    for (auto b : ballots) score += ballot_score(b, w);
    auto& slot = (w & distinguished) != 0 ? best_inside : best_outside;
    slot = std::max(slot, score);
  });
  return best_outside > best_inside;
}

}  // namespace bribery
