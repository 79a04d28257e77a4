#pragma once

// Test-side reference implementations. They share no code with the library
// beyond the data types: scores are recomputed from the rule definitions,
// committees enumerated recursively, and bribery decided by trying every
// ballot profile.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bribery/bench.hpp"
#include "bribery/bribery.hpp"
#include "bribery/rational.hpp"

namespace bribery::fixtures {

inline Election e1() { return Election(3, {Ballot{0, 1}, Ballot{0}, Ballot{1, 2}}); }

inline Rational naive_harmonic(int i) {
  Rational h(0);
  for (int j = 1; j <= i; ++j) h = h + Rational(1, j);
  return h;
}

inline Rational naive_vote_score(int m, Rule rule, const std::vector<bool>& vote, const std::vector<int>& committee) {
  int approved = 0;
  for (bool b : vote) approved += b ? 1 : 0;
  int hit = 0;
  for (int c : committee) hit += vote[static_cast<std::size_t>(c)] ? 1 : 0;
  const int miss = static_cast<int>(committee.size()) - hit;
  switch (rule) {
    case Rule::kAV: return Rational(hit);
    case Rule::kSAV: return approved == 0 ? Rational(0) : Rational(hit, approved);
    case Rule::kNSAV: {
      Rational s = approved == 0 ? Rational(0) : Rational(hit, approved);
      if (approved < m) s = s - Rational(miss, m - approved);
      return s;
    }
    case Rule::kCCAV: return Rational(hit > 0 ? 1 : 0);
    case Rule::kPAV: return naive_harmonic(hit);
  }
  return Rational(0);
}

inline std::vector<bool> as_flags(const Ballot& b, int m) {
  std::vector<bool> out(static_cast<std::size_t>(m), false);
  b.for_each([&](int c) { out[static_cast<std::size_t>(c)] = true; });
  return out;
}

inline Rational naive_score(const Election& e, Rule rule, const std::vector<int>& committee) {
  Rational total(0);
  for (const auto& v : e.votes()) {
    total = total + naive_vote_score(e.candidate_count(), rule, as_flags(v, e.candidate_count()), committee);
  }
  return total;
}

inline void naive_committees(int m, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> current;
  std::function<void(int)> go = [&](int next) {
    if (static_cast<int>(current.size()) == k) {
      f(current);
      return;
    }
    for (int c = next; c < m; ++c) {
      current.push_back(c);
      go(c + 1);
      current.pop_back();
    }
  };
  go(0);
}

inline bool naive_excluded(const Election& e, Rule rule, int k, const CandidateSet& j) {
  bool first = true;
  Rational best(0);
  bool best_hits_j = false;
  naive_committees(e.candidate_count(), k, [&](const std::vector<int>& w) {
    const Rational s = naive_score(e, rule, w);
    bool hits = false;
    for (int c : w) hits = hits || j.contains(c);
    if (first || s > best) {
      best = s;
      best_hits_j = hits;
      first = false;
    } else if (s == best) {
      best_hits_j = best_hits_j || hits;
    }
  });
  return !best_hits_j;
}

// Decides bribery by trying every profile of final ballots. Only for tiny
// elections (2^(m*n) profiles).
inline bool naive_bribery(const Instance& inst) {
  const Election& e = inst.election;
  const int m = e.candidate_count();
  const int n = e.vote_count();
  const std::uint64_t patterns = std::uint64_t{1} << m;
  std::vector<std::uint64_t> original;
  for (const auto& v : e.votes()) original.push_back(v.to_mask());

  auto admissible = [&](std::uint64_t from, std::uint64_t to) {
    if (from == to) return true;
    const int d = __builtin_popcountll(from ^ to);
    switch (inst.operation) {
      case Operation::kAppAdd: return (from & ~to) == 0;
      case Operation::kAppDel: return (to & ~from) == 0;
      case Operation::kVAC: return (from & ~to) == 0 && d <= inst.distance;
      case Operation::kVDC: return (to & ~from) == 0 && d <= inst.distance;
      case Operation::kVC: return d <= inst.distance;
    }
    return false;
  };

  std::vector<std::uint64_t> profile(static_cast<std::size_t>(n), 0);
  std::function<bool(int, std::int64_t)> go = [&](int i, std::int64_t spent) -> bool {
    if (spent > inst.budget) return false;
    if (i == n) {
      std::vector<Ballot> votes;
      for (auto b : profile) votes.push_back(CandidateSet::from_mask(b));
      return naive_excluded(Election(m, votes), inst.rule, inst.committee_size, inst.distinguished);
    }
    for (std::uint64_t b = 0; b < patterns; ++b) {
      const std::uint64_t from = original[static_cast<std::size_t>(i)];
      if (!admissible(from, b)) continue;
      const std::int64_t cost = is_atomic(inst.operation) ? __builtin_popcountll(from ^ b) : (from == b ? 0 : 1);
      profile[static_cast<std::size_t>(i)] = b;
      if (go(i + 1, spent + cost)) return true;
    }
    return false;
  };
  return go(0, 0);
}

inline Instance make_instance(Election e, Rule rule, Operation op, CandidateSet j, int k, std::int64_t ell, int r) {
  Instance inst;
  inst.election = std::move(e);
  inst.rule = rule;
  inst.operation = op;
  inst.distinguished = std::move(j);
  inst.committee_size = k;
  inst.budget = ell;
  inst.distance = r;
  return inst;
}

inline RandomSpec spec_for(Rule rule, Operation op, int m_max, int n_max, std::int64_t ell_max, int r_max) {
  RandomSpec spec;
  spec.m_min = 1;
  spec.m_max = m_max;
  spec.n_min = 0;
  spec.n_max = n_max;
  spec.k_max = m_max;
  spec.ell_max = ell_max;
  spec.r_max = r_max;
  spec.rules = {rule};
  spec.operations = {op};
  return spec;
}

}  // namespace bribery::fixtures
