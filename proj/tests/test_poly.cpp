#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "bribery/oracle.hpp"
#include "bribery/poly.hpp"
#include "support.hpp"

using namespace bribery;
using bribery::fixtures::e1;
using bribery::fixtures::make_instance;

TEST(PolyAppAdd, E1Trace) {
  const auto d = solve_appadd_av(make_instance(e1(), Rule::kAV, Operation::kAppAdd, CandidateSet{0}, 1, 1, 0));
  ASSERT_TRUE(d.answer);
  EXPECT_EQ(d.witness->edits, (std::map<int, Ballot>{{1, Ballot{0, 1}}}));
  EXPECT_FALSE(solve_appadd_av(make_instance(e1(), Rule::kAV, Operation::kAppAdd, CandidateSet{0}, 1, 0, 0)).answer);
}

TEST(PolyAppAdd, DistinguishedApprovedByEveryoneCannotBeBeaten) {
  const Election e(2, {Ballot{0}, Ballot{0, 1}});
  EXPECT_FALSE(solve_appadd_av(make_instance(e, Rule::kAV, Operation::kAppAdd, CandidateSet{0}, 1, 5, 0)).answer);
}

TEST(PolyAppDel, E1Trace) {
  const Instance inst = make_instance(e1(), Rule::kAV, Operation::kAppDel, CandidateSet{0}, 1, 1, 0);
  const auto d = solve_appdel_av(inst);
  ASSERT_TRUE(d.answer);
  EXPECT_TRUE(check_solution(inst, *d.witness));
}

TEST(PolyAppDel, NoOtherApprovedCandidates) {
  const Election e(3, {Ballot{0}, Ballot{0}});
  EXPECT_FALSE(solve_appdel_av(make_instance(e, Rule::kAV, Operation::kAppDel, CandidateSet{0}, 1, 5, 0)).answer);
}

TEST(PolyVacK1, DistanceZeroReportsCurrentStatus) {
  EXPECT_FALSE(solve_vac_av_k1(make_instance(e1(), Rule::kAV, Operation::kVAC, CandidateSet{0}, 1, 3, 0)).answer);
  EXPECT_TRUE(solve_vac_av_k1(make_instance(e1(), Rule::kAV, Operation::kVAC, CandidateSet{2}, 1, 3, 0)).answer);
}

TEST(PolyVdcR1, E1Trace) {
  const Instance inst = make_instance(e1(), Rule::kAV, Operation::kVDC, CandidateSet{0}, 1, 1, 1);
  const auto d = solve_vdc_av_r1(inst);
  ASSERT_TRUE(d.answer);
  EXPECT_TRUE(check_solution(inst, *d.witness));
}

TEST(PolyDomains, RejectOtherRulesAndParameters) {
  EXPECT_THROW(solve_appadd_av(make_instance(e1(), Rule::kSAV, Operation::kAppAdd, CandidateSet{0}, 1, 1, 0)),
               std::invalid_argument);
  EXPECT_THROW(solve_vac_av_k1(make_instance(e1(), Rule::kAV, Operation::kVAC, CandidateSet{0}, 2, 1, 1)),
               std::invalid_argument);
  EXPECT_THROW(solve_vdc_av_r1(make_instance(e1(), Rule::kAV, Operation::kVDC, CandidateSet{0}, 1, 1, 2)),
               std::invalid_argument);
}

// Maximum matching size by trying every subset of left nodes (Hall's
// condition holds for the whole subset iff it can be matched).
int brute_matching_size(int left, int right, const std::vector<std::vector<int>>& adj) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << left); ++mask) {
    std::vector<int> nodes;
    for (int l = 0; l < left; ++l) {
      if ((mask >> l) & 1U) nodes.push_back(l);
    }
    // Try all injective assignments by DFS.
    std::vector<bool> used(static_cast<std::size_t>(right), false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
      if (i == nodes.size()) return true;
      for (int r : adj[static_cast<std::size_t>(nodes[i])]) {
        if (used[static_cast<std::size_t>(r)]) continue;
        used[static_cast<std::size_t>(r)] = true;
        if (place(i + 1)) return true;
        used[static_cast<std::size_t>(r)] = false;
      }
      return false;
    };
    if (place(0)) best = std::max(best, static_cast<int>(nodes.size()));
  }
  return best;
}

TEST(Matching, MaximumOnRandomBipartiteGraphs) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const int left = static_cast<int>(draw(rng, 0, 7));
    const int right = static_cast<int>(draw(rng, 0, 7));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(left));
    for (int l = 0; l < left; ++l) {
      for (int r = 0; r < right; ++r) {
        if (rng() % 3 == 0) adj[static_cast<std::size_t>(l)].push_back(r);
      }
    }
    const auto match = max_bipartite_matching(left, right, adj);
    std::set<int> rights;
    int size = 0;
    for (int l = 0; l < left; ++l) {
      const int r = match[static_cast<std::size_t>(l)];
      if (r < 0) continue;
      ++size;
      EXPECT_TRUE(rights.insert(r).second);
      const auto& options = adj[static_cast<std::size_t>(l)];
      EXPECT_NE(std::find(options.begin(), options.end(), r), options.end());
    }
    EXPECT_EQ(size, brute_matching_size(left, right, adj));
  }
}

TEST(PolyVsOracle, RandomInstances) {
  std::mt19937_64 rng(31);
  struct Case {
    Operation op;
    Decision (*solve)(const Instance&);
    int k_max;
    int r_min;
    int r_max;
  };
  const std::vector<Case> cases = {{Operation::kAppAdd, solve_appadd_av, 5, 0, 0},
                                   {Operation::kAppDel, solve_appdel_av, 5, 0, 0},
                                   {Operation::kVAC, solve_vac_av_k1, 1, 0, 5},
                                   {Operation::kVDC, solve_vdc_av_r1, 5, 1, 1}};
  for (const auto& c : cases) {
    RandomSpec spec = fixtures::spec_for(Rule::kAV, c.op, 5, 6, 3, c.r_max);
    spec.k_max = c.k_max;
    spec.r_min = c.r_min;
    for (int trial = 0; trial < 150; ++trial) {
      const Instance inst = random_instance(rng, spec);
      const auto d = c.solve(inst);
      ASSERT_EQ(d.answer, solve_bruteforce(inst).answer) << to_string(c.op) << " trial " << trial;
      if (d.answer) EXPECT_TRUE(check_solution(inst, *d.witness)) << to_string(c.op);
    }
  }
}
