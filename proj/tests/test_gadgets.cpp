#include <gtest/gtest.h>

#include "bribery/gadgets.hpp"
#include "bribery/oracle.hpp"
#include "graphs.hpp"
#include "support.hpp"

using namespace bribery;
using namespace bribery::fixtures;

TEST(SourceSolvers, Rx3cTrivialPicksFirstTriple) {
  EXPECT_EQ(rx3c_bruteforce(rx3c_trivial()), (std::vector<int>{0}));
}

TEST(SourceSolvers, Rx3cWithoutCover) {
  // Fano-like overlap: every pair of triples shares an element, so no two are disjoint.
  RX3CInstance inst{2,
                    {{0, 1, 2}, {0, 3, 4}, {0, 5, 1}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}}};
  ASSERT_NO_THROW(inst.validate());
  std::optional<std::vector<int>> found;
  for (std::size_t a = 0; a < inst.triples.size(); ++a) {
    for (std::size_t b = a + 1; b < inst.triples.size(); ++b) {
      bool disjoint = true;
      for (int x : inst.triples[a]) {
        for (int y : inst.triples[b]) disjoint = disjoint && x != y;
      }
      if (disjoint) found = std::vector<int>{static_cast<int>(a), static_cast<int>(b)};
    }
  }
  EXPECT_EQ(rx3c_bruteforce(inst).has_value(), found.has_value());
}

TEST(SourceSolvers, Rx3cCyclic) {
  const auto cover = rx3c_bruteforce(rx3c_cyclic(2));
  ASSERT_TRUE(cover);
  EXPECT_EQ(*cover, (std::vector<int>{0, 3}));
}

TEST(SourceSolvers, Rx3cValidation) {
  EXPECT_THROW((RX3CInstance{1, {{0, 1, 2}, {0, 1, 2}}}.validate()), std::invalid_argument);
  EXPECT_THROW((RX3CInstance{1, {{0, 1, 1}, {0, 1, 2}, {0, 2, 2}}}.validate()), std::invalid_argument);
}

TEST(SourceSolvers, GraphExamples) {
  EXPECT_EQ(independent_set_bruteforce(cycle(5), 2), (std::vector<int>{0, 2}));
  EXPECT_FALSE(independent_set_bruteforce(complete(3), 2));
  EXPECT_TRUE(clique_bruteforce(complete(4), 3));
  EXPECT_FALSE(clique_bruteforce(cycle(5), 3));
  Limits tight;
  tight.source_cap = 3;
  EXPECT_THROW(clique_bruteforce(complete(6), 3, tight), CapExceeded);
}

TEST(SourceSolvers, GraphValidation) {
  EXPECT_THROW((Graph{3, {{0, 0}}}.validate()), std::invalid_argument);
  EXPECT_THROW((Graph{3, {{0, 1}, {1, 0}}}.validate()), std::invalid_argument);
  EXPECT_THROW((Graph{3, {{0, 3}}}.validate()), std::invalid_argument);
  EXPECT_EQ(cycle(6).regular_degree(), 2);
  EXPECT_FALSE((Graph{3, {{0, 1}}}.regular_degree()));
}

TEST(NwdGadgets, ExamplesAndCounts) {
  const Instance c5 = gen_nwd_ccav(cycle(5), 2);
  EXPECT_EQ(c5.election.candidate_count(), 6);
  EXPECT_EQ(c5.election.vote_count(), 6);
  EXPECT_EQ(c5.budget, 0);
  EXPECT_TRUE(is_excluded(c5.election, c5.rule, c5.committee_size, c5.distinguished));
  const Instance k3 = gen_nwd_ccav(complete(3), 2);
  EXPECT_FALSE(is_excluded(k3.election, k3.rule, k3.committee_size, k3.distinguished));
  const Instance pav = gen_nwd_pav(cycle(5), 2);
  EXPECT_EQ(pav.election.vote_count(), 10 + 3);
  EXPECT_TRUE(is_excluded(pav.election, Rule::kPAV, 2, pav.distinguished));
  EXPECT_THROW(gen_nwd_ccav(Graph{3, {{0, 1}}}, 2), std::invalid_argument);
}

TEST(NwdGadgets, EquivalenceOnRegularGraphs) {
  for (const auto& [name, g] : regular_graph_set()) {
    for (int kappa : {2, 3}) {
      if (kappa > g.vertices) continue;
      const bool source = independent_set_bruteforce(g, kappa).has_value();
      for (const Instance& inst : {gen_nwd_ccav(g, kappa), gen_nwd_pav(g, kappa)}) {
        EXPECT_EQ(is_excluded(inst.election, inst.rule, inst.committee_size, inst.distinguished), source)
            << name << " kappa " << kappa << " " << to_string(inst.rule);
        // The oracle agrees (budget zero: one script).
        EXPECT_EQ(solve_bruteforce(inst).answer, source) << name;
      }
    }
  }
}

TEST(AppAddSav, ScoresAtKappaSix) {
  const Instance inst = gen_appadd_sav_rx3c(rx3c_cyclic(6));
  EXPECT_EQ(inst.election.candidate_count(), 19);
  EXPECT_EQ(inst.election.vote_count(), 9 + 18);
  const auto scores = candidate_scores(inst.election, Rule::kSAV);
  EXPECT_EQ(scores[18], Rational(0));
  for (int x = 0; x < 18; ++x) EXPECT_EQ(scores[static_cast<std::size_t>(x)], Rational(3, 2)) << x;
}

TEST(AppAddSav, Preconditions) {
  EXPECT_THROW(gen_appadd_sav_rx3c(rx3c_cyclic(5)), std::invalid_argument);
  EXPECT_THROW(gen_appadd_sav_rx3c(rx3c_cyclic(4)), std::invalid_argument);
  GadgetOptions unsafe;
  unsafe.unsafe = true;
  EXPECT_THROW(gen_appadd_sav_rx3c(rx3c_cyclic(5), unsafe), std::invalid_argument);
}

TEST(VcAvRx3c, ScoresAtKappaFour) {
  const Instance inst = gen_vc_av_rx3c(rx3c_cyclic(4));
  const auto av = inst.election.approval_counts();
  for (int x = 0; x < 12; ++x) EXPECT_EQ(av[static_cast<std::size_t>(x)], 4);
  EXPECT_EQ(av[12], 0);
  EXPECT_THROW(gen_vc_av_rx3c(rx3c_cyclic(3)), std::invalid_argument);
}

TEST(VdcAvRx3c, ScoresAtKappaTwo) {
  const Instance inst = gen_vdc_av_rx3c(rx3c_cyclic(2));
  for (int a : inst.election.approval_counts()) EXPECT_EQ(a, 3);
  const Instance trivial = gen_vdc_av_rx3c(rx3c_trivial());
  EXPECT_EQ(trivial.election.candidate_count(), 4);
  EXPECT_EQ(trivial.election.vote_count(), 6);
}

TEST(VcAvClique, Scores) {
  for (int kappa : {2, 3}) {
    const Graph g = complete(kappa * kappa * kappa + 2);
    const Instance inst = gen_vc_av_clique(g, kappa);
    const auto av = inst.election.approval_counts();
    const int edges = static_cast<int>(g.edges.size());
    EXPECT_EQ(av[static_cast<std::size_t>(g.vertices)], edges);
    for (int u = 0; u < g.vertices; ++u) {
      EXPECT_EQ(av[static_cast<std::size_t>(u)], 1 + edges - (kappa - 1) * (kappa + 2) / 2);
    }
    EXPECT_EQ(inst.budget, kappa * (kappa - 1) / 2);
  }
  EXPECT_THROW(gen_vc_av_clique(complete(5), 2), std::invalid_argument);
}

void expect_planted(const Gadget& gadget, std::int64_t cost) {
  const auto witness = solve_source(gadget);
  ASSERT_TRUE(witness) << to_string(gadget.kind);
  const Script script = plant_witness(gadget, *witness);
  EXPECT_FALSE(validate_script(gadget.instance, script).has_value()) << to_string(gadget.kind);
  EXPECT_EQ(script_cost(gadget.instance, script), cost) << to_string(gadget.kind);
  EXPECT_TRUE(check_solution(gadget.instance, script)) << to_string(gadget.kind);
}

TEST(PlantedWitness, EveryKind) {
  expect_planted(build_gadget(GadgetKind::kNwdCcav, cycle(5), 2), 0);
  expect_planted(build_gadget(GadgetKind::kNwdPav, petersen(), 3), 0);
  expect_planted(build_gadget(GadgetKind::kAppAddSavRx3c, rx3c_cyclic(6), 0), 6);
  for (int kappa : {4, 5, 6}) expect_planted(build_gadget(GadgetKind::kVcAvRx3c, rx3c_cyclic(kappa), 0), kappa);
  for (int kappa : {1, 2, 3, 4}) expect_planted(build_gadget(GadgetKind::kVdcAvRx3c, rx3c_cyclic(kappa), 0), kappa);
  expect_planted(build_gadget(GadgetKind::kVdcAvRx3c, rx3c_trivial(), 0), 1);
  expect_planted(build_gadget(GadgetKind::kVcAvClique, complete(10), 2), 1);
  expect_planted(build_gadget(GadgetKind::kVcAvClique, complete(29), 3), 3);
}

TEST(PlantedWitness, RejectsInvalidWitness) {
  const Gadget g = build_gadget(GadgetKind::kVcAvRx3c, rx3c_cyclic(4), 0);
  EXPECT_THROW(plant_witness(g, {0, 1, 2, 3}), std::invalid_argument);
  const Gadget c = build_gadget(GadgetKind::kNwdCcav, cycle(5), 2);
  EXPECT_THROW(plant_witness(c, {0, 1}), std::invalid_argument);
}

TEST(Padding, StrictSavOrderSurvives) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(draw(rng, 2, 5));
    const int n = static_cast<int>(draw(rng, 0, 6));
    Instance inst = make_instance(random_election(rng, m, n), Rule::kSAV, Operation::kAppAdd, CandidateSet{0}, 1, 0, 0);
    const Instance padded = pad_with_dummies(inst);
    EXPECT_EQ(padded.rule, Rule::kNSAV);
    EXPECT_EQ(padded.election.candidate_count(), m + n * m * m);
    const auto sav = candidate_scores(inst.election, Rule::kSAV);
    const auto nsav = candidate_scores(padded.election, Rule::kNSAV);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (sav[static_cast<std::size_t>(a)] > sav[static_cast<std::size_t>(b)]) {
          EXPECT_GT(nsav[static_cast<std::size_t>(a)], nsav[static_cast<std::size_t>(b)]) << "trial " << trial;
        }
      }
    }
  }
}

// A SAV tie between candidates with different numbers of non-approving
// votes always becomes strict under NSAV, however many dummies are added.
TEST(Padding, SavTiesCanSplit) {
  const Instance inst = make_instance(Election(3, {Ballot{0}, Ballot{1, 2}, Ballot{1, 2}}), Rule::kSAV,
                                      Operation::kAppAdd, CandidateSet{0}, 1, 0, 0);
  const auto sav = candidate_scores(inst.election, Rule::kSAV);
  EXPECT_EQ(sav[0], sav[1]);
  const auto nsav = candidate_scores(pad_with_dummies(inst).election, Rule::kNSAV);
  EXPECT_LT(nsav[0], nsav[1]);
}
