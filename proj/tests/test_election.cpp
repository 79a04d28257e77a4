#include <gtest/gtest.h>

#include <random>

#include "bribery/bench.hpp"
#include "bribery/election.hpp"
#include "support.hpp"

using namespace bribery;
using bribery::fixtures::e1;

TEST(Election, ValidatesBallots) {
  EXPECT_THROW(Election(0, {}), std::invalid_argument);
  EXPECT_THROW(Election(2, {Ballot{2}}), std::invalid_argument);
  const Election e(2, {Ballot{}, Ballot{0, 1}});
  EXPECT_EQ(e.approval_counts(), (std::vector<int>{1, 1}));
}

TEST(Election, RuleNames) {
  for (Rule r : kAllRules) EXPECT_EQ(parse_rule(to_string(r)), r);
  EXPECT_FALSE(parse_rule("borda").has_value());
}

TEST(Scores, E1CandidateScores) {
  const Election e = e1();
  EXPECT_EQ(candidate_scores(e, Rule::kAV), (std::vector<Rational>{2, 2, 1}));
  EXPECT_EQ(candidate_scores(e, Rule::kSAV), (std::vector<Rational>{Rational(3, 2), 1, Rational(1, 2)}));
  EXPECT_EQ(candidate_scores(e, Rule::kNSAV), (std::vector<Rational>{Rational(1, 2), Rational(1, 2), -1}));
  EXPECT_EQ(score_committee(e, Rule::kAV, Committee{0, 1}), Rational(4));
  EXPECT_EQ(score_committee(e, Rule::kPAV, Committee{0, 1}), Rational(7, 2));
  EXPECT_EQ(score_committee(e, Rule::kCCAV, Committee{0}), Rational(2));
}

TEST(Scores, RejectsBadCommittees) {
  EXPECT_THROW(score_committee(e1(), Rule::kAV, Committee{}), std::invalid_argument);
  EXPECT_THROW(score_committee(e1(), Rule::kAV, Committee{3}), std::invalid_argument);
}

TEST(Scores, EmptyAndFullBallots) {
  const Election e(3, {Ballot{}, Ballot{0, 1, 2}});
  EXPECT_EQ(score_committee(e, Rule::kSAV, Committee{0}), Rational(1, 3));
  // The full ballot has nothing to penalize; the empty one penalizes by 1/3.
  EXPECT_EQ(score_committee(e, Rule::kNSAV, Committee{0}), Rational(1, 3) - Rational(1, 3));
}

TEST(Scores, MatchNaiveDefinitionOnRandomElections) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(draw(rng, 1, 6));
    const Election e = random_election(rng, m, static_cast<int>(draw(rng, 0, 7)));
    for (Rule rule : kAllRules) {
      fixtures::naive_committees(m, static_cast<int>(draw(rng, 1, m)), [&](const std::vector<int>& w) {
        EXPECT_EQ(score_committee(e, rule, Committee(w)), fixtures::naive_score(e, rule, w));
      });
    }
  }
}

TEST(Scores, ScaledScoresAreIntegers) {
  EXPECT_EQ(scale_factor(6), 60);
  EXPECT_THROW(scale_factor(43), std::overflow_error);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(draw(rng, 1, 8));
    const Ballot b = CandidateSet::from_mask(rng() % (std::uint64_t{1} << m));
    const Committee w = CandidateSet::from_mask(draw(rng, 1, (std::int64_t{1} << m) - 1));
    for (Rule rule : kAllRules) {
      EXPECT_EQ(Rational(scaled_ballot_score(m, rule, b, w)), ballot_score(m, rule, b, w) * Rational(scale_factor(m)));
      const MaskScorer scorer(m, rule);
      EXPECT_EQ(scorer.ballot_score(b.to_mask(), w.to_mask()), scaled_ballot_score(m, rule, b, w));
    }
  }
}

TEST(Winners, E1Examples) {
  const Election e = e1();
  const auto av = winning_committees(e, Rule::kAV, 1);
  EXPECT_EQ(av.committees, (std::vector<Committee>{Committee{0}, Committee{1}}));
  EXPECT_EQ(av.score, Rational(2));
  EXPECT_EQ(winning_committees(e, Rule::kSAV, 1).committees, (std::vector<Committee>{Committee{0}}));
  // {1,2} covers only two ballots, so it does not tie with the other two.
  EXPECT_EQ(winning_committees(e, Rule::kCCAV, 2).committees,
            (std::vector<Committee>{Committee{0, 1}, Committee{0, 2}}));
  EXPECT_EQ(winning_committees(e, Rule::kPAV, 3).committees, (std::vector<Committee>{Committee{0, 1, 2}}));
}

TEST(Winners, CapIsEnforcedBeforeEnumeration) {
  const Election e(30, {});
  try {
    winning_committees(e, Rule::kCCAV, 15, 1000);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& ex) {
    EXPECT_EQ(ex.cap_name(), "committee");
    EXPECT_EQ(ex.estimate(), binomial(30, 15));
  }
}

TEST(Winners, KernelMatchesSerialReference) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = static_cast<int>(draw(rng, 1, 8));
    const Election e = random_election(rng, m, static_cast<int>(draw(rng, 0, 9)));
    const int k = static_cast<int>(draw(rng, 1, m));
    for (Rule rule : kAllRules) {
      const auto fast = winning_committees(e, rule, k);
      const auto slow = winning_committees_serial(e, rule, k);
      EXPECT_EQ(fast.committees, slow.committees);
      EXPECT_EQ(fast.score, slow.score);
      EXPECT_EQ(fast.enumerated, binomial(m, k));
    }
  }
}

TEST(Exclusion, E1Examples) {
  const Election e = e1();
  EXPECT_FALSE(is_excluded(e, Rule::kAV, 1, CandidateSet{0}));
  EXPECT_TRUE(is_excluded(e, Rule::kAV, 1, CandidateSet{2}));
  EXPECT_TRUE(is_excluded(e, Rule::kAV, 2, CandidateSet{2}));
  EXPECT_TRUE(separable_excluded(e, Rule::kAV, 2, CandidateSet{2}));
}

TEST(Exclusion, SeparablePathMatchesEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(draw(rng, 1, 6));
    const Election e = random_election(rng, m, static_cast<int>(draw(rng, 0, 8)));
    const int k = static_cast<int>(draw(rng, 1, std::min(3, m)));
    const auto j = CandidateSet::from_mask(draw(rng, 1, (std::int64_t{1} << m) - 1));
    for (Rule rule : {Rule::kAV, Rule::kSAV, Rule::kNSAV}) {
      const bool expected = fixtures::naive_excluded(e, rule, k, j);
      EXPECT_EQ(separable_excluded(e, rule, k, j), expected);
      EXPECT_EQ(is_excluded_by_enumeration(e, rule, k, j), expected);
      EXPECT_EQ(is_excluded(e, rule, k, j), expected);
    }
    for (Rule rule : {Rule::kCCAV, Rule::kPAV}) EXPECT_EQ(is_excluded(e, rule, k, j), fixtures::naive_excluded(e, rule, k, j));
  }
}

TEST(Exclusion, MaskScorerAgrees) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(draw(rng, 1, 6));
    const Election e = random_election(rng, m, static_cast<int>(draw(rng, 0, 6)));
    const int k = static_cast<int>(draw(rng, 1, m));
    const auto j = CandidateSet::from_mask(draw(rng, 1, (std::int64_t{1} << m) - 1));
    std::vector<std::uint64_t> masks;
    for (const auto& v : e.votes()) masks.push_back(v.to_mask());
    for (Rule rule : kAllRules) {
      EXPECT_EQ(MaskScorer(m, rule).excluded(masks, k, j.to_mask()), is_excluded(e, rule, k, j));
    }
  }
}

TEST(Enumeration, GosperVisitsEveryKSubsetOnceInOrder) {
  for (int m = 0; m <= 10; ++m) {
    for (int k = 0; k <= m; ++k) {
      std::vector<std::uint64_t> seen;
      for_each_k_subset(m, k, [&](std::uint64_t mask) { seen.push_back(mask); });
      EXPECT_EQ(seen.size(), binomial(m, k));
      EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
      for (auto mask : seen) EXPECT_EQ(__builtin_popcountll(mask), k);
    }
  }
}
