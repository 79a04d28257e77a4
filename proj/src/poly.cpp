#include "bribery/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bribery {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Distinguished candidate with the highest AV score, lowest index on ties.
int strongest(const CandidateSet& candidates, const std::vector<int>& av) {
  int best = -1;
  candidates.for_each([&](int c) {
    if (best < 0 || av[static_cast<std::size_t>(c)] > av[static_cast<std::size_t>(best)]) best = c;
  });
  return best;
}

std::vector<int> non_distinguished(const Instance& inst) {
  std::vector<int> out;
  for (int c = 0; c < inst.election.candidate_count(); ++c) {
    if (!inst.distinguished.contains(c)) out.push_back(c);
  }
  return out;
}

Decision decision(const char* name, bool answer, Script witness = {}) {
  Decision d;
  d.algorithm = name;
  d.answer = answer;
  if (answer) d.witness = std::move(witness);
  return d;
}

}  // namespace

Decision solve_appadd_av(const Instance& inst) {
  constexpr const char* kName = "poly-appadd-av";
  require(inst.rule == Rule::kAV && inst.operation == Operation::kAppAdd, "poly-appadd-av needs rule av, op appadd");
  inst.validate();
  const Election& e = inst.election;
  const int n = e.vote_count();
  const auto av = e.approval_counts();

  bool pinned = false;
  inst.distinguished.for_each([&](int c) { pinned = pinned || av[static_cast<std::size_t>(c)] == n; });
  if (pinned) return decision(kName, false);

  const int target = av[static_cast<std::size_t>(strongest(inst.distinguished, av))] + 1;
  std::vector<int> above;
  std::vector<int> rest;
  for (int c : non_distinguished(inst)) (av[static_cast<std::size_t>(c)] >= target ? above : rest).push_back(c);
  if (static_cast<int>(above.size()) >= inst.committee_size) return decision(kName, true);

  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
    return target - av[static_cast<std::size_t>(a)] < target - av[static_cast<std::size_t>(b)];
  });
  const auto needed = static_cast<std::size_t>(inst.committee_size) - above.size();
  if (rest.size() < needed) return decision(kName, false);

  std::int64_t cost = 0;
  for (std::size_t i = 0; i < needed; ++i) cost += target - av[static_cast<std::size_t>(rest[i])];
  if (cost > inst.budget) return decision(kName, false);

  std::vector<Ballot> ballots = e.votes();
  for (std::size_t i = 0; i < needed; ++i) {
    const int c = rest[i];
    int missing = target - av[static_cast<std::size_t>(c)];
    for (int v = 0; v < n && missing > 0; ++v) {
      if (e.vote(v).contains(c)) continue;
      ballots[static_cast<std::size_t>(v)].insert(c);
      --missing;
    }
  }
  Script witness;
  for (int v = 0; v < n; ++v) {
    if (ballots[static_cast<std::size_t>(v)] != e.vote(v)) witness.edits.emplace(v, ballots[static_cast<std::size_t>(v)]);
  }
  return decision(kName, true, std::move(witness));
}

Decision solve_appdel_av(const Instance& inst) {
  constexpr const char* kName = "poly-appdel-av";
  require(inst.rule == Rule::kAV && inst.operation == Operation::kAppDel, "poly-appdel-av needs rule av, op appdel");
  inst.validate();
  const Election& e = inst.election;
  auto av = e.approval_counts();
  const auto outside = non_distinguished(inst);

  const auto approved_outside =
      std::count_if(outside.begin(), outside.end(), [&](int c) { return av[static_cast<std::size_t>(c)] >= 1; });
  if (approved_outside < inst.committee_size) return decision(kName, false);

  std::vector<Ballot> ballots = e.votes();
  std::int64_t deletions = 0;
  Decision d;
  while (true) {
    ++d.stats.nodes;
    const int top = strongest(inst.distinguished, av);
    const int threshold = av[static_cast<std::size_t>(top)] + 1;
    const auto clear =
        std::count_if(outside.begin(), outside.end(), [&](int c) { return av[static_cast<std::size_t>(c)] >= threshold; });
    if (clear >= inst.committee_size) break;
    if (av[static_cast<std::size_t>(top)] == 0 || deletions == inst.budget) {
      d.algorithm = kName;
      return d;
    }
    const auto v = std::find_if(ballots.begin(), ballots.end(), [&](const Ballot& b) { return b.contains(top); });
    v->erase(top);
    --av[static_cast<std::size_t>(top)];
    ++deletions;
  }

  Script witness;
  for (int v = 0; v < e.vote_count(); ++v) {
    if (ballots[static_cast<std::size_t>(v)] != e.vote(v)) witness.edits.emplace(v, ballots[static_cast<std::size_t>(v)]);
  }
  Decision out = decision(kName, true, std::move(witness));
  out.stats = d.stats;
  return out;
}

Decision solve_vac_av_k1(const Instance& inst) {
  constexpr const char* kName = "poly-vac-av-k1";
  require(inst.rule == Rule::kAV && inst.operation == Operation::kVAC, "poly-vac-av-k1 needs rule av, op vac");
  require(inst.committee_size == 1, "poly-vac-av-k1 needs k = 1");
  inst.validate();
  const Election& e = inst.election;
  if (inst.distance == 0) {
    return decision(kName, separable_excluded(e, Rule::kAV, 1, inst.distinguished));
  }
  const auto av = e.approval_counts();
  const auto outside = non_distinguished(inst);
  if (outside.empty()) return decision(kName, false);

  const int s = av[static_cast<std::size_t>(strongest(inst.distinguished, av))];
  int best = outside.front();
  for (int c : outside) {
    if (av[static_cast<std::size_t>(c)] > av[static_cast<std::size_t>(best)]) best = c;
  }
  const int score = av[static_cast<std::size_t>(best)];
  if (score >= s + 1) return decision(kName, true);
  const std::int64_t reachable = std::min<std::int64_t>(inst.budget, e.vote_count() - score);
  if (score + reachable < s + 1) return decision(kName, false);

  Script witness;
  int missing = s + 1 - score;
  for (int v = 0; v < e.vote_count() && missing > 0; ++v) {
    if (e.vote(v).contains(best)) continue;
    Ballot b = e.vote(v);
    b.insert(best);
    witness.edits.emplace(v, std::move(b));
    --missing;
  }
  return decision(kName, true, std::move(witness));
}

Decision solve_vdc_av_r1(const Instance& inst) {
  constexpr const char* kName = "poly-vdc-av-r1";
  require(inst.rule == Rule::kAV && inst.operation == Operation::kVDC, "poly-vdc-av-r1 needs rule av, op vdc");
  require(inst.distance == 1, "poly-vdc-av-r1 needs r = 1");
  inst.validate();
  const Election& e = inst.election;
  const auto av = e.approval_counts();
  const int s = kth_outside_score(inst, av);
  // Scores cannot drop below zero, so s <= 0 leaves no room under it.
  if (s <= 0) return decision(kName, false);

  // Left side: one node per required deletion (copies of each c in J').
  std::vector<int> copy_owner;
  std::int64_t deficit = 0;
  inst.distinguished.for_each([&](int c) {
    const int need = av[static_cast<std::size_t>(c)] - s + 1;
    if (need <= 0) return;
    deficit += need;
    for (int i = 0; i < need; ++i) copy_owner.push_back(c);
  });
  if (copy_owner.empty()) return decision(kName, true);
  if (deficit > inst.budget) return decision(kName, false);

  std::vector<std::vector<int>> adjacency(copy_owner.size());
  for (std::size_t l = 0; l < copy_owner.size(); ++l) {
    for (int v = 0; v < e.vote_count(); ++v) {
      if (e.vote(v).contains(copy_owner[l])) adjacency[l].push_back(v);
    }
  }
  const auto match = max_bipartite_matching(static_cast<int>(copy_owner.size()), e.vote_count(), adjacency);
  if (std::find(match.begin(), match.end(), -1) != match.end()) return decision(kName, false);

  Script witness;
  for (std::size_t l = 0; l < copy_owner.size(); ++l) {
    Ballot b = e.vote(match[l]);
    b.erase(copy_owner[l]);
    witness.edits.emplace(match[l], std::move(b));
  }
  Decision d = decision(kName, true, std::move(witness));
  d.stats.nodes = copy_owner.size();
  return d;
}

int kth_outside_score(const Instance& inst, const std::vector<int>& av) {
  std::vector<int> outside;
  for (int c : non_distinguished(inst)) outside.push_back(av[static_cast<std::size_t>(c)]);
  if (static_cast<int>(outside.size()) < inst.committee_size) return -1;
  std::sort(outside.begin(), outside.end(), std::greater<>());
  return outside[static_cast<std::size_t>(inst.committee_size - 1)];
}

std::vector<int> max_bipartite_matching(int left_count, int right_count,
                                        const std::vector<std::vector<int>>& adjacency) {
  std::vector<int> left_match(static_cast<std::size_t>(left_count), -1);
  std::vector<int> right_match(static_cast<std::size_t>(right_count), -1);
  std::vector<int> visited(static_cast<std::size_t>(right_count), -1);

  std::function<bool(int, int)> augment = [&](int l, int stamp) -> bool {
    for (int r : adjacency[static_cast<std::size_t>(l)]) {
      if (visited[static_cast<std::size_t>(r)] == stamp) continue;
      visited[static_cast<std::size_t>(r)] = stamp;
      const int other = right_match[static_cast<std::size_t>(r)];
      if (other < 0 || augment(other, stamp)) {
        left_match[static_cast<std::size_t>(l)] = r;
        right_match[static_cast<std::size_t>(r)] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < left_count; ++l) augment(l, l);
  return left_match;
}

}  // namespace bribery
