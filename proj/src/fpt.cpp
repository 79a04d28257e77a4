#include "bribery/fpt.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "ballot_flips.hpp"
#include "bribery/max_flow.hpp"
#include "bribery/poly.hpp"
#include "ordered_search.hpp"

namespace bribery {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Decision no(const char* name) {
  Decision d;
  d.algorithm = name;
  return d;
}

Decision yes(const char* name, Script witness) {
  Decision d;
  d.algorithm = name;
  d.answer = true;
  d.witness = std::move(witness);
  return d;
}

std::vector<int> outside_candidates(const Instance& inst) {
  std::vector<int> out;
  for (int c = 0; c < inst.election.candidate_count(); ++c) {
    if (!inst.distinguished.contains(c)) out.push_back(c);
  }
  return out;
}

Decision solve_fpt_m_impl(const Instance& inst, const Limits& limits, bool parallel) {
  constexpr const char* kName = "ilp-m";
  inst.validate();
  require(inst.election.candidate_count() <= kMaxMaskCandidates,
          "ilp-m supports at most " + std::to_string(kMaxMaskCandidates) + " candidates");
  const auto outside = outside_candidates(inst);
  const int count = static_cast<int>(outside.size());
  const int k = inst.committee_size;

  Decision d = no(kName);
  const auto found = detail::first_subset_success<Script>(
      count, k, k, parallel, d.stats.nodes, d.stats.committees,
      [&](const std::vector<int>& pick, std::uint64_t& nodes) -> std::optional<Script> {
        Committee committee;
        for (int p : pick) committee.insert(outside[static_cast<std::size_t>(p)]);
        const CommitteeProgram cp = build_ilp_m(inst, committee, limits);
        const IpResult result = solve_ip_feasibility(cp.program, limits.ip_node_cap);
        nodes += result.nodes;
        if (!result.solution) return std::nullopt;
        return decode_ilp_m(cp, *result.solution);
      });
  if (found) {
    d.answer = true;
    d.witness = *found;
  }
  return d;
}

}  // namespace

CommitteeProgram build_ilp_m(const Instance& inst, const Committee& committee, const Limits& limits) {
  inst.validate();
  const Election& e = inst.election;
  const int m = e.candidate_count();
  const int k = inst.committee_size;
  require(m <= kMaxMaskCandidates, "ilp-m supports at most " + std::to_string(kMaxMaskCandidates) + " candidates");
  require(committee.size() == k, "guessed committee must have k members");
  require(committee.is_subset_of(e.all_candidates()), "guessed committee names unknown candidates");
  require(!committee.intersects(inst.distinguished), "guessed committee must avoid the distinguished candidates");

  const MaskScorer scorer(m, inst.rule);
  const std::uint64_t w = committee.to_mask();
  const std::uint64_t j = inst.distinguished.to_mask();
  const bool atomic = is_atomic(inst.operation);
  const int flips_allowed = detail::max_flips(inst);

  CommitteeProgram out;
  std::map<std::uint64_t, std::vector<int>> by_ballot;
  for (int v = 0; v < e.vote_count(); ++v) by_ballot[e.vote(v).to_mask()].push_back(v);

  std::uint64_t estimate = 0;
  if (inst.budget > 0) {
    for (const auto& [mask, votes] : by_ballot) {
      const int available = std::popcount(detail::flippable(inst.operation, mask, scorer.full()));
      estimate = saturating_add(estimate, detail::flip_count(available, flips_allowed));
    }
  }
  if (estimate > limits.ip_variable_cap) throw CapExceeded("ip-variable", estimate, limits.ip_variable_cap);
  const std::uint64_t rivals = binomial(m, k) - binomial(m - inst.distinguished.size(), k);
  if (rivals > limits.committee_cap) throw CapExceeded("committee", rivals, limits.committee_cap);

  std::vector<std::uint64_t> group_mask;
  std::vector<std::uint64_t> move_mask;
  std::vector<std::vector<Term>> group_terms;
  std::vector<Term> budget_terms;
  for (const auto& [mask, votes] : by_ballot) {
    const int group = static_cast<int>(out.groups.size());
    const auto size = static_cast<std::int64_t>(votes.size());
    out.groups.emplace_back(CandidateSet::from_mask(mask), votes);
    group_mask.push_back(mask);
    group_terms.emplace_back();
    if (inst.budget == 0) continue;
    for (std::uint64_t to : detail::flips(mask, detail::flippable(inst.operation, mask, scorer.full()), flips_allowed)) {
      const int distance = std::popcount(mask ^ to);
      const std::int64_t upper = std::min(size, atomic ? inst.budget / distance : inst.budget);
      if (upper == 0) continue;
      const Ballot target = CandidateSet::from_mask(to);
      const int x = out.program.add_variable(
          "x[" + out.groups.back().first.to_string() + "->" + target.to_string() + "]", upper);
      out.moves.push_back({group, target});
      move_mask.push_back(to);
      group_terms.back().push_back({x, 1});
      budget_terms.push_back({x, atomic ? distance : 1});
    }
  }

  for (std::size_t g = 0; g < out.groups.size(); ++g) {
    if (group_terms[g].empty()) continue;
    out.program.add_constraint(group_terms[g], Sense::kLessEqual,
                               static_cast<std::int64_t>(out.groups[g].second.size()),
                               "group " + out.groups[g].first.to_string());
  }
  out.program.add_constraint(budget_terms, Sense::kLessEqual, inst.budget, "budget");

  // score(W) - score(W') >= 1 in scaled units, for every rival W' meeting J.
  for_each_k_subset(m, k, [&](std::uint64_t rival) {
    if ((rival & j) == 0) return;
    auto gap = [&](std::uint64_t ballot) { return scorer.ballot_score(ballot, w) - scorer.ballot_score(ballot, rival); };
    std::vector<std::int64_t> group_gap(group_mask.size());
    std::int64_t base = 0;
    for (std::size_t g = 0; g < group_mask.size(); ++g) {
      group_gap[g] = gap(group_mask[g]);
      base += static_cast<std::int64_t>(out.groups[g].second.size()) * group_gap[g];
    }
    std::vector<Term> terms;
    terms.reserve(out.moves.size());
    for (std::size_t x = 0; x < out.moves.size(); ++x) {
      terms.push_back({static_cast<int>(x), gap(move_mask[x]) - group_gap[static_cast<std::size_t>(out.moves[x].group)]});
    }
    out.program.add_constraint(std::move(terms), Sense::kGreaterEqual, 1 - base,
                               "beats " + CandidateSet::from_mask(rival).to_string());
  });
  return out;
}

Script decode_ilp_m(const CommitteeProgram& program, std::span<const std::int64_t> values) {
  Script script;
  std::vector<std::size_t> next(program.groups.size(), 0);
  for (std::size_t x = 0; x < program.moves.size() && x < values.size(); ++x) {
    const auto g = static_cast<std::size_t>(program.moves[x].group);
    const auto& votes = program.groups[g].second;
    for (std::int64_t i = 0; i < values[x]; ++i) script.edits.emplace(votes.at(next[g]++), program.moves[x].to);
  }
  return script;
}

Decision solve_fpt_m(const Instance& inst, const Limits& limits) { return solve_fpt_m_impl(inst, limits, true); }

Decision solve_fpt_m_serial(const Instance& inst, const Limits& limits) {
  return solve_fpt_m_impl(inst, limits, false);
}

Decision solve_vdc_av_fpt_j(const Instance& inst, const Limits& limits) {
  constexpr const char* kName = "ilp-j";
  require(inst.rule == Rule::kAV && inst.operation == Operation::kVDC, "ilp-j needs rule av, op vdc");
  inst.validate();
  const Election& e = inst.election;
  const auto av = e.approval_counts();
  const int s = kth_outside_score(inst, av);
  if (s < 0) return no(kName);

  std::vector<int> pressed;  // members of J that must lose approvals
  inst.distinguished.for_each([&](int c) {
    if (av[static_cast<std::size_t>(c)] >= s) pressed.push_back(c);
  });
  if (pressed.empty()) return yes(kName, Script{});
  if (s == 0) return no(kName);

  std::map<CandidateSet, std::vector<int>> by_pattern;
  for (int v = 0; v < e.vote_count(); ++v) {
    CandidateSet pattern = e.vote(v) & inst.distinguished;
    if (!pattern.empty()) by_pattern[std::move(pattern)].push_back(v);
  }

  std::uint64_t estimate = 0;
  for (const auto& [pattern, votes] : by_pattern) {
    estimate = saturating_add(estimate, detail::flip_count(pattern.size(), inst.distance));
  }
  if (inst.budget == 0) estimate = 0;
  if (estimate > limits.ip_variable_cap) throw CapExceeded("ip-variable", estimate, limits.ip_variable_cap);

  IntegerProgram program;
  struct Removal {
    const std::vector<int>* votes;
    std::size_t group;
    CandidateSet removed;
  };
  std::vector<Removal> removals;
  std::vector<Term> budget_terms;
  std::map<int, std::vector<Term>> losses;
  std::size_t group = 0;
  for (const auto& [pattern, votes] : by_pattern) {
    std::vector<Term> group_terms;
    const auto members = pattern.elements();
    const int width = static_cast<int>(members.size());
    const std::int64_t upper = std::min<std::int64_t>(static_cast<std::int64_t>(votes.size()), inst.budget);
    for (int size = 1; upper > 0 && size <= std::min(width, inst.distance); ++size) {
      for_each_k_subset(width, size, [&](std::uint64_t pick) {
        CandidateSet removed;
        for (int i = 0; i < width; ++i) {
          if ((pick >> i) & 1U) removed.insert(members[static_cast<std::size_t>(i)]);
        }
        const int x = program.add_variable("x[" + pattern.to_string() + "-" + removed.to_string() + "]", upper);
        group_terms.push_back({x, 1});
        budget_terms.push_back({x, 1});
        removed.for_each([&](int c) { losses[c].push_back({x, 1}); });
        removals.push_back({&votes, group, std::move(removed)});
      });
    }
    if (!group_terms.empty()) {
      program.add_constraint(std::move(group_terms), Sense::kLessEqual, static_cast<std::int64_t>(votes.size()),
                             "group " + pattern.to_string());
    }
    ++group;
  }
  program.add_constraint(budget_terms, Sense::kLessEqual, inst.budget, "budget");
  for (int c : pressed) {
    program.add_constraint(losses[c], Sense::kGreaterEqual, av[static_cast<std::size_t>(c)] - s + 1,
                           "drop " + std::to_string(c));
  }

  const IpResult result = solve_ip_feasibility(program, limits.ip_node_cap);
  Decision d = no(kName);
  d.stats.nodes = result.nodes;
  if (!result.solution) return d;

  Script witness;
  std::vector<std::size_t> next(by_pattern.size(), 0);
  for (std::size_t x = 0; x < removals.size(); ++x) {
    const auto& r = removals[x];
    for (std::int64_t i = 0; i < (*result.solution)[x]; ++i) {
      const int v = r.votes->at(next[r.group]++);
      witness.edits.emplace(v, e.vote(v) - r.removed);
    }
  }
  d.answer = true;
  d.witness = std::move(witness);
  return d;
}

Decision solve_vdc_av_flow(const Instance& inst, const Limits& limits) {
  constexpr const char* kName = "flow";
  require(inst.rule == Rule::kAV && inst.operation == Operation::kVDC, "flow needs rule av, op vdc");
  inst.validate();
  const Election& e = inst.election;
  const auto av = e.approval_counts();
  const int s = kth_outside_score(inst, av);
  if (s < 0) return no(kName);

  CandidateSet pressed;
  std::int64_t deficit = 0;
  inst.distinguished.for_each([&](int c) {
    if (av[static_cast<std::size_t>(c)] < s) return;
    pressed.insert(c);
    deficit += av[static_cast<std::size_t>(c)] - s + 1;
  });
  if (pressed.empty()) return yes(kName, Script{});
  if (s == 0) return no(kName);

  std::vector<int> relevant;
  for (int v = 0; v < e.vote_count(); ++v) {
    if (e.vote(v).intersects(pressed)) relevant.push_back(v);
  }
  const int count = static_cast<int>(relevant.size());
  const int max_size = static_cast<int>(std::min<std::int64_t>(inst.budget, count));
  const std::uint64_t estimate = detail::count_subsets(count, 1, max_size);
  if (estimate > limits.subset_cap) throw CapExceeded("subset", estimate, limits.subset_cap);
  const auto targets = pressed.elements();

  Decision d = no(kName);
  std::uint64_t guesses = 0;
  const auto found = detail::first_subset_success<Script>(
      count, 1, max_size, true, d.stats.nodes, guesses,
      [&](const std::vector<int>& pick, std::uint64_t& nodes) -> std::optional<Script> {
        ++nodes;
        std::int64_t reach = 0;
        for (int p : pick) {
          const int v = relevant[static_cast<std::size_t>(p)];
          reach += std::min(inst.distance, e.vote(v).intersection_size(pressed));
        }
        if (reach < deficit) return std::nullopt;

        const int votes = static_cast<int>(pick.size());
        const int width = static_cast<int>(targets.size());
        // Nodes: 0 source, 1 sink, then the chosen votes, then the pressed candidates.
        FlowNetwork net(2 + votes + width, 0, 1);
        std::vector<std::pair<int, int>> approval_arcs;  // (vote position, candidate position) per arc
        std::vector<int> approval_index;
        for (int i = 0; i < votes; ++i) {
          const Ballot& ballot = e.vote(relevant[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
          net.add_arc(0, 2 + i, std::min(inst.distance, ballot.intersection_size(pressed)));
          for (int t = 0; t < width; ++t) {
            if (!ballot.contains(targets[static_cast<std::size_t>(t)])) continue;
            approval_index.push_back(net.add_arc(2 + i, 2 + votes + t, 1));
            approval_arcs.emplace_back(i, t);
          }
        }
        for (int t = 0; t < width; ++t) {
          net.add_arc(2 + votes + t, 1, av[static_cast<std::size_t>(targets[static_cast<std::size_t>(t)])] - s + 1);
        }
        const FlowResult flow = max_flow(net);
        if (flow.value != deficit) return std::nullopt;

        Script script;
        for (std::size_t a = 0; a < approval_arcs.size(); ++a) {
          if (flow.arc_flow[static_cast<std::size_t>(approval_index[a])] == 0) continue;
          const int v = relevant[static_cast<std::size_t>(pick[static_cast<std::size_t>(approval_arcs[a].first)])];
          auto it = script.edits.try_emplace(v, e.vote(v)).first;
          it->second.erase(targets[static_cast<std::size_t>(approval_arcs[a].second)]);
        }
        return script;
      });
  if (found) {
    d.answer = true;
    d.witness = *found;
  }
  return d;
}

Decision solve_vc_vac_av_enum(const Instance& inst, const Limits& limits) {
  constexpr const char* kName = "enum";
  require(inst.rule == Rule::kAV && (inst.operation == Operation::kVC || inst.operation == Operation::kVAC),
          "enum needs rule av, op vc or vac");
  inst.validate();
  const Election& e = inst.election;
  const int m = e.candidate_count();
  require(inst.distance >= m, "enum needs unrestricted distance (r >= m)");

  const CandidateSet outside = e.all_candidates() - inst.distinguished;
  std::vector<int> useful;
  std::vector<Ballot> rewrite;
  for (int v = 0; v < e.vote_count(); ++v) {
    Ballot b = inst.operation == Operation::kVC ? outside : (e.vote(v) | outside);
    if (b == e.vote(v)) continue;
    useful.push_back(v);
    rewrite.push_back(std::move(b));
  }
  const int count = static_cast<int>(useful.size());
  const int max_size = static_cast<int>(std::min<std::int64_t>(inst.budget, count));
  const std::uint64_t estimate = detail::count_subsets(count, 0, max_size);
  if (estimate > limits.subset_cap) throw CapExceeded("subset", estimate, limits.subset_cap);

  const auto base = e.approval_counts();
  const int k = inst.committee_size;
  Decision d = no(kName);
  std::uint64_t guesses = 0;
  const auto found = detail::first_subset_success<Script>(
      count, 0, max_size, true, d.stats.nodes, guesses,
      [&](const std::vector<int>& pick, std::uint64_t& nodes) -> std::optional<Script> {
        ++nodes;
        std::vector<int> av = base;
        for (int p : pick) {
          const Ballot& before = e.vote(useful[static_cast<std::size_t>(p)]);
          const Ballot& after = rewrite[static_cast<std::size_t>(p)];
          (after - before).for_each([&](int c) { ++av[static_cast<std::size_t>(c)]; });
          (before - after).for_each([&](int c) { --av[static_cast<std::size_t>(c)]; });
        }
        int strongest = -1;
        inst.distinguished.for_each([&](int c) { strongest = std::max(strongest, av[static_cast<std::size_t>(c)]); });
        int above = 0;
        outside.for_each([&](int c) { above += av[static_cast<std::size_t>(c)] > strongest ? 1 : 0; });
        if (above < k) return std::nullopt;
        Script script;
        for (int p : pick) script.edits.emplace(useful[static_cast<std::size_t>(p)], rewrite[static_cast<std::size_t>(p)]);
        return script;
      });
  if (found) {
    d.answer = true;
    d.witness = *found;
  }
  return d;
}

}  // namespace bribery
