#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bribery/bribery.hpp"
#include "bribery/common.hpp"
#include "bribery/integer_program.hpp"

namespace bribery {

// Integer program asking whether the votes can be rewritten so that the
// committee W scores strictly more than every k-committee meeting J.
struct CommitteeProgram {
  struct Move {
    int group = 0;  // index into groups
    Ballot to;
  };
  IntegerProgram program;
  std::vector<Move> moves;  // meaning of each variable: that many votes of `group` become `to`
  // Votes grouped by identical ballot, ascending ballot order; vote indices ascending.
  std::vector<std::pair<Ballot, std::vector<int>>> groups;
};

// Needs m <= kMaxMaskCandidates, |W| = k and W disjoint from J. Throws
// CapExceeded("ip-variable") or CapExceeded("committee") when the program
// would exceed the configured size.
CommitteeProgram build_ilp_m(const Instance& inst, const Committee& committee, const Limits& limits = {});

// Turns a feasible assignment into a script, rewriting the lowest-indexed
// votes of each group first.
Script decode_ilp_m(const CommitteeProgram& program, std::span<const std::int64_t> values);

// Tries every k-committee disjoint from J in lexicographic order; the first
// feasible program supplies the witness. Any rule and operation.
Decision solve_fpt_m(const Instance& inst, const Limits& limits = {});
Decision solve_fpt_m_serial(const Instance& inst, const Limits& limits = {});

// VDC under AV, integer program over the patterns v ∩ J.
Decision solve_vdc_av_fpt_j(const Instance& inst, const Limits& limits = {});

// VDC under AV: guesses the set of modified votes (at most the budget, only
// votes approving a candidate of J that must drop) and checks each guess
// with a maximum flow.
Decision solve_vdc_av_flow(const Instance& inst, const Limits& limits = {});

// VC and VAC under AV with unrestricted distance (r >= m): every touched vote
// is rewritten to approve all non-distinguished candidates (VC: exactly
// those; VAC: in addition to its ballot). Tries all vote subsets up to the
// budget.
Decision solve_vc_vac_av_enum(const Instance& inst, const Limits& limits = {});

}  // namespace bribery
