#pragma once

#include <vector>

#include "bribery/bribery.hpp"

namespace bribery {

// Polynomial-time algorithms for AV. Each throws std::invalid_argument when
// called outside its rule/operation domain. Wherever the algorithm picks an
// "arbitrary" vote or breaks a score tie, the lowest index wins.

// AppAdd under AV: greedily lift the cheapest non-distinguished candidates
// above the strongest distinguished one.
Decision solve_appadd_av(const Instance& inst);

// AppDel under AV: repeatedly delete an approval of the strongest
// distinguished candidate until k others are strictly above it.
Decision solve_appdel_av(const Instance& inst);

// VAC under AV with k = 1.
Decision solve_vac_av_k1(const Instance& inst);

// VDC under AV with r = 1, via bipartite matching between the votes and
// copies of the distinguished candidates that must lose approvals.
Decision solve_vdc_av_r1(const Instance& inst);

// AV score of the k-th strongest non-distinguished candidate, or -1 if there
// are fewer than k of them. `av` holds the approval counts.
int kth_outside_score(const Instance& inst, const std::vector<int>& av);

// Maximum-cardinality matching (augmenting paths, Kuhn). adjacency[l] lists
// the right nodes of left node l; they are tried in the listed order, so the
// result is deterministic. Returns the matched right node of every left node,
// or -1.
std::vector<int> max_bipartite_matching(int left_count, int right_count,
                                        const std::vector<std::vector<int>>& adjacency);

}  // namespace bribery
