#pragma once

#include <cstdint>

#include "bribery/bribery.hpp"
#include "bribery/common.hpp"

namespace bribery {

// Exact number of scripts solve_bruteforce enumerates (saturating).
std::uint64_t estimate_search_space(const Instance& inst);

// Exhaustive decision procedure for every rule and operation. The witness is
// the first successful script in a fixed order:
//  * vote-level operations try vote subsets by increasing size, each size in
//    lexicographic order; within a subset, replacement ballots run in
//    ascending mask order with the lowest vote varying slowest;
//  * atomic operations run a depth-first search over votes 0..n-1, where each
//    vote first stays unchanged and then takes its admissible final ballots
//    in ascending mask order.
// Throws CapExceeded when estimate_search_space exceeds limits.script_cap.
// Vote-level subsets are evaluated in parallel blocks; the reported witness
// and counters do not depend on the schedule.
Decision solve_bruteforce(const Instance& inst, const Limits& limits = {});
// Same enumeration, strictly sequential.
Decision solve_bruteforce_serial(const Instance& inst, const Limits& limits = {});

}  // namespace bribery
