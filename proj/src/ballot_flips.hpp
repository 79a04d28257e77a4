#pragma once

// Replacement-ballot enumeration over 64-bit masks, shared by the exhaustive
// oracle and the committee-guessing integer program.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "bribery/bribery.hpp"
#include "bribery/common.hpp"
#include "bribery/election.hpp"

namespace bribery::detail {

// Scatters the low bits of `bits` onto the positions set in `positions`.
inline std::uint64_t deposit(std::uint64_t bits, std::uint64_t positions) {
  std::uint64_t out = 0;
  for (std::uint64_t pos = positions; pos != 0 && bits != 0; pos &= pos - 1, bits >>= 1) {
    if ((bits & 1U) != 0) out |= pos & (~pos + 1);
  }
  return out;
}

// Replacement ballots reachable from `ballot` by flipping between 1 and
// max_flips candidates of `flippable`, in ascending mask order.
inline std::vector<std::uint64_t> flips(std::uint64_t ballot, std::uint64_t flippable, int max_flips) {
  std::vector<std::uint64_t> out;
  const int available = std::popcount(flippable);
  for (int d = 1; d <= std::min(max_flips, available); ++d) {
    for_each_k_subset(available, d, [&](std::uint64_t pick) { out.push_back(ballot ^ deposit(pick, flippable)); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t flip_count(int available, std::int64_t max_flips) {
  std::uint64_t total = 0;
  const int top = static_cast<int>(std::min<std::int64_t>(max_flips, available));
  for (int d = 1; d <= top; ++d) total = saturating_add(total, binomial(available, d));
  return total;
}

// Candidates a vote may flip under the operation.
inline std::uint64_t flippable(Operation op, std::uint64_t ballot, std::uint64_t full) {
  switch (op) {
    case Operation::kAppAdd:
    case Operation::kVAC: return full & ~ballot;
    case Operation::kAppDel:
    case Operation::kVDC: return ballot;
    case Operation::kVC: return full;
  }
  return 0;
}

inline int flippable_count(Operation op, const Ballot& ballot, int m) {
  switch (op) {
    case Operation::kAppAdd:
    case Operation::kVAC: return m - ballot.size();
    case Operation::kAppDel:
    case Operation::kVDC: return ballot.size();
    case Operation::kVC: return m;
  }
  return 0;
}

// Most candidates one vote may flip: the budget for atomic operations, the
// Hamming bound otherwise.
inline int max_flips(const Instance& inst) {
  const int m = inst.election.candidate_count();
  return is_atomic(inst.operation) ? static_cast<int>(std::min<std::int64_t>(inst.budget, m))
                                   : std::min(inst.distance, m);
}

}  // namespace bribery::detail
