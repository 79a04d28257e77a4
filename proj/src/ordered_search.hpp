#pragma once

// Deterministic "first success" search over vote/candidate subsets.
//
// Subsets of {0..count-1} are visited by increasing size and, within a size,
// in lexicographic order. Subsets are handed out in blocks; the members of a
// block are evaluated in parallel, and the lowest-ordered success of the first
// block containing one is returned, so the answer and the counters match a
// sequential run exactly. Members ordered after a known success are skipped.

#include <atomic>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <vector>

#include "bribery/common.hpp"

namespace bribery::detail {

inline constexpr std::size_t kSearchBlock = 64;

// Number of subsets with size in [min_size, max_size] (saturating).
inline std::uint64_t count_subsets(int count, int min_size, int max_size) {
  std::uint64_t total = 0;
  for (int s = min_size; s <= max_size && s <= count; ++s) total = saturating_add(total, binomial(count, s));
  return total;
}

// try_subset(const std::vector<int>& subset, std::uint64_t& nodes) -> std::optional<R>
// `tried` counts the subsets up to and including the reported success.
template <typename R, typename F>
std::optional<R> first_subset_success(int count, int min_size, int max_size, bool parallel, std::uint64_t& nodes,
                                      std::uint64_t& tried, F&& try_subset) {
  const std::size_t block_size = parallel ? kSearchBlock : 1;
  for (int size = min_size; size <= max_size && size <= count; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    bool more = true;
    while (more) {
      std::vector<std::vector<int>> block;
      while (more && block.size() < block_size) {
        block.push_back(pick);
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == count - size + i) --i;
        if (i < 0) {
          more = false;
        } else {
          ++pick[static_cast<std::size_t>(i)];
          for (int j = i + 1; j < size; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
          }
        }
      }

      const auto n = static_cast<std::int64_t>(block.size());
      std::vector<std::optional<R>> results(block.size());
      std::vector<std::uint64_t> block_nodes(block.size(), 0);
      std::vector<std::exception_ptr> errors(block.size());
      std::atomic<std::int64_t> first_hit{n};
#pragma omp parallel for schedule(dynamic, 1) if (parallel && n > 1)
      for (std::int64_t b = 0; b < n; ++b) {
        if (b > first_hit.load(std::memory_order_relaxed)) continue;
        const auto i = static_cast<std::size_t>(b);
        try {
          results[i] = try_subset(block[i], block_nodes[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
        if (results[i] || errors[i]) {
          std::int64_t seen = first_hit.load(std::memory_order_relaxed);
          while (b < seen && !first_hit.compare_exchange_weak(seen, b, std::memory_order_relaxed)) {
          }
        }
      }
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        nodes += block_nodes[i];
        ++tried;
        if (results[i]) return results[i];
      }
    }
  }
  return std::nullopt;
}

}  // namespace bribery::detail
