#include "bribery/common.hpp"

#include <utility>

namespace bribery {

CapExceeded::CapExceeded(std::string cap_name, std::uint64_t estimate, std::uint64_t cap)
    : std::runtime_error(cap_name + " cap exceeded: estimate " +
                         (estimate == kSaturated ? std::string("overflow") : std::to_string(estimate)) +
                         " > cap " + std::to_string(cap)),
      cap_name_(std::move(cap_name)),
      estimate_(estimate),
      cap_(cap) {}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays exact because the running product is
    // always a binomial coefficient.
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(result) * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (wide > kSaturated) return kSaturated;
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

}  // namespace bribery
