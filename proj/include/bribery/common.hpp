#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace bribery {

// Thrown when an exhaustive procedure would exceed one of the configured
// resource caps. Searches are sized before they start; a partial search never
// produces an answer.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, std::uint64_t estimate, std::uint64_t cap);

  const std::string& cap_name() const { return cap_name_; }
  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::string cap_name_;
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

// Resource caps shared by every exhaustive component.
struct Limits {
  std::uint64_t committee_cap = 10'000'000;  // k-committees per winner determination
  std::uint64_t script_cap = 10'000'000;     // scripts enumerated by the oracle
  std::uint64_t subset_cap = 10'000'000;     // vote subsets guessed by flow/enum solvers
  std::uint64_t ip_node_cap = 200'000'000;   // search nodes per integer program
  std::uint64_t ip_variable_cap = 20'000;    // variables per integer program
  std::uint64_t source_cap = 10'000'000;     // subsets tried by gadget source solvers
};

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
// C(n, k), saturating at kSaturated.
std::uint64_t binomial(int n, int k);

}  // namespace bribery
