#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "bribery/bribery.hpp"
#include "bribery/dispatch.hpp"

namespace bribery {

// Ranges are inclusive. Draws use raw 64-bit outputs reduced modulo the range
// width, so a seed yields the same instances on every platform.
struct RandomSpec {
  int m_min = 2;
  int m_max = 4;
  int n_min = 1;
  int n_max = 5;
  int k_min = 1;
  int k_max = 2;  // also capped at m
  std::int64_t ell_min = 0;
  std::int64_t ell_max = 2;
  int r_min = 0;
  int r_max = 2;
  bool unrestricted_distance = false;  // r = 2m instead of the r range
  std::vector<Rule> rules = {kAllRules.begin(), kAllRules.end()};
  std::vector<Operation> operations = {kAllOperations.begin(), kAllOperations.end()};
};

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);
Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec);
Election random_election(std::mt19937_64& rng, int m, int n);

struct BenchCase {
  std::string name;
  Instance instance;
};

struct BenchSuite {
  std::vector<BenchCase> cases;
  std::vector<Algorithm> algorithms;
  Limits limits;
};

// Suite JSON:
//   {"algorithms": [...], "caps": {...}, "instances": [...], "random": {...}}
// Instances give either "file" (relative to base_dir) or an inline
// "election": {"m": 3, "votes": [[0, 1], [0]]}, plus the parameter fields of
// apply_params. "random" takes "count", "seed" and the RandomSpec ranges as
// [lo, hi] pairs. `seed`, when set, replaces the suite's seed.
BenchSuite load_suite(const nlohmann::json& j, const std::string& base_dir, std::optional<std::uint64_t> seed);

// One CSV row per (instance, algorithm) run, ordered by instance then
// algorithm. The agreement column is "true" when every definite answer for
// that instance is the same; `all_agree` receives the conjunction. Wall times
// appear only with `timing`.
std::string run_bench(const BenchSuite& suite, bool timing, bool* all_agree = nullptr);

}  // namespace bribery
