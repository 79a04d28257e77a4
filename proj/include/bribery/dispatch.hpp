#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bribery/bribery.hpp"
#include "bribery/common.hpp"

namespace bribery {

enum class Algorithm { kAuto, kOracle, kPoly, kIlpM, kIlpJ, kFlow, kEnum };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

// Empty when the algorithm can run on the instance, otherwise the reason.
std::optional<std::string> inapplicable_reason(Algorithm algorithm, const Instance& inst);

// Runs one exact algorithm. Throws std::invalid_argument when it does not
// apply. kAuto tries, in order: the polynomial algorithm, the AV special
// cases (ilp-j then flow for VDC, enum for VC/VAC with r >= m), ilp-m, and
// the oracle, moving on when a candidate does not apply or exceeds a cap.
// The algorithm that produced the answer is recorded in Decision::algorithm.
Decision run_algorithm(Algorithm algorithm, const Instance& inst, const Limits& limits = {});

}  // namespace bribery
