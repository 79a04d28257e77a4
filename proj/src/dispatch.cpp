#include "bribery/dispatch.hpp"

#include <array>
#include <exception>
#include <stdexcept>
#include <vector>

#include "bribery/fpt.hpp"
#include "bribery/oracle.hpp"
#include "bribery/poly.hpp"

namespace bribery {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kNames = {{
    {Algorithm::kAuto, "auto"},
    {Algorithm::kOracle, "oracle"},
    {Algorithm::kPoly, "poly"},
    {Algorithm::kIlpM, "ilp-m"},
    {Algorithm::kIlpJ, "ilp-j"},
    {Algorithm::kFlow, "flow"},
    {Algorithm::kEnum, "enum"},
}};

bool av_vdc(const Instance& inst) { return inst.rule == Rule::kAV && inst.operation == Operation::kVDC; }

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

std::optional<std::string> inapplicable_reason(Algorithm algorithm, const Instance& inst) {
  const int m = inst.election.candidate_count();
  switch (algorithm) {
    case Algorithm::kAuto: return std::nullopt;
    case Algorithm::kOracle:
      if (m > 63 && inst.budget > 0) return "the oracle supports at most 63 candidates";
      return std::nullopt;
    case Algorithm::kPoly:
      if (inst.rule != Rule::kAV) return "no polynomial algorithm for rule " + std::string(to_string(inst.rule));
      if (inst.operation == Operation::kVAC && inst.committee_size != 1) return "the polynomial VAC algorithm needs k = 1";
      if (inst.operation == Operation::kVDC && inst.distance != 1) return "the polynomial VDC algorithm needs r = 1";
      if (inst.operation == Operation::kVC) return "no polynomial algorithm for VC";
      return std::nullopt;
    case Algorithm::kIlpM:
      if (m > kMaxMaskCandidates) return "ilp-m supports at most " + std::to_string(kMaxMaskCandidates) + " candidates";
      return std::nullopt;
    case Algorithm::kIlpJ:
    case Algorithm::kFlow:
      if (!av_vdc(inst)) return std::string(to_string(algorithm)) + " needs rule av and operation vdc";
      return std::nullopt;
    case Algorithm::kEnum:
      if (inst.rule != Rule::kAV || (inst.operation != Operation::kVC && inst.operation != Operation::kVAC)) {
        return "enum needs rule av and operation vc or vac";
      }
      if (inst.distance < m) return "enum needs unrestricted distance (r >= m)";
      return std::nullopt;
  }
  return "unknown algorithm";
}

Decision run_algorithm(Algorithm algorithm, const Instance& inst, const Limits& limits) {
  inst.validate();
  if (algorithm == Algorithm::kAuto) {
    std::vector<Algorithm> plan = {Algorithm::kPoly};
    if (av_vdc(inst)) {
      plan.push_back(Algorithm::kIlpJ);
      plan.push_back(Algorithm::kFlow);
    }
    plan.push_back(Algorithm::kEnum);
    plan.push_back(Algorithm::kIlpM);
    plan.push_back(Algorithm::kOracle);
    std::exception_ptr last_cap;
    for (Algorithm candidate : plan) {
      if (inapplicable_reason(candidate, inst)) continue;
      try {
        return run_algorithm(candidate, inst, limits);
      } catch (const CapExceeded&) {
        last_cap = std::current_exception();
      }
    }
    if (last_cap) std::rethrow_exception(last_cap);
    throw std::invalid_argument("no exact algorithm applies to this instance");
  }

  if (const auto reason = inapplicable_reason(algorithm, inst)) throw std::invalid_argument(*reason);
  switch (algorithm) {
    case Algorithm::kOracle: return solve_bruteforce(inst, limits);
    case Algorithm::kPoly:
      switch (inst.operation) {
        case Operation::kAppAdd: return solve_appadd_av(inst);
        case Operation::kAppDel: return solve_appdel_av(inst);
        case Operation::kVAC: return solve_vac_av_k1(inst);
        default: return solve_vdc_av_r1(inst);
      }
    case Algorithm::kIlpM: return solve_fpt_m(inst, limits);
    case Algorithm::kIlpJ: return solve_vdc_av_fpt_j(inst, limits);
    case Algorithm::kFlow: return solve_vdc_av_flow(inst, limits);
    case Algorithm::kEnum: return solve_vc_vac_av_enum(inst, limits);
    case Algorithm::kAuto: break;
  }
  throw std::logic_error("unreachable");
}

}  // namespace bribery
