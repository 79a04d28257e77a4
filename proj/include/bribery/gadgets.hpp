#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bribery/bribery.hpp"
#include "bribery/common.hpp"

namespace bribery {

// Simple undirected graph on vertices 0..n-1.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  // Throws std::invalid_argument on self-loops, duplicate edges or bad endpoints.
  void validate() const;
  std::vector<int> degrees() const;
  // The common degree if every vertex has the same one.
  std::optional<int> regular_degree() const;
  std::vector<std::vector<bool>> adjacency() const;
};

// Universe 0..3*kappa-1 and 3*kappa triples; every element lies in exactly
// three triples.
struct RX3CInstance {
  int kappa = 0;
  std::vector<std::array<int, 3>> triples;

  void validate() const;
};

// Source-problem solvers. Each returns the lexicographically first witness
// (triple indices, or vertices) and throws CapExceeded("source") when the
// candidate space exceeds limits.source_cap.
std::optional<std::vector<int>> rx3c_bruteforce(const RX3CInstance& inst, const Limits& limits = {});
std::optional<std::vector<int>> independent_set_bruteforce(const Graph& g, int kappa, const Limits& limits = {});
std::optional<std::vector<int>> clique_bruteforce(const Graph& g, int kappa, const Limits& limits = {});

enum class GadgetKind { kNwdCcav, kNwdPav, kAppAddSavRx3c, kVcAvRx3c, kVdcAvRx3c, kVcAvClique };

std::string_view to_string(GadgetKind kind);
std::optional<GadgetKind> parse_gadget_kind(std::string_view name);
constexpr bool uses_graph(GadgetKind kind) {
  return kind == GadgetKind::kNwdCcav || kind == GadgetKind::kNwdPav || kind == GadgetKind::kVcAvClique;
}

struct GadgetOptions {
  // Skips the size assumptions of the constructions (kappa > 4, d > kappa^3,
  // the minimum Hamming bound). Structural requirements still apply.
  bool unsafe = false;
  // Hamming bound for the vote-level gadgets; defaults to the smallest value
  // the planted script needs.
  std::optional<int> distance;
};

// Candidates are the vertices (or universe elements) in order, followed by
// the distinguished candidate p. Vote order is fixed and documented per
// generator so that planted scripts can address votes by index.

// One vote per edge approving its endpoints, then d-1 votes {p}. k = kappa,
// J = {p}, no budget.
Instance gen_nwd_ccav(const Graph& g, int kappa);
// Two votes per edge, then 2d-1 votes {p}.
Instance gen_nwd_pav(const Graph& g, int kappa);
// 3k^2/4 - 3k votes approving everything but p, then one vote per triple.
// SAV, AppAdd, J = universe, k = 1, budget kappa.
Instance gen_appadd_sav_rx3c(const RX3CInstance& inst, const GadgetOptions& options = {});
// kappa-3 votes {x} per element (element-major), then one vote per triple.
// AV, VC, J = universe, k = 1, budget kappa.
Instance gen_vc_av_rx3c(const RX3CInstance& inst, const GadgetOptions& options = {});
// Three votes {p}, then one vote per triple. AV, VDC, J = universe, k = 1,
// budget kappa.
Instance gen_vdc_av_rx3c(const RX3CInstance& inst, const GadgetOptions& options = {});
// One vote per edge approving everything but its endpoints, then
// d+1-(kappa-1)(kappa+2)/2 votes approving everything but p. AV, VC, J = {p},
// k = kappa, budget kappa(kappa-1)/2.
Instance gen_vc_av_clique(const Graph& g, int kappa, const GadgetOptions& options = {});

// Moves a SAV instance to NSAV by appending n*m^2 never-approved candidates.
Instance pad_with_dummies(const Instance& inst);

using GadgetSource = std::variant<Graph, RX3CInstance>;

struct Gadget {
  GadgetKind kind = GadgetKind::kNwdCcav;
  GadgetSource source;
  int kappa = 0;  // size parameter of the source problem
  Instance instance;
};

// `kappa` is read from the RX3C instance for the cover gadgets and must be
// given for the graph gadgets.
Gadget build_gadget(GadgetKind kind, GadgetSource source, int kappa, const GadgetOptions& options = {});
// Runs the matching source solver (independent set, clique or exact cover).
std::optional<std::vector<int>> solve_source(const Gadget& gadget, const Limits& limits = {});
// The script the forward direction of the construction prescribes. Throws
// std::invalid_argument unless `witness` solves the source problem.
Script plant_witness(const Gadget& gadget, const std::vector<int>& witness);

}  // namespace bribery
