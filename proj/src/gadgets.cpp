#include "bribery/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace bribery {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int regular_degree_or_throw(const Graph& g) {
  g.validate();
  const auto d = g.regular_degree();
  require(d.has_value(), "graph is not regular");
  return *d;
}

CandidateSet all_but(int m, std::initializer_list<int> excluded) {
  CandidateSet out = CandidateSet::range(m);
  for (int c : excluded) out.erase(c);
  return out;
}

int hamming_bound(const GadgetOptions& options, int needed) {
  const int r = options.distance.value_or(needed);
  require(r >= 0, "Hamming bound must be non-negative");
  require(options.unsafe || r >= needed, "construction needs Hamming bound r >= " + std::to_string(needed));
  return r;
}

// Lexicographically first increasing sequence of `size` items from 0..count-1
// such that accept(chosen, next) holds for every extension step.
std::optional<std::vector<int>> first_chain(int count, int size,
                                            const std::function<bool(const std::vector<int>&, int)>& accept) {
  std::vector<int> chosen;
  std::function<bool(int)> extend = [&](int from) -> bool {
    if (static_cast<int>(chosen.size()) == size) return true;
    for (int i = from; i <= count - (size - static_cast<int>(chosen.size())); ++i) {
      if (!accept(chosen, i)) continue;
      chosen.push_back(i);
      if (extend(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (size < 0 || size > count) return std::nullopt;
  if (extend(0)) return chosen;
  return std::nullopt;
}

void check_source_cap(int count, int size, const Limits& limits) {
  const std::uint64_t estimate = binomial(count, size);
  if (estimate > limits.source_cap) throw CapExceeded("source", estimate, limits.source_cap);
}

bool is_cover(const RX3CInstance& inst, const std::vector<int>& picked) {
  if (static_cast<int>(picked.size()) != inst.kappa) return false;
  std::vector<bool> covered(static_cast<std::size_t>(3 * inst.kappa), false);
  for (int t : picked) {
    if (t < 0 || t >= static_cast<int>(inst.triples.size())) return false;
    for (int x : inst.triples[static_cast<std::size_t>(t)]) {
      if (covered[static_cast<std::size_t>(x)]) return false;
      covered[static_cast<std::size_t>(x)] = true;
    }
  }
  return true;
}

// Distinct in-range vertices, pairwise adjacent (clique) or pairwise not.
bool is_vertex_set(const Graph& g, const std::vector<int>& picked, int kappa, bool adjacent) {
  if (static_cast<int>(picked.size()) != kappa) return false;
  const auto adj = g.adjacency();
  std::set<int> seen;
  for (int v : picked) {
    if (v < 0 || v >= g.vertices || !seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i < picked.size(); ++i) {
    for (std::size_t j = i + 1; j < picked.size(); ++j) {
      if (adj[static_cast<std::size_t>(picked[i])][static_cast<std::size_t>(picked[j])] != adjacent) return false;
    }
  }
  return true;
}

Instance rx3c_frame(const RX3CInstance& inst, std::vector<Ballot> votes, Rule rule, Operation op, int distance) {
  const int p = 3 * inst.kappa;
  Instance out;
  out.election = Election(p + 1, std::move(votes));
  out.rule = rule;
  out.operation = op;
  out.distinguished = CandidateSet::range(p);
  out.committee_size = 1;
  out.budget = inst.kappa;
  out.distance = distance;
  return out;
}

Ballot triple_ballot(const std::array<int, 3>& t) { return Ballot{t[0], t[1], t[2]}; }

// Index of the first triple vote in each cover gadget.
int triple_offset(const Gadget& gadget) {
  const int kappa = gadget.kappa;
  switch (gadget.kind) {
    case GadgetKind::kAppAddSavRx3c: return 3 * kappa * kappa / 4 - 3 * kappa;
    case GadgetKind::kVcAvRx3c: return 3 * kappa * (kappa - 3);
    case GadgetKind::kVdcAvRx3c: return 3;
    default: return 0;
  }
}

}  // namespace

void Graph::validate() const {
  require(vertices >= 0, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    require(u >= 0 && v >= 0 && u < vertices && v < vertices, "edge endpoint out of range");
    require(u != v, "self-loop on vertex " + std::to_string(u));
    require(seen.insert(std::minmax(u, v)).second,
            "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(vertices), 0);
  for (auto [u, v] : edges) {
    ++out[static_cast<std::size_t>(u)];
    ++out[static_cast<std::size_t>(v)];
  }
  return out;
}

std::optional<int> Graph::regular_degree() const {
  const auto d = degrees();
  if (d.empty()) return std::nullopt;
  if (std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) != d.end()) return std::nullopt;
  return d.front();
}

std::vector<std::vector<bool>> Graph::adjacency() const {
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(vertices),
                                     std::vector<bool>(static_cast<std::size_t>(vertices), false));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  return adj;
}

void RX3CInstance::validate() const {
  require(kappa >= 1, "kappa must be positive");
  require(static_cast<int>(triples.size()) == 3 * kappa, "collection must hold exactly 3*kappa triples");
  std::vector<int> occurrences(static_cast<std::size_t>(3 * kappa), 0);
  for (const auto& t : triples) {
    for (int x : t) require(x >= 0 && x < 3 * kappa, "triple element out of range");
    require(t[0] != t[1] && t[0] != t[2] && t[1] != t[2], "triple elements must be distinct");
    for (int x : t) ++occurrences[static_cast<std::size_t>(x)];
  }
  for (int x = 0; x < 3 * kappa; ++x) {
    require(occurrences[static_cast<std::size_t>(x)] == 3,
            "element " + std::to_string(x) + " must appear in exactly three triples");
  }
}

std::optional<std::vector<int>> rx3c_bruteforce(const RX3CInstance& inst, const Limits& limits) {
  inst.validate();
  const int count = static_cast<int>(inst.triples.size());
  check_source_cap(count, inst.kappa, limits);
  std::vector<bool> used(static_cast<std::size_t>(3 * inst.kappa), false);
  auto disjoint = [&](const std::vector<int>& chosen, int next) {
    std::fill(used.begin(), used.end(), false);
    for (int t : chosen) {
      for (int x : inst.triples[static_cast<std::size_t>(t)]) used[static_cast<std::size_t>(x)] = true;
    }
    const auto& t = inst.triples[static_cast<std::size_t>(next)];
    return std::none_of(t.begin(), t.end(), [&](int x) { return used[static_cast<std::size_t>(x)]; });
  };
  return first_chain(count, inst.kappa, disjoint);
}

std::optional<std::vector<int>> independent_set_bruteforce(const Graph& g, int kappa, const Limits& limits) {
  g.validate();
  check_source_cap(g.vertices, kappa, limits);
  const auto adj = g.adjacency();
  return first_chain(g.vertices, kappa, [&](const std::vector<int>& chosen, int next) {
    return std::none_of(chosen.begin(), chosen.end(),
                        [&](int u) { return adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(next)]; });
  });
}

std::optional<std::vector<int>> clique_bruteforce(const Graph& g, int kappa, const Limits& limits) {
  g.validate();
  check_source_cap(g.vertices, kappa, limits);
  const auto adj = g.adjacency();
  return first_chain(g.vertices, kappa, [&](const std::vector<int>& chosen, int next) {
    return std::all_of(chosen.begin(), chosen.end(),
                       [&](int u) { return adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(next)]; });
  });
}

std::string_view to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kNwdCcav: return "nwd-ccav";
    case GadgetKind::kNwdPav: return "nwd-pav";
    case GadgetKind::kAppAddSavRx3c: return "appadd-sav-rx3c";
    case GadgetKind::kVcAvRx3c: return "vc-av-rx3c";
    case GadgetKind::kVdcAvRx3c: return "vdc-av-rx3c";
    case GadgetKind::kVcAvClique: return "vc-av-clique";
  }
  return "?";
}

std::optional<GadgetKind> parse_gadget_kind(std::string_view name) {
  for (auto kind : {GadgetKind::kNwdCcav, GadgetKind::kNwdPav, GadgetKind::kAppAddSavRx3c, GadgetKind::kVcAvRx3c,
                    GadgetKind::kVdcAvRx3c, GadgetKind::kVcAvClique}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

Instance gen_nwd_ccav(const Graph& g, int kappa) {
  const int d = regular_degree_or_throw(g);
  require(d >= 1, "graph must have degree at least 1");
  require(kappa >= 1 && kappa <= g.vertices, "kappa must lie in 1..n");
  const int p = g.vertices;
  std::vector<Ballot> votes;
  for (auto [u, v] : g.edges) votes.push_back(Ballot{u, v});
  for (int i = 0; i < d - 1; ++i) votes.push_back(Ballot{p});

  Instance out;
  out.election = Election(p + 1, std::move(votes));
  out.rule = Rule::kCCAV;
  out.operation = Operation::kVC;
  out.distinguished = CandidateSet{p};
  out.committee_size = kappa;
  return out;
}

Instance gen_nwd_pav(const Graph& g, int kappa) {
  const int d = regular_degree_or_throw(g);
  require(d >= 1, "graph must have degree at least 1");
  require(kappa >= 1 && kappa <= g.vertices, "kappa must lie in 1..n");
  const int p = g.vertices;
  std::vector<Ballot> votes;
  for (auto [u, v] : g.edges) {
    votes.push_back(Ballot{u, v});
    votes.push_back(Ballot{u, v});
  }
  for (int i = 0; i < 2 * d - 1; ++i) votes.push_back(Ballot{p});

  Instance out;
  out.election = Election(p + 1, std::move(votes));
  out.rule = Rule::kPAV;
  out.operation = Operation::kVC;
  out.distinguished = CandidateSet{p};
  out.committee_size = kappa;
  return out;
}

Instance gen_appadd_sav_rx3c(const RX3CInstance& inst, const GadgetOptions& options) {
  inst.validate();
  const int kappa = inst.kappa;
  require(kappa % 2 == 0, "construction needs an even kappa");
  require(options.unsafe || kappa > 4, "construction needs kappa > 4");
  const int filler = 3 * kappa * kappa / 4 - 3 * kappa;
  require(filler >= 0, "kappa too small for the construction");
  const int p = 3 * kappa;
  std::vector<Ballot> votes(static_cast<std::size_t>(filler), all_but(p + 1, {p}));
  for (const auto& t : inst.triples) votes.push_back(triple_ballot(t));
  return rx3c_frame(inst, std::move(votes), Rule::kSAV, Operation::kAppAdd, 0);
}

Instance gen_vc_av_rx3c(const RX3CInstance& inst, const GadgetOptions& options) {
  inst.validate();
  const int kappa = inst.kappa;
  require(kappa >= 4 || (options.unsafe && kappa >= 3), "construction needs kappa >= 4");
  const int r = hamming_bound(options, 4);
  std::vector<Ballot> votes;
  for (int x = 0; x < 3 * kappa; ++x) {
    for (int i = 0; i < kappa - 3; ++i) votes.push_back(Ballot{x});
  }
  for (const auto& t : inst.triples) votes.push_back(triple_ballot(t));
  return rx3c_frame(inst, std::move(votes), Rule::kAV, Operation::kVC, r);
}

Instance gen_vdc_av_rx3c(const RX3CInstance& inst, const GadgetOptions& options) {
  inst.validate();
  const int r = hamming_bound(options, 3);
  const int p = 3 * inst.kappa;
  std::vector<Ballot> votes(3, Ballot{p});
  for (const auto& t : inst.triples) votes.push_back(triple_ballot(t));
  return rx3c_frame(inst, std::move(votes), Rule::kAV, Operation::kVDC, r);
}

Instance gen_vc_av_clique(const Graph& g, int kappa, const GadgetOptions& options) {
  const int d = regular_degree_or_throw(g);
  require(kappa >= 2 && kappa <= g.vertices, "kappa must lie in 2..n");
  require(options.unsafe || static_cast<std::int64_t>(d) > static_cast<std::int64_t>(kappa) * kappa * kappa,
          "construction needs d > kappa^3");
  const int r = hamming_bound(options, 3);
  const int filler = d + 1 - (kappa - 1) * (kappa + 2) / 2;
  require(filler > 0, "construction yields a nonpositive number of all-but-p votes");
  const int p = g.vertices;
  std::vector<Ballot> votes;
  for (auto [u, v] : g.edges) votes.push_back(all_but(p + 1, {u, v}));
  for (int i = 0; i < filler; ++i) votes.push_back(all_but(p + 1, {p}));

  Instance out;
  out.election = Election(p + 1, std::move(votes));
  out.rule = Rule::kAV;
  out.operation = Operation::kVC;
  out.distinguished = CandidateSet{p};
  out.committee_size = kappa;
  out.budget = kappa * (kappa - 1) / 2;
  out.distance = r;
  return out;
}

Instance pad_with_dummies(const Instance& inst) {
  require(inst.rule == Rule::kSAV, "padding turns SAV instances into NSAV instances");
  const Election& e = inst.election;
  const std::int64_t m = e.candidate_count();
  const std::int64_t padded = m + static_cast<std::int64_t>(e.vote_count()) * m * m;
  require(padded <= 1'000'000, "padded election too large");
  Instance out = inst;
  out.election = Election(static_cast<int>(padded), e.votes());
  out.rule = Rule::kNSAV;
  return out;
}

Gadget build_gadget(GadgetKind kind, GadgetSource source, int kappa, const GadgetOptions& options) {
  Gadget out;
  out.kind = kind;
  if (uses_graph(kind)) {
    const auto* g = std::get_if<Graph>(&source);
    require(g != nullptr, std::string(to_string(kind)) + " needs a graph");
    out.kappa = kappa;
    switch (kind) {
      case GadgetKind::kNwdCcav: out.instance = gen_nwd_ccav(*g, kappa); break;
      case GadgetKind::kNwdPav: out.instance = gen_nwd_pav(*g, kappa); break;
      default: out.instance = gen_vc_av_clique(*g, kappa, options); break;
    }
  } else {
    const auto* x = std::get_if<RX3CInstance>(&source);
    require(x != nullptr, std::string(to_string(kind)) + " needs an RX3C instance");
    out.kappa = x->kappa;
    switch (kind) {
      case GadgetKind::kAppAddSavRx3c: out.instance = gen_appadd_sav_rx3c(*x, options); break;
      case GadgetKind::kVcAvRx3c: out.instance = gen_vc_av_rx3c(*x, options); break;
      default: out.instance = gen_vdc_av_rx3c(*x, options); break;
    }
  }
  out.source = std::move(source);
  return out;
}

std::optional<std::vector<int>> solve_source(const Gadget& gadget, const Limits& limits) {
  switch (gadget.kind) {
    case GadgetKind::kNwdCcav:
    case GadgetKind::kNwdPav: return independent_set_bruteforce(std::get<Graph>(gadget.source), gadget.kappa, limits);
    case GadgetKind::kVcAvClique: return clique_bruteforce(std::get<Graph>(gadget.source), gadget.kappa, limits);
    default: return rx3c_bruteforce(std::get<RX3CInstance>(gadget.source), limits);
  }
}

Script plant_witness(const Gadget& gadget, const std::vector<int>& witness) {
  Script script;
  const Election& e = gadget.instance.election;
  const int p = e.candidate_count() - 1;
  switch (gadget.kind) {
    case GadgetKind::kNwdCcav:
    case GadgetKind::kNwdPav:
      require(is_vertex_set(std::get<Graph>(gadget.source), witness, gadget.kappa, false),
              "witness is not an independent set of size kappa");
      return script;
    case GadgetKind::kVcAvClique: {
      const Graph& g = std::get<Graph>(gadget.source);
      require(is_vertex_set(g, witness, gadget.kappa, true), "witness is not a clique of size kappa");
      const std::set<int> members(witness.begin(), witness.end());
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto [u, v] = g.edges[i];
        if (members.count(u) != 0 && members.count(v) != 0) script.edits.emplace(static_cast<int>(i), all_but(p + 1, {p}));
      }
      return script;
    }
    default: break;
  }

  const auto& x = std::get<RX3CInstance>(gadget.source);
  require(is_cover(x, witness), "witness is not an exact cover");
  const int offset = triple_offset(gadget);
  for (int t : witness) {
    const int v = offset + t;
    switch (gadget.kind) {
      case GadgetKind::kAppAddSavRx3c: script.edits.emplace(v, e.vote(v) | Ballot{p}); break;
      case GadgetKind::kVcAvRx3c: script.edits.emplace(v, Ballot{p}); break;
      default: script.edits.emplace(v, Ballot{}); break;
    }
  }
  return script;
}

}  // namespace bribery
