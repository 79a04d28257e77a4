#include "bribery/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace bribery {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (node_count < 2 || source < 0 || sink < 0 || source >= node_count || sink >= node_count || source == sink) {
    throw std::invalid_argument("flow network needs distinct source and sink nodes");
  }
}

int FlowNetwork::add_node() { return node_count_++; }

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  if (from < 0 || to < 0 || from >= node_count_ || to >= node_count_) throw std::out_of_range("arc endpoint");
  if (capacity < 0) throw std::invalid_argument("negative arc capacity");
  if (to == source_ || from == sink_) throw std::invalid_argument("arcs may not enter the source or leave the sink");
  arcs_.push_back({from, to, capacity});
  return static_cast<int>(arcs_.size()) - 1;
}

FlowResult max_flow(const FlowNetwork& network) {
  // Residual edges 2i (forward) and 2i+1 (backward) for arc i.
  const auto& arcs = network.arcs();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(network.node_count()));
  std::vector<std::int64_t> residual(arcs.size() * 2, 0);
  std::vector<int> head(arcs.size() * 2, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    residual[2 * i] = arcs[i].capacity;
    head[2 * i] = arcs[i].to;
    head[2 * i + 1] = arcs[i].from;
    out[static_cast<std::size_t>(arcs[i].from)].push_back(static_cast<int>(2 * i));
    out[static_cast<std::size_t>(arcs[i].to)].push_back(static_cast<int>(2 * i + 1));
  }

  FlowResult result;
  const int s = network.source();
  const int t = network.sink();
  std::vector<int> via(static_cast<std::size_t>(network.node_count()));
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> frontier;
    frontier.push(s);
    bool reached = false;
    while (!frontier.empty() && !reached) {
      const int u = frontier.front();
      frontier.pop();
      for (int e : out[static_cast<std::size_t>(u)]) {
        const int w = head[static_cast<std::size_t>(e)];
        if (residual[static_cast<std::size_t>(e)] <= 0 || w == s || via[static_cast<std::size_t>(w)] >= 0) continue;
        via[static_cast<std::size_t>(w)] = e;
        if (w == t) {
          reached = true;
          break;
        }
        frontier.push(w);
      }
    }
    if (!reached) break;

    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = t; v != s; v = head[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)]) {
      push = std::min(push, residual[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])]);
    }
    for (int v = t; v != s; v = head[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)]) {
      const auto e = static_cast<std::size_t>(via[static_cast<std::size_t>(v)]);
      residual[e] -= push;
      residual[e ^ 1] += push;
    }
    result.value += push;
  }

  result.arc_flow.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) result.arc_flow[i] = residual[2 * i + 1];
  return result;
}

}  // namespace bribery
