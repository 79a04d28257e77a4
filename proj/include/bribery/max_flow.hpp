#pragma once

#include <cstdint>
#include <vector>

namespace bribery {

struct FlowArc {
  int from = 0;
  int to = 0;
  std::int64_t capacity = 0;
};

class FlowNetwork {
 public:
  FlowNetwork(int node_count, int source, int sink);

  int add_node();
  // Returns the arc index. Arcs into the source or out of the sink are rejected.
  int add_arc(int from, int to, std::int64_t capacity);

  int node_count() const { return node_count_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<FlowArc>& arcs() const { return arcs_; }

 private:
  int node_count_;
  int source_;
  int sink_;
  std::vector<FlowArc> arcs_;
};

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;  // indexed like FlowNetwork::arcs()
};

// Edmonds-Karp: shortest augmenting paths found by breadth-first search, with
// neighbours scanned in arc insertion order.
FlowResult max_flow(const FlowNetwork& network);

}  // namespace bribery
