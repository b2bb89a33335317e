#ifndef OAFD_MAXFLOW_HPP
#define OAFD_MAXFLOW_HPP

#include <cstddef>
#include <vector>

#include "oafd/rational.hpp"

namespace oafd {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct FlowEdge {
  VertexIndex tail;
  VertexIndex head;
  Rational capacity;
};

// Directed graph with nonnegative rational capacities and a distinguished
// source and sink.
class FlowNetwork {
 public:
  FlowNetwork(std::size_t num_vertices, VertexIndex source, VertexIndex sink);

  EdgeIndex add_edge(VertexIndex tail, VertexIndex head, Rational capacity);

  std::size_t num_vertices() const { return num_vertices_; }
  VertexIndex source() const { return source_; }
  VertexIndex sink() const { return sink_; }
  const std::vector<FlowEdge>& edges() const { return edges_; }
  const FlowEdge& edge(EdgeIndex e) const { return edges_[e]; }

 private:
  std::size_t num_vertices_;
  VertexIndex source_;
  VertexIndex sink_;
  std::vector<FlowEdge> edges_;
};

struct Flow {
  std::vector<Rational> edge_flow;  // indexed like FlowNetwork::edges()
  Rational value;                   // net flow out of the source
};

struct CutResult {
  std::vector<bool> source_side;
  Rational capacity;

  bool contains(VertexIndex v) const { return source_side[v]; }
};

// Dinic's algorithm in exact arithmetic. Deterministic: augmenting paths are
// explored in edge insertion order.
Flow max_flow(const FlowNetwork& network);

// Source-minimal minimum cut: vertices reachable from the source in the
// residual graph. Throws std::invalid_argument if `flow` is not maximum.
CutResult min_cut(const FlowNetwork& network, const Flow& flow);

// Source-heavy minimum cut: complement of the vertices that can reach the
// sink in the residual graph. Its source side contains the source side of
// every minimum cut. Throws std::invalid_argument if `flow` is not maximum.
CutResult source_heavy_min_cut(const FlowNetwork& network, const Flow& flow);

// Total capacity of edges leaving `source_side`.
Rational cut_capacity(const FlowNetwork& network, const std::vector<bool>& source_side);

// Capacity constraints and conservation at every internal vertex, exactly.
bool is_valid_flow(const FlowNetwork& network, const Flow& flow);

}  // namespace oafd

#endif  // OAFD_MAXFLOW_HPP
