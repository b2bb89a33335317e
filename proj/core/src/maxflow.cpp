#include "oafd/maxflow.hpp"

#include <limits>
#include <stdexcept>

namespace oafd {

FlowNetwork::FlowNetwork(std::size_t num_vertices, VertexIndex source, VertexIndex sink)
    : num_vertices_(num_vertices), source_(source), sink_(sink) {
  if (source >= num_vertices || sink >= num_vertices) {
    throw std::invalid_argument("source/sink out of range");
  }
  if (source == sink) throw std::invalid_argument("source and sink must differ");
}

EdgeIndex FlowNetwork::add_edge(VertexIndex tail, VertexIndex head, Rational capacity) {
  if (tail >= num_vertices_ || head >= num_vertices_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (sgn(capacity) < 0) throw std::invalid_argument("edge capacity must be nonnegative");
  edges_.push_back({tail, head, std::move(capacity)});
  return edges_.size() - 1;
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Residual graph with paired arcs: arc 2e is edge e forward, 2e+1 backward.
class Residual {
 public:
  Residual(const FlowNetwork& network, const std::vector<Rational>* edge_flow)
      : network_(network), adjacency_(network.num_vertices()) {
    const auto& edges = network.edges();
    arcs_.reserve(edges.size() * 2);
    for (EdgeIndex e = 0; e < edges.size(); ++e) {
      const Rational& f = edge_flow ? (*edge_flow)[e] : zero_;
      arcs_.push_back({edges[e].head, edges[e].capacity - f});
      arcs_.push_back({edges[e].tail, f});
      adjacency_[edges[e].tail].push_back(2 * e);
      adjacency_[edges[e].head].push_back(2 * e + 1);
    }
  }

  Flow run() {
    const VertexIndex s = network_.source();
    const VertexIndex t = network_.sink();
    Flow flow;
    while (build_levels(s, t)) {
      next_arc_.assign(network_.num_vertices(), 0);
      while (true) {
        Rational pushed = augment(s, t, Rational(-1));
        if (sgn(pushed) <= 0) break;
        flow.value += pushed;
      }
    }
    flow.edge_flow.resize(network_.edges().size());
    for (EdgeIndex e = 0; e < network_.edges().size(); ++e) {
      flow.edge_flow[e] = arcs_[2 * e + 1].residual;
    }
    return flow;
  }

  std::vector<bool> reachable_from(VertexIndex start) const {
    std::vector<bool> seen(network_.num_vertices(), false);
    std::vector<VertexIndex> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      for (std::size_t arc : adjacency_[v]) {
        const auto& a = arcs_[arc];
        if (sgn(a.residual) > 0 && !seen[a.head]) {
          seen[a.head] = true;
          stack.push_back(a.head);
        }
      }
    }
    return seen;
  }

  // Vertices v with a residual path v -> target.
  std::vector<bool> reaching(VertexIndex target) const {
    std::vector<bool> seen(network_.num_vertices(), false);
    std::vector<VertexIndex> stack{target};
    seen[target] = true;
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      // Arc u -> v is the partner of an arc leaving v.
      for (std::size_t arc : adjacency_[v]) {
        const auto& back = arcs_[arc ^ 1];
        const VertexIndex u = arcs_[arc].head;
        if (sgn(back.residual) > 0 && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    VertexIndex head;
    Rational residual;
  };

  bool build_levels(VertexIndex s, VertexIndex t) {
    level_.assign(network_.num_vertices(), kUnreached);
    std::vector<VertexIndex> queue{s};
    level_[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexIndex v = queue[head];
      for (std::size_t arc : adjacency_[v]) {
        const auto& a = arcs_[arc];
        if (sgn(a.residual) > 0 && level_[a.head] == kUnreached) {
          level_[a.head] = level_[v] + 1;
          queue.push_back(a.head);
        }
      }
    }
    return level_[t] != kUnreached;
  }

  // limit < 0 means unbounded (only at the source).
  Rational augment(VertexIndex v, VertexIndex t, const Rational& limit) {
    if (v == t) return limit;
    for (std::size_t& i = next_arc_[v]; i < adjacency_[v].size(); ++i) {
      const std::size_t arc = adjacency_[v][i];
      Arc& a = arcs_[arc];
      if (sgn(a.residual) <= 0 || level_[a.head] != level_[v] + 1) continue;
      const Rational& bound = (sgn(limit) < 0 || a.residual < limit) ? a.residual : limit;
      Rational pushed = augment(a.head, t, bound);
      if (sgn(pushed) > 0) {
        a.residual -= pushed;
        arcs_[arc ^ 1].residual += pushed;
        return pushed;
      }
    }
    return Rational(0);
  }

  const FlowNetwork& network_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> level_;
  std::vector<std::size_t> next_arc_;
  const Rational zero_{0};
};

Rational net_source_outflow(const FlowNetwork& network, const Flow& flow) {
  Rational value;
  for (EdgeIndex e = 0; e < network.edges().size(); ++e) {
    if (network.edge(e).tail == network.source()) value += flow.edge_flow[e];
    if (network.edge(e).head == network.source()) value -= flow.edge_flow[e];
  }
  return value;
}

CutResult checked_cut(const FlowNetwork& network, const Flow& flow, std::vector<bool> side) {
  if (flow.edge_flow.size() != network.edges().size()) {
    throw std::invalid_argument("flow does not match network");
  }
  if (side[network.sink()]) throw std::invalid_argument("flow is not a maximum flow");
  CutResult cut{std::move(side), {}};
  cut.capacity = cut_capacity(network, cut.source_side);
  if (cut.capacity != net_source_outflow(network, flow)) {
    throw std::invalid_argument("flow is not a maximum flow");
  }
  return cut;
}

}  // namespace

Flow max_flow(const FlowNetwork& network) { return Residual(network, nullptr).run(); }

CutResult min_cut(const FlowNetwork& network, const Flow& flow) {
  if (flow.edge_flow.size() != network.edges().size()) {
    throw std::invalid_argument("flow does not match network");
  }
  Residual residual(network, &flow.edge_flow);
  return checked_cut(network, flow, residual.reachable_from(network.source()));
}

CutResult source_heavy_min_cut(const FlowNetwork& network, const Flow& flow) {
  if (flow.edge_flow.size() != network.edges().size()) {
    throw std::invalid_argument("flow does not match network");
  }
  Residual residual(network, &flow.edge_flow);
  auto to_sink = residual.reaching(network.sink());
  if (to_sink[network.source()]) throw std::invalid_argument("flow is not a maximum flow");
  std::vector<bool> side(network.num_vertices());
  for (VertexIndex v = 0; v < side.size(); ++v) side[v] = !to_sink[v];
  return checked_cut(network, flow, std::move(side));
}

Rational cut_capacity(const FlowNetwork& network, const std::vector<bool>& source_side) {
  Rational total;
  for (const auto& e : network.edges()) {
    if (source_side[e.tail] && !source_side[e.head]) total += e.capacity;
  }
  return total;
}

bool is_valid_flow(const FlowNetwork& network, const Flow& flow) {
  if (flow.edge_flow.size() != network.edges().size()) return false;
  std::vector<Rational> balance(network.num_vertices());
  for (EdgeIndex e = 0; e < network.edges().size(); ++e) {
    const auto& edge = network.edge(e);
    const auto& f = flow.edge_flow[e];
    if (sgn(f) < 0 || f > edge.capacity) return false;
    balance[edge.tail] -= f;
    balance[edge.head] += f;
  }
  for (VertexIndex v = 0; v < network.num_vertices(); ++v) {
    if (v == network.source() || v == network.sink()) continue;
    if (sgn(balance[v]) != 0) return false;
  }
  return -balance[network.source()] == flow.value;
}

}  // namespace oafd
