#ifndef OAFD_LEXIMIN_HPP
#define OAFD_LEXIMIN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "oafd/instance.hpp"
#include "oafd/maxflow.hpp"
#include "oafd/report.hpp"

namespace oafd {

// Breakpoint structure of the agent/object parametric network. Tiers are
// 0-based here: tier t holds the agents with the (t+1)-th smallest
// breakpoint and the objects that tier exhausts.
struct BreakpointProfile {
  std::vector<Rational> lambdas;                    // strictly increasing
  std::vector<AgentSet> agent_tiers;                // A_i \ A_{i-1}, sorted
  std::vector<std::vector<ObjectIndex>> object_tiers;  // B_i \ B_{i-1}, sorted
  std::vector<Rational> agent_breakpoint;           // per agent
  std::vector<std::size_t> agent_tier;              // per agent, 0-based
  // c_i(b) = s_I(b) - d(A_{i-1}, b) for every object; only entries for
  // objects outside B_{i-1} are capacities of the tier network.
  std::vector<std::vector<Rational>> residual_caps;

  std::size_t k() const { return lambdas.size(); }
  // A_{t+1}: all agents in tiers 0..t.
  AgentSet agents_through(std::size_t tier) const;
  // B_{t+1}: all objects in tiers 0..t.
  std::vector<ObjectIndex> objects_through(std::size_t tier) const;

  friend bool operator==(const BreakpointProfile&, const BreakpointProfile&) = default;
};

// Violations of the structural invariants of a profile for `instance`.
std::vector<std::string> profile_violations(const Instance& instance,
                                            const BreakpointProfile& profile);

// The tier network G_i: agents and objects not yet frozen, with residual
// object capacities c_i(b) aligned to `objects`.
struct TierView {
  AgentSet agents;
  std::vector<ObjectIndex> objects;
  std::vector<Rational> caps;
};

TierView initial_view(const Instance& instance);

// C_i(A') = sum over view objects of min(c_i(b), d(A', b)).
Rational tier_capacity(const Instance& instance, const TierView& view,
                       std::span<const AgentIndex> agents);

struct MinRatio {
  Rational lambda;
  AgentSet tight_set;  // union of all minimizing subsets
  std::size_t flow_calls = 0;
};

// min over nonempty A' of C_i(A') / e(A') by Dinkelbach iteration on the
// tier network; the maximal tight set is read off the source-heavy cut.
// Throws std::invalid_argument on an empty view.
MinRatio min_ratio(const Instance& instance, const TierView& view);

// Vertex layout of networks built here: 0 = source, 1 = sink, then agents,
// then objects.
struct NetworkLayout {
  std::size_t num_agents;
  VertexIndex source() const { return 0; }
  VertexIndex sink() const { return 1; }
  VertexIndex agent(AgentIndex a) const { return 2 + a; }
  VertexIndex object(ObjectIndex b) const { return 2 + num_agents + b; }
};

struct BuiltNetwork {
  FlowNetwork network;
  NetworkLayout layout;
  // Edge id of agent a -> object b, or npos if d(a, b) = 0.
  std::vector<EdgeIndex> demand_edge;  // row-major agents x objects
  static constexpr EdgeIndex npos = static_cast<EdgeIndex>(-1);
};

// G_I with source edges e(a)*lambda given as `source_caps`, demand edges
// a -> b of capacity d(a, b) (zero demands omitted) and object edges
// b -> t of capacity s_I(b).
BuiltNetwork build_network(const Instance& instance, std::span<const Rational> source_caps);

// Source capacity that dominates any flow through each agent: sum_b d(a, b).
std::vector<Rational> unbounded_source_caps(const Instance& instance);

// Peels tiers with min_ratio until every agent has a breakpoint.
BreakpointProfile breakpoints(const Instance& instance);

struct LexicographicResult {
  Allocation allocation;
  BreakpointProfile profile;
  Rational flow_value;
};

// The frugal leximin allocation: max flow of G_I with source capacities
// e(a) * Lambda(a). Throws InternalError if the flow does not saturate.
LexicographicResult lexicographic_allocation(const Instance& instance);

// Exact check of the tier structure an allocation from the mechanism must
// have (demands met outside the exhausted objects, exhausted objects held by
// lower tiers only and fully used, and the per-tier total identity).
PropertyReport structure_check(const Instance& instance, const Allocation& allocation,
                               const BreakpointProfile& profile);

}  // namespace oafd

#endif  // OAFD_LEXIMIN_HPP
