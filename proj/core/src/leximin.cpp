#include "oafd/leximin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "oafd/errors.hpp"

namespace oafd {

AgentSet BreakpointProfile::agents_through(std::size_t tier) const {
  AgentSet out;
  for (std::size_t t = 0; t <= tier && t < agent_tiers.size(); ++t) {
    out.insert(out.end(), agent_tiers[t].begin(), agent_tiers[t].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ObjectIndex> BreakpointProfile::objects_through(std::size_t tier) const {
  std::vector<ObjectIndex> out;
  for (std::size_t t = 0; t <= tier && t < object_tiers.size(); ++t) {
    out.insert(out.end(), object_tiers[t].begin(), object_tiers[t].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> profile_violations(const Instance& instance,
                                            const BreakpointProfile& profile) {
  std::vector<std::string> out;
  const std::size_t k = profile.k();
  if (profile.agent_tiers.size() != k || profile.object_tiers.size() != k ||
      profile.residual_caps.size() != k) {
    out.push_back("tier lists have inconsistent lengths");
    return out;
  }
  if (k > 0 && sgn(profile.lambdas.front()) < 0) out.push_back("first breakpoint is negative");
  for (std::size_t t = 1; t < k; ++t) {
    if (!(profile.lambdas[t - 1] < profile.lambdas[t])) {
      out.push_back("breakpoints not strictly increasing at tier " + std::to_string(t + 1));
    }
  }
  std::vector<int> seen(instance.num_agents(), 0);
  for (std::size_t t = 0; t < k; ++t) {
    if (profile.agent_tiers[t].empty()) out.push_back("empty agent tier " + std::to_string(t + 1));
    for (AgentIndex a : profile.agent_tiers[t]) {
      ++seen[a];
      if (profile.agent_tier[a] != t || profile.agent_breakpoint[a] != profile.lambdas[t]) {
        out.push_back("agent '" + instance.agent_id(a) + "' breakpoint disagrees with its tier");
      }
    }
  }
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    if (seen[a] != 1) out.push_back("agent '" + instance.agent_id(a) + "' not in exactly one tier");
  }
  const auto capped = capped_supply(instance);
  std::vector<bool> frozen_object(instance.num_objects(), false);
  for (std::size_t t = 0; t < k; ++t) {
    const AgentSet before = t == 0 ? AgentSet{} : profile.agents_through(t - 1);
    std::vector<ObjectIndex> expected_new;
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      const Rational c = capped[b] - instance.total_demand(before, b);
      if (profile.residual_caps[t].size() != instance.num_objects() ||
          profile.residual_caps[t][b] != c) {
        out.push_back("residual capacity mismatch at tier " + std::to_string(t + 1));
        break;
      }
      if (frozen_object[b]) continue;
      if (sgn(c) < 0) {
        out.push_back("negative residual capacity for object '" + instance.object_id(b) + "'");
      }
      if (instance.total_demand(profile.agent_tiers[t], b) > c) expected_new.push_back(b);
    }
    if (expected_new != profile.object_tiers[t]) {
      out.push_back("object tier " + std::to_string(t + 1) + " does not match its definition");
    }
    for (ObjectIndex b : expected_new) frozen_object[b] = true;
  }
  return out;
}

TierView initial_view(const Instance& instance) {
  TierView view;
  view.agents = instance.all_agents();
  view.caps = capped_supply(instance);
  view.objects.resize(instance.num_objects());
  for (ObjectIndex b = 0; b < view.objects.size(); ++b) view.objects[b] = b;
  return view;
}

Rational tier_capacity(const Instance& instance, const TierView& view,
                       std::span<const AgentIndex> agents) {
  Rational sum;
  for (std::size_t j = 0; j < view.objects.size(); ++j) {
    sum += min_of(view.caps[j], instance.total_demand(agents, view.objects[j]));
  }
  return sum;
}

namespace {

// Tier network at parameter lambda; local vertex ids follow NetworkLayout
// with agents/objects renumbered by their position in the view.
FlowNetwork tier_network(const Instance& instance, const TierView& view, const Rational& lambda) {
  const NetworkLayout layout{view.agents.size()};
  FlowNetwork network(2 + view.agents.size() + view.objects.size(), layout.source(),
                      layout.sink());
  for (std::size_t i = 0; i < view.agents.size(); ++i) {
    network.add_edge(layout.source(), layout.agent(i), instance.endowment(view.agents[i]) * lambda);
  }
  for (std::size_t i = 0; i < view.agents.size(); ++i) {
    for (std::size_t j = 0; j < view.objects.size(); ++j) {
      const Rational& d = instance.demand(view.agents[i], view.objects[j]);
      if (sgn(d) > 0) network.add_edge(layout.agent(i), layout.object(j), d);
    }
  }
  for (std::size_t j = 0; j < view.objects.size(); ++j) {
    network.add_edge(layout.object(j), layout.sink(), view.caps[j]);
  }
  return network;
}

}  // namespace

MinRatio min_ratio(const Instance& instance, const TierView& view) {
  if (view.agents.empty()) throw std::invalid_argument("min_ratio: no agents in tier view");
  const NetworkLayout layout{view.agents.size()};
  const Rational total_endowment = instance.total_endowment(view.agents);
  MinRatio result;
  result.lambda = tier_capacity(instance, view, view.agents) / total_endowment;
  while (true) {
    const FlowNetwork network = tier_network(instance, view, result.lambda);
    const Flow flow = max_flow(network);
    ++result.flow_calls;
    const CutResult cut = source_heavy_min_cut(network, flow);
    AgentSet source_agents;
    for (std::size_t i = 0; i < view.agents.size(); ++i) {
      if (cut.contains(layout.agent(i))) source_agents.push_back(view.agents[i]);
    }
    if (cut.capacity == total_endowment * result.lambda) {
      result.tight_set = std::move(source_agents);
      if (result.tight_set.empty()) {
        throw InternalError("min_ratio: empty tight set at the minimum ratio");
      }
      return result;
    }
    if (source_agents.empty() || result.flow_calls > view.agents.size()) {
      throw InternalError("min_ratio: Dinkelbach iteration failed to converge");
    }
    Rational next = tier_capacity(instance, view, source_agents) /
                    instance.total_endowment(source_agents);
    if (!(next < result.lambda)) throw InternalError("min_ratio: ratio did not decrease");
    result.lambda = std::move(next);
  }
}

BuiltNetwork build_network(const Instance& instance, std::span<const Rational> source_caps) {
  if (source_caps.size() != instance.num_agents()) {
    throw std::invalid_argument("build_network: one source capacity per agent required");
  }
  const NetworkLayout layout{instance.num_agents()};
  BuiltNetwork built{
      FlowNetwork(2 + instance.num_agents() + instance.num_objects(), layout.source(),
                  layout.sink()),
      layout,
      std::vector<EdgeIndex>(instance.num_agents() * instance.num_objects(), BuiltNetwork::npos)};
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    built.network.add_edge(layout.source(), layout.agent(a), source_caps[a]);
  }
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      const Rational& d = instance.demand(a, b);
      if (sgn(d) > 0) {
        built.demand_edge[a * instance.num_objects() + b] =
            built.network.add_edge(layout.agent(a), layout.object(b), d);
      }
    }
  }
  const auto capped = capped_supply(instance);
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
    built.network.add_edge(layout.object(b), layout.sink(), capped[b]);
  }
  return built;
}

std::vector<Rational> unbounded_source_caps(const Instance& instance) {
  std::vector<Rational> caps(instance.num_agents());
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) caps[a] = instance.demand_sum(a);
  return caps;
}

BreakpointProfile breakpoints(const Instance& instance) {
  require_valid(instance);
  BreakpointProfile profile;
  profile.agent_breakpoint.resize(instance.num_agents());
  profile.agent_tier.resize(instance.num_agents());
  const auto capped = capped_supply(instance);
  std::vector<Rational> frozen_demand(instance.num_objects());  // d(A_{i-1}, b)
  TierView view = initial_view(instance);
  while (!view.agents.empty()) {
    profile.residual_caps.emplace_back(instance.num_objects());
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      profile.residual_caps.back()[b] = capped[b] - frozen_demand[b];
    }
    MinRatio step = min_ratio(instance, view);
    std::sort(step.tight_set.begin(), step.tight_set.end());
    if (!profile.lambdas.empty() && !(profile.lambdas.back() < step.lambda)) {
      throw InternalError("breakpoints: tier values not strictly increasing");
    }
    const std::size_t tier = profile.lambdas.size();
    for (AgentIndex a : step.tight_set) {
      profile.agent_breakpoint[a] = step.lambda;
      profile.agent_tier[a] = tier;
    }

    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      frozen_demand[b] += instance.total_demand(step.tight_set, b);
    }
    TierView next;
    std::vector<ObjectIndex> exhausted;
    for (std::size_t j = 0; j < view.objects.size(); ++j) {
      const ObjectIndex b = view.objects[j];
      const Rational tier_demand = instance.total_demand(step.tight_set, b);
      if (tier_demand > view.caps[j]) {
        exhausted.push_back(b);
      } else {
        next.objects.push_back(b);
        next.caps.push_back(view.caps[j] - tier_demand);
      }
    }
    std::set_difference(view.agents.begin(), view.agents.end(), step.tight_set.begin(),
                        step.tight_set.end(), std::back_inserter(next.agents));

    profile.lambdas.push_back(std::move(step.lambda));
    profile.agent_tiers.push_back(std::move(step.tight_set));
    profile.object_tiers.push_back(std::move(exhausted));
    view = std::move(next);
  }
  return profile;
}

LexicographicResult lexicographic_allocation(const Instance& instance) {
  LexicographicResult result{Allocation(instance), breakpoints(instance), {}};
  std::vector<Rational> caps(instance.num_agents());
  Rational expected;
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    caps[a] = instance.endowment(a) * result.profile.agent_breakpoint[a];
    expected += caps[a];
  }
  const BuiltNetwork built = build_network(instance, caps);
  const Flow flow = max_flow(built.network);
  result.flow_value = flow.value;
  Rational capped_total;
  for (const auto& s : capped_supply(instance)) capped_total += s;
  if (flow.value != expected || flow.value != capped_total) {
    std::ostringstream msg;
    msg << "lexicographic flow value " << to_string(flow.value) << " differs from sum e*Lambda "
        << to_string(expected) << " or total capped supply " << to_string(capped_total);
    throw InternalError(msg.str());
  }
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      const EdgeIndex e = built.demand_edge[a * instance.num_objects() + b];
      if (e != BuiltNetwork::npos) result.allocation(a, b) = flow.edge_flow[e];
    }
  }
  return result;
}

PropertyReport structure_check(const Instance& instance, const Allocation& allocation,
                               const BreakpointProfile& profile) {
  const std::string name = "structure";
  const auto capped = capped_supply(instance);
  std::vector<std::size_t> object_tier(instance.num_objects(), profile.k());
  for (std::size_t t = 0; t < profile.k(); ++t) {
    for (ObjectIndex b : profile.object_tiers[t]) object_tier[b] = t;
  }
  for (std::size_t t = 0; t < profile.k(); ++t) {
    const std::string tier_label = "tier " + std::to_string(t + 1);
    // Tier agents receive their full demand on objects not exhausted by tier t.
    for (AgentIndex a : profile.agent_tiers[t]) {
      for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
        if (object_tier[b] <= t) continue;
        if (allocation(a, b) != instance.demand(a, b)) {
          return PropertyReport::failed(
              name, {tier_label + ": agent '" + instance.agent_id(a) +
                         "' does not receive its demand for unexhausted object '" +
                         instance.object_id(b) + "'",
                     {a}, {b}, allocation(a, b), instance.demand(a, b), Relation::kEqual});
        }
      }
    }
    const AgentSet through = profile.agents_through(t);
    std::vector<bool> in_through(instance.num_agents(), false);
    for (AgentIndex a : through) in_through[a] = true;
    // Objects exhausted by tier t go to A_t only, and in full.
    for (ObjectIndex b : profile.object_tiers[t]) {
      for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
        if (!in_through[a] && sgn(allocation(a, b)) != 0) {
          return PropertyReport::failed(
              name, {tier_label + ": later agent '" + instance.agent_id(a) +
                         "' holds exhausted object '" + instance.object_id(b) + "'",
                     {a}, {b}, allocation(a, b), Rational(0), Relation::kEqual});
        }
      }
    }
    for (ObjectIndex b : profile.objects_through(t)) {
      Rational held;
      for (AgentIndex a : through) held += allocation(a, b);
      if (held != capped[b]) {
        return PropertyReport::failed(
            name, {tier_label + ": exhausted object '" + instance.object_id(b) +
                       "' is not fully used by the first tiers",
                   through, {b}, held, capped[b], Relation::kEqual});
      }
    }
    // sum_{j<=t} e(tier j) lambda_j = s(B_t) + d(A_t, B \ B_t).
    Rational lhs;
    for (std::size_t j = 0; j <= t; ++j) {
      lhs += instance.total_endowment(profile.agent_tiers[j]) * profile.lambdas[j];
    }
    Rational rhs;
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      rhs += object_tier[b] <= t ? instance.supply(b) : instance.total_demand(through, b);
    }
    if (lhs != rhs) {
      return PropertyReport::failed(
          name, {tier_label + ": weighted breakpoint total differs from exhausted supply plus "
                              "demand on remaining objects",
                 through, {}, lhs, rhs, Relation::kEqual});
    }
  }
  return PropertyReport::passed(name);
}

}  // namespace oafd
