#include "oafd/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "oafd/errors.hpp"

namespace oafd {

AgentIndex Instance::add_agent(std::string id, Rational endowment) {
  agent_ids_.push_back(std::move(id));
  endowment_.push_back(std::move(endowment));
  demand_.resize(agent_ids_.size() * object_ids_.size());
  return agent_ids_.size() - 1;
}

ObjectIndex Instance::add_object(std::string id, Rational supply) {
  const std::size_t old_cols = object_ids_.size();
  object_ids_.push_back(std::move(id));
  supply_.push_back(std::move(supply));
  std::vector<Rational> widened(agent_ids_.size() * object_ids_.size());
  for (std::size_t a = 0; a < agent_ids_.size(); ++a) {
    for (std::size_t b = 0; b < old_cols; ++b) {
      widened[a * object_ids_.size() + b] = std::move(demand_[a * old_cols + b]);
    }
  }
  demand_ = std::move(widened);
  return object_ids_.size() - 1;
}

void Instance::set_demand(AgentIndex agent, ObjectIndex object, Rational demand) {
  demand_[agent * object_ids_.size() + object] = std::move(demand);
}

std::optional<AgentIndex> Instance::find_agent(std::string_view id) const {
  auto it = std::find(agent_ids_.begin(), agent_ids_.end(), id);
  if (it == agent_ids_.end()) return std::nullopt;
  return static_cast<AgentIndex>(it - agent_ids_.begin());
}

std::optional<ObjectIndex> Instance::find_object(std::string_view id) const {
  auto it = std::find(object_ids_.begin(), object_ids_.end(), id);
  if (it == object_ids_.end()) return std::nullopt;
  return static_cast<ObjectIndex>(it - object_ids_.begin());
}

Rational Instance::total_endowment(std::span<const AgentIndex> agents) const {
  Rational sum;
  for (AgentIndex a : agents) sum += endowment_[a];
  return sum;
}

Rational Instance::total_endowment() const {
  Rational sum;
  for (const auto& e : endowment_) sum += e;
  return sum;
}

Rational Instance::total_demand(std::span<const AgentIndex> agents, ObjectIndex b) const {
  Rational sum;
  for (AgentIndex a : agents) sum += demand(a, b);
  return sum;
}

Rational Instance::total_demand(ObjectIndex b) const {
  Rational sum;
  for (AgentIndex a = 0; a < num_agents(); ++a) sum += demand(a, b);
  return sum;
}

Rational Instance::demand_sum(AgentIndex a) const {
  Rational sum;
  for (ObjectIndex b = 0; b < num_objects(); ++b) sum += demand(a, b);
  return sum;
}

AgentSet Instance::all_agents() const {
  AgentSet all(num_agents());
  for (AgentIndex a = 0; a < all.size(); ++a) all[a] = a;
  return all;
}

Rational Allocation::object_total(ObjectIndex b) const {
  Rational sum;
  for (AgentIndex a = 0; a < num_agents_; ++a) sum += (*this)(a, b);
  return sum;
}

Rational Allocation::agent_total(AgentIndex a) const {
  Rational sum;
  for (ObjectIndex b = 0; b < num_objects_; ++b) sum += (*this)(a, b);
  return sum;
}

std::vector<Rational> capped_supply(const Instance& instance) {
  std::vector<Rational> capped(instance.num_objects());
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
    capped[b] = min_of(instance.supply(b), instance.total_demand(b));
  }
  return capped;
}

Rational capacity(const Instance& instance, std::span<const AgentIndex> agents) {
  const auto capped = capped_supply(instance);
  Rational sum;
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
    sum += min_of(capped[b], instance.total_demand(agents, b));
  }
  return sum;
}

Rational utility(const Allocation& allocation, const Instance& instance, AgentIndex agent) {
  Rational sum;
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
    sum += min_of(allocation(agent, b), instance.demand(agent, b));
  }
  return sum;
}

UtilityVector utility_vector(const Instance& instance, const Allocation& allocation) {
  UtilityVector v;
  v.entries.reserve(instance.num_agents());
  v.sorted.reserve(instance.num_agents());
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    Rational u = utility(allocation, instance, a);
    Rational normalized = u / instance.endowment(a);
    v.sorted.push_back(normalized);
    v.entries.push_back({a, std::move(u), std::move(normalized)});
  }
  std::sort(v.sorted.begin(), v.sorted.end());
  return v;
}

namespace {

std::vector<bool> membership(std::size_t n, std::span<const AgentIndex> agents) {
  std::vector<bool> in(n, false);
  for (AgentIndex a : agents) in.at(a) = true;
  return in;
}

}  // namespace

Instance sub_instance(const Instance& instance, const Allocation& allocation,
                      std::span<const AgentIndex> removed) {
  const auto gone = membership(instance.num_agents(), removed);
  Instance sub;
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
    Rational residual = instance.supply(b);
    for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
      if (gone[a]) residual -= allocation(a, b);
    }
    if (sgn(residual) < 0) {
      throw InputError("sub_instance: residual supply of object '" + instance.object_id(b) +
                       "' is negative (" + to_string(residual) + ")");
    }
    sub.add_object(instance.object_id(b), std::move(residual));
  }
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    if (gone[a]) continue;
    const AgentIndex kept = sub.add_agent(instance.agent_id(a), instance.endowment(a));
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      sub.set_demand(kept, b, instance.demand(a, b));
    }
  }
  return sub;
}

Allocation restrict_allocation(const Allocation& allocation, std::span<const AgentIndex> removed) {
  const auto gone = membership(allocation.num_agents(), removed);
  const auto kept_count = static_cast<std::size_t>(std::count(gone.begin(), gone.end(), false));
  Allocation restricted(kept_count, allocation.num_objects());
  AgentIndex row = 0;
  for (AgentIndex a = 0; a < allocation.num_agents(); ++a) {
    if (gone[a]) continue;
    for (ObjectIndex b = 0; b < allocation.num_objects(); ++b) restricted(row, b) = allocation(a, b);
    ++row;
  }
  return restricted;
}

std::vector<std::string> validate_instance(const Instance& instance) {
  std::vector<std::string> violations;
  std::set<std::string_view> seen;
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    if (!seen.insert(instance.agent_id(a)).second) {
      violations.push_back("duplicate agent id '" + instance.agent_id(a) + "'");
    }
    if (sgn(instance.endowment(a)) <= 0) {
      violations.push_back("agent '" + instance.agent_id(a) +
                           "': endowment must be strictly positive");
    }
  }
  seen.clear();
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
    if (!seen.insert(instance.object_id(b)).second) {
      violations.push_back("duplicate object id '" + instance.object_id(b) + "'");
    }
    if (sgn(instance.supply(b)) < 0) {
      violations.push_back("object '" + instance.object_id(b) + "': supply must be nonnegative");
    }
  }
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      if (sgn(instance.demand(a, b)) < 0) {
        violations.push_back("demand of agent '" + instance.agent_id(a) + "' for object '" +
                             instance.object_id(b) + "' must be nonnegative");
      }
    }
  }
  return violations;
}

void require_valid(const Instance& instance) {
  const auto violations = validate_instance(instance);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const auto& v : violations) msg << "\n  " << v;
  throw InputError(msg.str());
}

bool is_feasible(const Instance& instance, const Allocation& allocation) {
  if (allocation.num_agents() != instance.num_agents() ||
      allocation.num_objects() != instance.num_objects()) {
    return false;
  }
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
    Rational total;
    for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
      if (sgn(allocation(a, b)) < 0) return false;
      total += allocation(a, b);
    }
    if (total > instance.supply(b)) return false;
  }
  return true;
}

}  // namespace oafd
