#ifndef OAFD_INSTANCE_HPP
#define OAFD_INSTANCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oafd/rational.hpp"

namespace oafd {

using AgentIndex = std::size_t;
using ObjectIndex = std::size_t;
using AgentSet = std::vector<AgentIndex>;

// An object-allocation instance with fractional demands: agents with
// endowments, objects with supplies and an agent x object demand matrix.
// Agents and objects are addressed by their position in input order; ids
// are opaque strings kept for I/O.
class Instance {
 public:
  Instance() = default;

  AgentIndex add_agent(std::string id, Rational endowment);
  ObjectIndex add_object(std::string id, Rational supply);
  void set_demand(AgentIndex agent, ObjectIndex object, Rational demand);

  std::size_t num_agents() const { return agent_ids_.size(); }
  std::size_t num_objects() const { return object_ids_.size(); }

  const std::string& agent_id(AgentIndex a) const { return agent_ids_[a]; }
  const std::string& object_id(ObjectIndex b) const { return object_ids_[b]; }
  const Rational& endowment(AgentIndex a) const { return endowment_[a]; }
  const Rational& supply(ObjectIndex b) const { return supply_[b]; }
  const Rational& demand(AgentIndex a, ObjectIndex b) const {
    return demand_[a * object_ids_.size() + b];
  }

  void set_endowment(AgentIndex a, Rational value) { endowment_[a] = std::move(value); }
  void set_supply(ObjectIndex b, Rational value) { supply_[b] = std::move(value); }

  std::optional<AgentIndex> find_agent(std::string_view id) const;
  std::optional<ObjectIndex> find_object(std::string_view id) const;

  // e(A') and d(A', b).
  Rational total_endowment(std::span<const AgentIndex> agents) const;
  Rational total_endowment() const;
  Rational total_demand(std::span<const AgentIndex> agents, ObjectIndex b) const;
  Rational total_demand(ObjectIndex b) const;
  Rational demand_sum(AgentIndex a) const;

  AgentSet all_agents() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::string> agent_ids_;
  std::vector<Rational> endowment_;
  std::vector<std::string> object_ids_;
  std::vector<Rational> supply_;
  std::vector<Rational> demand_;  // row-major, agents x objects
};

// Per-(agent, object) amounts; absent pairs are zero.
class Allocation {
 public:
  Allocation() = default;
  Allocation(std::size_t num_agents, std::size_t num_objects)
      : num_agents_(num_agents), num_objects_(num_objects), amount_(num_agents * num_objects) {}
  explicit Allocation(const Instance& instance)
      : Allocation(instance.num_agents(), instance.num_objects()) {}

  std::size_t num_agents() const { return num_agents_; }
  std::size_t num_objects() const { return num_objects_; }

  Rational& operator()(AgentIndex a, ObjectIndex b) { return amount_[a * num_objects_ + b]; }
  const Rational& operator()(AgentIndex a, ObjectIndex b) const {
    return amount_[a * num_objects_ + b];
  }

  Rational object_total(ObjectIndex b) const;
  Rational agent_total(AgentIndex a) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::size_t num_agents_ = 0;
  std::size_t num_objects_ = 0;
  std::vector<Rational> amount_;
};

struct UtilityEntry {
  AgentIndex agent;
  Rational utility;
  Rational normalized;  // utility / endowment
};

// u(I, mu): per-agent utilities plus the nondecreasing normalized view.
struct UtilityVector {
  std::vector<UtilityEntry> entries;
  std::vector<Rational> sorted;
};

// s_I(b) = min(s(b), d(A, b)).
std::vector<Rational> capped_supply(const Instance& instance);

// C(I, A') = sum_b min(s_I(b), d(A', b)).
Rational capacity(const Instance& instance, std::span<const AgentIndex> agents);

// u(mu, d, a) = sum_b min(mu(a, b), d(a, b)).
Rational utility(const Allocation& allocation, const Instance& instance, AgentIndex agent);

UtilityVector utility_vector(const Instance& instance, const Allocation& allocation);

// Residual instance after the agents in `removed` leave with their share of
// `allocation`. Throws InputError if a residual supply would be negative.
Instance sub_instance(const Instance& instance, const Allocation& allocation,
                      std::span<const AgentIndex> removed);

// Restriction of an allocation to the agents not in `removed`, indexed like
// the corresponding sub_instance.
Allocation restrict_allocation(const Allocation& allocation, std::span<const AgentIndex> removed);

// Every violated instance invariant, as readable messages. Empty iff valid.
std::vector<std::string> validate_instance(const Instance& instance);

// Throws InputError listing the violations of validate_instance().
void require_valid(const Instance& instance);

// Allocation shape matches and sum_a mu(a, b) <= s(b), mu >= 0.
bool is_feasible(const Instance& instance, const Allocation& allocation);

}  // namespace oafd

#endif  // OAFD_INSTANCE_HPP
