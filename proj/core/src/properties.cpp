#include "oafd/properties.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oafd/leximin.hpp"

namespace oafd {

PropertyReport is_frugal(const Instance& instance, const Allocation& allocation) {
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      if (allocation(a, b) > instance.demand(a, b)) {
        return PropertyReport::failed(
            "frugal", {"agent '" + instance.agent_id(a) + "' receives more of '" +
                           instance.object_id(b) + "' than demanded",
                       {a}, {b}, allocation(a, b), instance.demand(a, b), Relation::kLessEqual});
      }
    }
  }
  return PropertyReport::passed("frugal");
}

PropertyReport is_nw(const Instance& instance, const Allocation& allocation) {
  if (!is_frugal(instance, allocation).pass) {
    throw std::invalid_argument("is_nw: allocation is not frugal");
  }
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
    const Rational total = allocation.object_total(b);
    if (total == instance.supply(b)) continue;
    for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
      if (allocation(a, b) != instance.demand(a, b)) {
        return PropertyReport::failed(
            "nw", {"object '" + instance.object_id(b) + "' is not fully allocated while agent '" +
                       instance.agent_id(a) + "' has unmet demand",
                   {a}, {b}, total, instance.supply(b), Relation::kEqual});
      }
    }
  }
  return PropertyReport::passed("nw", "certifies pe");
}

PropertyReport envy_report(const Instance& instance, const Allocation& allocation) {
  std::vector<Rational> own(instance.num_agents());
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) own[a] = utility(allocation, instance, a);
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    for (AgentIndex other = 0; other < instance.num_agents(); ++other) {
      if (other == a) continue;
      const Rational scale = instance.endowment(a) / instance.endowment(other);
      Rational envied;
      for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
        envied += min_of(scale * allocation(other, b), instance.demand(a, b));
      }
      if (own[a] < envied) {
        return PropertyReport::failed(
            "ef", {"agent '" + instance.agent_id(a) + "' envies agent '" +
                       instance.agent_id(other) + "'",
                   {a, other}, {}, own[a], envied, Relation::kGreaterEqual});
      }
    }
  }
  return PropertyReport::passed("ef");
}

SiResult si_ratio(const Instance& instance, const Allocation& allocation) {
  SiResult result;
  const Rational total_endowment = instance.total_endowment();
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    const Rational fraction = instance.endowment(a) / total_endowment;
    SiRow row{a, {}, utility(allocation, instance, a)};
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      row.share += min_of(fraction * instance.supply(b), instance.demand(a, b));
    }
    if (sgn(row.share) > 0) {
      Rational r = row.utility / row.share;
      if (!result.ratio || r < *result.ratio) result.ratio = std::move(r);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

PropertyReport si_report(const Instance& instance, const Allocation& allocation,
                         const Rational& alpha) {
  const std::string name = "si";
  const SiResult si = si_ratio(instance, allocation);
  if (!si.ratio) return PropertyReport::passed(name, "unconstrained: every share is zero");
  if (*si.ratio >= alpha) return PropertyReport::passed(name, "ratio " + to_string(*si.ratio));
  for (const auto& row : si.rows) {
    if (row.utility < alpha * row.share) {
      return PropertyReport::failed(
          name, {"agent '" + instance.agent_id(row.agent) + "' gets less than alpha = " +
                     to_string(alpha) + " of its stand-alone share",
                 {row.agent}, {}, row.utility, alpha * row.share, Relation::kGreaterEqual});
    }
  }
  return PropertyReport::passed(name);
}

namespace {

std::vector<Rational> sorted_copy(std::span<const Rational> v) {
  std::vector<Rational> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool lorenz_dominates(std::span<const Rational> v, std::span<const Rational> w) {
  if (v.size() != w.size()) throw std::invalid_argument("lorenz_dominates: length mismatch");
  const auto sv = sorted_copy(v);
  const auto sw = sorted_copy(w);
  Rational prefix_v;
  Rational prefix_w;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    prefix_v += sv[i];
    prefix_w += sw[i];
    if (prefix_v < prefix_w) return false;
  }
  return true;
}

bool lorenz_dominates(const UtilityVector& v, const UtilityVector& w) {
  return lorenz_dominates(v.sorted, w.sorted);
}

namespace {

using Mass = std::pair<Rational, Rational>;  // (value, weight)

std::vector<Mass> sorted_masses(std::span<const Rational> values, std::span<const Rational> weights) {
  std::vector<Mass> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.emplace_back(values[i], weights[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Area under the quantile function of `masses` on [0, t] for each ascending t.
std::vector<Rational> curve_at(const std::vector<Mass>& masses, const std::vector<Rational>& ts) {
  std::vector<Rational> out;
  out.reserve(ts.size());
  std::size_t i = 0;
  Rational used;  // mass consumed before masses[i]
  Rational area;  // area up to `used`
  for (const Rational& t : ts) {
    while (i < masses.size() && used + masses[i].second <= t) {
      area += masses[i].first * masses[i].second;
      used += masses[i].second;
      ++i;
    }
    out.push_back(i < masses.size() ? area + masses[i].first * (t - used) : area);
  }
  return out;
}

}  // namespace

std::optional<LorenzGap> weighted_lorenz_gap(std::span<const Rational> v,
                                             std::span<const Rational> w,
                                             std::span<const Rational> weights) {
  if (v.size() != w.size() || v.size() != weights.size()) {
    throw std::invalid_argument("weighted_lorenz_dominates: length mismatch");
  }
  const auto mv = sorted_masses(v, weights);
  const auto mw = sorted_masses(w, weights);
  // Both curves are linear between the cumulative masses of either vector.
  std::vector<Rational> ts;
  for (const auto* m : {&mv, &mw}) {
    Rational acc;
    for (const auto& [value, weight] : *m) {
      acc += weight;
      ts.push_back(acc);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  const auto lv = curve_at(mv, ts);
  const auto lw = curve_at(mw, ts);
  for (std::size_t j = 0; j < ts.size(); ++j) {
    if (lv[j] < lw[j]) return LorenzGap{ts[j], lv[j], lw[j]};
  }
  return std::nullopt;
}

bool weighted_lorenz_dominates(std::span<const Rational> v, std::span<const Rational> w,
                               std::span<const Rational> weights) {
  return !weighted_lorenz_gap(v, w, weights).has_value();
}

std::optional<LorenzGap> weighted_lorenz_gap(const Instance& instance, const UtilityVector& v,
                                             const UtilityVector& w) {
  const std::size_t n = instance.num_agents();
  if (v.entries.size() != n || w.entries.size() != n) {
    throw std::invalid_argument("weighted_lorenz_dominates: length mismatch");
  }
  std::vector<Rational> nv(n), nw(n), weights(n);
  for (const auto& e : v.entries) nv[e.agent] = e.normalized;
  for (const auto& e : w.entries) nw[e.agent] = e.normalized;
  for (AgentIndex a = 0; a < n; ++a) weights[a] = instance.endowment(a);
  return weighted_lorenz_gap(nv, nw, weights);
}

bool weighted_lorenz_dominates(const Instance& instance, const UtilityVector& v,
                               const UtilityVector& w) {
  return !weighted_lorenz_gap(instance, v, w).has_value();
}

std::strong_ordering leximin_cmp(std::span<const Rational> v, std::span<const Rational> w) {
  if (v.size() != w.size()) throw std::invalid_argument("leximin_cmp: length mismatch");
  const auto sv = sorted_copy(v);
  const auto sw = sorted_copy(w);
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if (auto c = compare(sv[i], sw[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering leximin_cmp(const UtilityVector& v, const UtilityVector& w) {
  return leximin_cmp(v.sorted, w.sorted);
}

Rational mmf_value(const Instance& instance) {
  if (instance.num_agents() == 0) throw std::invalid_argument("mmf_value: instance has no agents");
  return breakpoints(instance).lambdas.front();
}

}  // namespace oafd
