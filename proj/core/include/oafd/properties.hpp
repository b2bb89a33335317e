#ifndef OAFD_PROPERTIES_HPP
#define OAFD_PROPERTIES_HPP

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "oafd/instance.hpp"
#include "oafd/report.hpp"

namespace oafd {

// mu(a, b) <= d(a, b) for every pair.
PropertyReport is_frugal(const Instance& instance, const Allocation& allocation);

// Every object is fully allocated or meets every agent's demand.
// Defined on frugal allocations; throws std::invalid_argument otherwise.
// A passing report also certifies Pareto efficiency.
PropertyReport is_nw(const Instance& instance, const Allocation& allocation);

// u(a) >= sum_b min(e(a)/e(a') * mu(a', b), d(a, b)) for all ordered pairs.
PropertyReport envy_report(const Instance& instance, const Allocation& allocation);

struct SiRow {
  AgentIndex agent;
  Rational share;    // sum_b min(e(a)/e(A) * s(b), d(a, b))
  Rational utility;
};

struct SiResult {
  std::optional<Rational> ratio;  // nullopt: every share is zero
  std::vector<SiRow> rows;
};

// Smallest u(a)/share(a) over agents with a positive share.
SiResult si_ratio(const Instance& instance, const Allocation& allocation);

// ratio >= alpha (or unconstrained).
PropertyReport si_report(const Instance& instance, const Allocation& allocation,
                         const Rational& alpha);

// Prefix sums of sorted(v) dominate those of sorted(w). Inputs need not be
// sorted. Throws std::invalid_argument on a length mismatch.
bool lorenz_dominates(std::span<const Rational> v, std::span<const Rational> w);
bool lorenz_dominates(const UtilityVector& v, const UtilityVector& w);

// Lorenz dominance with agent i counted as mass weights[i] at value v[i]
// (resp. w[i]). Equal weights reduce it to lorenz_dominates.
bool weighted_lorenz_dominates(std::span<const Rational> v, std::span<const Rational> w,
                               std::span<const Rational> weights);
// Normalized utilities weighted by endowment.
bool weighted_lorenz_dominates(const Instance& instance, const UtilityVector& v,
                               const UtilityVector& w);

// First cumulative mass at which the weighted curve of v falls below w's.
struct LorenzGap {
  Rational mass;
  Rational v_area;
  Rational w_area;
};
std::optional<LorenzGap> weighted_lorenz_gap(std::span<const Rational> v,
                                             std::span<const Rational> w,
                                             std::span<const Rational> weights);
std::optional<LorenzGap> weighted_lorenz_gap(const Instance& instance, const UtilityVector& v,
                                             const UtilityVector& w);

// Lexicographic comparison of sorted(v) and sorted(w).
std::strong_ordering leximin_cmp(std::span<const Rational> v, std::span<const Rational> w);
std::strong_ordering leximin_cmp(const UtilityVector& v, const UtilityVector& w);

// Largest achievable min_a u(a)/e(a). Throws std::invalid_argument when the
// instance has no agents.
Rational mmf_value(const Instance& instance);

}  // namespace oafd

#endif  // OAFD_PROPERTIES_HPP
