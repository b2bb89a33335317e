#include "oafd/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "oafd/errors.hpp"
#include "oafd/families.hpp"
#include "oafd/properties.hpp"

namespace oafd {

namespace {

using Mask = std::uint32_t;

AgentSet members(Mask mask, std::size_t n) {
  AgentSet out;
  for (AgentIndex a = 0; a < n; ++a) {
    if (mask & (Mask{1} << a)) out.push_back(a);
  }
  return out;
}

}  // namespace

BreakpointProfile oracle_breakpoints(const Instance& instance, std::size_t max_agents) {
  require_valid(instance);
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_objects();
  if (n > max_agents || n > 24) {
    throw InputError("oracle_breakpoints: " + std::to_string(n) + " agents exceeds the limit of " +
                     std::to_string(std::min<std::size_t>(max_agents, 24)));
  }
  BreakpointProfile profile;
  profile.agent_breakpoint.resize(n);
  profile.agent_tier.resize(n);

  std::vector<Rational> cap(m);
  for (ObjectIndex b = 0; b < m; ++b) {
    cap[b] = min_of(instance.supply(b), instance.total_demand(b));
  }
  std::vector<bool> exhausted(m, false);
  Mask remaining = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);

  // d(S, b) for every subset S, built from S minus its lowest member.
  std::vector<std::vector<Rational>> subset_demand(std::size_t{1} << n, std::vector<Rational>(m));
  std::vector<Rational> subset_endowment(std::size_t{1} << n);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const auto low = static_cast<AgentIndex>(__builtin_ctz(s));
    const Mask rest = s & (s - 1);
    subset_endowment[s] = subset_endowment[rest] + instance.endowment(low);
    for (ObjectIndex b = 0; b < m; ++b) {
      subset_demand[s][b] = subset_demand[rest][b] + instance.demand(low, b);
    }
  }

  while (remaining != 0) {
    profile.residual_caps.push_back(cap);
    std::optional<Rational> best;
    Mask tight = 0;
    for (Mask s = remaining; s != 0; s = (s - 1) & remaining) {
      Rational c;
      for (ObjectIndex b = 0; b < m; ++b) {
        if (!exhausted[b]) c += min_of(cap[b], subset_demand[s][b]);
      }
      Rational ratio = c / subset_endowment[s];
      if (!best || ratio < *best) {
        best = std::move(ratio);
        tight = s;
      } else if (ratio == *best) {
        tight |= s;
      }
    }
    const std::size_t tier = profile.lambdas.size();
    AgentSet tier_agents = members(tight, n);
    for (AgentIndex a : tier_agents) {
      profile.agent_breakpoint[a] = *best;
      profile.agent_tier[a] = tier;
    }
    std::vector<ObjectIndex> tier_objects;
    for (ObjectIndex b = 0; b < m; ++b) {
      if (!exhausted[b] && subset_demand[tight][b] > cap[b]) tier_objects.push_back(b);
    }
    for (ObjectIndex b = 0; b < m; ++b) cap[b] -= subset_demand[tight][b];
    for (ObjectIndex b : tier_objects) exhausted[b] = true;
    profile.lambdas.push_back(*best);
    profile.agent_tiers.push_back(std::move(tier_agents));
    profile.object_tiers.push_back(std::move(tier_objects));
    remaining &= ~tight;
  }
  return profile;
}

Allocation random_frugal_allocation(const Instance& instance, std::uint64_t seed,
                                    std::optional<Rational> fixed_fraction) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<AgentIndex, ObjectIndex>> pairs;
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      if (sgn(instance.demand(a, b)) > 0) pairs.emplace_back(a, b);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<Rational> left(instance.num_objects());
  for (ObjectIndex b = 0; b < left.size(); ++b) left[b] = instance.supply(b);
  std::uniform_int_distribution<long> denominator(1, 8);
  Allocation allocation(instance);
  for (const auto& [a, b] : pairs) {
    Rational fraction;
    if (fixed_fraction) {
      fraction = *fixed_fraction;
    } else {
      const long q = denominator(rng);
      fraction = make_rational(std::uniform_int_distribution<long>(0, q)(rng), q);
    }
    Rational amount = fraction * min_of(left[b], instance.demand(a, b));
    left[b] -= amount;
    allocation(a, b) = std::move(amount);
  }
  return allocation;
}

MmfSiResult oracle_mmf_si(const Instance& instance, const Rational& resolution) {
  require_valid(instance);
  if (instance.num_agents() == 0 || instance.num_agents() > 3 || instance.num_objects() > 2) {
    throw InputError("oracle_mmf_si: supports 1 to 3 agents and at most 2 objects");
  }
  if (sgn(resolution) <= 0) throw InputError("oracle_mmf_si: resolution must be positive");

  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_objects();
  struct Variable {
    AgentIndex agent;
    ObjectIndex object;
    std::vector<Rational> values;
  };
  std::vector<Variable> vars;
  double leaves = 1.0;
  for (AgentIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = 0; b < m; ++b) {
      const Rational top = min_of(instance.demand(a, b), instance.supply(b));
      Variable v{a, b, {}};
      for (Rational x(0); x <= top; x += resolution) v.values.push_back(x);
      if (v.values.back() != top) v.values.push_back(top);
      leaves *= static_cast<double>(v.values.size());
      vars.push_back(std::move(v));
    }
  }
  if (leaves > 2.0e7) throw InputError("oracle_mmf_si: grid too large at this resolution");

  std::vector<Rational> share(n);
  const Rational total_endowment = instance.total_endowment();
  for (AgentIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = 0; b < m; ++b) {
      share[a] += min_of(instance.endowment(a) / total_endowment * instance.supply(b),
                         instance.demand(a, b));
    }
  }

  MmfSiResult result;
  bool found = false;
  Allocation current(instance);
  std::vector<Rational> left(m);
  for (ObjectIndex b = 0; b < m; ++b) left[b] = instance.supply(b);

  auto visit = [&](auto&& self, std::size_t index) -> void {
    if (index == vars.size()) {
      ++result.grid_points;
      Rational worst;
      for (AgentIndex a = 0; a < n; ++a) {
        const Rational u = current.agent_total(a);  // frugal: utility = amount held
        if (u < share[a]) return;
        const Rational normalized = u / instance.endowment(a);
        if (a == 0 || normalized < worst) worst = normalized;
      }
      ++result.feasible_points;
      if (!found || worst > result.min_normalized) {
        found = true;
        result.min_normalized = worst;
        result.allocation = current;
      }
      return;
    }
    const Variable& v = vars[index];
    for (const Rational& x : v.values) {
      if (x > left[v.object]) break;
      left[v.object] -= x;
      current(v.agent, v.object) = x;
      self(self, index + 1);
      left[v.object] += x;
    }
    current(v.agent, v.object) = 0;
  };
  visit(visit, 0);
  if (!found) throw InfeasibleOnGrid("no SI allocation on the grid at resolution " +
                                     to_string(resolution));
  return result;
}

SiLimitReport reproduce_si_limit(std::size_t n) {
  const Instance inst = si_limit_instance(n);
  const auto run = lexicographic_allocation(inst);
  SiLimitReport report;
  report.n = n;
  report.si_ratio = *si_ratio(inst, run.allocation).ratio;
  report.expected = (1 + make_rational(1, static_cast<long>(n))) / 2;
  report.matches = report.si_ratio == report.expected;
  return report;
}

MmfSiManipulationReport reproduce_mmf_si_manipulation(const Rational& resolution) {
  const Instance truthful = mmf_si_manipulation_instance();
  Instance misreport = truthful;
  misreport.set_demand(0, 1, Rational(2));

  MmfSiManipulationReport report;
  report.mmf_si_truthful = utility(oracle_mmf_si(truthful, resolution).allocation, truthful, 0);
  report.mmf_si_misreport = utility(oracle_mmf_si(misreport, resolution).allocation, truthful, 0);
  report.leximin_truthful = utility(lexicographic_allocation(truthful).allocation, truthful, 0);
  report.leximin_misreport = utility(lexicographic_allocation(misreport).allocation, truthful, 0);
  report.mmf_si_manipulable = report.mmf_si_misreport > report.mmf_si_truthful;
  report.leximin_manipulable = report.leximin_misreport > report.leximin_truthful;
  return report;
}

std::string describe(const SiLimitReport& report) {
  std::ostringstream out;
  out << "si-limit n=" << report.n << ": leximin SI ratio " << to_string(report.si_ratio)
      << ", expected (1+1/n)/2 = " << to_string(report.expected)
      << (report.matches ? " [match]" : " [MISMATCH]");
  return out.str();
}

std::string describe(const MmfSiManipulationReport& report) {
  std::ostringstream out;
  out << "mmf-si-manipulation: mmf-si a1 utility " << to_string(report.mmf_si_truthful)
      << " truthful -> " << to_string(report.mmf_si_misreport)
      << " after reporting d(a1,b2)=2"
      << (report.mmf_si_manipulable ? " (MMF-SI is not SP)" : "") << "\n"
      << "mmf-si-manipulation: leximin a1 utility " << to_string(report.leximin_truthful) << " truthful -> "
      << to_string(report.leximin_misreport) << " after the same misreport"
      << (report.leximin_manipulable ? " (GAIN)" : " (no gain)");
  return out.str();
}

}  // namespace oafd
