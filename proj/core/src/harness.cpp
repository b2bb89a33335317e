#include "oafd/harness.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "oafd/errors.hpp"
#include "oafd/leximin.hpp"
#include "oafd/oracle.hpp"

namespace oafd {

Allocation run_mechanism(MechanismKind kind, const Instance& instance,
                         const Rational& mmf_si_resolution) {
  switch (kind) {
    case MechanismKind::kLeximin:
      return lexicographic_allocation(instance).allocation;
    case MechanismKind::kMmfSi:
      return oracle_mmf_si(instance, mmf_si_resolution).allocation;
  }
  throw std::invalid_argument("unknown mechanism");
}

std::vector<Rational> default_supply_increments() {
  return {Rational(0), make_rational(1, 4), make_rational(1, 2), Rational(1), Rational(2),
          Rational(5)};
}

std::vector<Rational> default_endowment_factors() {
  return {make_rational(1, 8), make_rational(1, 3), make_rational(1, 2), make_rational(3, 4)};
}

namespace {

std::vector<Rational> leximin_utilities(const Instance& instance) {
  const auto run = lexicographic_allocation(instance);
  std::vector<Rational> u(instance.num_agents());
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) u[a] = utility(run.allocation, instance, a);
  return u;
}

const Rational& pick(const std::vector<Rational>& grid, std::mt19937_64& rng) {
  if (grid.empty()) throw std::invalid_argument("perturbation grid is empty");
  return grid[std::uniform_int_distribution<std::size_t>(0, grid.size() - 1)(rng)];
}

std::string seed_note(std::uint64_t seed, std::size_t trials) {
  return "seed " + std::to_string(seed) + ", " + std::to_string(trials) + " trials";
}

}  // namespace

PropertyReport compare_rm(const Instance& before, const Instance& after) {
  const auto u = leximin_utilities(before);
  const auto u_after = leximin_utilities(after);
  for (AgentIndex a = 0; a < before.num_agents(); ++a) {
    if (u_after[a] < u[a]) {
      return PropertyReport::failed(
          "rm", {"agent '" + before.agent_id(a) + "' loses utility when supply increases",
                 {a}, {}, u_after[a], u[a], Relation::kGreaterEqual});
    }
  }
  return PropertyReport::passed("rm");
}

PropertyReport compare_pm(const Instance& before, const Instance& after) {
  const auto u = leximin_utilities(before);
  const auto u_after = leximin_utilities(after);
  for (AgentIndex a = 0; a < after.num_agents(); ++a) {
    const auto original = before.find_agent(after.agent_id(a));
    if (!original) throw std::invalid_argument("compare_pm: unknown agent '" + after.agent_id(a) + "'");
    if (after.endowment(a) != before.endowment(*original)) continue;
    if (u_after[a] < u[*original]) {
      return PropertyReport::failed(
          "pm", {"unchanged agent '" + after.agent_id(a) + "' loses utility when others shrink",
                 {a}, {}, u_after[a], u[*original], Relation::kGreaterEqual});
    }
  }
  return PropertyReport::passed("pm");
}

PropertyReport check_rm(const Instance& instance, const PerturbationSpec& spec, std::size_t trials) {
  if (spec.kind != PerturbationKind::kSupplyIncrease) {
    throw std::invalid_argument("check_rm expects a supply-increase perturbation");
  }
  for (const auto& g : spec.grid) {
    if (sgn(g) < 0) throw std::invalid_argument("supply increments must be nonnegative");
  }
  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution touch(0.5);
  const auto u = leximin_utilities(instance);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Instance grown = instance;
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      if (touch(rng)) grown.set_supply(b, instance.supply(b) + pick(spec.grid, rng));
    }
    const auto u_after = leximin_utilities(grown);
    for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
      if (u_after[a] < u[a]) {
        return PropertyReport::failed(
            "rm", {"trial " + std::to_string(trial) + " (seed " + std::to_string(spec.seed) +
                       "): agent '" + instance.agent_id(a) + "' loses utility",
                   {a}, {}, u_after[a], u[a], Relation::kGreaterEqual});
      }
    }
  }
  return PropertyReport::passed("rm", seed_note(spec.seed, trials));
}

PropertyReport check_pm(const Instance& instance, const PerturbationSpec& spec, std::size_t trials) {
  if (spec.kind == PerturbationKind::kSupplyIncrease) {
    throw std::invalid_argument("check_pm expects an endowment-decrease or agent-removal perturbation");
  }
  if (spec.kind == PerturbationKind::kEndowmentDecrease) {
    for (const auto& g : spec.grid) {
      if (sgn(g) <= 0 || g > 1) throw std::invalid_argument("endowment factors must lie in (0, 1]");
    }
  }
  std::mt19937_64 rng(spec.seed);
  const auto u = leximin_utilities(instance);
  const std::size_t n = instance.num_agents();
  for (std::size_t trial = 0; trial < trials && n > 0; ++trial) {
    std::vector<bool> chosen(n, false);
    std::bernoulli_distribution coin(spec.kind == PerturbationKind::kAgentRemoval ? 1.0 / 3 : 0.5);
    for (AgentIndex a = 0; a < n; ++a) chosen[a] = coin(rng);
    chosen[std::uniform_int_distribution<AgentIndex>(0, n - 1)(rng)] = true;

    Instance shrunk;
    std::vector<AgentIndex> origin;
    if (spec.kind == PerturbationKind::kEndowmentDecrease) {
      shrunk = instance;
      for (AgentIndex a = 0; a < n; ++a) {
        if (chosen[a]) shrunk.set_endowment(a, instance.endowment(a) * pick(spec.grid, rng));
        origin.push_back(a);
      }
    } else {
      AgentSet removed;
      for (AgentIndex a = 0; a < n; ++a) {
        if (chosen[a]) removed.push_back(a);
        else origin.push_back(a);
      }
      shrunk = sub_instance(instance, Allocation(instance), removed);
    }
    const auto u_after = leximin_utilities(shrunk);
    for (AgentIndex i = 0; i < shrunk.num_agents(); ++i) {
      const AgentIndex a = origin[i];
      if (shrunk.endowment(i) != instance.endowment(a)) continue;
      if (u_after[i] < u[a]) {
        return PropertyReport::failed(
            "pm", {"trial " + std::to_string(trial) + " (seed " + std::to_string(spec.seed) +
                       "): unchanged agent '" + instance.agent_id(a) + "' loses utility",
                   {a}, {}, u_after[i], u[a], Relation::kGreaterEqual});
      }
    }
  }
  return PropertyReport::passed("pm", seed_note(spec.seed, trials));
}

PropertyReport check_substructure_for(const Instance& instance, const AgentSet& removed) {
  const auto run = lexicographic_allocation(instance);
  const Instance sub = sub_instance(instance, run.allocation, removed);
  if (sub.num_agents() == 0) return PropertyReport::passed("substructure", "empty residual");
  const Allocation restricted = restrict_allocation(run.allocation, removed);
  const BreakpointProfile expected = oracle_breakpoints(sub);
  for (AgentIndex a = 0; a < sub.num_agents(); ++a) {
    const Rational got = utility(restricted, sub, a);
    const Rational want = sub.endowment(a) * expected.agent_breakpoint[a];
    if (got != want) {
      return PropertyReport::failed(
          "substructure", {"agent '" + sub.agent_id(a) +
                               "' does not get its leximin utility in the residual instance",
                           removed, {}, got, want, Relation::kEqual});
    }
  }
  return PropertyReport::passed("substructure");
}

PropertyReport check_substructure(const Instance& instance, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    AgentSet removed;
    for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
      if (coin(rng)) removed.push_back(a);
    }
    auto report = check_substructure_for(instance, removed);
    if (!report.pass) {
      report.witness->detail += " (trial " + std::to_string(trial) + ", seed " +
                                std::to_string(seed) + ")";
      return report;
    }
  }
  return PropertyReport::passed("substructure", seed_note(seed, trials));
}

bool ManipulationReport::is_counterexample() const {
  bool winner = false;
  for (const auto& m : members) {
    if (m.outcome == Outcome::kLoser) return false;
    winner = winner || m.outcome == Outcome::kWinner;
  }
  return winner;
}

namespace {

struct Entry {
  std::size_t member;
  ObjectIndex object;
  std::vector<Rational> alternatives;  // excludes the true demand
};

std::vector<Entry> misreport_entries(const Instance& instance, const AgentSet& coalition,
                                     const std::vector<Rational>& grid) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < coalition.size(); ++i) {
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      const Rational& d = instance.demand(coalition[i], b);
      std::vector<Rational> values{Rational(0), instance.supply(b)};
      for (const auto& g : grid) values.push_back(g * d);
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      values.erase(std::remove(values.begin(), values.end(), d), values.end());
      entries.push_back({i, b, std::move(values)});
    }
  }
  return entries;
}

// Advances `c` to the next r-combination of [0, n); false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t r = c.size();
  for (std::size_t i = r; i-- > 0;) {
    if (c[i] < n - r + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool next_coalition(AgentSet& c, std::size_t n) { return next_combination(c, n); }

}  // namespace

SearchResult search_manipulation(const Instance& instance, const SearchOptions& options) {
  const std::size_t n = instance.num_agents();
  const std::size_t k = options.coalition_size;
  if (k == 0 || k > n) {
    throw std::invalid_argument("coalition size must be between 1 and the number of agents (" +
                                std::to_string(n) + ")");
  }
  if (options.budget == 0) throw std::invalid_argument("budget must be positive");
  for (const auto& g : options.grid) {
    if (sgn(g) < 0) throw std::invalid_argument("grid multipliers must be nonnegative");
  }
  require_valid(instance);

  const Allocation truthful =
      run_mechanism(options.mechanism, instance, options.mmf_si_resolution);
  std::vector<Rational> truthful_u(n);
  for (AgentIndex a = 0; a < n; ++a) truthful_u[a] = utility(truthful, instance, a);

  std::vector<AgentSet> coalitions;
  std::vector<std::vector<Entry>> entries;
  AgentSet c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  mpz_class space = 0;
  do {
    coalitions.push_back(c);
    entries.push_back(misreport_entries(instance, c, options.grid));
    mpz_class product = 1;
    for (const auto& e : entries.back()) product *= static_cast<unsigned long>(e.alternatives.size() + 1);
    space += product - 1;
  } while (next_coalition(c, n));

  SearchResult result;
  result.coalitions = coalitions.size();
  result.space_size = space.get_str();
  const std::size_t width = k * instance.num_objects();

  for (std::size_t changed = 1; changed <= width; ++changed) {
    for (std::size_t ci = 0; ci < coalitions.size(); ++ci) {
      const AgentSet& coalition = coalitions[ci];
      const auto& coalition_entries = entries[ci];
      std::vector<std::size_t> picked(changed);
      for (std::size_t i = 0; i < changed; ++i) picked[i] = i;
      do {
        if (std::any_of(picked.begin(), picked.end(),
                        [&](std::size_t e) { return coalition_entries[e].alternatives.empty(); })) {
          continue;
        }
        std::vector<std::size_t> choice(changed, 0);
        while (true) {
          if (result.runs == options.budget) {
            result.max_changed_entries = changed - 1;
            return result;
          }
          Instance reported = instance;
          for (std::size_t i = 0; i < changed; ++i) {
            const Entry& e = coalition_entries[picked[i]];
            reported.set_demand(coalition[e.member], e.object, e.alternatives[choice[i]]);
          }
          ++result.runs;
          std::optional<Allocation> outcome;
          std::optional<BreakpointProfile> profile;
          try {
            if (options.mechanism == MechanismKind::kLeximin) {
              auto run = lexicographic_allocation(reported);
              outcome = std::move(run.allocation);
              profile = std::move(run.profile);
            } else {
              outcome = run_mechanism(options.mechanism, reported, options.mmf_si_resolution);
            }
          } catch (const InfeasibleOnGrid&) {
            ++result.skipped;
          }
          if (outcome) {
            ManipulationReport report;
            report.coalition = coalition;
            for (AgentIndex a : coalition) {
              std::vector<Rational> truth(instance.num_objects());
              std::vector<Rational> told(instance.num_objects());
              for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
                truth[b] = instance.demand(a, b);
                told[b] = reported.demand(a, b);
              }
              report.true_demands.push_back(std::move(truth));
              report.reported_demands.push_back(std::move(told));
              Rational after = utility(*outcome, instance, a);
              const Outcome o = after > truthful_u[a]   ? Outcome::kWinner
                                : after < truthful_u[a] ? Outcome::kLoser
                                                        : Outcome::kNeutral;
              report.members.push_back({a, truthful_u[a], std::move(after), o});
            }
            if (report.is_counterexample()) {
              if (profile && !structure_check(reported, *outcome, *profile).pass) {
                throw InternalError("manipulation search: misreport allocation fails the "
                                    "structure check; solver bug");
              }
              result.counterexample = std::move(report);
              result.max_changed_entries = changed - 1;
              return result;
            }
          }
          // Odometer over the alternatives of the picked entries.
          std::size_t pos = changed;
          while (pos-- > 0) {
            if (++choice[pos] < coalition_entries[picked[pos]].alternatives.size()) break;
            choice[pos] = 0;
          }
          if (pos == static_cast<std::size_t>(-1)) break;
        }
      } while (next_combination(picked, width));
    }
  }
  result.complete = true;
  result.max_changed_entries = width;
  return result;
}

std::string describe(const Instance& instance, const ManipulationReport& report) {
  std::ostringstream out;
  out << "coalition {";
  for (std::size_t i = 0; i < report.coalition.size(); ++i) {
    out << (i ? ", " : "") << instance.agent_id(report.coalition[i]);
  }
  out << "}\n";
  for (std::size_t i = 0; i < report.members.size(); ++i) {
    const auto& m = report.members[i];
    out << "  " << instance.agent_id(m.agent) << ": reports (";
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      out << (b ? ", " : "") << to_string(report.reported_demands[i][b]);
    }
    out << ") instead of (";
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      out << (b ? ", " : "") << to_string(report.true_demands[i][b]);
    }
    out << "); utility " << to_string(m.truthful_utility) << " -> "
        << to_string(m.misreport_utility) << ' '
        << (m.outcome == Outcome::kWinner  ? "(winner)"
            : m.outcome == Outcome::kLoser ? "(loser)"
                                           : "(neutral)")
        << '\n';
  }
  return out.str();
}

}  // namespace oafd
