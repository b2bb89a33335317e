#ifndef OAFD_HARNESS_HPP
#define OAFD_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oafd/instance.hpp"
#include "oafd/report.hpp"

namespace oafd {

enum class MechanismKind { kLeximin, kMmfSi };

// Runs the chosen mechanism and returns its allocation.
Allocation run_mechanism(MechanismKind kind, const Instance& instance,
                         const Rational& mmf_si_resolution = make_rational(1, 4));

enum class PerturbationKind { kSupplyIncrease, kEndowmentDecrease, kAgentRemoval };

struct PerturbationSpec {
  PerturbationKind kind = PerturbationKind::kSupplyIncrease;
  // Supply increments, or endowment factors in (0, 1] for decreases.
  std::vector<Rational> grid;
  std::uint64_t seed = 1;
};

std::vector<Rational> default_supply_increments();
std::vector<Rational> default_endowment_factors();

// Every agent's utility under `after` is at least its utility under
// `before`; `after` must have the same agents and demands.
PropertyReport compare_rm(const Instance& before, const Instance& after);

// Every agent of `after` whose endowment is unchanged is no worse off;
// `after` agents are matched to `before` agents by id.
PropertyReport compare_pm(const Instance& before, const Instance& after);

// Random supply increases drawn from spec.grid.
PropertyReport check_rm(const Instance& instance, const PerturbationSpec& spec, std::size_t trials);

// Random members of shrink(I): endowment decreases or agent removals.
PropertyReport check_pm(const Instance& instance, const PerturbationSpec& spec, std::size_t trials);

// The mechanism's allocation restricted to the agents outside a random
// subset has the oracle's leximin utilities on the residual instance.
PropertyReport check_substructure(const Instance& instance, std::size_t trials, std::uint64_t seed);

// Same check for one explicit removed set.
PropertyReport check_substructure_for(const Instance& instance, const AgentSet& removed);

enum class Outcome { kWinner, kLoser, kNeutral };

struct MemberOutcome {
  AgentIndex agent;
  Rational truthful_utility;
  Rational misreport_utility;  // evaluated with true demands
  Outcome outcome;
};

struct ManipulationReport {
  AgentSet coalition;
  // Per coalition member: true and reported demand rows.
  std::vector<std::vector<Rational>> true_demands;
  std::vector<std::vector<Rational>> reported_demands;
  std::vector<MemberOutcome> members;

  bool is_counterexample() const;
};

struct SearchOptions {
  std::size_t coalition_size = 1;
  std::vector<Rational> grid = {Rational(0), make_rational(1, 2), Rational(1), Rational(2)};
  std::size_t budget = 100000;  // mechanism runs on misreported instances
  MechanismKind mechanism = MechanismKind::kLeximin;
  Rational mmf_si_resolution = make_rational(1, 4);
};

struct SearchResult {
  std::optional<ManipulationReport> counterexample;
  std::size_t coalitions = 0;
  std::size_t runs = 0;        // misreports evaluated
  std::size_t skipped = 0;     // misreports the mechanism could not evaluate
  std::string space_size;      // total misreports in the search space (exact)
  bool complete = false;       // the whole space was evaluated
  std::size_t max_changed_entries = 0;  // largest misreport distance fully covered
};

// Enumerates coalitions of the given size (lexicographic order) and
// misreports built from each demand d(a, b): m * d(a, b) for every grid
// multiplier plus 0 and s(b). Misreports are visited in order of the number
// of altered entries, so a truncated search covers all small deviations
// first. Stops at the first coalition with a winner and no loser. Throws
// std::invalid_argument for a coalition larger than the agent set, a
// negative multiplier or a zero budget.
SearchResult search_manipulation(const Instance& instance, const SearchOptions& options);

std::string describe(const Instance& instance, const ManipulationReport& report);

}  // namespace oafd

#endif  // OAFD_HARNESS_HPP
