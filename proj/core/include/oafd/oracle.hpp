#ifndef OAFD_ORACLE_HPP
#define OAFD_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "oafd/instance.hpp"
#include "oafd/leximin.hpp"

namespace oafd {

// Brute-force references. None of these share code with the flow-based
// solver beyond the core instance model.

// Breakpoints by enumerating every nonempty subset of the remaining agents
// in each tier. Throws InputError above `max_agents` agents.
BreakpointProfile oracle_breakpoints(const Instance& instance, std::size_t max_agents = 12);

// A feasible frugal allocation: pairs are visited in seeded random order and
// each receives a random fraction (or `fixed_fraction`) of
// min(remaining supply, demand).
Allocation random_frugal_allocation(const Instance& instance, std::uint64_t seed,
                                    std::optional<Rational> fixed_fraction = std::nullopt);

class InfeasibleOnGrid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MmfSiResult {
  Allocation allocation;
  Rational min_normalized;
  std::size_t grid_points = 0;      // leaves enumerated
  std::size_t feasible_points = 0;  // leaves meeting every SI constraint
};

// Max-min fair allocation among SI allocations, by exhaustive search over
// frugal allocations whose entries are multiples of `resolution` (plus the
// cap min(d, s) itself). Limited to 3 agents and 2 objects. Throws
// InfeasibleOnGrid when no grid point satisfies SI.
MmfSiResult oracle_mmf_si(const Instance& instance, const Rational& resolution);

struct SiLimitReport {
  std::size_t n = 0;
  Rational si_ratio;
  Rational expected;  // (1 + 1/n) / 2
  bool matches = false;
};

// Runs the leximin mechanism on the n-agent family and reports its SI ratio.
SiLimitReport reproduce_si_limit(std::size_t n);

struct MmfSiManipulationReport {
  Rational mmf_si_truthful;        // a1's utility, truthful report
  Rational mmf_si_misreport;       // a1's true utility after reporting d(a1, b2) = 2
  Rational leximin_truthful;
  Rational leximin_misreport;
  bool mmf_si_manipulable = false;
  bool leximin_manipulable = false;
};

MmfSiManipulationReport reproduce_mmf_si_manipulation(const Rational& resolution = make_rational(1, 4));

// Human-readable summary of either report.
std::string describe(const SiLimitReport& report);
std::string describe(const MmfSiManipulationReport& report);

}  // namespace oafd

#endif  // OAFD_ORACLE_HPP
