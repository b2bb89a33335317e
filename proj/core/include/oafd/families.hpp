#ifndef OAFD_FAMILIES_HPP
#define OAFD_FAMILIES_HPP

#include <cstddef>
#include <cstdint>

#include "oafd/instance.hpp"

namespace oafd {

// n agents, objects b1 and b2 with supply n each. a1 demands one unit of
// each; every other agent demands 2 of b1 and nothing of b2. Requires n >= 2.
Instance si_limit_instance(std::size_t n);

// Three agents, two objects with supply 6; a1 demands (3, 1), a2 and a3
// demand (0, 3).
Instance mmf_si_manipulation_instance();

// n agents pooling one unit per round over n rounds: n objects of supply n;
// a1 demands n of the first round only, everyone else 2 of every round.
// Requires n >= 2.
Instance rounds_instance(std::size_t n);

struct RandomInstanceParams {
  std::size_t agents = 4;
  std::size_t objects = 3;
  double density = 0.6;        // probability that a demand entry is nonzero
  long max_denominator = 8;
  long max_value = 4;          // demands and endowments lie in (0, max_value]
  bool equal_endowments = false;  // every endowment 1
};

// Seeded, deterministic for a fixed standard library.
Instance random_instance(const RandomInstanceParams& params, std::uint64_t seed);

}  // namespace oafd

#endif  // OAFD_FAMILIES_HPP
