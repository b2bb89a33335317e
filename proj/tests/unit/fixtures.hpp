#ifndef OAFD_TESTS_FIXTURES_HPP
#define OAFD_TESTS_FIXTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "oafd/instance.hpp"
#include "oafd/maxflow.hpp"
#include "oafd/rational.hpp"

namespace oafd::testing {

inline Rational Q(std::string_view text) { return parse_rational(text); }
inline Rational Q(int p, int q = 1) { return make_rational(p, q); }

// Builds an instance from rows of demands; ids are a1.., b1...
inline Instance make_instance(const std::vector<Rational>& endowments,
                              const std::vector<Rational>& supplies,
                              const std::vector<std::vector<Rational>>& demands) {
  Instance instance;
  for (std::size_t a = 0; a < endowments.size(); ++a) {
    instance.add_agent("a" + std::to_string(a + 1), endowments[a]);
  }
  for (std::size_t b = 0; b < supplies.size(); ++b) {
    instance.add_object("b" + std::to_string(b + 1), supplies[b]);
  }
  for (std::size_t a = 0; a < demands.size(); ++a) {
    for (std::size_t b = 0; b < demands[a].size(); ++b) instance.set_demand(a, b, demands[a][b]);
  }
  return instance;
}

// Two unit-endowment agents sharing one object of supply 3; demands 1 and 5.
inline Instance two_tier_instance() {
  return make_instance({Q(1), Q(1)}, {Q(3)}, {{Q(1)}, {Q(5)}});
}

// Enumerates every s-t cut. Returns the minimum capacity and the union of
// the source sides of all minimum cuts.
struct CutEnumeration {
  Rational min_capacity;
  std::vector<bool> union_of_min_sides;
  std::size_t min_cuts = 0;
};

inline CutEnumeration enumerate_cuts(const FlowNetwork& network) {
  const std::size_t n = network.num_vertices();
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != network.source() && v != network.sink()) free.push_back(v);
  }
  CutEnumeration result;
  bool first = true;
  std::vector<bool> side(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
    std::fill(side.begin(), side.end(), false);
    side[network.source()] = true;
    for (std::size_t i = 0; i < free.size(); ++i) side[free[i]] = (mask >> i) & 1;
    Rational cap;
    for (const auto& e : network.edges()) {
      if (side[e.tail] && !side[e.head]) cap += e.capacity;
    }
    if (first || cap < result.min_capacity) {
      first = false;
      result.min_capacity = cap;
      result.union_of_min_sides = side;
      result.min_cuts = 1;
    } else if (cap == result.min_capacity) {
      ++result.min_cuts;
      for (std::size_t v = 0; v < n; ++v) {
        result.union_of_min_sides[v] = result.union_of_min_sides[v] || side[v];
      }
    }
  }
  return result;
}

}  // namespace oafd::testing

#endif  // OAFD_TESTS_FIXTURES_HPP
