#include "oafd/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace oafd {

namespace {

std::string agent_name(std::size_t i) { return "a" + std::to_string(i + 1); }
std::string object_name(std::size_t j) { return "b" + std::to_string(j + 1); }

}  // namespace

Instance si_limit_instance(std::size_t n) {
  if (n < 2) throw std::invalid_argument("si-limit family requires n >= 2");
  Instance inst;
  const Rational supply(static_cast<long>(n));
  inst.add_object("b1", supply);
  inst.add_object("b2", supply);
  for (std::size_t i = 0; i < n; ++i) inst.add_agent(agent_name(i), Rational(1));
  inst.set_demand(0, 0, Rational(1));
  inst.set_demand(0, 1, Rational(1));
  for (std::size_t i = 1; i < n; ++i) inst.set_demand(i, 0, Rational(2));
  return inst;
}

Instance mmf_si_manipulation_instance() {
  Instance inst;
  inst.add_object("b1", Rational(6));
  inst.add_object("b2", Rational(6));
  for (std::size_t i = 0; i < 3; ++i) inst.add_agent(agent_name(i), Rational(1));
  inst.set_demand(0, 0, Rational(3));
  inst.set_demand(0, 1, Rational(1));
  inst.set_demand(1, 1, Rational(3));
  inst.set_demand(2, 1, Rational(3));
  return inst;
}

Instance rounds_instance(std::size_t n) {
  if (n < 2) throw std::invalid_argument("rounds family requires n >= 2");
  Instance inst;
  const Rational size(static_cast<long>(n));
  for (std::size_t j = 0; j < n; ++j) inst.add_object(object_name(j), size);
  for (std::size_t i = 0; i < n; ++i) inst.add_agent(agent_name(i), Rational(1));
  inst.set_demand(0, 0, size);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inst.set_demand(i, j, Rational(2));
  }
  return inst;
}

Instance random_instance(const RandomInstanceParams& params, std::uint64_t seed) {
  if (params.max_denominator < 1 || params.max_value < 1) {
    throw std::invalid_argument("random family requires max_denominator >= 1 and max_value >= 1");
  }
  if (params.density < 0.0 || params.density > 1.0) {
    throw std::invalid_argument("random family requires density in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> denominator(1, params.max_denominator);
  // Uniform p/q with q in [1, max_denominator] and p/q in [0 or 1/q, hi].
  auto draw = [&](bool positive, long hi) {
    const long q = denominator(rng);
    std::uniform_int_distribution<long> numerator(positive ? 1 : 0, hi * q);
    return make_rational(numerator(rng), q);
  };
  std::bernoulli_distribution present(params.density);

  Instance inst;
  const long expected_demanders =
      std::max(1L, std::lround(params.density * static_cast<double>(params.agents)));
  for (std::size_t j = 0; j < params.objects; ++j) {
    inst.add_object(object_name(j), draw(false, expected_demanders * params.max_value));
  }
  for (std::size_t i = 0; i < params.agents; ++i) {
    inst.add_agent(agent_name(i), params.equal_endowments ? Rational(1) : draw(true, params.max_value));
  }
  for (std::size_t i = 0; i < params.agents; ++i) {
    for (std::size_t j = 0; j < params.objects; ++j) {
      if (present(rng)) inst.set_demand(i, j, draw(true, params.max_value));
    }
  }
  return inst;
}

}  // namespace oafd
