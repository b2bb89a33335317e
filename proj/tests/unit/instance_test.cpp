#include "oafd/instance.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oafd/errors.hpp"
#include "oafd/families.hpp"

namespace oafd {
namespace {

using testing::make_instance;
using testing::Q;

TEST(CappedSupplyTest, MinOfSupplyAndTotalDemand) {
  const Instance two = si_limit_instance(2);
  const auto caps = capped_supply(two);
  EXPECT_EQ(caps[0], Q(2));
  EXPECT_EQ(caps[1], Q(1));

  const Instance three = mmf_si_manipulation_instance();
  EXPECT_EQ(capped_supply(three)[0], Q(3));
  EXPECT_EQ(capped_supply(three)[1], Q(6));
}

TEST(CappedSupplyTest, UndemandedObjectHasZero) {
  const Instance instance = make_instance({Q(1)}, {Q(4), Q(2)}, {{Q(1), Q(0)}});
  EXPECT_EQ(capped_supply(instance)[1], Q(0));
}

TEST(CapacityTest, Examples) {
  const Instance instance = mmf_si_manipulation_instance();
  EXPECT_EQ(capacity(instance, AgentSet{}), Q(0));
  EXPECT_EQ(capacity(instance, AgentSet{1}), Q(3));
  EXPECT_EQ(capacity(instance, AgentSet{0}), Q(4));
  EXPECT_EQ(capacity(instance, instance.all_agents()), Q(9));
}

TEST(CapacityTest, FullSetEqualsTotalCappedSupplyAndIsMonotone) {
  const Instance instance =
      make_instance({Q(1), Q(2), Q(1, 2)}, {Q(3), Q(1, 2), Q(5)},
                    {{Q(1), Q(2), Q(0)}, {Q(4), Q(0), Q(1, 3)}, {Q(0), Q(1), Q(7)}});
  Rational total;
  for (const auto& c : capped_supply(instance)) total += c;
  EXPECT_EQ(capacity(instance, instance.all_agents()), total);
  for (unsigned small = 0; small < 8; ++small) {
    for (unsigned big = 0; big < 8; ++big) {
      if ((small & big) != small) continue;
      AgentSet s, l;
      for (AgentIndex a = 0; a < 3; ++a) {
        if (small >> a & 1) s.push_back(a);
        if (big >> a & 1) l.push_back(a);
      }
      EXPECT_LE(capacity(instance, s), capacity(instance, l));
    }
  }
}

TEST(UtilityTest, CapsAtDemand) {
  const Instance instance = si_limit_instance(2);
  Allocation zero(instance);
  EXPECT_EQ(utility(zero, instance, 0), Q(0));

  Allocation lavish(instance);
  lavish(0, 0) = Q(5);
  lavish(0, 1) = Q(5);
  EXPECT_EQ(utility(lavish, instance, 0), Q(2));

  Allocation mu(instance);
  mu(0, 0) = Q(1, 2);
  mu(0, 1) = Q(1);
  mu(1, 0) = Q(3, 2);
  EXPECT_EQ(utility(mu, instance, 0), Q(3, 2));
  EXPECT_EQ(utility(mu, instance, 1), Q(3, 2));
}

TEST(UtilityVectorTest, SortedNormalizedView) {
  const Instance single = make_instance({Q(1)}, {Q(3)}, {{Q(3)}});
  Allocation all(single);
  all(0, 0) = Q(3);
  EXPECT_EQ(utility_vector(single, all).sorted, std::vector<Rational>{Q(3)});

  const Instance pair = make_instance({Q(1), Q(2)}, {Q(4)}, {{Q(4)}, {Q(4)}});
  Allocation mu(pair);
  mu(0, 0) = Q(2);
  mu(1, 0) = Q(2);
  const UtilityVector v = utility_vector(pair, mu);
  EXPECT_EQ(v.sorted, (std::vector<Rational>{Q(1), Q(2)}));
  ASSERT_EQ(v.entries.size(), 2u);
  EXPECT_EQ(v.entries[1].utility, Q(2));
  EXPECT_EQ(v.entries[1].normalized, Q(1));
}

TEST(SubInstanceTest, EmptyRemovalIsIdentity) {
  const Instance instance = mmf_si_manipulation_instance();
  Allocation mu(instance);
  mu(0, 0) = Q(3);
  EXPECT_EQ(sub_instance(instance, mu, AgentSet{}), instance);
}

TEST(SubInstanceTest, ResidualSupply) {
  const Instance instance = testing::two_tier_instance();
  Allocation mu(instance);
  mu(0, 0) = Q(1);
  mu(1, 0) = Q(2);
  const Instance rest = sub_instance(instance, mu, AgentSet{0});
  ASSERT_EQ(rest.num_agents(), 1u);
  EXPECT_EQ(rest.agent_id(0), "a2");
  EXPECT_EQ(rest.supply(0), Q(2));
  EXPECT_EQ(rest.demand(0, 0), Q(5));

  const Allocation restricted = restrict_allocation(mu, AgentSet{0});
  ASSERT_EQ(restricted.num_agents(), 1u);
  EXPECT_EQ(restricted(0, 0), Q(2));

  const Instance none = sub_instance(instance, mu, AgentSet{0, 1});
  EXPECT_EQ(none.num_agents(), 0u);
  EXPECT_EQ(none.supply(0), Q(0));
}

TEST(SubInstanceTest, RejectsOverallocation) {
  const Instance instance = testing::two_tier_instance();
  Allocation mu(instance);
  mu(0, 0) = Q(4);
  EXPECT_THROW(sub_instance(instance, mu, AgentSet{0}), InputError);
}

TEST(ValidateTest, ReportsEveryViolation) {
  EXPECT_TRUE(validate_instance(mmf_si_manipulation_instance()).empty());

  Instance bad = make_instance({Q(0), Q(1)}, {Q(-1)}, {{Q(1)}, {Q(-2)}});
  bad.add_object("b1", Q(1));
  const auto issues = validate_instance(bad);
  auto has = [&](const std::string& needle) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const std::string& s) { return s.find(needle) != std::string::npos; });
  };
  EXPECT_TRUE(has("endowment must be strictly positive"));
  EXPECT_TRUE(has("supply"));
  EXPECT_TRUE(has("demand"));
  EXPECT_TRUE(has("duplicate object id"));
  EXPECT_THROW(require_valid(bad), InputError);
}

TEST(FeasibilityTest, SupplyBound) {
  const Instance instance = testing::two_tier_instance();
  Allocation mu(instance);
  mu(0, 0) = Q(2);
  mu(1, 0) = Q(1);
  EXPECT_TRUE(is_feasible(instance, mu));
  mu(1, 0) = Q(3, 2);
  EXPECT_FALSE(is_feasible(instance, mu));
}

TEST(FamilyTest, ShapesMatchTheirDefinitions) {
  const Instance five = si_limit_instance(5);
  EXPECT_EQ(five.num_agents(), 5u);
  EXPECT_EQ(five.supply(0), Q(5));
  EXPECT_EQ(five.demand(0, 1), Q(1));
  EXPECT_EQ(five.demand(3, 0), Q(2));
  EXPECT_EQ(five.demand(3, 1), Q(0));

  const Instance rounds = rounds_instance(3);
  EXPECT_EQ(rounds.num_objects(), 3u);
  EXPECT_EQ(rounds.demand(0, 0), Q(3));
  EXPECT_EQ(rounds.demand(0, 2), Q(0));
  EXPECT_EQ(rounds.demand(2, 1), Q(2));

  EXPECT_THROW(si_limit_instance(1), std::invalid_argument);
  EXPECT_THROW(rounds_instance(1), std::invalid_argument);
}

TEST(FamilyTest, RandomInstancesAreDeterministicAndValid) {
  RandomInstanceParams params;
  params.agents = 6;
  params.objects = 5;
  EXPECT_EQ(random_instance(params, 42), random_instance(params, 42));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance instance = random_instance(params, seed);
    EXPECT_TRUE(validate_instance(instance).empty());
    for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
      for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
        EXPECT_LE(instance.demand(a, b).get_den(), 8);
      }
    }
  }
}

}  // namespace
}  // namespace oafd
