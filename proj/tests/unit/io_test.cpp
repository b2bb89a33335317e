#include "oafd/io.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oafd/errors.hpp"
#include "oafd/families.hpp"

namespace oafd {
namespace {

using testing::Q;

std::string error_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

TEST(InstanceFileTest, ParsesSparseDemands) {
  const Instance instance = parse_instance(R"({
    "format": "oafd-instance", "version": 1,
    "agents": [{"id": "x", "endowment": "1/2"}, {"id": "y", "endowment": 2}],
    "objects": [{"id": "cpu", "supply": "7/3"}],
    "demands": [{"agent": "y", "object": "cpu", "demand": "5/4"}]})");
  ASSERT_EQ(instance.num_agents(), 2u);
  EXPECT_EQ(instance.endowment(0), Q(1, 2));
  EXPECT_EQ(instance.endowment(1), Q(2));
  EXPECT_EQ(instance.supply(0), Q(7, 3));
  EXPECT_EQ(instance.demand(0, 0), Q(0));
  EXPECT_EQ(instance.demand(1, 0), Q(5, 4));
}

TEST(InstanceFileTest, RoundTripIsExact) {
  RandomInstanceParams params;
  params.agents = 7;
  params.objects = 5;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance instance = random_instance(params, seed);
    const std::string text = serialize_instance(instance);
    EXPECT_EQ(parse_instance(text), instance);
    EXPECT_EQ(serialize_instance(parse_instance(text)), text);
  }
}

TEST(InstanceFileTest, ExplicitZeroDemandIsAccepted) {
  const Instance instance = parse_instance(R"({"format": "oafd-instance", "version": 1,
    "agents": [{"id": "a", "endowment": "1"}], "objects": [{"id": "b", "supply": "1"}],
    "demands": [{"agent": "a", "object": "b", "demand": "0"}]})");
  EXPECT_EQ(instance.demand(0, 0), Q(0));
}

TEST(InstanceFileTest, EmptyAgentList) {
  const Instance instance = parse_instance(R"({"format": "oafd-instance", "version": 1,
    "agents": [], "objects": [{"id": "b", "supply": "1"}], "demands": []})");
  EXPECT_EQ(instance.num_agents(), 0u);
  EXPECT_EQ(instance.num_objects(), 1u);
}

TEST(InstanceFileTest, ErrorsNameTheField) {
  const std::string zero = error_of(R"({"format": "oafd-instance", "version": 1,
    "agents": [{"id": "a", "endowment": "1/0"}], "objects": [], "demands": []})");
  EXPECT_NE(zero.find("agents[0].endowment"), std::string::npos) << zero;
  EXPECT_NE(zero.find("1/0"), std::string::npos) << zero;

  const std::string unknown = error_of(R"({"format": "oafd-instance", "version": 1,
    "agents": [{"id": "a", "endowment": "1"}], "objects": [{"id": "b", "supply": "1"}],
    "demands": [{"agent": "zz", "object": "b", "demand": "1"}]})");
  EXPECT_NE(unknown.find("demands[0].agent"), std::string::npos) << unknown;
  EXPECT_NE(unknown.find("zz"), std::string::npos) << unknown;

  const std::string dup = error_of(R"({"format": "oafd-instance", "version": 1,
    "agents": [{"id": "a", "endowment": "1"}], "objects": [{"id": "b", "supply": "1"}],
    "demands": [{"agent": "a", "object": "b", "demand": "1"},
                {"agent": "a", "object": "b", "demand": "2"}]})");
  EXPECT_NE(dup.find("demands[1]"), std::string::npos) << dup;

  const std::string floaty = error_of(R"({"format": "oafd-instance", "version": 1,
    "agents": [{"id": "a", "endowment": 0.5}], "objects": [], "demands": []})");
  EXPECT_NE(floaty.find("agents[0].endowment"), std::string::npos) << floaty;

  EXPECT_FALSE(error_of("{ not json").empty());
  EXPECT_FALSE(error_of(R"({"format": "other", "version": 1})").empty());
  EXPECT_FALSE(error_of(R"({"format": "oafd-instance", "version": 9,
    "agents": [], "objects": [], "demands": []})").empty());
}

TEST(InstanceFileTest, FileErrorsIncludePath) {
  try {
    read_instance_file("/nonexistent/x.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/x.json"), std::string::npos);
  }
}

}  // namespace
}  // namespace oafd
