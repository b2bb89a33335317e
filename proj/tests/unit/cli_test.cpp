#include "oafd_cli/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "oafd/families.hpp"
#include "oafd/io.hpp"
#include "oafd/leximin.hpp"
#include "oafd_cli/report.hpp"

namespace oafd::cli {
namespace {

using testing::Q;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("oafd_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const Instance& instance) {
    const auto path = dir_ / name;
    write_instance_file(path, instance);
    return path.string();
  }
  std::string write_text(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.insert(args.begin(), "oafd");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  std::filesystem::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, AllocatePrintsExactFractions) {
  const std::string path = write("two.json", si_limit_instance(2));
  ASSERT_EQ(run({"allocate", path}), kExitOk);
  EXPECT_NE(out_.str().find("3/2"), std::string::npos);

  ASSERT_EQ(run({"allocate", path, "--output", "json"}), kExitOk);
  const AllocationReport report = parse_allocation_report(out_.str());
  ASSERT_EQ(report.agents.size(), 2u);
  EXPECT_EQ(report.agents[0].utility, Q(3, 2));
  EXPECT_EQ(report.agents[1].utility, Q(3, 2));
  EXPECT_EQ(report.breakpoints, std::vector<Rational>{Q(3, 2)});
  EXPECT_EQ(report.si_ratio, std::optional<Rational>(Q(3, 4)));
}

TEST_F(CliTest, AllocateEmptyAgents) {
  const std::string path = write_text("empty.json", R"({"format": "oafd-instance", "version": 1,
    "agents": [], "objects": [{"id": "b", "supply": "1"}], "demands": []})");
  EXPECT_EQ(run({"allocate", path}), kExitOk);
  EXPECT_EQ(run({"allocate", path, "--output", "json"}), kExitOk);
}

TEST_F(CliTest, MalformedFractionIsInputError) {
  const std::string path = write_text("bad.json", R"({"format": "oafd-instance", "version": 1,
    "agents": [{"id": "a", "endowment": "1"}], "objects": [{"id": "b", "supply": "1/0"}],
    "demands": []})");
  EXPECT_EQ(run({"allocate", path}), kExitInput);
  EXPECT_NE(err_.str().find("objects[0].supply"), std::string::npos) << err_.str();
}

TEST_F(CliTest, InvalidInstanceIsInputError) {
  const std::string path = write_text("neg.json", R"({"format": "oafd-instance", "version": 1,
    "agents": [{"id": "a", "endowment": "0"}], "objects": [], "demands": []})");
  EXPECT_EQ(run({"allocate", path}), kExitInput);
  EXPECT_NE(err_.str().find("endowment must be strictly positive"), std::string::npos);
}

TEST_F(CliTest, ReportRoundTripIsExact) {
  RandomInstanceParams params;
  params.agents = 6;
  params.objects = 4;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance instance = random_instance(params, seed);
    const AllocationReport report =
        make_allocation_report(instance, lexicographic_allocation(instance));
    EXPECT_EQ(parse_allocation_report(to_json(report)), report);
    for (std::size_t a = 0; a < report.agents.size(); ++a) {
      EXPECT_EQ(report.agents[a].utility, report.agents[a].endowment * report.agents[a].breakpoint);
    }
  }
}

TEST_F(CliTest, AuditPassesAndSkipsLorenzOnZeroSamples) {
  const std::string path = write("three.json", mmf_si_manipulation_instance());
  EXPECT_EQ(run({"audit", path}), kExitOk);
  EXPECT_EQ(run({"audit", path, "--samples", "0", "--properties", "lorenz,frugal"}), kExitOk);
  EXPECT_NE(out_.str().find("skipped"), std::string::npos);
  EXPECT_EQ(run({"audit", path, "--properties", "bogus"}), kExitInput);
}

TEST_F(CliTest, AuditFlagsInjectedBug) {
  const std::string path = write("two.json", testing::two_tier_instance());
  AuditOptions options;
  options.path = path;
  options.properties = {"structure", "ef"};
  options.tamper = [](const Instance&, Allocation& mu) {
    mu(0, 0) -= Q(1, 2);
    mu(1, 0) += Q(1, 2);
  };
  EXPECT_EQ(cmd_audit(options, out_, err_), kExitFailure);
  EXPECT_NE(out_.str().find("structure: FAIL"), std::string::npos) << out_.str();

  options.properties = {"frugal"};
  options.tamper = [](const Instance&, Allocation& mu) { mu(0, 0) += Q(1); };
  EXPECT_EQ(cmd_audit(options, out_, err_), kExitFailure);
}

TEST_F(CliTest, ManipulateBothMechanisms) {
  const std::string path = write("three.json", mmf_si_manipulation_instance());
  EXPECT_EQ(run({"manipulate", path, "--coalition", "1"}), kExitOk);
  EXPECT_NE(out_.str().find("evidence, not proof"), std::string::npos);
  EXPECT_NE(out_.str().find("seed"), std::string::npos);

  EXPECT_EQ(run({"manipulate", path, "--mechanism", "mmf-si"}), kExitFailure);
  EXPECT_NE(out_.str().find("3 -> 4"), std::string::npos) << out_.str();

  EXPECT_EQ(run({"manipulate", path, "--mechanism", "mmf-si", "--output", "json"}), kExitFailure);
  const auto json = nlohmann::json::parse(out_.str());
  EXPECT_EQ(json["counterexample"][0]["agent"], "a1");
  EXPECT_EQ(json["counterexample"][0]["misreport_utility"], "4");
}

TEST_F(CliTest, ManipulateArgumentErrors) {
  const std::string path = write("three.json", mmf_si_manipulation_instance());
  EXPECT_EQ(run({"manipulate", path, "--coalition", "4"}), kExitInput);
  EXPECT_EQ(run({"manipulate", path, "--budget", "0"}), kExitInput);
  EXPECT_EQ(run({"manipulate", path, "--grid", "1,x"}), kExitInput);
}

TEST_F(CliTest, GenerateFamilies) {
  const std::string out = (dir_ / "rounds.json").string();
  ASSERT_EQ(run({"generate", "rounds", "--n", "3", "-o", out}), kExitOk);
  const Instance rounds = read_instance_file(out);
  const auto run_result = lexicographic_allocation(rounds);
  for (AgentIndex a = 0; a < 3; ++a) EXPECT_EQ(utility(run_result.allocation, rounds, a), Q(3));

  ASSERT_EQ(run({"generate", "si-limit", "--n", "2"}), kExitOk);
  EXPECT_EQ(parse_instance(out_.str()), si_limit_instance(2));

  ASSERT_EQ(run({"generate", "random", "--seed", "5", "--agents", "6"}), kExitOk);
  const std::string first = out_.str();
  ASSERT_EQ(run({"generate", "random", "--seed", "5", "--agents", "6"}), kExitOk);
  EXPECT_EQ(out_.str(), first);

  EXPECT_EQ(run({"generate", "si-limit", "--n", "1"}), kExitInput);
  EXPECT_EQ(run({"generate", "nope"}), kExitInput);
}

TEST_F(CliTest, SeedComesFromEnvironment) {
  ::setenv("OAFD_SEED", "5", 1);
  ASSERT_EQ(run({"generate", "random", "--agents", "6"}), kExitOk);
  const std::string from_env = out_.str();
  ::unsetenv("OAFD_SEED");
  ASSERT_EQ(run({"generate", "random", "--agents", "6", "--seed", "5"}), kExitOk);
  EXPECT_EQ(out_.str(), from_env);
}

TEST_F(CliTest, Reproduce) {
  EXPECT_EQ(run({"reproduce", "si-limit", "--n", "10"}), kExitOk);
  EXPECT_NE(out_.str().find("11/20"), std::string::npos);
  EXPECT_EQ(run({"reproduce", "mmf-si-manipulation"}), kExitOk);
  EXPECT_NE(out_.str().find("MMF-SI is not SP"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), kExitInput);
  EXPECT_EQ(run({"allocate"}), kExitInput);
  EXPECT_EQ(run({"allocate", (dir_ / "missing.json").string()}), kExitInput);
  EXPECT_EQ(run({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("Exit codes"), std::string::npos);
}

TEST(ParseGridTest, Values) {
  EXPECT_EQ(parse_grid("0, 1/2,1,2"), (std::vector<Rational>{Q(0), Q(1, 2), Q(1), Q(2)}));
  EXPECT_THROW(parse_grid("-1"), InputError);
  EXPECT_THROW(parse_grid(""), InputError);
}

}  // namespace
}  // namespace oafd::cli
