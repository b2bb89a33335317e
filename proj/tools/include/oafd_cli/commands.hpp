#ifndef OAFD_CLI_COMMANDS_HPP
#define OAFD_CLI_COMMANDS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "oafd/families.hpp"
#include "oafd/harness.hpp"
#include "oafd/instance.hpp"

namespace oafd::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // property failed or counterexample found
inline constexpr int kExitInput = 2;     // bad file or arguments
inline constexpr int kExitInternal = 3;  // solver assertion

enum class OutputFormat { kTable, kJson };

struct AllocateOptions {
  std::string path;
  OutputFormat format = OutputFormat::kTable;
};

struct AuditOptions {
  std::string path;
  std::vector<std::string> properties;  // empty: all
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t substructure_trials = 5;
  OutputFormat format = OutputFormat::kTable;
  // Test hook applied to the mechanism's allocation before auditing.
  std::function<void(const Instance&, Allocation&)> tamper;
};

struct ManipulateOptions {
  std::string path;
  SearchOptions search;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::kTable;
};

struct GenerateOptions {
  std::string family;  // si-limit | mmf-si-manipulation | rounds | random
  std::size_t n = 2;
  RandomInstanceParams random;
  std::uint64_t seed = 1;
  std::string out_path;  // empty: stdout
};

struct ReproduceOptions {
  std::string family;  // si-limit | mmf-si-manipulation
  std::size_t n = 2;
};

const std::vector<std::string>& audit_property_names();

int cmd_allocate(const AllocateOptions& options, std::ostream& out, std::ostream& err);
int cmd_audit(const AuditOptions& options, std::ostream& out, std::ostream& err);
int cmd_manipulate(const ManipulateOptions& options, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_reproduce(const ReproduceOptions& options, std::ostream& out, std::ostream& err);

Instance generate_instance(const GenerateOptions& options);

// Parses "0,1/2,1,2".
std::vector<Rational> parse_grid(const std::string& text);

// Seed used when --seed is absent: $OAFD_SEED, else 1.
std::uint64_t default_seed();

// Full command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oafd::cli

#endif  // OAFD_CLI_COMMANDS_HPP
