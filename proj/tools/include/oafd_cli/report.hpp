#ifndef OAFD_CLI_REPORT_HPP
#define OAFD_CLI_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oafd/instance.hpp"
#include "oafd/leximin.hpp"

namespace oafd::cli {

struct AgentRow {
  std::string id;
  Rational endowment;
  Rational utility;
  Rational normalized;
  Rational breakpoint;
  std::size_t tier = 0;  // 1-based
  Rational si_share;

  friend bool operator==(const AgentRow&, const AgentRow&) = default;
};

struct PropertyFlag {
  std::string name;
  bool pass = false;

  friend bool operator==(const PropertyFlag&, const PropertyFlag&) = default;
};

// Everything `allocate` prints; the table view is a projection of this.
struct AllocationReport {
  std::vector<std::string> objects;
  std::vector<AgentRow> agents;
  std::vector<std::vector<Rational>> amounts;  // agents x objects
  std::vector<Rational> breakpoints;
  std::optional<Rational> si_ratio;  // nullopt: unconstrained
  Rational flow_value;
  std::vector<PropertyFlag> properties;

  friend bool operator==(const AllocationReport&, const AllocationReport&) = default;
};

AllocationReport make_allocation_report(const Instance& instance, const LexicographicResult& run);

std::string to_json(const AllocationReport& report);
AllocationReport parse_allocation_report(std::string_view text);
std::string to_table(const AllocationReport& report);

}  // namespace oafd::cli

#endif  // OAFD_CLI_REPORT_HPP
