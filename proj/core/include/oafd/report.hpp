#ifndef OAFD_REPORT_HPP
#define OAFD_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "oafd/instance.hpp"

namespace oafd {

enum class Relation { kGreaterEqual, kLessEqual, kEqual };

const char* relation_symbol(Relation r);
bool relation_holds(Relation r, const Rational& lhs, const Rational& rhs);

// Evidence of a failed check: the inequality `lhs relation rhs` that was
// required and does not hold.
struct Witness {
  std::string detail;
  std::vector<AgentIndex> agents;
  std::vector<ObjectIndex> objects;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::kGreaterEqual;
};

struct PropertyReport {
  std::string property;
  bool pass = true;
  std::optional<Witness> witness;  // present iff !pass
  std::string note;

  static PropertyReport passed(std::string property, std::string note = {});
  static PropertyReport failed(std::string property, Witness witness);
};

std::string describe(const PropertyReport& report);

}  // namespace oafd

#endif  // OAFD_REPORT_HPP
