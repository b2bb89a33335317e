#include "oafd/report.hpp"

#include <sstream>

namespace oafd {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "==";
  }
  return "?";
}

bool relation_holds(Relation r, const Rational& lhs, const Rational& rhs) {
  switch (r) {
    case Relation::kGreaterEqual:
      return lhs >= rhs;
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kEqual:
      return lhs == rhs;
  }
  return false;
}

PropertyReport PropertyReport::passed(std::string property, std::string note) {
  PropertyReport r;
  r.property = std::move(property);
  r.note = std::move(note);
  return r;
}

PropertyReport PropertyReport::failed(std::string property, Witness witness) {
  PropertyReport r;
  r.property = std::move(property);
  r.pass = false;
  r.witness = std::move(witness);
  return r;
}

std::string describe(const PropertyReport& report) {
  std::ostringstream out;
  out << report.property << ": " << (report.pass ? "pass" : "FAIL");
  if (report.witness) {
    const auto& w = *report.witness;
    out << " (" << w.detail << "; required " << to_string(w.lhs) << ' '
        << relation_symbol(w.relation) << ' ' << to_string(w.rhs) << ')';
  }
  if (!report.note.empty()) out << " [" << report.note << ']';
  return out.str();
}

}  // namespace oafd
