#ifndef OAFD_IO_HPP
#define OAFD_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "oafd/errors.hpp"
#include "oafd/instance.hpp"

namespace oafd {

inline constexpr int kInstanceFormatVersion = 1;

// Instance file (JSON):
//   {"format": "oafd-instance", "version": 1,
//    "agents":  [{"id": "a1", "endowment": "1"}, ...],
//    "objects": [{"id": "b1", "supply": "3/2"}, ...],
//    "demands": [{"agent": "a1", "object": "b1", "demand": "2"}, ...]}
// Numbers are JSON integers or strings "n" / "p/q"; demands are sparse and
// default to 0. Errors name the offending field.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::filesystem::path& path);

// Canonical form: every number as a string, zero demands omitted, input
// order preserved. parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& instance);
void write_instance_file(const std::filesystem::path& path, const Instance& instance);

}  // namespace oafd

#endif  // OAFD_IO_HPP
