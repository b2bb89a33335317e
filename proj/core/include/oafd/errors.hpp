#ifndef OAFD_ERRORS_HPP
#define OAFD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oafd {

// Malformed or invalid user input (instance files, arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver invariant failed. Never a valid outcome; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace oafd

#endif  // OAFD_ERRORS_HPP
