#pragma once

#include <stdexcept>
#include <string>

namespace homcx {

/// Thrown when an input violates a documented precondition: malformed file,
/// bad parameter, graph outside the supported class, and so on.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a configured cap (hom count, cell count, simplex count,
/// cover-ball size, ...) would be exceeded. The message names the cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homcx
