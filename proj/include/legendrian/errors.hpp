#pragma once

#include <stdexcept>
#include <string>

namespace legendrian {

// A search or completion hit its configured resource cap. Callers may retry
// with a larger bound; the CLI maps this to exit code 3.
class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace legendrian
