#pragma once

#include <stdexcept>
#include <string>

namespace fograph {

// Invalid parameters, domain violations, and unmet preconditions map to
// std::invalid_argument; ResourceError is reserved for refusals where the
// request is meaningful but exceeds the configured desk-scale envelope.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fograph
