#pragma once

#include <stdexcept>
#include <string>

namespace hilbspine {

// Bad arguments / violated preconditions. CLI maps this to exit code 2.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A resource guard tripped (minor-count cap, matrix-size cap, enumeration cap).
// CLI maps this to exit code 3. Never raised silently: the message names the
// guard and the offending size.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hilbspine
