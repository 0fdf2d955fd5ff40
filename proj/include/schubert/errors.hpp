#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Invalid input from a caller: bad type/rank, malformed word, mismatched
// parabolics, preconditions not met.  The CLI maps this to exit code 2.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured cap (coset enumeration, oracle
// sweeps).  The CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schubert
