#pragma once

#include <stdexcept>
#include <string>

namespace mcbc {

// Invalid parameters or malformed inputs (bad indices, violated
// construction preconditions, inconsistent dimensions).
class ParamError : public std::invalid_argument {
 public:
  explicit ParamError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An enumeration or search would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& msg, unsigned long long count)
      : std::runtime_error(msg), count_(count) {}
  unsigned long long count() const { return count_; }

 private:
  unsigned long long count_;
};

}  // namespace mcbc
