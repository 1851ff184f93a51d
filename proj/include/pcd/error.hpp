#pragma once

#include <stdexcept>
#include <string>

namespace pcd {

enum class ErrorCode {
  InvalidArgument = 1,
  Degenerate = 2,
  OutsideDomain = 3,
  TooLarge = 4,
  Io = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pcd
