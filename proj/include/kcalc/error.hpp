#pragma once

#include <stdexcept>
#include <string>

namespace kcalc {

// Domain failure raised by a module operation. `code` is a stable
// machine-readable token (e.g. "root_on_circle"); what() is for humans.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace kcalc
