#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace covertmm {

/// A quadrature or solver could not meet its tolerance, or an internal
/// consistency bound was violated. Carries a diagnostic message.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or out-of-range configuration input. `field` names the key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace covertmm
