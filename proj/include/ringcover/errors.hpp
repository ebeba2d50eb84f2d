#ifndef RINGCOVER_ERRORS_HPP
#define RINGCOVER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringcover {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's JSON error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class MixedCharacteristic : public Error {
 public:
  explicit MixedCharacteristic(const std::string& what) : Error("MixedCharacteristic", what) {}
};

/// Raised for rings that admit no cover at all (finite fields).
class NotCoverable : public Error {
 public:
  explicit NotCoverable(const std::string& what) : Error("NotCoverable", what) {}
};

class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error("Unsupported", what) {}
};

class UnsupportedParameters : public Error {
 public:
  explicit UnsupportedParameters(const std::string& what)
      : Error("UnsupportedParameters", what) {}
};

class DimensionCap : public Error {
 public:
  explicit DimensionCap(const std::string& what) : Error("DimensionCap", what) {}
};

/// Raised when an exhaustive search would exceed its configured budget.
class ComplexityCap : public Error {
 public:
  ComplexityCap(const std::string& what, double estimate)
      : Error("ComplexityCap", what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

class MalformedBasis : public Error {
 public:
  explicit MalformedBasis(const std::string& what) : Error("MalformedBasis", what) {}
};

class MemoryCap : public Error {
 public:
  explicit MemoryCap(const std::string& what) : Error("MemoryCap", what) {}
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error("InvariantViolation", what) {}
};

class InvalidSpec : public Error {
 public:
  explicit InvalidSpec(const std::string& what) : Error("InvalidSpec", what) {}
};

}  // namespace ringcover

#endif  // RINGCOVER_ERRORS_HPP
