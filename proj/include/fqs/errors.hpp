#pragma once

#include <stdexcept>
#include <string>

namespace fqs {

// All library errors derive from Error and carry a stable kind string;
// the CLI maps it onto the machine-readable JSON emitted on stderr.
class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

class InvalidSpec : public Error {
 public:
  explicit InvalidSpec(const std::string& m) : Error("InvalidSpec", m) {}
};

class CapacityExceeded : public Error {
 public:
  explicit CapacityExceeded(const std::string& m) : Error("CapacityExceeded", m) {}
};

class InvalidStart : public Error {
 public:
  explicit InvalidStart(const std::string& m) : Error("InvalidStart", m) {}
};

class InvalidTarget : public Error {
 public:
  explicit InvalidTarget(const std::string& m) : Error("InvalidTarget", m) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& m) : Error("InvalidArgument", m) {}
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& m) : Error("InsufficientData", m) {}
};

class SeriesTooShort : public Error {
 public:
  explicit SeriesTooShort(const std::string& m) : Error("SeriesTooShort", m) {}
};

class NoDominantPeak : public Error {
 public:
  explicit NoDominantPeak(const std::string& m) : Error("NoDominantPeak", m) {}
};

class PeriodTooLongForSeries : public Error {
 public:
  explicit PeriodTooLongForSeries(const std::string& m)
      : Error("PeriodTooLongForSeries", m) {}
};

class InsufficientPoints : public Error {
 public:
  explicit InsufficientPoints(const std::string& m) : Error("InsufficientPoints", m) {}
};

class NonPositiveValue : public Error {
 public:
  explicit NonPositiveValue(const std::string& m) : Error("NonPositiveValue", m) {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& m) : Error("EmptyInput", m) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& m) : Error("IoError", m) {}
};

}  // namespace fqs
