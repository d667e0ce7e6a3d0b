#pragma once

#include <stdexcept>
#include <string>

namespace mifs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ad - bc vanishes: the quadruple describes a constant map.
class DegenerateMap : public Error {
 public:
  DegenerateMap() : Error("degenerate map: |ad - bc| <= 1e-12") {}
};

class PoleEvaluation : public Error {
 public:
  PoleEvaluation() : Error("evaluation at the pole: |cz + d| <= 1e-300") {}
};

// The unit circle is sent to a line, so there is no image disc.
class DegenerateImage : public Error {
 public:
  DegenerateImage() : Error("unit circle maps to a line: ||d|^2 - |c|^2| <= 1e-10") {}
};

enum class ContractionFailure {
  ConditionI,   // |d| - |c| > 1 violated
  ConditionII,  // |a conj(c) - b conj(d)| + 1 <= |d|^2 - |c|^2 violated
};

inline const char* describe(ContractionFailure reason) {
  switch (reason) {
    case ContractionFailure::ConditionI:
      return "fails condition i: |d| - |c| > 1";
    case ContractionFailure::ConditionII:
      return "fails condition ii: |a conj(c) - b conj(d)| + 1 <= |d|^2 - |c|^2";
  }
  return "unknown";
}

class NotContractive : public Error {
 public:
  explicit NotContractive(ContractionFailure reason)
      : Error(std::string("not a contraction of the unit disc: ") + describe(reason)),
        reason_(reason) {}

  ContractionFailure reason() const noexcept { return reason_; }

 private:
  ContractionFailure reason_;
};

enum class SpecField { Radius, Center, FreeCoefficient, Phase };

class InvalidSpec : public Error {
 public:
  InvalidSpec(SpecField field, const std::string& what)
      : Error("invalid disc image spec: " + what), field_(field) {}

  SpecField field() const noexcept { return field_; }

 private:
  SpecField field_;
};

class InvalidRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mifs
