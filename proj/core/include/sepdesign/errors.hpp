#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepdesign {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  WeightLengthMismatch,
  NegativeWeight,
  IntervalMismatch,
  VertexOutOfRange,
  NotChordal,
  InvalidPeo,
  NoIntervals,
  InvalidK,
  DuplicateLabel,
  LabelLengthMismatch,
  NotSeparating,
  NotEnoughLabels,
  InsufficientInterventions,
  BudgetExceeded,
  TooLarge,
  InconsistentEvidence,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; `kind()` is what
// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sepdesign
