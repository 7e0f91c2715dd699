#include "sepdesign/errors.hpp"

namespace sepdesign {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::WeightLengthMismatch: return "WeightLengthMismatch";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::IntervalMismatch: return "IntervalMismatch";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotChordal: return "NotChordal";
    case ErrorKind::InvalidPeo: return "InvalidPeo";
    case ErrorKind::NoIntervals: return "NoIntervals";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::LabelLengthMismatch: return "LabelLengthMismatch";
    case ErrorKind::NotSeparating: return "NotSeparating";
    case ErrorKind::NotEnoughLabels: return "NotEnoughLabels";
    case ErrorKind::InsufficientInterventions: return "InsufficientInterventions";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InconsistentEvidence: return "InconsistentEvidence";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace sepdesign
