#pragma once

#include <stdexcept>

namespace ktdom {

// Self-loop or endpoint outside [0, n).
struct InvalidEdgeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Attachment set is not a k-clique of the current graph.
struct InvalidAttachmentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Closed neighborhoods handed to the packing bound overlap.
struct InvalidPackingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Internal consistency failure while recoloring or replaying a witness;
// indicates a corrupted input witness, not a property of the graph.
struct AlgorithmInvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Instance file rejected by the parser.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A benchmark row contradicted the certified bound. This can only happen
// through an implementation bug, so the whole run is aborted.
struct BoundViolationError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ktdom
