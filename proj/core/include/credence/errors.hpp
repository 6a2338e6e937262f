#pragma once

#include <stdexcept>

namespace credence {

/// Raised when opinion dynamics hit the iteration cap without reaching a
/// fixed point.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the Chair-Varshney fusion threshold is undefined, e.g. when
/// the local detectors are uninformative (pI + pII = 1) or saturated.
class DegenerateFusionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computed quantity violates a mathematical guarantee by more
/// than floating-point noise. Indicates a bug, not bad input.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace credence
