#pragma once

#include <stdexcept>
#include <string>

namespace hodgekit {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different ambient dimensions or representations.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// A degree, index or size argument is outside its admissible range.
struct RangeError : Error {
    using Error::Error;
};

/// Input data violates a structural invariant (cocycle, delta^2 = 0, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// The requested operation needs a model the input does not provide
/// (e.g. adjoints on polynomial coefficients, which have no inner product).
struct UnsupportedModelError : Error {
    using Error::Error;
};

/// Matrix or form has the wrong shape for the operation.
struct ShapeError : Error {
    using Error::Error;
};

/// Poisson-type equation has no solution; carries a printable obstruction.
struct NoSolutionError : Error {
    explicit NoSolutionError(const std::string& msg, std::string obstruction_repr = {})
        : Error(msg), obstruction(std::move(obstruction_repr)) {}
    std::string obstruction;
};

} // namespace hodgekit
