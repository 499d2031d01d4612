// Error types thrown across the library. Every category is distinct so
// callers can react to the meaningful ones (e.g. NotPositiveDefiniteError is
// the computational witness that a form is not an inner product).

#pragma once

#include <stdexcept>
#include <string>

namespace b3rep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- linalg ---
struct DimensionError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};
struct NotPositiveDefiniteError : Error {
    using Error::Error;
};
// Violated precondition of an operation.
struct ContractError : Error {
    using Error::Error;
};

// --- spectra ---
struct DegenerateSpectrumError : Error {
    using Error::Error;
};
// A value that must be real came out with a large imaginary part.  Signals an
// implementation or branch bug, not a user error.
struct RealnessError : Error {
    using Error::Error;
};

// --- rep_builder ---
struct ReconstructionError : Error {
    using Error::Error;
};
struct NonCentralError : Error {
    using Error::Error;
};
struct BranchAmbiguityError : Error {
    using Error::Error;
};

// --- algebra_tools ---
struct SpectrumMismatchError : Error {
    using Error::Error;
};
struct AlgebraError : Error {
    using Error::Error;
};
struct NotSimpleError : Error {
    using Error::Error;
};
struct OracleDegeneracyError : Error {
    using Error::Error;
};
struct DegenerateProjectorError : Error {
    using Error::Error;
};

}  // namespace b3rep
