#pragma once

#include <stdexcept>
#include <string>

namespace qcomb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument: negative index, q <= 0, k out of range, malformed input.
struct DomainError : Error {
    using Error::Error;
};

// Two series in different formal variables (or different orders where equal
// orders are required) were combined.
struct SeriesMismatchError : Error {
    using Error::Error;
};

// A certified tail bound could not be established within the iteration cap,
// or the series provably diverges at the requested parameters.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double last_bound = -1.0)
        : Error(msg), last_bound(last_bound) {}
    double last_bound;  // last tail bound seen, -1 if none
};

// A psi-sequence value required to be nonzero turned out to be zero.
struct SingularSequenceError : Error {
    using Error::Error;
};

}  // namespace qcomb
