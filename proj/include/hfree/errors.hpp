#pragma once

#include <stdexcept>
#include <string>

namespace hfree {

// Base of everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments, malformed files, violated preconditions.  CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Malformed textual input (graph / instance / sidecar files).
struct ParseError : InputError {
    using InputError::InputError;
};

// An instance collapsed to nothing usable (e.g. J lost all its edges).
struct DegenerateInstanceError : InputError {
    using InputError::InputError;
};

// Degree sequence with odd sum.
struct ParityError : InputError {
    using InputError::InputError;
};

// Degree sequence failing an Erdos-Gallai inequality; k = first violated prefix.
struct InfeasibleSequenceError : InputError {
    InfeasibleSequenceError(const std::string& msg, int k_violated)
        : InputError(msg), k(k_violated) {}
    int k;
};

// A solver or enumerator hit its resource budget.  CLI exit code 3.
struct BudgetExceededError : Error {
    using Error::Error;
};

}  // namespace hfree
