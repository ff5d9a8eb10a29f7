#pragma once

#include <stdexcept>
#include <string>

namespace beurling {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Word-length search gave up before the cap; never a length.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Support or memory cap hit while expanding an element.
struct ResourceLimit : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct SearchExhausted : Error {
    using Error::Error;
};

struct StateTooShort : Error {
    using Error::Error;
};

// A certified comparison could not be decided below the precision ceiling.
struct Inconclusive : Error {
    using Error::Error;
};

} // namespace beurling
