#pragma once

#include <stdexcept>
#include <string>

namespace polarspec {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An index, weight or size argument lies outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

// Malformed textual input (info-set files, polynomial strings).
class ParseError : public Error {
public:
    using Error::Error;
};

// Enumeration would exceed the configured work budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace polarspec
