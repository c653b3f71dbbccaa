#pragma once

#include <stdexcept>
#include <string>

namespace simplexion {

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotFound : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Raised when a size cap or search budget is exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A proven invariant failed to hold (e.g. a singular connection matrix).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace simplexion
