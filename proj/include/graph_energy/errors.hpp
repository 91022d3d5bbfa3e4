#pragma once

#include <stdexcept>
#include <string>

namespace graph_energy {

/// Invalid argument to an operation (out-of-range vertex, bad family parameter, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 text or catalog line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input exceeds what an exact routine is allowed to handle (size limit, integer overflow).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver failed to converge or failed residual certification.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace graph_energy
