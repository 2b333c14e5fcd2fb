#ifndef GOLDOSC_ERROR_HPP
#define GOLDOSC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace goldosc {

/// Zero-table file is malformed or fails validation.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The available ordinate precision cannot certify the requested quantity.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lattice reduction failed: dependent input or an exhausted resource guard.
class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The reduced basis does not contain the vectors a witness needs.
class ExtractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace goldosc

#endif
