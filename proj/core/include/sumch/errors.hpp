#ifndef SUMCH_ERRORS_HPP
#define SUMCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sumch {

/// Bad parameters or malformed input (exit code 2 at the CLI).
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The received word is outside the guaranteed error model (exit code 3).
class decode_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// More than one consistent reconstruction exists (exit code 4).
class ambiguity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured cap (exit code 5).
class resource_limit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sumch

#endif
