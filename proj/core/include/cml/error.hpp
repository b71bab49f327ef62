#pragma once

#include <stdexcept>
#include <string>

namespace cml {

// Base class for all library errors. Subcommands map these to exit code 1
// (failed check / certification) or 2 (bad input / io).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid parameters, malformed config, unusable input.
class InputError : public Error {
public:
    using Error::Error;
};

// A verification or certification that was expected to hold did not.
class CheckError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cml
