#ifndef MIXDIMER_ERRORS_HPP
#define MIXDIMER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixdimer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class NonHermitianInput : public Error {
public:
    using Error::Error;
};

class NonPositiveTemperature : public Error {
public:
    explicit NonPositiveTemperature(double t)
        : Error("temperature must be positive, got " + std::to_string(t)) {}
};

class StepUnderflow : public Error {
public:
    explicit StepUnderflow(double step)
        : Error("finite-difference step below 1e-9: " + std::to_string(step)) {}
};

class TargetOutOfRange : public Error {
public:
    using Error::Error;
};

class NoExtremumOfRequestedSign : public Error {
public:
    using Error::Error;
};

} // namespace mixdimer

#endif
