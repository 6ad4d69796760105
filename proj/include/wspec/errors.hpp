#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wspec {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A coefficient recurrence produced a non-finite value even after rescaling.
class OverflowError : public Error {
public:
    OverflowError(const std::string& what, std::size_t index)
        : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A series hit its term cap (or escalation ran out) before meeting the tail test.
/// Carries the best partial result so callers can still inspect it.
class NotConvergedError : public Error {
public:
    NotConvergedError(const std::string& what, double best_partial, std::size_t terms)
        : Error(what), best_partial_(best_partial), terms_(terms) {}
    double best_partial() const noexcept { return best_partial_; }
    std::size_t terms_used() const noexcept { return terms_; }

private:
    double best_partial_;
    std::size_t terms_;
};

class ScanUnreliableError : public Error {
public:
    using Error::Error;
};

class RefineError : public Error {
public:
    using Error::Error;
};

/// Direct summation lost too many digits to cancellation.
class PrecisionLossError : public Error {
public:
    PrecisionLossError(const std::string& what, double ratio) : Error(what), ratio_(ratio) {}
    double cancellation_ratio() const noexcept { return ratio_; }

private:
    double ratio_;
};

class GridError : public Error {
public:
    using Error::Error;
};

class WindowError : public Error {
public:
    using Error::Error;
};

} // namespace wspec
