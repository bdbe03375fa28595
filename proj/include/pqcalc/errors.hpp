#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqcalc {

/// Base class for all pqcalc errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A function was queried outside its declared domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A power or lattice exponent overflowed the double range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A series term evaluated to a non-finite value.
class SeriesError : public Error {
public:
    SeriesError(std::size_t term_index, const std::string& what)
        : Error(what), term_index_(term_index) {}

    std::size_t term_index() const { return term_index_; }

private:
    std::size_t term_index_;
};

/// A sequence limit failed to stabilize. Carries the last window of
/// estimates and, for two-sided limits, both one-sided estimates when
/// they were individually available but disagreed.
class LimitError : public Error {
public:
    LimitError(const std::string& what, std::vector<double> last_window)
        : Error(what), last_window_(std::move(last_window)) {}

    const std::vector<double>& last_window() const { return last_window_; }

private:
    std::vector<double> last_window_;
};

/// A nested series evaluation failed to converge. Carries the recursion
/// depth at which the failure occurred.
class ConvergenceError : public Error {
public:
    ConvergenceError(int depth, const std::string& what)
        : Error(what), depth_(depth) {}

    int depth() const { return depth_; }

private:
    int depth_;
};

/// Expression text failed to parse. Carries the byte offset of the
/// offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(what), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A parsed expression hit a domain fault during evaluation (log of a
/// nonpositive number, division by zero, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

} // namespace pqcalc
