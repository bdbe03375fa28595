#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "pqcalc/errors.hpp"

namespace pqcalc {

/// An interval of nonnegative reals with open/closed endpoint flags.
/// Endpoints may be 0 or +infinity.
struct Interval {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    bool lo_closed = false;
    bool hi_closed = false;

    static Interval positive() { return {0.0, std::numeric_limits<double>::infinity(), false, false}; }
    static Interval nonnegative() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }

    bool contains(double x) const {
        if (x < lo || (x == lo && !lo_closed)) return false;
        if (x > hi || (x == hi && !hi_closed)) return false;
        return true;
    }

    /// True when every point of `other` lies in this interval.
    bool contains(const Interval& other) const {
        if (other.lo < lo) return false;
        if (other.lo == lo && other.lo_closed && !lo_closed) return false;
        if (other.hi > hi) return false;
        if (other.hi == hi && other.hi_closed && !hi_closed) return false;
        return true;
    }

    std::string str() const {
        auto fmt = [](double v) {
            if (v == std::numeric_limits<double>::infinity()) return std::string("inf");
            return std::to_string(v);
        };
        return std::string(lo_closed ? "[" : "(") + fmt(lo) + ", " + fmt(hi) +
               (hi_closed ? "]" : ")");
    }
};

/// An evaluable map from positive reals to reals with a declared domain.
/// Queries outside the domain throw DomainError; they are never silent.
class RealFunction {
public:
    using Eval = std::function<double(double)>;

    RealFunction(Eval eval, Interval domain = Interval::positive(), std::string name = "f")
        : eval_(std::move(eval)), domain_(domain), name_(std::move(name)) {}

    double operator()(double x) const {
        if (!domain_.contains(x))
            throw DomainError(name_ + " queried at x = " + std::to_string(x) +
                              " outside its domain " + domain_.str());
        return eval_(x);
    }

    const Interval& domain() const { return domain_; }
    const std::string& name() const { return name_; }

private:
    Eval eval_;
    Interval domain_;
    std::string name_;
};

} // namespace pqcalc
