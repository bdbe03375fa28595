#pragma once

#include "pqcalc/params.hpp"
#include "pqcalc/real_function.hpp"

namespace pqcalc {

/// Controls the sequence extrapolation used for the derivative limits at
/// x = 0 and x = 1: values are sampled along x_k = x0 +/- seq_start * shrink^k
/// and declared converged when `stability_window` successive samples agree
/// within `tol`.
struct LimitPolicy {
    double seq_start = 0.5;
    double shrink = 0.5;
    int max_steps = 60;
    int stability_window = 3;
    double tol = 1e-9;

    void validate() const;
};

/// The increment f(x^p) - f(x^q). Requires x > 0 with x^p, x^q inside
/// f's domain.
double pq_differential(const RealFunction& f, double x, const PqParams& params);

/// The difference quotient (f(x^p) - f(x^q)) / (x^p - x^q) for x not in
/// {0, 1}. At x = 1 the two-sided sequence limit is returned (one-sided when
/// f's domain forbids the other side); at x = 0 the right-sided limit.
/// Throws LimitError when the limit fails to stabilize; at x = 1 the error
/// carries both one-sided estimates when they disagree.
double pq_derivative(const RealFunction& f, double x, const PqParams& params,
                     const LimitPolicy& policy = {});

/// n-fold application of the derivative. n = 0 returns f(x); higher orders
/// recurse through the difference quotient (2^n leaf evaluations). For
/// n >= 2 the limit points x = 0, 1 are out of contract and rejected.
double pq_derivative_n(const RealFunction& f, double x, int n, const PqParams& params);

/// Wraps the derivative of f as an evaluable function on f's domain, for
/// feeding into the integral operators.
RealFunction derivative_function(const RealFunction& f, const PqParams& params);

} // namespace pqcalc
