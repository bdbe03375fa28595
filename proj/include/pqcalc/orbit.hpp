#pragma once

#include "pqcalc/params.hpp"
#include "pqcalc/real_function.hpp"

namespace pqcalc::orbit {

// The power lattice behind every series in this library. For a base point
// x > 0 and integration-mode (p, q), iterating the maps x -> x^p, x -> x^q
// generates the points x^{(q/p)^j}; consecutive points bracket the nodes
// x^{(q/p)^j / p} at which integrands are sampled. All such points
// accumulate at the fixed point x = 1.

/// x^e computed as exp(e * ln x) with the exact cases x = 1 and e = 0
/// short-circuited. Requires x > 0. Throws RangeError on overflow;
/// underflow quietly returns 0.
double stable_pow(double x, double e);

/// (q/p)^j for any integer j, computed in log space. Strictly positive and
/// strictly decreasing in j. Requires integration mode. Throws RangeError
/// when the result overflows (very negative j).
double exponent(int j, const PqParams& params);

/// The evaluation point x^{(q/p)^j / p}. Requires x > 0 and integration
/// mode. Satisfies node(x,j)^p = x^{(q/p)^j} and node(x,j)^q = x^{(q/p)^{j+1}},
/// i.e. the node's p- and q-images are consecutive lattice points.
double node(double x, int j, const PqParams& params);

/// The telescoping factor x^{(q/p)^j} - x^{(q/p)^{j+1}}. Positive for x > 1,
/// negative for 0 < x < 1, zero at x = 1. Partial sums over j = 0..N
/// telescope to x - x^{(q/p)^{N+1}}.
double weight(double x, int j, const PqParams& params);

/// Closure of the node set {node(x, j) : j >= 0}. Nodes overshoot the
/// nominal interval: node(x, 0) = x^{1/p}, which exceeds x for x > 1 and
/// undershoots it for x < 1. Callers should validate integrand domains
/// against this interval, not against (1, x].
Interval node_range(double x, const PqParams& params);

} // namespace pqcalc::orbit
