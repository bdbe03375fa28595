#pragma once

#include <string>
#include <vector>

#include "pqcalc/params.hpp"
#include "pqcalc/real_function.hpp"
#include "pqcalc/series.hpp"

namespace pqcalc {

/// The definite- and improper-integral shapes the operators accept.
enum class IntegralCase {
    AboveOne,        // 1 <= a < b < inf
    BelowOneToOne,   // 0 < a < 1 = b
    ZeroToB,         // a = 0, 0 < b < 1
    SplitAcrossOne,  // 0 <= a < 1 < b < inf
    ImproperFromOne, // [1, inf)
    ImproperZeroOne, // [0, 1]
    ImproperZeroInf, // [0, inf)
    ImproperFromA,   // [a, inf), a > 0, a != 1
};

const char* to_string(IntegralCase c);

/// Bounds plus their case classification. `upper` may be +infinity.
struct IntegralRequest {
    double lower = 0.0;
    double upper = 0.0;
    IntegralCase case_tag = IntegralCase::AboveOne;

    /// Classifies bounds into one of the tagged shapes. Throws
    /// std::invalid_argument for shapes outside the taxonomy (e.g. a
    /// sub-unit interval 0 < a < b < 1, which definite_integral evaluates
    /// as a difference of two ZeroToB integrals).
    static IntegralRequest classify(double lower, double upper);

    /// Throws std::invalid_argument when the tag is inconsistent with the
    /// bounds.
    void validate() const;
};

/// One direction of a bilateral sum, with its own convergence verdict.
struct TaggedSeries {
    std::string direction;
    SeriesResult series;
};

/// The node interval a given integration actually samples. Node orbits
/// overshoot the nominal bounds (up to b^{1/p} above 1, down to b^{1/q}
/// toward 0); integrand domains are validated against this interval before
/// any term is evaluated.
Interval required_node_interval(const IntegralRequest& request, const PqParams& params);

/// The series antiderivative evaluated at x: the signed lattice sum
/// sum_j weight(x,j) * f(node(x,j)), which equals the integral of f from 1
/// to x when it converges (negative mass for x < 1). H(1) = 0 by
/// construction.
SeriesResult antiderivative_series(const RealFunction& f, double x, const PqParams& params,
                                   const SeriesConfig& config = {});

/// Integral of f against the increments of g: for b > 1 the sum
/// sum_j f(node) * (g at consecutive lattice points of b) from 1 to b; for
/// 0 < b < 1 the descending-lattice mirror from 0 to b. With g = identity
/// this reduces to the plain definite integral.
SeriesResult integral_with_dg(const RealFunction& f, const RealFunction& g, double b,
                              const PqParams& params, const SeriesConfig& config = {});

/// Range form of integral_with_dg, dispatching on (a, b) exactly like
/// definite_integral. Requires a > 0.
SeriesResult integral_with_dg_between(const RealFunction& f, const RealFunction& g, double a,
                                      double b, const PqParams& params,
                                      const SeriesConfig& config = {});

/// Definite integral over [a, b], 0 <= a <= b < inf, dispatching on the
/// case taxonomy: differences of from-1 sums above 1, differences of
/// from-0 sums below 1, the descending sum for b = 1, and the split
/// a < 1 < b as the sum of both sides. a = b returns exact zero without
/// evaluating f. The result carries the worst component status and the
/// summed tail estimates.
SeriesResult definite_integral(double a, double b, const RealFunction& f,
                               const PqParams& params, const SeriesConfig& config = {});

/// n-fold iterated from-zero integral at 0 < b < 1. n = 0 returns f(b).
/// Inner levels are memoized within this evaluation only; an inner
/// non-convergence throws ConvergenceError annotated with its depth.
SeriesResult integral_n(const RealFunction& f, double b, int n, const PqParams& params,
                        const SeriesConfig& config = {});

/// Improper integrals on [1,inf), [0,1], [0,inf) and [a,inf). Bilateral
/// sums run as independent one-sided series, one toward the fixed point
/// x = 1 and one outward; each direction gets its own verdict in `parts`
/// (when given) and the combined result carries the worst status.
SeriesResult improper_integral(const IntegralRequest& request, const RealFunction& f,
                               const PqParams& params, const SeriesConfig& config = {},
                               std::vector<TaggedSeries>* parts = nullptr);

} // namespace pqcalc
