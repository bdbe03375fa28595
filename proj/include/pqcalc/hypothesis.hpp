#pragma once

#include <optional>

#include "pqcalc/params.hpp"
#include "pqcalc/real_function.hpp"

namespace pqcalc {

/// Result of a numeric convergence-hypothesis probe. These checks are
/// explicitly heuristic advisories: `verdict` reports whether the sampled
/// grid stayed within the bound, with `witness` the first sample point
/// that blew up.
struct HypothesisCheck {
    double alpha = 0.0;
    std::optional<double> bound_m; // estimated sup of |f(x)| x^alpha when bounded
    double r = 0.0;
    int sample_count = 0;
    bool verdict = false;
    std::optional<double> witness;
};

/// Probes whether |f(x) x^alpha| stays bounded on (0, A] (sampled out to
/// A^{1/p}, the node overshoot). Requires 0 <= alpha < 1 and A > 1.
/// Unboundedness is flagged when the probe values grow more than 10x
/// across the three finest sampled decades approaching 0 or 1, or when a
/// sample is non-finite.
HypothesisCheck check_alpha_boundedness(const RealFunction& f, double alpha, double A,
                                        const PqParams& params, int sample_count = 200);

/// Probes the two-regime bound
///   |f(x)| < min{ r x^alpha, |x^{1/p} - x^{1/q}|^{-1} (ln x)^{2 alpha} }
/// with alpha = alpha_near_one on a grid approaching 1 from above and
/// alpha = alpha_large_x on a geometric grid out to (p/q)^40. Requires
/// 0 <= alpha_near_one < 1 and -epsilon <= alpha_large_x < 0. The recorded
/// alpha is the failing regime's (near-one's when the check passes).
HypothesisCheck check_improper_hypothesis(const RealFunction& f, double alpha_near_one,
                                          double alpha_large_x, double r,
                                          const PqParams& params, int sample_count = 200,
                                          double epsilon = 0.5);

} // namespace pqcalc
