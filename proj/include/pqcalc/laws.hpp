#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pqcalc/params.hpp"
#include "pqcalc/real_function.hpp"
#include "pqcalc/series.hpp"

namespace pqcalc {

/// Outcome of verifying one structural identity over a point list.
/// Residuals are absolute; `worst_point` reproduces the failure as a
/// one-liner (for pair-based laws it is the left endpoint of the worst
/// pair).
struct LawReport {
    std::string law_name;
    std::vector<double> sample_points;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double worst_point = 0.0;
};

/// Both product-rule decompositions of D(fg):
///   g(x^p) Df(x) + f(x^q) Dg(x)   and   g(x^q) Df(x) + f(x^p) Dg(x).
/// Points must avoid {0, 1}.
LawReport verify_product_rules(const RealFunction& f, const RealFunction& g,
                               const std::vector<double>& xs, const PqParams& params,
                               double tol);

/// Both quotient-rule decompositions of D(f/g). Throws DomainError naming
/// the node when g vanishes at x^p or x^q.
LawReport verify_quotient_rules(const RealFunction& f, const RealFunction& g,
                                const std::vector<double>& xs, const PqParams& params,
                                double tol);

/// The inverse identities between the derivative and the three integral
/// operators: for x > 1, D(from-1 integral of f) = f and from-1 integral of
/// Df = f(x) - f(1); for 0 < x < 1, D(to-1 integral) = -f, to-1 integral of
/// Df = f(1) - f(x), D(from-0 integral) = f, and from-0 integral of
/// Df = f(x) - f(0). Points are routed to the applicable side.
LawReport verify_inverse_lemmas(const RealFunction& f, const std::vector<double>& xs,
                                const PqParams& params, const SeriesConfig& config, double tol);

/// |integral of DF over (a,b) - (F(b) - F(a))| per pair. Pairs may use
/// upper = infinity when the limit of F at infinity is supplied.
LawReport verify_fundamental_theorem(const RealFunction& F,
                                     const std::vector<std::pair<double, double>>& pairs,
                                     const PqParams& params, const SeriesConfig& config,
                                     double tol,
                                     std::optional<double> limit_at_infinity = std::nullopt);

/// Both by-parts formulas, each side evaluated independently:
///   int f(x^q) dg + int g(x^p) df = f(b)g(b) - f(a)g(a)
/// and the p/q-swapped form.
LawReport verify_integration_by_parts(const RealFunction& f, const RealFunction& g,
                                      const std::vector<std::pair<double, double>>& pairs,
                                      const PqParams& params, const SeriesConfig& config,
                                      double tol);

} // namespace pqcalc
