#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace pqcalc {

/// Which standing assumptions a parameter pair satisfies.
///
/// Derivative mode only requires p, q != 1 and p != q, so the difference
/// quotient (f(x^p) - f(x^q)) / (x^p - x^q) is well defined away from the
/// fixed points. Integration mode additionally requires 0 < q < p < 1,
/// which makes the ratio q/p lie in (0,1) and the power-lattice series
/// telescope toward the fixed point x = 1.
enum class Mode { Derivative, Integration };

/// The fixed deformation pair (p, q) plus its mode witness.
struct PqParams {
    double p;
    double q;
    Mode mode;

    /// Builds derivative-mode parameters. Throws std::invalid_argument
    /// unless p, q are finite, nonzero, different from 1 and from each other.
    static PqParams derivative(double p, double q);

    /// Builds integration-mode parameters. Throws std::invalid_argument
    /// unless 0 < q < p < 1. Integration-mode parameters satisfy the
    /// derivative-mode constraints as well.
    static PqParams integration(double p, double q);

    bool is_integration() const { return mode == Mode::Integration; }

    /// q/p, in (0,1) for integration mode.
    double ratio() const { return q / p; }

    /// ln q - ln p; negative in integration mode.
    double log_ratio() const { return std::log(q) - std::log(p); }
};

inline PqParams PqParams::derivative(double p, double q) {
    if (!(std::isfinite(p) && std::isfinite(q)))
        throw std::invalid_argument("pq parameters must be finite");
    if (p == 1.0 || q == 1.0)
        throw std::invalid_argument("derivative mode requires p != 1 and q != 1");
    if (p == q)
        throw std::invalid_argument("derivative mode requires p != q");
    if (p == 0.0 || q == 0.0)
        throw std::invalid_argument("derivative mode requires p != 0 and q != 0");
    return PqParams{p, q, Mode::Derivative};
}

inline PqParams PqParams::integration(double p, double q) {
    if (!(std::isfinite(p) && std::isfinite(q)))
        throw std::invalid_argument("pq parameters must be finite");
    if (!(0.0 < q && q < p && p < 1.0))
        throw std::invalid_argument(
            "integration mode requires 0 < q < p < 1 (got p=" +
            std::to_string(p) + ", q=" + std::to_string(q) + ")");
    return PqParams{p, q, Mode::Integration};
}

} // namespace pqcalc
