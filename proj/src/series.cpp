#include "pqcalc/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pqcalc/errors.hpp"

namespace pqcalc {

void SeriesConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("series tolerances must be positive");
    if (max_terms == 0)
        throw std::invalid_argument("max_terms must be positive");
    if (consecutive_small == 0)
        throw std::invalid_argument("consecutive_small must be at least 1");
    if (!(divergence_bound > 0.0))
        throw std::invalid_argument("divergence_bound must be positive");
}

const char* to_string(SeriesStatus status) {
    switch (status) {
        case SeriesStatus::Converged: return "Converged";
        case SeriesStatus::MaxTermsExceeded: return "MaxTermsExceeded";
        case SeriesStatus::DivergenceDetected: return "DivergenceDetected";
    }
    return "Unknown";
}

SeriesResult sum_series(const std::function<double(std::size_t)>& term,
                        const SeriesConfig& config) {
    config.validate();

    // Neumaier-compensated accumulation.
    double sum = 0.0;
    double comp = 0.0;
    auto accumulate = [&](double t) {
        const double s = sum + t;
        if (std::abs(sum) >= std::abs(t))
            comp += (sum - s) + t;
        else
            comp += (t - s) + sum;
        sum = s;
    };
    auto total = [&]() { return sum + comp; };

    const std::size_t probe_window = config.consecutive_small * 10;
    std::vector<double> window;          // |term| ring buffer, probe_window wide
    window.reserve(probe_window);
    std::size_t ring_pos = 0;
    double prev_window_max = 0.0;
    std::size_t nondecay_streak = 0;

    std::size_t small_streak = 0;

    // Observed decay ratio of recent |terms|, clamped below 1 so the
    // geometric tail extrapolation mag * rho / (1 - rho) stays finite.
    constexpr double kMaxRatio = 0.99;
    double decay_ratio = 0.0;
    double prev_mag = -1.0;

    double last_mag = 0.0;

    for (std::size_t j = 0; j < config.max_terms; ++j) {
        const double t = term(j);
        if (!std::isfinite(t))
            throw SeriesError(j, "series term at j = " + std::to_string(j) +
                                     " is not finite");
        accumulate(t);
        const double mag = std::abs(t);
        last_mag = mag;

        double ratio;
        if (prev_mag > 0.0)
            ratio = std::min(mag / prev_mag, kMaxRatio);
        else
            ratio = (mag == 0.0) ? 0.0 : kMaxRatio;
        prev_mag = mag;

        // Convergence: a run of consecutive_small terms below threshold
        // whose extrapolated geometric tail also fits under it.
        const double threshold =
            config.abs_tol + config.rel_tol * (1.0 + std::abs(total()));
        if (mag <= threshold) {
            decay_ratio = (small_streak == 0) ? ratio : std::max(decay_ratio, ratio);
            ++small_streak;
            const double tail = mag * decay_ratio / (1.0 - decay_ratio);
            if (small_streak >= config.consecutive_small && tail <= threshold) {
                const double value = total();
                const double cap = config.abs_tol + config.rel_tol * (1.0 + std::abs(value));
                return {value, j + 1, SeriesStatus::Converged, std::min(tail, cap)};
            }
        } else {
            small_streak = 0;
        }

        if (std::abs(total()) > config.divergence_bound)
            return {total(), j + 1, SeriesStatus::DivergenceDetected, mag};

        // Decay probe over a sliding window of the last probe_window terms:
        // once the window is full, its running max must keep decreasing;
        // consecutive_small successive non-decreases flag divergence.
        if (window.size() < probe_window) {
            window.push_back(mag);
            if (window.size() == probe_window)
                prev_window_max = *std::max_element(window.begin(), window.end());
        } else {
            window[ring_pos] = mag;
            ring_pos = (ring_pos + 1) % probe_window;
            const double window_max = *std::max_element(window.begin(), window.end());
            if (window_max >= prev_window_max) {
                if (++nondecay_streak >= config.consecutive_small)
                    return {total(), j + 1, SeriesStatus::DivergenceDetected, window_max};
            } else {
                nondecay_streak = 0;
            }
            prev_window_max = window_max;
        }
    }

    return {total(), config.max_terms, SeriesStatus::MaxTermsExceeded, last_mag};
}

} // namespace pqcalc
