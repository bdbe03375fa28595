#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace pqcalc {

/// Truncation policy for series summation.
struct SeriesConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    std::size_t max_terms = 100000;
    std::size_t consecutive_small = 3;
    double divergence_bound = 1e12;

    /// Throws std::invalid_argument on nonsensical settings.
    void validate() const;
};

enum class SeriesStatus { Converged, MaxTermsExceeded, DivergenceDetected };

const char* to_string(SeriesStatus status);

/// Outcome of summing a series. `value` is authoritative only when
/// status == Converged; otherwise it is the partial sum at termination and
/// callers must label it as such.
struct SeriesResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    SeriesStatus status = SeriesStatus::MaxTermsExceeded;
    double tail_estimate = 0.0;

    bool converged() const { return status == SeriesStatus::Converged; }
};

/// Sums term(0) + term(1) + ... with compensated accumulation.
///
/// Converged: `consecutive_small` successive terms satisfied
///   |term| <= abs_tol + rel_tol * (1 + |partial|);
///   tail_estimate is the largest of those terms.
/// DivergenceDetected: |partial| exceeded divergence_bound, or the running
///   max of |term| over the last consecutive_small*10 terms stopped
///   decreasing for consecutive_small successive steps. The probe is a
///   heuristic: it flags non-decaying terms, it does not prove divergence.
/// MaxTermsExceeded: neither verdict after max_terms terms.
///
/// Throws SeriesError (with the offending index) if a term is non-finite.
SeriesResult sum_series(const std::function<double(std::size_t)>& term,
                        const SeriesConfig& config = {});

} // namespace pqcalc
