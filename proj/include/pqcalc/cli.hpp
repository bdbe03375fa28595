#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace pqcalc::cli {

enum class Command { Deriv, DerivN, Integrate, Improper, Antideriv, Verify };

/// A fully parsed invocation. `b_infinite` marks --b inf; flag consistency
/// is validated by run_cli, not here.
struct CliRequest {
    Command command = Command::Deriv;
    std::string expr_text;
    std::optional<std::string> expr2_text;
    double p = 0.0;
    double q = 0.0;
    std::optional<double> x;
    std::optional<double> a;
    std::optional<double> b;
    bool b_infinite = false;
    int n = 1;
    std::optional<double> tol;
    std::optional<std::size_t> max_terms;
    double c = 1.0;
    bool json = false;
};

/// Executes the request. Results go to `out` (text lines or one JSON
/// object with the fixed key set {command, p, q, inputs, value, status,
/// terms_used, tail_estimate}; numbers carry 17 significant digits).
/// Errors go to `err` as one stable line "error: <code>: <message>".
/// Returns 0 on Converged/Passed, 2 on non-convergence or failed laws,
/// 1 on usage, parse, domain and evaluation errors.
int run_cli(const CliRequest& request, std::ostream& out, std::ostream& err);

} // namespace pqcalc::cli
