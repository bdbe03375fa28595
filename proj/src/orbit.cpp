#include "pqcalc/orbit.hpp"

#include <cmath>
#include <string>

#include "pqcalc/errors.hpp"

namespace pqcalc::orbit {

namespace {

// Largest argument for which exp() stays finite in double precision.
constexpr double kMaxExpArg = 709.0;

void require_integration(const PqParams& params) {
    if (!params.is_integration())
        throw std::invalid_argument("lattice arithmetic requires integration-mode parameters");
}

} // namespace

double stable_pow(double x, double e) {
    if (!(x > 0.0))
        throw DomainError("stable_pow requires a positive base, got x = " + std::to_string(x));
    if (e == 0.0 || x == 1.0) return 1.0;
    const double t = e * std::log(x);
    if (t > kMaxExpArg)
        throw RangeError("power overflow: x = " + std::to_string(x) + ", exponent = " + std::to_string(e));
    return std::exp(t);
}

double exponent(int j, const PqParams& params) {
    require_integration(params);
    if (j == 0) return 1.0;
    const double t = static_cast<double>(j) * params.log_ratio();
    if (t > kMaxExpArg)
        throw RangeError("lattice exponent overflow at j = " + std::to_string(j));
    return std::exp(t);
}

double node(double x, int j, const PqParams& params) {
    if (!(x > 0.0))
        throw DomainError("node requires x > 0, got x = " + std::to_string(x));
    return stable_pow(x, exponent(j, params) / params.p);
}

double weight(double x, int j, const PqParams& params) {
    if (!(x > 0.0))
        throw DomainError("weight requires x > 0, got x = " + std::to_string(x));
    return stable_pow(x, exponent(j, params)) - stable_pow(x, exponent(j + 1, params));
}

Interval node_range(double x, const PqParams& params) {
    require_integration(params);
    if (x == 1.0) return Interval{1.0, 1.0, true, true};
    const double extreme = stable_pow(x, 1.0 / params.p);
    if (x > 1.0) return Interval{1.0, extreme, false, true};
    return Interval{extreme, 1.0, true, false};
}

} // namespace pqcalc::orbit
