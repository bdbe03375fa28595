#include "pqcalc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "pqcalc/derivative.hpp"
#include "pqcalc/errors.hpp"
#include "pqcalc/expr.hpp"
#include "pqcalc/integral.hpp"
#include "pqcalc/laws.hpp"
#include "pqcalc/params.hpp"
#include "pqcalc/series.hpp"

namespace pqcalc::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const char* command_name(Command c) {
    switch (c) {
        case Command::Deriv: return "deriv";
        case Command::DerivN: return "deriv-n";
        case Command::Integrate: return "integrate";
        case Command::Improper: return "improper";
        case Command::Antideriv: return "antideriv";
        case Command::Verify: return "verify";
    }
    return "?";
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

// Minimal JSON value builder for the flat output object.
struct JsonObject {
    std::ostringstream body;
    bool first = true;

    void key(const std::string& k) {
        if (!first) body << ",";
        first = false;
        body << '"' << json_escape(k) << "\":";
    }
    void add(const std::string& k, double v) {
        key(k);
        body << num(v);
    }
    void add(const std::string& k, std::size_t v) {
        key(k);
        body << v;
    }
    void add(const std::string& k, int v) {
        key(k);
        body << v;
    }
    void add(const std::string& k, const std::string& v) {
        key(k);
        body << '"' << json_escape(v) << '"';
    }
    void add_raw(const std::string& k, const std::string& raw) {
        key(k);
        body << raw;
    }
    void add(const std::string& k, bool v) {
        key(k);
        body << (v ? "true" : "false");
    }
    std::string str() const { return "{" + body.str() + "}"; }
};

struct Outcome {
    double value = 0.0;
    std::string status;
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;
    int exit_code = 0;
    std::string inputs_json;  // nested object, already serialized
    std::vector<std::string> extra_text_lines;
};

Outcome from_series(const SeriesResult& r) {
    Outcome o;
    o.value = r.value;
    o.status = to_string(r.status);
    o.terms_used = r.terms_used;
    o.tail_estimate = r.tail_estimate;
    o.exit_code = r.converged() ? 0 : 2;
    return o;
}

Outcome from_scalar(double v) {
    Outcome o;
    o.value = v;
    o.status = "Converged";
    return o;
}

SeriesConfig series_config(const CliRequest& request) {
    SeriesConfig config;
    if (request.tol) config.rel_tol = *request.tol;
    if (request.max_terms) config.max_terms = *request.max_terms;
    config.validate();
    return config;
}

LimitPolicy limit_policy(const CliRequest& request) {
    LimitPolicy policy;
    if (request.tol) policy.tol = *request.tol;
    policy.validate();
    return policy;
}

double require_x(const CliRequest& request) {
    if (!request.x) throw UsageError("this command requires --x");
    return *request.x;
}

void require_bounds(const CliRequest& request) {
    if (!request.a || (!request.b && !request.b_infinite))
        throw UsageError("this command requires --a and --b");
}

Outcome run_verify(const CliRequest& request, const PqParams& params, std::ostream& err) {
    const Expr f_expr = parse_expr(request.expr_text);
    const Expr g_expr = parse_expr(request.expr2_text.value_or("x"));
    const Bindings bindings{request.c};
    const RealFunction f = make_function(f_expr, bindings, "f");
    const RealFunction g = make_function(g_expr, bindings, "g");

    const double tol = request.tol.value_or(1e-8);
    SeriesConfig config;
    config.rel_tol = 1e-12;
    if (request.max_terms) config.max_terms = *request.max_terms;

    const std::vector<double> xs{2.0, 3.0, 0.5, 0.25};
    const std::vector<std::pair<double, double>> pairs{{2.0, 4.0}, {0.25, 0.5}, {0.5, 2.0}};

    std::vector<LawReport> reports;
    auto run = [&](const char* name, auto&& fn) {
        try {
            reports.push_back(fn());
        } catch (const std::exception& e) {
            err << "error: law " << name << ": " << e.what() << "\n";
            LawReport failed;
            failed.law_name = name;
            failed.max_residual = kInf;
            failed.tolerance = tol;
            failed.passed = false;
            reports.push_back(failed);
        }
    };

    run("product_rules", [&] { return verify_product_rules(f, g, xs, params, tol); });
    run("quotient_rules", [&] { return verify_quotient_rules(f, g, xs, params, tol); });
    run("inverse_lemmas", [&] { return verify_inverse_lemmas(f, xs, params, config, tol); });
    run("fundamental_theorem",
        [&] { return verify_fundamental_theorem(f, pairs, params, config, tol); });
    run("integration_by_parts",
        [&] { return verify_integration_by_parts(f, g, pairs, params, config, tol); });

    Outcome o;
    bool all_passed = true;
    double worst = 0.0;
    std::ostringstream laws_json;
    laws_json << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const LawReport& r = reports[i];
        all_passed = all_passed && r.passed;
        worst = std::max(worst, r.max_residual);
        std::ostringstream line;
        line << "law " << r.law_name << " max_residual " << num(r.max_residual) << " tolerance "
             << num(r.tolerance) << (r.passed ? " passed" : " FAILED") << " worst_point "
             << num(r.worst_point);
        o.extra_text_lines.push_back(line.str());
        JsonObject jr;
        jr.add("name", r.law_name);
        jr.add("max_residual", r.max_residual);
        jr.add("tolerance", r.tolerance);
        jr.add("passed", r.passed);
        jr.add("worst_point", r.worst_point);
        laws_json << (i ? "," : "") << jr.str();
    }
    laws_json << "]";

    o.value = worst;
    o.status = all_passed ? "Passed" : "Failed";
    o.exit_code = all_passed ? 0 : 2;

    JsonObject inputs;
    inputs.add("expr", pqcalc::to_string(f_expr));
    inputs.add("expr2", pqcalc::to_string(g_expr));
    inputs.add("c", request.c);
    inputs.add_raw("laws", laws_json.str());
    o.inputs_json = inputs.str();
    return o;
}

Outcome execute(const CliRequest& request, std::ostream& err) {
    const bool needs_integration = request.command == Command::Integrate ||
                                   request.command == Command::Improper ||
                                   request.command == Command::Antideriv ||
                                   request.command == Command::Verify;
    PqParams params = needs_integration ? PqParams::integration(request.p, request.q)
                                        : PqParams::derivative(request.p, request.q);

    if (request.command == Command::Verify) return run_verify(request, params, err);

    const Expr expr = parse_expr(request.expr_text);
    const Bindings bindings{request.c};
    const RealFunction f = make_function(expr, bindings, "expr");

    JsonObject inputs;
    inputs.add("expr", pqcalc::to_string(expr));
    Outcome o;

    switch (request.command) {
        case Command::Deriv: {
            const double x = require_x(request);
            o = from_scalar(pq_derivative(f, x, params, limit_policy(request)));
            inputs.add("x", x);
            break;
        }
        case Command::DerivN: {
            const double x = require_x(request);
            if (request.n < 0) throw UsageError("--n must be nonnegative");
            o = from_scalar(pq_derivative_n(f, x, request.n, params));
            inputs.add("x", x);
            inputs.add("n", request.n);
            break;
        }
        case Command::Antideriv: {
            const double x = require_x(request);
            o = from_series(antiderivative_series(f, x, params, series_config(request)));
            inputs.add("x", x);
            break;
        }
        case Command::Integrate: {
            require_bounds(request);
            const double a = *request.a;
            if (request.b_infinite) {
                const IntegralRequest ir = IntegralRequest::classify(a, kInf);
                o = from_series(improper_integral(ir, f, params, series_config(request)));
            } else {
                o = from_series(definite_integral(a, *request.b, f, params,
                                                  series_config(request)));
            }
            inputs.add("a", a);
            if (request.b_infinite)
                inputs.add("b", std::string("inf"));
            else
                inputs.add("b", *request.b);
            break;
        }
        case Command::Improper: {
            require_bounds(request);
            const double upper = request.b_infinite ? kInf : *request.b;
            const IntegralRequest ir = IntegralRequest::classify(*request.a, upper);
            std::vector<TaggedSeries> parts;
            o = from_series(improper_integral(ir, f, params, series_config(request), &parts));
            for (const TaggedSeries& part : parts) {
                if (!part.series.converged())
                    err << "error: direction " << part.direction << ": status "
                        << to_string(part.series.status) << "\n";
            }
            inputs.add("a", *request.a);
            if (request.b_infinite)
                inputs.add("b", std::string("inf"));
            else
                inputs.add("b", *request.b);
            break;
        }
        default:
            throw UsageError("unknown command");
    }

    inputs.add("c", request.c);
    o.inputs_json = inputs.str();
    return o;
}

void emit(const CliRequest& request, const Outcome& o, std::ostream& out) {
    if (request.json) {
        JsonObject root;
        root.add("command", std::string(command_name(request.command)));
        root.add("p", request.p);
        root.add("q", request.q);
        root.add_raw("inputs", o.inputs_json.empty() ? "{}" : o.inputs_json);
        root.add("value", o.value);
        root.add("status", o.status);
        root.add("terms_used", o.terms_used);
        root.add("tail_estimate", o.tail_estimate);
        out << root.str() << "\n";
        return;
    }
    for (const std::string& line : o.extra_text_lines) out << line << "\n";
    out << "value " << num(o.value) << "\n";
    out << "status " << o.status << "\n";
    out << "terms_used " << o.terms_used << "\n";
    out << "tail_estimate " << num(o.tail_estimate) << "\n";
}

} // namespace

int run_cli(const CliRequest& request, std::ostream& out, std::ostream& err) {
    try {
        const Outcome o = execute(request, err);
        emit(request, o, out);
        return o.exit_code;
    } catch (const SyntaxError& e) {
        err << "error: parse: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 1;
    } catch (const EvalError& e) {
        err << "error: eval: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: domain: " << e.what() << "\n";
        return 1;
    } catch (const RangeError& e) {
        err << "error: range: " << e.what() << "\n";
        return 1;
    } catch (const SeriesError& e) {
        err << "error: series: " << e.what() << "\n";
        return 1;
    } catch (const LimitError& e) {
        err << "error: limit: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        err << "error: convergence: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: usage: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 1;
    }
}

} // namespace pqcalc::cli
