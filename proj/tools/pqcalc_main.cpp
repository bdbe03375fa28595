#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pqcalc/cli.hpp"

namespace {

void add_common_options(CLI::App* cmd, pqcalc::cli::CliRequest& request, std::string& b_text) {
    cmd->add_option("--expr", request.expr_text, "expression in x")->required();
    cmd->add_option("--p", request.p, "deformation exponent p")->required();
    cmd->add_option("--q", request.q, "deformation exponent q")->required();
    cmd->add_option("--tol", [&request](const CLI::results_t& values) {
        request.tol = std::stod(values.front());
        return true;
    }, "tolerance (limit tol for deriv, series rel_tol for integrals, law tol for verify)");
    cmd->add_option("--max-terms", [&request](const CLI::results_t& values) {
        request.max_terms = static_cast<std::size_t>(std::stoull(values.front()));
        return true;
    }, "series term cap");
    cmd->add_option("--c", request.c, "value bound to the constant c (default 1)");
    cmd->add_flag("--json", request.json, "emit one JSON object instead of text");
    cmd->add_option("--x", [&request](const CLI::results_t& values) {
        request.x = std::stod(values.front());
        return true;
    }, "evaluation point");
    cmd->add_option("--a", [&request](const CLI::results_t& values) {
        request.a = std::stod(values.front());
        return true;
    }, "lower bound");
    cmd->add_option("--b", b_text, "upper bound (a number or 'inf')");
    cmd->add_option("--n", request.n, "order for deriv-n");
    cmd->add_option("--expr2", [&request](const CLI::results_t& values) {
        request.expr2_text = values.front();
        return true;
    }, "second expression (g) for verify");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pqcalc: numerical engine for the two-exponent power-deformation calculus"};
    app.require_subcommand(1);

    pqcalc::cli::CliRequest request;
    std::string b_text;

    using pqcalc::cli::Command;
    struct Sub {
        const char* name;
        const char* help;
        Command command;
    };
    const Sub subs[] = {
        {"deriv", "pq-derivative at a point (limits at x = 0, 1)", Command::Deriv},
        {"deriv-n", "higher-order pq-derivative", Command::DerivN},
        {"integrate", "definite pq-integral over [a, b] ('inf' routes to improper)",
         Command::Integrate},
        {"improper", "improper pq-integral ([1,inf), [0,1], [0,inf), [a,inf))",
         Command::Improper},
        {"antideriv", "series pq-antiderivative at a point", Command::Antideriv},
        {"verify", "verify the structural laws for an expression pair", Command::Verify},
    };
    for (const Sub& sub : subs) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        add_common_options(cmd, request, b_text);
        cmd->callback([&request, command = sub.command] { request.command = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (!b_text.empty()) {
        if (b_text == "inf") {
            request.b_infinite = true;
        } else {
            try {
                request.b = std::stod(b_text);
            } catch (const std::exception&) {
                std::cerr << "error: usage: --b must be a number or 'inf'\n";
                return 1;
            }
        }
    }

    return pqcalc::cli::run_cli(request, std::cout, std::cerr);
}
