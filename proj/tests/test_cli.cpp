#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pqcalc/cli.hpp"
#include "pqcalc/integral.hpp"
#include "pqcalc/real_function.hpp"

using namespace pqcalc;
using cli::CliRequest;
using cli::Command;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run(const CliRequest& request) {
    std::ostringstream out, err;
    const int code = cli::run_cli(request, out, err);
    return {code, out.str(), err.str()};
}

double text_value(const std::string& out) {
    const auto pos = out.find("value ");
    REQUIRE(pos != std::string::npos);
    return std::stod(out.substr(pos + 6));
}

std::string text_status(const std::string& out) {
    const auto pos = out.find("status ");
    REQUIRE(pos != std::string::npos);
    const auto end = out.find('\n', pos);
    return out.substr(pos + 7, end - pos - 7);
}

CliRequest integrate_request() {
    CliRequest request;
    request.command = Command::Integrate;
    request.expr_text = "c";
    request.c = 5.0;
    request.p = 0.8;
    request.q = 0.4;
    request.a = 1.0;
    request.b = 4.0;
    return request;
}

} // namespace

TEST_CASE("integrate contract example") {
    const RunResult r = run(integrate_request());
    CHECK(r.exit_code == 0);
    CHECK(text_value(r.out) == doctest::Approx(15.0).epsilon(1e-10));
    CHECK(text_status(r.out) == "Converged");
}

TEST_CASE("deriv contract example") {
    CliRequest request;
    request.command = Command::Deriv;
    request.expr_text = "x^2";
    request.p = 2.0;
    request.q = 3.0;
    request.x = 2.0;
    const RunResult r = run(request);
    CHECK(r.exit_code == 0);
    CHECK(text_value(r.out) == doctest::Approx(12.0).epsilon(1e-13));
}

TEST_CASE("divergent integrand exits with code 2") {
    CliRequest request;
    request.command = Command::Integrate;
    request.expr_text = "1/(x^0.8 - x^0.4)";
    request.p = 0.8;
    request.q = 0.4;
    request.a = 1.0;
    request.b = 3.0;
    const RunResult r = run(request);
    CHECK(r.exit_code == 2);
    CHECK(text_status(r.out) == "DivergenceDetected");
}

TEST_CASE("json output carries the fixed key set with round-trip numbers") {
    CliRequest request = integrate_request();
    request.json = true;
    const RunResult r = run(request);
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc.is_object());
    CHECK(doc.size() == 8);
    for (const char* key :
         {"command", "p", "q", "inputs", "value", "status", "terms_used", "tail_estimate"})
        CHECK(doc.contains(key));
    CHECK(doc["command"] == "integrate");
    CHECK(doc["p"].get<double>() == 0.8);
    CHECK(doc["q"].get<double>() == 0.4);
    CHECK(doc["status"] == "Converged");
    CHECK(doc["inputs"]["expr"] == "c");
    CHECK(doc["inputs"]["b"].get<double>() == 4.0);

    // 17 significant digits round-trip: the JSON double equals the library
    // result bit for bit.
    const RealFunction f([](double) { return 5.0; }, Interval::nonnegative(), "c");
    const SeriesResult direct =
        definite_integral(1.0, 4.0, f, PqParams::integration(0.8, 0.4));
    CHECK(doc["value"].get<double>() == direct.value);
    CHECK(doc["terms_used"].get<std::size_t>() == direct.terms_used);
}

TEST_CASE("every command emits the same top-level json keys") {
    std::vector<CliRequest> requests;

    CliRequest deriv;
    deriv.command = Command::Deriv;
    deriv.expr_text = "x^2";
    deriv.p = 2.0;
    deriv.q = 3.0;
    deriv.x = 2.0;
    requests.push_back(deriv);

    CliRequest derivn = deriv;
    derivn.command = Command::DerivN;
    derivn.n = 2;
    requests.push_back(derivn);

    CliRequest anti;
    anti.command = Command::Antideriv;
    anti.expr_text = "c";
    anti.p = 0.8;
    anti.q = 0.4;
    anti.x = 4.0;
    requests.push_back(anti);

    requests.push_back(integrate_request());

    CliRequest improper;
    improper.command = Command::Improper;
    improper.expr_text = "(x^-0.4 - x^-0.8)/(x^0.8 - x^0.4)";
    improper.p = 0.8;
    improper.q = 0.4;
    improper.a = 2.0;
    improper.b_infinite = true;
    requests.push_back(improper);

    CliRequest verify;
    verify.command = Command::Verify;
    verify.expr_text = "x^2";
    verify.expr2_text = "x^3";
    verify.p = 0.8;
    verify.q = 0.4;
    requests.push_back(verify);

    for (CliRequest& request : requests) {
        request.json = true;
        const RunResult r = run(request);
        CAPTURE(static_cast<int>(request.command));
        const json doc = json::parse(r.out);
        CHECK(doc.size() == 8);
        for (const char* key :
             {"command", "p", "q", "inputs", "value", "status", "terms_used", "tail_estimate"})
            CHECK(doc.contains(key));
    }
}

TEST_CASE("improper command evaluates the tail closed form") {
    CliRequest request;
    request.command = Command::Improper;
    request.expr_text = "(x^-0.4 - x^-0.8)/(x^0.8 - x^0.4)";
    request.p = 0.8;
    request.q = 0.4;
    request.a = 2.0;
    request.b_infinite = true;
    const RunResult r = run(request);
    CHECK(r.exit_code == 0);
    CHECK(text_value(r.out) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("antideriv command") {
    CliRequest request;
    request.command = Command::Antideriv;
    request.expr_text = "c";
    request.c = 5.0;
    request.p = 0.8;
    request.q = 0.4;
    request.x = 4.0;
    const RunResult r = run(request);
    CHECK(r.exit_code == 0);
    CHECK(text_value(r.out) == doctest::Approx(15.0).epsilon(1e-10));
}

TEST_CASE("deriv-n command") {
    CliRequest request;
    request.command = Command::DerivN;
    request.expr_text = "x";
    request.p = 2.0;
    request.q = 3.0;
    request.x = 2.0;
    request.n = 2;
    const RunResult r = run(request);
    CHECK(r.exit_code == 0);
    CHECK(text_value(r.out) == doctest::Approx(0.0));
}

TEST_CASE("verify command passes for smooth pairs and fails loud for bad tolerance") {
    CliRequest request;
    request.command = Command::Verify;
    request.expr_text = "x^2";
    request.expr2_text = "x^3 + 1";
    request.p = 0.8;
    request.q = 0.4;
    const RunResult good = run(request);
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("law product_rules") != std::string::npos);
    CHECK(good.out.find("status Passed") != std::string::npos);

    request.tol = 1e-18; // unreachable tolerance: laws report failure, exit 2
    const RunResult bad = run(request);
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("status Failed") != std::string::npos);
}

TEST_CASE("verify json carries per-law reports") {
    CliRequest request;
    request.command = Command::Verify;
    request.expr_text = "x^2";
    request.p = 0.8;
    request.q = 0.4;
    request.json = true;
    const RunResult r = run(request);
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["inputs"].contains("laws"));
    CHECK(doc["inputs"]["laws"].size() == 5);
    for (const auto& law : doc["inputs"]["laws"]) {
        CHECK(law.contains("name"));
        CHECK(law.contains("max_residual"));
        CHECK(law.contains("passed"));
    }
    CHECK(doc["status"] == "Passed");
}

TEST_CASE("usage and parse failures exit with code 1") {
    CliRequest bad_expr = integrate_request();
    bad_expr.expr_text = "2 +";
    const RunResult r1 = run(bad_expr);
    CHECK(r1.exit_code == 1);
    CHECK(r1.err.find("error: parse:") != std::string::npos);

    CliRequest bad_mode = integrate_request();
    bad_mode.p = 2.0;
    bad_mode.q = 3.0;
    const RunResult r2 = run(bad_mode);
    CHECK(r2.exit_code == 1);
    CHECK(r2.err.find("error: usage:") != std::string::npos);

    CliRequest missing_x;
    missing_x.command = Command::Deriv;
    missing_x.expr_text = "x";
    missing_x.p = 2.0;
    missing_x.q = 3.0;
    const RunResult r3 = run(missing_x);
    CHECK(r3.exit_code == 1);

    CliRequest bad_eval = integrate_request();
    bad_eval.expr_text = "ln(0 - x)";
    const RunResult r4 = run(bad_eval);
    CHECK(r4.exit_code == 1);
    CHECK(r4.err.find("error:") != std::string::npos);
}

TEST_CASE("integrate routes an infinite upper bound to the improper machinery") {
    CliRequest request;
    request.command = Command::Integrate;
    request.expr_text = "(x^-0.4 - x^-0.8)/(x^0.8 - x^0.4)";
    request.p = 0.8;
    request.q = 0.4;
    request.a = 2.0;
    request.b_infinite = true;
    const RunResult r = run(request);
    CHECK(r.exit_code == 0);
    CHECK(text_value(r.out) == doctest::Approx(0.5).epsilon(1e-6));
}
