#include <doctest.h>

#include <cmath>
#include <vector>

#include "pqcalc/errors.hpp"
#include "pqcalc/expr.hpp"

using namespace pqcalc;

TEST_CASE("parse structure") {
    CHECK(to_string(parse_expr("x^2 + 3")) == "x^2 + 3");
    CHECK(to_string(parse_expr("ln(x)/(x^0.8 - x^0.4)")) == "ln(x) / (x^0.8 - x^0.4)");
    CHECK(to_string(parse_expr("1+2*3")) == "1 + 2 * 3");
    CHECK(to_string(parse_expr("(1+2)*3")) == "(1 + 2) * 3");
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_expr("2 +");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 3);
    }
    try {
        parse_expr("ln 4");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_expr("2 $ 3"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("foo(x)"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(1+2"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("1 2"), SyntaxError);
    CHECK_THROWS_AS(parse_expr(""), SyntaxError);
}

TEST_CASE("evaluation") {
    CHECK(eval_expr(parse_expr("c"), 7.0, {5.0}) == 5.0);
    CHECK(eval_expr(parse_expr("c"), 7.0) == 1.0); // default binding
    CHECK(eval_expr(parse_expr("x^2"), 3.0) == 9.0);
    CHECK(eval_expr(parse_expr("ln(x)"), 0.5) == doctest::Approx(-0.6931471805599453));
    CHECK(eval_expr(parse_expr("pi"), 1.0) == doctest::Approx(3.14159265358979));
    CHECK(eval_expr(parse_expr("e"), 1.0) == doctest::Approx(2.718281828459045));
    CHECK(eval_expr(parse_expr("2e3"), 1.0) == 2000.0);
    CHECK(eval_expr(parse_expr("sqrt(x) * cos(0) + sin(0)"), 16.0) == doctest::Approx(4.0));
    CHECK(eval_expr(parse_expr("exp(1)"), 1.0) == doctest::Approx(2.718281828459045));
    CHECK(eval_expr(parse_expr("x^-2"), 2.0) == doctest::Approx(0.25));
}

TEST_CASE("precedence and associativity") {
    CHECK(eval_expr(parse_expr("2^3^2"), 1.0) == 512.0);   // right-associative
    CHECK(eval_expr(parse_expr("-2^2"), 1.0) == -4.0);      // ^ binds tighter than unary minus
    CHECK(eval_expr(parse_expr("2*-3"), 1.0) == -6.0);
    CHECK(eval_expr(parse_expr("1 - 2 - 3"), 1.0) == -4.0); // left-associative
    CHECK(eval_expr(parse_expr("12/3/2"), 1.0) == 2.0);
    CHECK(eval_expr(parse_expr("1 + 2 * 3 ^ 2"), 1.0) == 19.0);
}

TEST_CASE("domain faults name the subtree") {
    try {
        eval_expr(parse_expr("ln(x - 2)"), 1.0);
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("ln(x - 2)") != std::string::npos);
    }
    CHECK_THROWS_AS(eval_expr(parse_expr("1/(x - 2)"), 2.0), EvalError);
    CHECK_THROWS_AS(eval_expr(parse_expr("sqrt(0 - x)"), 4.0), EvalError);
    CHECK_THROWS_AS(eval_expr(parse_expr("(0-2)^0.5"), 1.0), EvalError);
    CHECK_THROWS_AS(eval_expr(parse_expr("0^-1"), 1.0), EvalError);
}

TEST_CASE("print and reparse give an identical tree") {
    const std::vector<std::string> corpus = {
        "x", "c", "pi", "e", "42", "0.8", "1e-3", "2.5e2",
        "x + 1", "x - 1", "1 - x - 2", "x * 2", "x / 2", "x ^ 2",
        "x^2 + 3", "x^2 - x^3", "x^(2 + 1)", "(x + 1)^2", "2^3^2",
        "-x", "-x^2", "(-x)^2", "--x", "-(x + 1)", "2 * -3", "-(x*2)",
        "ln(x)", "exp(x)", "sin(x)", "cos(x)", "sqrt(x)",
        "ln(x)/(x^0.8 - x^0.4)", "1/(x^0.8 - x^0.4)",
        "c * x ^ 2 - pi / e", "sin(cos(ln(exp(x))))",
        "x * (x + 1) * (x + 2)", "x / (x + 1) / (x + 2)",
        "(x + 1) / (x - 1)", "x - (x - 1)", "x / (x * 2)",
        "sqrt(x^2 + 1)", "exp(-x^2)", "x^x", "x^(0 - x)",
        "2 + 3 * 4 - 5 / 6", "(2 + 3) * (4 - 5) / 6",
        "c*c*c", "pi^2", "x^2^x", "-(x ^ (2 * x))",
    };
    CHECK(corpus.size() >= 50);
    for (const std::string& source : corpus) {
        CAPTURE(source);
        const Expr first = parse_expr(source);
        const Expr second = parse_expr(to_string(first));
        CHECK(equal(first, second));
    }
}

TEST_CASE("expression functions adapt to the library interface") {
    const RealFunction f = make_function(parse_expr("c * x^2"), {3.0}, "f");
    CHECK(f(2.0) == 12.0);
    CHECK(f.domain().contains(0.0));
    CHECK_THROWS_AS(f(-1.0), DomainError);
}
