#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "pqcalc/real_function.hpp"

namespace pqcalc {

/// Values bound to the named constants of an expression.
struct Bindings {
    double c = 1.0;
};

/// A parsed arithmetic expression in one variable x: number literals, the
/// named constants pi, e and c, the unary functions neg/ln/exp/sin/cos/sqrt,
/// and the binary operators + - * / ^ (with ^ right-associative and binding
/// tighter than unary minus).
class Expr {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    explicit Expr(NodePtr root) : root_(std::move(root)) {}

    const NodePtr& root() const { return root_; }

private:
    NodePtr root_;
};

/// Recursive-descent parse. Throws SyntaxError carrying the byte offset of
/// the offending token and what was expected there.
Expr parse_expr(std::string_view source);

/// Standard real evaluation at x. Domain faults (ln of a nonpositive value,
/// division by zero, sqrt of a negative, 0 raised to a negative power,
/// a negative base raised to a non-integer power) throw EvalError naming
/// the offending subtree.
double eval_expr(const Expr& e, double x, const Bindings& bindings = {});

/// Prints the expression; the output reparses to a structurally identical
/// tree.
std::string to_string(const Expr& e);

/// Structural tree equality.
bool equal(const Expr& a, const Expr& b);

/// Adapts the expression to a RealFunction on [0, inf) under the given
/// bindings.
RealFunction make_function(const Expr& e, const Bindings& bindings = {},
                           std::string name = "expr");

} // namespace pqcalc
