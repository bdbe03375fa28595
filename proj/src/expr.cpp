#include "pqcalc/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <vector>

#include "pqcalc/errors.hpp"

namespace pqcalc {

enum class UnaryOp { Neg, Ln, Exp, Sin, Cos, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class ConstantKind { Pi, E, C };

struct Expr::Node {
    enum class Kind { Number, Variable, Constant, Unary, Binary } kind;
    double number = 0.0;
    ConstantKind constant = ConstantKind::C;
    UnaryOp unary = UnaryOp::Neg;
    BinaryOp binary = BinaryOp::Add;
    NodePtr lhs;
    NodePtr rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = Expr::NodePtr;

NodePtr make_number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->number = v;
    return n;
}

NodePtr make_variable() {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Variable;
    return n;
}

NodePtr make_constant(ConstantKind k) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Constant;
    n->constant = k;
    return n;
}

NodePtr make_unary(UnaryOp op, NodePtr child) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Unary;
    n->unary = op;
    n->lhs = std::move(child);
    return n;
}

NodePtr make_binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->binary = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::size_t offset = 0;
    double number = 0.0;
    std::string ident;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if ((c >= '0' && c <= '9') || c == '.') {
            const std::size_t start = i;
            while (i < src.size() && src[i] >= '0' && src[i] <= '9') ++i;
            if (i < src.size() && src[i] == '.') {
                ++i;
                while (i < src.size() && src[i] >= '0' && src[i] <= '9') ++i;
            }
            // exponent suffix only when actually followed by digits
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
                if (j < src.size() && src[j] >= '0' && src[j] <= '9') {
                    while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
                    i = j;
                }
            }
            const std::string text(src.substr(start, i - start));
            if (text == ".")
                throw SyntaxError(start, "malformed number at offset " + std::to_string(start));
            Token t;
            t.kind = Token::Kind::Number;
            t.offset = start;
            t.number = std::strtod(text.c_str(), nullptr);
            tokens.push_back(t);
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            const std::size_t start = i;
            while (i < src.size() && ((src[i] >= 'a' && src[i] <= 'z') ||
                                      (src[i] >= 'A' && src[i] <= 'Z') ||
                                      (src[i] >= '0' && src[i] <= '9') || src[i] == '_'))
                ++i;
            Token t;
            t.kind = Token::Kind::Ident;
            t.offset = start;
            t.ident = std::string(src.substr(start, i - start));
            tokens.push_back(t);
            continue;
        }
        Token t;
        t.offset = i;
        switch (c) {
            case '+': t.kind = Token::Kind::Plus; break;
            case '-': t.kind = Token::Kind::Minus; break;
            case '*': t.kind = Token::Kind::Star; break;
            case '/': t.kind = Token::Kind::Slash; break;
            case '^': t.kind = Token::Kind::Caret; break;
            case '(': t.kind = Token::Kind::LParen; break;
            case ')': t.kind = Token::Kind::RParen; break;
            default:
                throw SyntaxError(i, std::string("unexpected character '") + c +
                                         "' at offset " + std::to_string(i));
        }
        tokens.push_back(t);
        ++i;
    }
    Token end;
    end.kind = Token::Kind::End;
    end.offset = src.size();
    tokens.push_back(end);
    return tokens;
}

// Grammar, loosest to tightest:
//   sum     := product (('+'|'-') product)*
//   product := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | 'x' | 'pi' | 'e' | 'c' | func '(' sum ')' | '(' sum ')'
class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    NodePtr run() {
        NodePtr root = parse_sum();
        expect(Token::Kind::End, "end of input");
        return root;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    bool accept(Token::Kind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    void expect(Token::Kind kind, const char* what) {
        if (!accept(kind))
            throw SyntaxError(peek().offset, std::string("expected ") + what + " at offset " +
                                                 std::to_string(peek().offset));
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        for (;;) {
            if (accept(Token::Kind::Plus))
                lhs = make_binary(BinaryOp::Add, lhs, parse_product());
            else if (accept(Token::Kind::Minus))
                lhs = make_binary(BinaryOp::Sub, lhs, parse_product());
            else
                return lhs;
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (accept(Token::Kind::Star))
                lhs = make_binary(BinaryOp::Mul, lhs, parse_unary());
            else if (accept(Token::Kind::Slash))
                lhs = make_binary(BinaryOp::Div, lhs, parse_unary());
            else
                return lhs;
        }
    }

    NodePtr parse_unary() {
        if (accept(Token::Kind::Minus)) return make_unary(UnaryOp::Neg, parse_unary());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (accept(Token::Kind::Caret)) return make_binary(BinaryOp::Pow, base, parse_unary());
        return base;
    }

    NodePtr parse_primary() {
        const Token t = take();
        switch (t.kind) {
            case Token::Kind::Number:
                return make_number(t.number);
            case Token::Kind::Ident: {
                if (t.ident == "x") return make_variable();
                if (t.ident == "pi") return make_constant(ConstantKind::Pi);
                if (t.ident == "e") return make_constant(ConstantKind::E);
                if (t.ident == "c") return make_constant(ConstantKind::C);
                UnaryOp op;
                if (t.ident == "ln") op = UnaryOp::Ln;
                else if (t.ident == "exp") op = UnaryOp::Exp;
                else if (t.ident == "sin") op = UnaryOp::Sin;
                else if (t.ident == "cos") op = UnaryOp::Cos;
                else if (t.ident == "sqrt") op = UnaryOp::Sqrt;
                else
                    throw SyntaxError(t.offset, "unknown identifier '" + t.ident +
                                                    "' at offset " + std::to_string(t.offset));
                expect(Token::Kind::LParen, "'(' after function name");
                NodePtr arg = parse_sum();
                expect(Token::Kind::RParen, "')'");
                return make_unary(op, arg);
            }
            case Token::Kind::LParen: {
                NodePtr inner = parse_sum();
                expect(Token::Kind::RParen, "')'");
                return inner;
            }
            default:
                throw SyntaxError(t.offset,
                                  "expected number, 'x', constant, function or '(' at offset " +
                                      std::to_string(t.offset));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::string format_number(double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

const char* unary_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::Neg: return "-";
        case UnaryOp::Ln: return "ln";
        case UnaryOp::Exp: return "exp";
        case UnaryOp::Sin: return "sin";
        case UnaryOp::Cos: return "cos";
        case UnaryOp::Sqrt: return "sqrt";
    }
    return "?";
}

// Precedence for printing: + - are 1, * / are 2, unary minus 3, ^ 4,
// atoms 5. Mirrors the grammar so printed output reparses identically.
int precedence(const NodePtr& n) {
    switch (n->kind) {
        case Node::Kind::Binary:
            switch (n->binary) {
                case BinaryOp::Add:
                case BinaryOp::Sub: return 1;
                case BinaryOp::Mul:
                case BinaryOp::Div: return 2;
                case BinaryOp::Pow: return 4;
            }
            return 1;
        case Node::Kind::Unary:
            return n->unary == UnaryOp::Neg ? 3 : 5;
        default:
            return 5;
    }
}

void print(const NodePtr& n, std::string& out) {
    auto child = [&](const NodePtr& c, bool parens) {
        if (parens) out += '(';
        print(c, out);
        if (parens) out += ')';
    };
    switch (n->kind) {
        case Node::Kind::Number:
            out += format_number(n->number);
            return;
        case Node::Kind::Variable:
            out += 'x';
            return;
        case Node::Kind::Constant:
            out += n->constant == ConstantKind::Pi ? "pi" : (n->constant == ConstantKind::E ? "e" : "c");
            return;
        case Node::Kind::Unary:
            if (n->unary == UnaryOp::Neg) {
                out += '-';
                child(n->lhs, precedence(n->lhs) < 3);
            } else {
                out += unary_name(n->unary);
                out += '(';
                print(n->lhs, out);
                out += ')';
            }
            return;
        case Node::Kind::Binary: {
            const int prec = precedence(n);
            if (n->binary == BinaryOp::Pow) {
                child(n->lhs, precedence(n->lhs) < 5); // left operand of ^ must be atomic
                out += '^';
                child(n->rhs, precedence(n->rhs) < 3);
            } else {
                const char* op = n->binary == BinaryOp::Add   ? " + "
                                 : n->binary == BinaryOp::Sub ? " - "
                                 : n->binary == BinaryOp::Mul ? " * "
                                                              : " / ";
                child(n->lhs, precedence(n->lhs) < prec);
                out += op;
                child(n->rhs, precedence(n->rhs) <= prec);
            }
            return;
        }
    }
}

std::string subtree_str(const NodePtr& n) {
    std::string out;
    print(n, out);
    return out;
}

double eval_node(const NodePtr& n, double x, const Bindings& bindings) {
    switch (n->kind) {
        case Node::Kind::Number:
            return n->number;
        case Node::Kind::Variable:
            return x;
        case Node::Kind::Constant:
            switch (n->constant) {
                case ConstantKind::Pi: return std::numbers::pi;
                case ConstantKind::E: return std::numbers::e;
                case ConstantKind::C: return bindings.c;
            }
            return 0.0;
        case Node::Kind::Unary: {
            const double v = eval_node(n->lhs, x, bindings);
            switch (n->unary) {
                case UnaryOp::Neg: return -v;
                case UnaryOp::Ln:
                    if (!(v > 0.0))
                        throw EvalError("ln of nonpositive value " + std::to_string(v) + " in '" +
                                        subtree_str(n) + "'");
                    return std::log(v);
                case UnaryOp::Exp: return std::exp(v);
                case UnaryOp::Sin: return std::sin(v);
                case UnaryOp::Cos: return std::cos(v);
                case UnaryOp::Sqrt:
                    if (v < 0.0)
                        throw EvalError("sqrt of negative value " + std::to_string(v) + " in '" +
                                        subtree_str(n) + "'");
                    return std::sqrt(v);
            }
            return 0.0;
        }
        case Node::Kind::Binary: {
            const double a = eval_node(n->lhs, x, bindings);
            const double b = eval_node(n->rhs, x, bindings);
            switch (n->binary) {
                case BinaryOp::Add: return a + b;
                case BinaryOp::Sub: return a - b;
                case BinaryOp::Mul: return a * b;
                case BinaryOp::Div:
                    if (b == 0.0)
                        throw EvalError("division by zero in '" + subtree_str(n) + "'");
                    return a / b;
                case BinaryOp::Pow: {
                    if (a == 0.0 && b < 0.0)
                        throw EvalError("zero raised to negative power in '" + subtree_str(n) +
                                        "'");
                    if (a < 0.0 && b != std::floor(b))
                        throw EvalError("negative base with non-integer exponent in '" +
                                        subtree_str(n) + "'");
                    return std::pow(a, b);
                }
            }
            return 0.0;
        }
    }
    return 0.0;
}

bool equal_nodes(const NodePtr& a, const NodePtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Node::Kind::Number: return a->number == b->number;
        case Node::Kind::Variable: return true;
        case Node::Kind::Constant: return a->constant == b->constant;
        case Node::Kind::Unary:
            return a->unary == b->unary && equal_nodes(a->lhs, b->lhs);
        case Node::Kind::Binary:
            return a->binary == b->binary && equal_nodes(a->lhs, b->lhs) &&
                   equal_nodes(a->rhs, b->rhs);
    }
    return false;
}

} // namespace

Expr parse_expr(std::string_view source) {
    Parser parser(source);
    return Expr(parser.run());
}

double eval_expr(const Expr& e, double x, const Bindings& bindings) {
    return eval_node(e.root(), x, bindings);
}

std::string to_string(const Expr& e) { return subtree_str(e.root()); }

bool equal(const Expr& a, const Expr& b) { return equal_nodes(a.root(), b.root()); }

RealFunction make_function(const Expr& e, const Bindings& bindings, std::string name) {
    const NodePtr root = e.root();
    return RealFunction(
        [root, bindings](double x) { return eval_node(root, x, bindings); },
        Interval::nonnegative(), std::move(name));
}

} // namespace pqcalc
