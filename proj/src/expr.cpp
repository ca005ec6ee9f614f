#include "dualif/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace dualif {

namespace {

enum class Kind { Number, Variable, Constant, Neg, Add, Sub, Mul, Div, Pow, Call };

constexpr std::array<const char*, 12> kFunctions = {
    "sin", "cos", "tan", "atan", "sinh", "cosh", "tanh",
    "exp", "log", "sqrt", "abs", "sign"};

bool is_function(const std::string& name) {
    for (const char* f : kFunctions)
        if (name == f) return true;
    return false;
}

}  // namespace

struct DynamicsExpr::Node {
    Kind kind;
    double number = 0.0;                   // Kind::Number
    std::string name;                      // Kind::Constant / Kind::Call
    std::shared_ptr<const Node> lhs, rhs;  // children (Neg/Call use lhs only)
};

namespace {

using NodePtr = std::shared_ptr<const DynamicsExpr::Node>;
using Node = DynamicsExpr::Node;

NodePtr make_node(Kind k, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    Parser(const std::string& src, const std::string& var) : src_(src), var_(var) {}

    NodePtr run() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError(pos_, "empty expression");
        NodePtr root = parse_expr();
        skip_ws();
        if (pos_ < src_.size())
            throw SyntaxError(pos_, std::string("unexpected '") + src_[pos_] + "'");
        return root;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (accept('+'))
                lhs = make_node(Kind::Add, lhs, parse_term());
            else if (accept('-'))
                lhs = make_node(Kind::Sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            if (accept('*'))
                lhs = make_node(Kind::Mul, lhs, parse_factor());
            else if (accept('/'))
                lhs = make_node(Kind::Div, lhs, parse_factor());
            else
                return lhs;
        }
    }

    NodePtr parse_factor() {
        NodePtr base = parse_unary();
        if (accept('^')) return make_node(Kind::Pow, base, parse_factor());
        return base;
    }

    NodePtr parse_unary() {
        if (accept('-')) return make_node(Kind::Neg, parse_unary());
        return parse_primary();
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError(pos_, "unexpected end of input");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
            return inner;
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    NodePtr parse_number() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && src_[start] == '.'))
            throw SyntaxError(start, "malformed number");
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            } else {
                pos_ = mark;  // "2e" is the number 2 followed by an identifier: reject below
            }
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_)
            throw SyntaxError(start, "malformed number");
        auto n = std::make_shared<Node>();
        n->kind = Kind::Number;
        n->number = value;
        return n;
    }

    NodePtr parse_ident() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        if (peek_is('(')) {
            if (!is_function(name)) throw UnknownIdentifierError(name);
            ++pos_;
            NodePtr arg = parse_expr();
            if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
            auto n = std::make_shared<Node>();
            n->kind = Kind::Call;
            n->name = name;
            n->lhs = arg;
            return n;
        }
        if (name == var_) return make_node(Kind::Variable);
        if (name == "pi" || name == "e") {
            auto n = std::make_shared<Node>();
            n->kind = Kind::Constant;
            n->name = name;
            return n;
        }
        throw UnknownIdentifierError(name);
    }

    const std::string& src_;
    const std::string& var_;
    std::size_t pos_ = 0;
};

double apply_function(const std::string& name, double a) {
    if (name == "sin") return std::sin(a);
    if (name == "cos") return std::cos(a);
    if (name == "tan") return std::tan(a);
    if (name == "atan") return std::atan(a);
    if (name == "sinh") return std::sinh(a);
    if (name == "cosh") return std::cosh(a);
    if (name == "tanh") return std::tanh(a);
    if (name == "exp") return std::exp(a);
    if (name == "log") {
        if (a <= 0.0) throw DomainError("log of non-positive value");
        return std::log(a);
    }
    if (name == "sqrt") {
        if (a < 0.0) throw DomainError("sqrt of negative value");
        return std::sqrt(a);
    }
    if (name == "abs") return std::fabs(a);
    // sign(0) = 0
    return a > 0.0 ? 1.0 : (a < 0.0 ? -1.0 : 0.0);
}

double check(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite result", /*overflow=*/true);
    return v;
}

double eval_node(const Node& n, double x) {
    switch (n.kind) {
        case Kind::Number: return n.number;
        case Kind::Variable: return x;
        case Kind::Constant: return n.name == "pi" ? M_PI : M_E;
        case Kind::Neg: return -eval_node(*n.lhs, x);
        case Kind::Add: return check(eval_node(*n.lhs, x) + eval_node(*n.rhs, x));
        case Kind::Sub: return check(eval_node(*n.lhs, x) - eval_node(*n.rhs, x));
        case Kind::Mul: return check(eval_node(*n.lhs, x) * eval_node(*n.rhs, x));
        case Kind::Div: {
            double b = eval_node(*n.rhs, x);
            if (b == 0.0) throw DomainError("division by zero");
            return check(eval_node(*n.lhs, x) / b);
        }
        case Kind::Pow: {
            double a = eval_node(*n.lhs, x);
            double b = eval_node(*n.rhs, x);
            if (a < 0.0 && b != std::floor(b))
                throw DomainError("negative base with non-integer exponent");
            return check(std::pow(a, b));
        }
        case Kind::Call: return check(apply_function(n.name, eval_node(*n.lhs, x)));
    }
    throw DomainError("corrupt expression tree");
}

std::string format_number(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

// Serialization precedence: higher binds tighter. A child is parenthesized
// whenever emitting it bare would reassociate under the grammar.
int prec(Kind k) {
    switch (k) {
        case Kind::Add:
        case Kind::Sub: return 1;
        case Kind::Mul:
        case Kind::Div: return 2;
        case Kind::Pow: return 3;
        case Kind::Neg: return 4;
        default: return 5;
    }
}

void serialize(const Node& n, const std::string& var, std::string& out) {
    auto child = [&](const Node& c, int min_prec) {
        if (prec(c.kind) < min_prec) {
            out += '(';
            serialize(c, var, out);
            out += ')';
        } else {
            serialize(c, var, out);
        }
    };
    switch (n.kind) {
        case Kind::Number: out += format_number(n.number); return;
        case Kind::Variable: out += var; return;
        case Kind::Constant: out += n.name; return;
        case Kind::Neg:
            out += '-';
            // the operand of unary minus is itself a unary production
            child(*n.lhs, 4);
            return;
        case Kind::Add:
        case Kind::Sub:
            child(*n.lhs, 1);
            out += (n.kind == Kind::Add ? '+' : '-');
            child(*n.rhs, 2);
            return;
        case Kind::Mul:
        case Kind::Div:
            child(*n.lhs, 2);
            out += (n.kind == Kind::Mul ? '*' : '/');
            child(*n.rhs, 3);
            return;
        case Kind::Pow:
            // base slot accepts a unary; exponent slot accepts a factor
            child(*n.lhs, 4);
            out += '^';
            child(*n.rhs, 3);
            return;
        case Kind::Call:
            out += n.name;
            out += '(';
            serialize(*n.lhs, var, out);
            out += ')';
            return;
    }
}

bool nodes_identical(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Kind::Number: return a.number == b.number;
        case Kind::Variable: return true;
        case Kind::Constant: return a.name == b.name;
        case Kind::Neg: return nodes_identical(*a.lhs, *b.lhs);
        case Kind::Call: return a.name == b.name && nodes_identical(*a.lhs, *b.lhs);
        default: return nodes_identical(*a.lhs, *b.lhs) && nodes_identical(*a.rhs, *b.rhs);
    }
}

}  // namespace

DynamicsExpr parse(const std::string& source, const std::string& var_name) {
    if (source.empty()) throw SyntaxError(0, "empty expression");
    if (var_name != "x" && var_name != "y" && var_name != "t")
        throw Error("variable name must be one of x, y, t");
    DynamicsExpr e;
    e.root_ = Parser(source, var_name).run();
    e.var_ = var_name;
    return e;
}

double DynamicsExpr::eval(double value) const {
    if (!root_) throw Error("evaluating empty expression");
    if (!std::isfinite(value)) throw DomainError("non-finite input value");
    return eval_node(*root_, value);
}

std::string DynamicsExpr::to_string() const {
    if (!root_) return "";
    std::string out;
    serialize(*root_, var_, out);
    return out;
}

bool DynamicsExpr::identical_to(const DynamicsExpr& other) const {
    if (!root_ || !other.root_) return root_ == other.root_;
    return var_ == other.var_ && nodes_identical(*root_, *other.root_);
}

}  // namespace dualif
