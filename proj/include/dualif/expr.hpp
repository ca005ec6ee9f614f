#pragma once

#include <memory>
#include <string>

#include "dualif/errors.hpp"

namespace dualif {

/// A parsed arithmetic expression in a single variable.
///
/// Grammar (whitespace insignificant):
///   expr   := term { ("+"|"-") term }
///   term   := factor { ("*"|"/") factor }
///   factor := unary [ "^" factor ]        -- right-associative
///   unary  := "-" unary | primary
///   primary:= NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")"
///
/// IDENT constants: pi, e. Functions: sin cos tan atan sinh cosh tanh exp
/// log sqrt abs sign. Note the base of "^" is a unary production, so
/// "-x^2" parses as (-x)^2.
///
/// Instances are immutable values; evaluation is pure and thread-safe.
class DynamicsExpr {
public:
    struct Node;

    DynamicsExpr() = default;

    /// Evaluate at the given variable value. Throws DomainError on domain
    /// violations or when any intermediate result is non-finite.
    double eval(double value) const;

    /// Canonical serialization. Reparsing the result yields a structurally
    /// identical tree.
    std::string to_string() const;

    const std::string& var_name() const { return var_; }
    bool empty() const { return root_ == nullptr; }

    bool identical_to(const DynamicsExpr& other) const;

    friend DynamicsExpr parse(const std::string& source, const std::string& var_name);

private:
    std::shared_ptr<const Node> root_;
    std::string var_;
};

/// Parse `source` with the free variable `var_name` (one of "x", "y", "t").
/// Throws SyntaxError / UnknownIdentifierError.
DynamicsExpr parse(const std::string& source, const std::string& var_name);

}  // namespace dualif
