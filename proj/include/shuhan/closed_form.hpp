#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shuhan/polynomial.hpp"
#include "shuhan/rational.hpp"

namespace shuhan {

/// Immutable real expression tree over rationals, pi, sqrt, cos, sin and arctan.
/// A subtree may carry a name; str() prints it by name and definitions() lists it.
class Expr {
public:
    Expr(const Rational& value);
    Expr(long value) : Expr(Rational(value)) {}
    Expr(int value) : Expr(Rational(value)) {}

    static Expr pi();

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr sqrt(const Expr& a);
    friend Expr cos(const Expr& a);
    friend Expr sin(const Expr& a);
    friend Expr arctan(const Expr& a);

    /// The same value, printed as `name`.
    Expr named(std::string name) const;

    long double eval() const;
    std::string str() const;
    /// Like str(), but a named root is printed by its definition.
    std::string body_str() const;
    /// Named subexpressions, each after the names it depends on.
    std::vector<std::pair<std::string, Expr>> definitions() const;

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class ClosedTag { TwoCosPiOver, SqrtOfRational, Rational, NestedRadical, TrigExpression, LargestRootOf };

std::string closed_tag_name(ClosedTag tag);

/// Descriptor of an exact real number, evaluated in long double for display and
/// cross-checks only.
class ClosedForm {
public:
    /// 2 cos(pi / m), m >= 1.
    static ClosedForm two_cos_pi_over(long m);
    /// sqrt(q), q >= 0, printed as a*sqrt(b)/c with b squarefree.
    static ClosedForm sqrt_of(const Rational& q);
    static ClosedForm rational(const Rational& q);
    static ClosedForm nested_radical(Expr e);
    static ClosedForm trig_expression(Expr e);
    /// The largest real root of p (evaluated by Sturm bisection).
    static ClosedForm largest_root_of(PolynomialQ p);

    ClosedTag tag() const { return tag_; }
    /// The m of TwoCosPiOver, the q of SqrtOfRational / Rational.
    long pi_divisor() const { return m_; }
    const Rational& rational_value() const { return q_; }
    const std::optional<PolynomialQ>& polynomial() const { return poly_; }
    const std::optional<Expr>& expression() const { return expr_; }

    long double eval() const;
    /// "2*cos(pi/30)", "sqrt(25/12 + sqrt(157)/6*cos(theta1)) where theta1 = ...".
    std::string str() const;

private:
    ClosedTag tag_ = ClosedTag::Rational;
    long m_ = 0;
    Rational q_;
    std::optional<Expr> expr_;
    std::optional<PolynomialQ> poly_;
};

} // namespace shuhan
