#include "shuhan/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shuhan/errors.hpp"
#include "shuhan/roots.hpp"

namespace shuhan {

struct Expr::Node {
    enum class Kind { Number, Pi, Add, Sub, Mul, Div, Neg, Sqrt, Cos, Sin, Arctan };
    Kind kind = Kind::Number;
    Rational value;
    std::string name;
    std::vector<std::shared_ptr<const Node>> args;
};

using Kind = Expr::Node::Kind;

namespace {

std::shared_ptr<const Expr::Node> make(Kind kind, std::vector<std::shared_ptr<const Expr::Node>> args)
{
    auto n = std::make_shared<Expr::Node>();
    n->kind = kind;
    n->args = std::move(args);
    return n;
}

long double eval_node(const Expr::Node& n)
{
    auto arg = [&](std::size_t i) { return eval_node(*n.args[i]); };
    switch (n.kind) {
    case Kind::Number: return n.value.to_long_double();
    case Kind::Pi: return std::numbers::pi_v<long double>;
    case Kind::Add: return arg(0) + arg(1);
    case Kind::Sub: return arg(0) - arg(1);
    case Kind::Mul: return arg(0) * arg(1);
    case Kind::Div: return arg(0) / arg(1);
    case Kind::Neg: return -arg(0);
    case Kind::Sqrt: return std::sqrt(arg(0));
    case Kind::Cos: return std::cos(arg(0));
    case Kind::Sin: return std::sin(arg(0));
    case Kind::Arctan: return std::atan(arg(0));
    }
    return 0;
}

// Binding strength: 1 sums, 2 products, 3 unary minus, 4 atoms and calls.
int precedence(const Expr::Node& n)
{
    if (!n.name.empty()) {
        return 4;
    }
    switch (n.kind) {
    case Kind::Number:
        if (n.value.sign() < 0) {
            return 1;
        }
        return n.value.is_integer() ? 4 : 2;
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    default: return 4;
    }
}

std::string print(const Expr::Node& n, bool expand_name = false);

std::string wrapped(const Expr::Node& n, int min_prec)
{
    const std::string s = print(n);
    return precedence(n) < min_prec ? "(" + s + ")" : s;
}

std::string print(const Expr::Node& n, bool expand_name)
{
    if (!n.name.empty() && !expand_name) {
        return n.name;
    }
    auto call = [&](const char* f) { return std::string(f) + "(" + print(*n.args[0]) + ")"; };
    switch (n.kind) {
    case Kind::Number: return n.value.str();
    case Kind::Pi: return "pi";
    case Kind::Add: return wrapped(*n.args[0], 1) + " + " + wrapped(*n.args[1], 1);
    case Kind::Sub: return wrapped(*n.args[0], 1) + " - " + wrapped(*n.args[1], 2);
    case Kind::Mul: return wrapped(*n.args[0], 2) + "*" + wrapped(*n.args[1], 3);
    case Kind::Div: return wrapped(*n.args[0], 2) + "/" + wrapped(*n.args[1], 3);
    case Kind::Neg: return "-" + wrapped(*n.args[0], 3);
    case Kind::Sqrt: return call("sqrt");
    case Kind::Cos: return call("cos");
    case Kind::Sin: return call("sin");
    case Kind::Arctan: return call("arctan");
    }
    return "?";
}

void collect(const std::shared_ptr<const Expr::Node>& n,
             std::vector<std::pair<std::string, std::shared_ptr<const Expr::Node>>>& out)
{
    for (const auto& a : n->args) {
        collect(a, out);
    }
    if (!n->name.empty()) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& p) { return p.first == n->name; });
        if (!seen) {
            out.emplace_back(n->name, n);
        }
    }
}

} // namespace

Expr::Expr(const Rational& value)
{
    auto n = std::make_shared<Node>();
    n->value = value;
    node_ = n;
}

Expr Expr::pi()
{
    return Expr(make(Kind::Pi, {}));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr(make(Kind::Add, {a.node_, b.node_})); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make(Kind::Sub, {a.node_, b.node_})); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make(Kind::Mul, {a.node_, b.node_})); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make(Kind::Div, {a.node_, b.node_})); }
Expr operator-(const Expr& a) { return Expr(make(Kind::Neg, {a.node_})); }
Expr sqrt(const Expr& a) { return Expr(make(Kind::Sqrt, {a.node_})); }
Expr cos(const Expr& a) { return Expr(make(Kind::Cos, {a.node_})); }
Expr sin(const Expr& a) { return Expr(make(Kind::Sin, {a.node_})); }
Expr arctan(const Expr& a) { return Expr(make(Kind::Arctan, {a.node_})); }

Expr Expr::named(std::string name) const
{
    auto n = std::make_shared<Node>(*node_);
    n->name = std::move(name);
    return Expr(std::shared_ptr<const Node>(n));
}

long double Expr::eval() const
{
    return eval_node(*node_);
}

std::string Expr::str() const
{
    return print(*node_);
}

std::string Expr::body_str() const
{
    return print(*node_, true);
}

std::vector<std::pair<std::string, Expr>> Expr::definitions() const
{
    std::vector<std::pair<std::string, std::shared_ptr<const Node>>> found;
    collect(node_, found);
    std::vector<std::pair<std::string, Expr>> out;
    for (auto& [name, node] : found) {
        if (node != node_) {
            out.emplace_back(name, Expr(node));
        }
    }
    return out;
}

std::string closed_tag_name(ClosedTag tag)
{
    switch (tag) {
    case ClosedTag::TwoCosPiOver: return "two_cos_pi_over";
    case ClosedTag::SqrtOfRational: return "sqrt_of_rational";
    case ClosedTag::Rational: return "rational";
    case ClosedTag::NestedRadical: return "nested_radical";
    case ClosedTag::TrigExpression: return "trig_expression";
    case ClosedTag::LargestRootOf: return "largest_root_of";
    }
    return "?";
}

ClosedForm ClosedForm::two_cos_pi_over(long m)
{
    if (m < 1) {
        throw InvalidArgument("2cos(pi/m) needs m >= 1");
    }
    ClosedForm c;
    c.tag_ = ClosedTag::TwoCosPiOver;
    c.m_ = m;
    c.expr_ = Expr(2) * cos(Expr::pi() / Expr(m));
    return c;
}

ClosedForm ClosedForm::sqrt_of(const Rational& q)
{
    if (q.sign() < 0) {
        throw InvalidArgument("square root of a negative rational");
    }
    ClosedForm c;
    c.tag_ = ClosedTag::SqrtOfRational;
    c.q_ = q;
    // sqrt(p/r) = sqrt(p*r)/r = a*sqrt(b)/r with b squarefree.
    const Integer pr = q.num() * q.den();
    Integer a = 1;
    Integer b = 1;
    Integer rest = pr;
    for (Integer f = 2; f * f <= rest; ++f) {
        while (rest % (f * f) == 0) {
            rest /= f * f;
            a *= f;
        }
    }
    b = rest;
    const Rational coef(a, q.den());
    if (b == 1 || q.is_zero()) {
        c.expr_ = Expr(q.is_zero() ? Rational(0) : coef);
    } else if (coef.num() == 1) {
        c.expr_ = coef.is_integer() ? sqrt(Expr(Rational(b)))
                                    : sqrt(Expr(Rational(b))) / Expr(Rational(coef.den()));
    } else {
        c.expr_ = coef.is_integer() ? Expr(coef) * sqrt(Expr(Rational(b)))
                                    : Expr(Rational(coef.num())) * sqrt(Expr(Rational(b))) /
                                          Expr(Rational(coef.den()));
    }
    return c;
}

ClosedForm ClosedForm::rational(const Rational& q)
{
    ClosedForm c;
    c.tag_ = ClosedTag::Rational;
    c.q_ = q;
    c.expr_ = Expr(q);
    return c;
}

ClosedForm ClosedForm::nested_radical(Expr e)
{
    ClosedForm c;
    c.tag_ = ClosedTag::NestedRadical;
    c.expr_ = std::move(e);
    return c;
}

ClosedForm ClosedForm::trig_expression(Expr e)
{
    ClosedForm c;
    c.tag_ = ClosedTag::TrigExpression;
    c.expr_ = std::move(e);
    return c;
}

ClosedForm ClosedForm::largest_root_of(PolynomialQ p)
{
    ClosedForm c;
    c.tag_ = ClosedTag::LargestRootOf;
    c.poly_ = std::move(p);
    return c;
}

long double ClosedForm::eval() const
{
    if (tag_ == ClosedTag::Rational) {
        return q_.to_long_double();
    }
    if (tag_ == ClosedTag::LargestRootOf) {
        return refine(isolate_largest_root(*poly_), Rational::pow2(-72)).approx();
    }
    return expr_->eval();
}

std::string ClosedForm::str() const
{
    if (tag_ == ClosedTag::LargestRootOf) {
        return "largest root of " + poly_->str("h");
    }
    std::string s = expr_->str();
    const auto defs = expr_->definitions();
    for (std::size_t i = 0; i < defs.size(); ++i) {
        s += (i == 0 ? " where " : ", ") + defs[i].first + " = " + defs[i].second.body_str();
    }
    return s;
}

} // namespace shuhan
