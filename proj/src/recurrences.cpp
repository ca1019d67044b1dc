#include "shuhan/recurrences.hpp"

#include <cmath>
#include <complex>

#include "shuhan/errors.hpp"

namespace shuhan {

bool SequenceId::is_valid() const
{
    switch (name) {
    case Seq::A: return index >= 0;
    case Seq::B: return index >= 2;
    case Seq::D: return index >= 4;
    case Seq::E: return index >= 6 && index <= 8;
    case Seq::F4: return index == 4;
    case Seq::G2: return index == 2;
    case Seq::HatB: return index >= 1;
    case Seq::HatBAff1: return index >= 3;
    case Seq::HatCAff1: return index >= 2;
    }
    return false;
}

void SequenceId::validate() const
{
    if (!is_valid()) {
        throw InvalidArgument("sequence index out of range: " + str());
    }
}

std::string SequenceId::name_str() const
{
    switch (name) {
    case Seq::A: return "a";
    case Seq::B: return "b";
    case Seq::D: return "d";
    case Seq::E: return "e";
    case Seq::F4: return "f4";
    case Seq::G2: return "g2";
    case Seq::HatB: return "hat_b";
    case Seq::HatBAff1: return "hat_b_aff1";
    case Seq::HatCAff1: return "hat_c_aff1";
    }
    return "?";
}

std::string SequenceId::str() const
{
    if (name == Seq::F4 || name == Seq::G2) {
        return name_str();
    }
    return name_str() + "_" + std::to_string(index);
}

Seq parse_seq(std::string_view text)
{
    for (Seq s : {Seq::A, Seq::B, Seq::D, Seq::E, Seq::F4, Seq::G2, Seq::HatB, Seq::HatBAff1, Seq::HatCAff1}) {
        if (SequenceId{s, 0}.name_str() == text) {
            return s;
        }
    }
    throw InvalidArgument("unknown sequence '" + std::string(text) + "'");
}

namespace {

template <typename T>
T lift(const Rational& c);

template <>
Rational lift<Rational>(const Rational& c)
{
    return c;
}

template <>
PolynomialQ lift<PolynomialQ>(const Rational& c)
{
    return PolynomialQ::constant(c);
}

// a_0 .. a_n
template <typename T>
std::vector<T> a_table(int n, const T& h)
{
    std::vector<T> a;
    a.push_back(lift<T>(Rational(1)));
    if (n >= 1) {
        a.push_back(h);
    }
    for (int k = 2; k <= n; ++k) {
        a.push_back(h * a[k - 1] - a[k - 2]);
    }
    return a;
}

// hat_b_0 .. hat_b_n with hat_b_0 unused (zero).
template <typename T>
std::vector<T> hat_b_table(int n, const T& h)
{
    std::vector<T> b(2, lift<T>(Rational(0)));
    b[1] = h;
    if (n >= 2) {
        b.push_back(h * h - lift<T>(Rational(9, 4)));
    }
    for (int k = 3; k <= n; ++k) {
        b.push_back(h * b[k - 1] - b[k - 2]);
    }
    return b;
}

template <typename T>
T evaluate(const SequenceId& id, const T& h)
{
    id.validate();
    const int n = id.index;
    switch (id.name) {
    case Seq::A: return a_table(n, h)[n];
    case Seq::B: {
        const auto a = a_table(n, h);
        return a[n] - a[n - 2];
    }
    case Seq::D: {
        const auto a = a_table(n - 1, h);
        return h * (a[n - 1] - a[n - 3]);
    }
    case Seq::E: {
        const auto a = a_table(n - 2, h);
        const T h2 = h * h;
        return (h2 - lift<T>(Rational(1))) * a[n - 2] - h2 * a[n - 4];
    }
    case Seq::F4: {
        const T h2 = h * h;
        return h2 * h2 - lift<T>(Rational(4)) * h2 + lift<T>(Rational(1));
    }
    case Seq::G2: return h * h - lift<T>(Rational(3));
    case Seq::HatB: return hat_b_table(n, h)[n];
    case Seq::HatBAff1: {
        const auto b = hat_b_table(n, h);
        return h * b[n] - h * b[n - 2];
    }
    case Seq::HatCAff1: {
        const auto b = hat_b_table(n, h);
        return h * b[n] - lift<T>(Rational(9, 4)) * b[n - 1];
    }
    }
    throw InvalidArgument("unknown sequence");
}

template <typename T>
T evaluate_e_via_d(int j, const T& h)
{
    if (j < 6 || j > 8) {
        throw InvalidArgument("e_j needs j in {6, 7, 8}");
    }
    const T d = evaluate(SequenceId{Seq::D, j - 1}, h);
    const T a = evaluate(SequenceId{Seq::A, j - 2}, h);
    return h * d - a;
}

} // namespace

Rational seq_eval(const SequenceId& id, const Rational& h)
{
    return evaluate<Rational>(id, h);
}

PolynomialQ seq_poly(const SequenceId& id)
{
    return evaluate<PolynomialQ>(id, PolynomialQ::x());
}

Rational e_via_d(int j, const Rational& h)
{
    return evaluate_e_via_d<Rational>(j, h);
}

PolynomialQ e_via_d_poly(int j)
{
    return evaluate_e_via_d<PolynomialQ>(j, PolynomialQ::x());
}

std::optional<std::pair<CartanLabel, Variant>> oracle_label(const SequenceId& id)
{
    id.validate();
    const int n = id.index;
    switch (id.name) {
    case Seq::A:
        if (n == 0) {
            return std::nullopt;
        }
        return std::pair{CartanLabel{Family::A, n, Twist::Finite}, Variant::Plain};
    case Seq::B: return std::pair{CartanLabel{Family::B, n, Twist::Finite}, Variant::Plain};
    case Seq::D: return std::pair{CartanLabel{Family::D, n, Twist::Finite}, Variant::Plain};
    case Seq::E: return std::pair{CartanLabel{Family::E, n, Twist::Finite}, Variant::Plain};
    case Seq::F4: return std::pair{CartanLabel{Family::F, 4, Twist::Finite}, Variant::Plain};
    case Seq::G2: return std::pair{CartanLabel{Family::G, 2, Twist::Finite}, Variant::Plain};
    case Seq::HatB:
        if (n == 1) {
            return std::nullopt;
        }
        return std::pair{CartanLabel{Family::B, n, Twist::Finite}, Variant::Symmetrized};
    case Seq::HatBAff1: return std::pair{CartanLabel{Family::B, n, Twist::Aff1}, Variant::Symmetrized};
    case Seq::HatCAff1: return std::pair{CartanLabel{Family::C, n, Twist::Aff1}, Variant::Symmetrized};
    }
    return std::nullopt;
}

long double closed_a_radical(int n, long double h)
{
    if (n < 0) {
        throw InvalidArgument("a_n needs n >= 0");
    }
    if (h == 2.0L) {
        throw InvalidArgument("radical form of a_n is singular at h = 2");
    }
    using C = std::complex<long double>;
    const C s = std::sqrt(C(h * h - 4.0L, 0.0L));
    const C r1 = (C(h, 0.0L) + s) / 2.0L;
    const C r2 = (C(h, 0.0L) - s) / 2.0L;
    const C value = (std::pow(r1, n + 1) - std::pow(r2, n + 1)) / s;
    if (std::abs(value.imag()) > 1e-12L * std::max(1.0L, std::abs(value.real()))) {
        throw std::logic_error("radical form left an imaginary residue");
    }
    return value.real();
}

long double closed_trig(Seq name, int n, long double h)
{
    if (!(h >= 0.0L && h < 2.0L)) {
        throw InvalidArgument("trigonometric form needs 0 <= h < 2");
    }
    if (name != Seq::A && name != Seq::B && name != Seq::D) {
        throw InvalidArgument("trigonometric form exists for a, b and d only");
    }
    SequenceId{name, n}.validate();
    const long double t = std::acos(h / 2.0L);
    switch (name) {
    case Seq::A: return std::sin((n + 1) * t) / std::sin(t);
    case Seq::B: return 2.0L * std::cos(n * t);
    default: return 4.0L * std::cos(t) * std::cos((n - 1) * t);
    }
}

ClosedForm sign_threshold(Seq name, int n)
{
    SequenceId{name, n}.validate();
    switch (name) {
    case Seq::A: return ClosedForm::two_cos_pi_over(n + 1);
    case Seq::B: return ClosedForm::two_cos_pi_over(2L * n);
    case Seq::D: return ClosedForm::two_cos_pi_over(2L * (n - 1));
    default: throw InvalidArgument("sign threshold exists for a, b and d only");
    }
}

long double e8_trig(long double theta)
{
    return 2.0L * (-2.0L * std::sin(5 * theta) * std::sin(3 * theta) + std::cos(6 * theta) - 0.5L);
}

} // namespace shuhan
