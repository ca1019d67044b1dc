#include "shuhan/cartan.hpp"

#include <charconv>
#include <queue>

#include "shuhan/errors.hpp"

namespace shuhan {

char family_char(Family f)
{
    return static_cast<char>('A' + static_cast<int>(f));
}

Family parse_family(std::string_view text)
{
    if (text.size() == 1) {
        const char c = static_cast<char>(text[0] & ~0x20);
        if (c >= 'A' && c <= 'G') {
            return static_cast<Family>(c - 'A');
        }
    }
    throw InvalidArgument("unknown family '" + std::string(text) + "' (expected one of A..G)");
}

std::string twist_name(Twist t)
{
    switch (t) {
    case Twist::Finite: return "finite";
    case Twist::Aff1: return "aff1";
    case Twist::Aff2: return "aff2";
    case Twist::Aff3: return "aff3";
    }
    return "finite";
}

Twist parse_twist(std::string_view text)
{
    if (text == "finite" || text == "0") {
        return Twist::Finite;
    }
    if (text == "aff1" || text == "1") {
        return Twist::Aff1;
    }
    if (text == "aff2" || text == "2") {
        return Twist::Aff2;
    }
    if (text == "aff3" || text == "3") {
        return Twist::Aff3;
    }
    throw InvalidArgument("unknown twist '" + std::string(text) + "' (expected finite, aff1, aff2, aff3)");
}

bool CartanLabel::is_valid() const
{
    const int n = rank;
    switch (twist) {
    case Twist::Finite:
        switch (family) {
        case Family::A: return n >= 1;
        case Family::B: return n >= 2;
        case Family::C: return n >= 3;
        case Family::D: return n >= 4;
        case Family::E: return n >= 6 && n <= 8;
        case Family::F: return n == 4;
        case Family::G: return n == 2;
        }
        break;
    case Twist::Aff1:
        switch (family) {
        case Family::A: return n >= 1;
        case Family::B: return n >= 3;
        case Family::C: return n >= 2;
        case Family::D: return n >= 4;
        case Family::E: return n >= 6 && n <= 8;
        case Family::F: return n == 4;
        case Family::G: return n == 2;
        }
        break;
    case Twist::Aff2:
        switch (family) {
        case Family::A: return n == 2 || (n >= 4 && n % 2 == 0) || (n >= 5 && n % 2 == 1);
        case Family::D: return n >= 3;
        case Family::E: return n == 6;
        default: return false;
        }
    case Twist::Aff3:
        return family == Family::D && n == 4;
    }
    return false;
}

void CartanLabel::validate() const
{
    if (!is_valid()) {
        throw InvalidArgument("invalid Cartan label " + std::string(1, family_char(family))
                              + std::to_string(rank) + " with twist " + twist_name(twist));
    }
}

std::size_t CartanLabel::order() const
{
    validate();
    const auto n = static_cast<std::size_t>(rank);
    switch (twist) {
    case Twist::Finite: return n;
    case Twist::Aff1: return n + 1;
    case Twist::Aff2:
        if (family == Family::A) {
            return n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2 + 1;
        }
        if (family == Family::D) {
            return n;
        }
        return 5; // E6(2)
    case Twist::Aff3: return 3;
    }
    return n;
}

bool CartanLabel::is_symmetric() const
{
    if (twist == Twist::Finite || twist == Twist::Aff1) {
        return family == Family::A || family == Family::D || family == Family::E;
    }
    return false;
}

std::string CartanLabel::str() const
{
    std::string s(1, family_char(family));
    s += std::to_string(rank);
    switch (twist) {
    case Twist::Finite: break;
    case Twist::Aff1: s += "(1)"; break;
    case Twist::Aff2: s += "(2)"; break;
    case Twist::Aff3: s += "(3)"; break;
    }
    return s;
}

CartanLabel CartanLabel::parse(std::string_view text)
{
    if (text.size() < 2) {
        throw InvalidArgument("malformed label '" + std::string(text) + "'");
    }
    CartanLabel label;
    label.family = parse_family(text.substr(0, 1));
    std::string_view rest = text.substr(1);
    const auto paren = rest.find('(');
    const std::string_view digits = rest.substr(0, paren);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), label.rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw InvalidArgument("malformed label '" + std::string(text) + "'");
    }
    if (paren != std::string_view::npos) {
        const std::string_view suffix = rest.substr(paren);
        if (suffix.size() != 3 || suffix.back() != ')') {
            throw InvalidArgument("malformed label '" + std::string(text) + "'");
        }
        label.twist = parse_twist(suffix.substr(1, 1));
        if (label.twist == Twist::Finite) {
            throw InvalidArgument("malformed label '" + std::string(text) + "'");
        }
    }
    label.validate();
    return label;
}

std::vector<CartanLabel> all_labels(int max_rank, bool finite, bool affine)
{
    std::vector<CartanLabel> labels;
    std::vector<Twist> twists;
    if (finite) {
        twists.push_back(Twist::Finite);
    }
    if (affine) {
        twists.insert(twists.end(), {Twist::Aff1, Twist::Aff2, Twist::Aff3});
    }
    for (Twist t : twists) {
        for (int f = 0; f < 7; ++f) {
            for (int n = 1; n <= max_rank; ++n) {
                CartanLabel l{static_cast<Family>(f), n, t};
                if (l.is_valid()) {
                    labels.push_back(l);
                }
            }
        }
    }
    return labels;
}

std::optional<std::string> shuhan_violation(const MatrixQ& m, const Rational& h)
{
    if (h.sign() < 0) {
        return "diagonal value h must be >= 0";
    }
    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) != h) {
            return "diagonal entry " + std::to_string(i + 1) + " differs from h";
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const Rational& a = m(i, j);
            if (!a.is_integer() || a.sign() > 0) {
                return "off-diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                     + ") is not a nonpositive integer";
            }
            const Rational& b = m(j, i);
            if (a != b && !(a < b && b == Rational(-1))) {
                if (!(b < a && a == Rational(-1))) {
                    return "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                         + ") and its transpose are unequal and neither is -1 with the other smaller";
                }
            }
        }
    }
    return std::nullopt;
}

bool validate_shuhan(const MatrixQ& m, const Rational& h)
{
    return !shuhan_violation(m, h).has_value();
}

ShuhanMatrix::ShuhanMatrix(MatrixQ m, Rational h) : base_(std::move(m)), h_(std::move(h))
{
    if (auto why = shuhan_violation(base_, h_)) {
        throw InvalidArgument("not an h-Shuhan matrix: " + *why);
    }
}

namespace {

class GcmBuilder {
public:
    explicit GcmBuilder(std::size_t n) : m_(MatrixQ::diagonal(n, Rational(2))) {}

    // a_ij and a_ji for the bond between i and j.
    GcmBuilder& bond(std::size_t i, std::size_t j, long a_ij = -1, long a_ji = -1)
    {
        m_(i, j) = Rational(a_ij);
        m_(j, i) = Rational(a_ji);
        return *this;
    }

    GcmBuilder& chain(std::size_t first, std::size_t last)
    {
        for (std::size_t k = first; k < last; ++k) {
            bond(k, k + 1);
        }
        return *this;
    }

    MatrixQ take() { return std::move(m_); }

private:
    MatrixQ m_;
};

// Simply laced E_n in Bourbaki numbering, node k of the diagram at `offset + k - 1`.
void e_diagram(GcmBuilder& g, int n, std::size_t offset)
{
    auto at = [offset](std::size_t bourbaki) { return offset + bourbaki - 1; };
    g.bond(at(1), at(3)).bond(at(2), at(4));
    for (int k = 3; k < n; ++k) {
        g.bond(at(static_cast<std::size_t>(k)), at(static_cast<std::size_t>(k) + 1));
    }
}

// D_n in Bourbaki numbering: chain 1..n-1, node n attached to n-2.
void d_diagram(GcmBuilder& g, std::size_t n, std::size_t offset)
{
    g.chain(offset, offset + n - 2);
    g.bond(offset + n - 3, offset + n - 1);
}

MatrixQ finite_generator(Family family, std::size_t n)
{
    GcmBuilder g(n);
    switch (family) {
    case Family::A:
        g.chain(0, n - 1);
        break;
    case Family::B:
        g.chain(0, n - 2).bond(n - 2, n - 1, -2, -1);
        break;
    case Family::C:
        g.chain(0, n - 2).bond(n - 2, n - 1, -1, -2);
        break;
    case Family::D:
        d_diagram(g, n, 0);
        break;
    case Family::E:
        e_diagram(g, static_cast<int>(n), 0);
        break;
    case Family::F:
        g.bond(0, 1).bond(1, 2, -2, -1).bond(2, 3);
        break;
    case Family::G:
        g.bond(0, 1, -3, -1);
        break;
    }
    return g.take();
}

// Node 0 is the extra node; node i is the finite simple root i (Kac / Bourbaki numbering).
MatrixQ untwisted_generator(Family family, std::size_t n)
{
    GcmBuilder g(n + 1);
    switch (family) {
    case Family::A:
        if (n == 1) {
            g.bond(0, 1, -2, -2);
        } else {
            g.chain(0, n).bond(n, 0);
        }
        break;
    case Family::B:
        g.chain(1, n - 1).bond(n - 1, n, -2, -1).bond(0, 2);
        break;
    case Family::C:
        g.bond(0, 1, -2, -1).chain(1, n - 1).bond(n - 1, n, -1, -2);
        break;
    case Family::D:
        d_diagram(g, n, 1);
        g.bond(0, 2);
        break;
    case Family::E:
        e_diagram(g, static_cast<int>(n), 1);
        g.bond(0, n == 6 ? 2 : n == 7 ? 1 : 8);
        break;
    case Family::F:
        g.bond(0, 1).bond(1, 2).bond(2, 3, -2, -1).bond(3, 4);
        break;
    case Family::G:
        g.bond(0, 1).bond(1, 2, -3, -1);
        break;
    }
    return g.take();
}

MatrixQ twisted_generator(const CartanLabel& label)
{
    const std::size_t order = label.order();
    const std::size_t last = order - 1;
    GcmBuilder g(order);
    if (label.twist == Twist::Aff3) { // D4(3)
        g.bond(0, 1).bond(1, 2, -1, -3);
        return g.take();
    }
    switch (label.family) {
    case Family::A:
        if (label.rank == 2) {
            g.bond(0, 1, -4, -1);
        } else if (label.rank % 2 == 0) { // A_{2l}(2): double bonds at both ends, same direction
            g.bond(0, 1, -1, -2).chain(1, last - 1).bond(last - 1, last, -1, -2);
        } else { // A_{2l-1}(2): fork at node 2, double bond at the far end
            g.bond(0, 2).chain(1, last - 1).bond(last - 1, last, -1, -2);
        }
        break;
    case Family::D: // D_{l+1}(2): double bonds at both ends, pointing outward
        g.bond(0, 1, -1, -2).chain(1, last - 1).bond(last - 1, last, -2, -1);
        break;
    case Family::E: // E6(2)
        g.bond(0, 1).bond(1, 2).bond(2, 3, -1, -2).bond(3, 4);
        break;
    default:
        break;
    }
    return g.take();
}

} // namespace

MatrixQ generator(const CartanLabel& label)
{
    label.validate();
    const auto n = static_cast<std::size_t>(label.rank);
    switch (label.twist) {
    case Twist::Finite: return finite_generator(label.family, n);
    case Twist::Aff1: return untwisted_generator(label.family, n);
    default: return twisted_generator(label);
    }
}

ShuhanMatrix build(const CartanLabel& label, const Rational& h)
{
    if (h.sign() < 0) {
        throw InvalidArgument("h must be >= 0, got " + h.str());
    }
    return ShuhanMatrix(generator(label).shifted(h - 2), h);
}

bool is_indecomposable(const MatrixQ& m)
{
    const std::size_t n = m.order();
    if (n == 0) {
        return false;
    }
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
        const std::size_t i = todo.front();
        todo.pop();
        for (std::size_t j = 0; j < n; ++j) {
            if (!seen[j] && (!m(i, j).is_zero() || !m(j, i).is_zero())) {
                seen[j] = true;
                ++reached;
                todo.push(j);
            }
        }
    }
    return reached == n;
}

} // namespace shuhan
