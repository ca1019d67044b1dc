#include "shuhan/serialize.hpp"

#include "shuhan/errors.hpp"

namespace shuhan {

Json to_json(const Rational& q)
{
    return q.str();
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw InvalidArgument("expected a rational string \"p/q\", got " + j.dump());
}

Json matrix_to_json(const MatrixQ& m, const std::optional<Rational>& h)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.order(); ++j) {
            row.push_back(to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    Json out;
    out["order"] = m.order();
    out["h"] = h ? to_json(*h) : Json(nullptr);
    out["entries"] = std::move(rows);
    return out;
}

std::pair<MatrixQ, std::optional<Rational>> matrix_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
        throw InvalidArgument("matrix JSON needs an \"entries\" array");
    }
    const Json& rows = j["entries"];
    const std::size_t n = rows.size();
    if (n == 0) {
        throw InvalidArgument("matrix JSON has no rows");
    }
    if (j.contains("order") && (!j["order"].is_number_unsigned() || j["order"].get<std::size_t>() != n)) {
        throw InvalidArgument("matrix JSON \"order\" does not match the entries");
    }
    MatrixQ m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) {
            throw InvalidArgument("matrix JSON is not square");
        }
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = rational_from_json(rows[r][c]);
        }
    }
    std::optional<Rational> h;
    if (j.contains("h") && !j["h"].is_null()) {
        h = rational_from_json(j["h"]);
    }
    return {std::move(m), h};
}

Json to_json(const PolynomialQ& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return Json{{"coeffs", std::move(coeffs)}};
}

PolynomialQ polynomial_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw InvalidArgument("polynomial JSON needs a \"coeffs\" array");
    }
    std::vector<Rational> c;
    for (const auto& v : j["coeffs"]) {
        c.push_back(rational_from_json(v));
    }
    return PolynomialQ(std::move(c));
}

Json to_json(const RootBracket& b)
{
    Json out;
    out["lo"] = to_json(b.lo);
    out["hi"] = to_json(b.hi);
    out["poly"] = to_json(b.poly);
    return out;
}

Json to_json(const NotionReport& r)
{
    Json out;
    out["notion"] = notion_name(r.notion);
    out["verdict"] = r.verdict;
    if (const auto* s = std::get_if<IndexSet>(&r.witness)) {
        Json idx = Json::array();
        for (std::size_t i : *s) {
            idx.push_back(i + 1);
        }
        out["witness"] = Json{{"subset", std::move(idx)}};
    } else if (const auto* x = std::get_if<Vector>(&r.witness)) {
        Json v = Json::array();
        for (const auto& e : *x) {
            v.push_back(to_json(e));
        }
        out["witness"] = Json{{"vector", std::move(v)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json to_json(const ClassificationReport& r, const std::optional<Rational>& h)
{
    Json out;
    out["order"] = r.order;
    out["h"] = h ? to_json(*h) : Json(nullptr);
    out["symmetric"] = r.symmetric;
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        if (v.applicable) {
            verdicts.push_back(to_json(v));
        }
    }
    out["verdicts"] = std::move(verdicts);
    return out;
}

Json to_json(const ThresholdRecord& t)
{
    Json out;
    out["name"] = t.name;
    out["label"] = t.label ? Json(t.label->str()) : Json(nullptr);
    out["notion"] = notion_name(t.notion);
    out["closed"] = t.closed ? Json(t.closed->str()) : Json(nullptr);
    out["closed_tag"] = t.closed ? Json(closed_tag_name(t.closed->tag())) : Json(nullptr);
    out["lo"] = to_json(t.bracket.lo);
    out["hi"] = to_json(t.bracket.hi);
    out["approx"] = static_cast<double>(t.approx);
    return out;
}

bool digits_agree(const RootBracket& b, int digits)
{
    return b.lo.decimal(digits) == b.hi.decimal(digits);
}

RootBracket refine_to_digits(const RootBracket& b, int digits)
{
    if (digits < 0) {
        throw InvalidArgument("digits must be nonnegative");
    }
    RootBracket r = b;
    while (!r.is_exact() && !digits_agree(r, digits)) {
        r = refine(r, r.width() / Rational(16));
    }
    return r;
}

} // namespace shuhan
