#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "shuhan/definiteness.hpp"
#include "shuhan/matrix.hpp"
#include "shuhan/polynomial.hpp"
#include "shuhan/roots.hpp"
#include "shuhan/thresholds.hpp"

namespace shuhan {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings; index subsets are 1-based.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"order": n, "h": "p/q" | null, "entries": [["p/q", ...], ...]}
Json matrix_to_json(const MatrixQ& m, const std::optional<Rational>& h);
/// Throws InvalidArgument on schema violations. "h" is optional.
std::pair<MatrixQ, std::optional<Rational>> matrix_from_json(const Json& j);

/// {"coeffs": ["p/q", ...]} ascending.
Json to_json(const PolynomialQ& p);
PolynomialQ polynomial_from_json(const Json& j);

/// {"lo": "p/q", "hi": "p/q", "poly": {...}}
Json to_json(const RootBracket& b);

/// {"notion": "...", "verdict": bool, "witness": {"subset": [...]} | {"vector": [...]} | null}
Json to_json(const NotionReport& r);

/// {"order", "h", "symmetric", "verdicts": [...]}; symmetric notions on a
/// non-symmetric matrix are omitted.
Json to_json(const ClassificationReport& r, const std::optional<Rational>& h);

/// {"name", "label", "notion", "closed", "closed_tag", "lo", "hi", "approx"}
Json to_json(const ThresholdRecord& t);

/// Decimal digits of lo and hi truncated to `digits` places agree.
bool digits_agree(const RootBracket& b, int digits);
/// Refines until digits_agree, or to an exact bracket.
RootBracket refine_to_digits(const RootBracket& b, int digits);

} // namespace shuhan
