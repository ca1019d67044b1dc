#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shuhan/cartan.hpp"
#include "shuhan/definiteness.hpp"
#include "shuhan/matrix.hpp"
#include "shuhan/thresholds.hpp"

namespace shuhan {

struct CheckLine {
    std::string text;
    bool pass = false;
    /// Informational lines never fail a suite.
    bool note = false;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckLine> lines;
    bool passed() const;
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();
/// Resolves a suite name or one of its aliases; nullopt if unknown.
std::optional<std::string> canonical_suite(std::string_view name);
/// Throws InvalidArgument for an unknown suite.
SuiteResult run_suite(std::string_view name, std::uint64_t seed = 0x5eed5eedULL);

// Shared helpers, also used by the CLI and tests.

/// Verdict of one notion on build(label, h), straight from the checkers.
bool notion_holds(const CartanLabel& label, Notion notion, const Rational& h);

/// Threshold flip at a record: both variants pass just above the bracket, both fail
/// just below it (when that is still >= 0), and at an exact rational threshold
/// the semi-definite variant passes while the strict one fails.
struct FlipResult {
    bool above = false;
    std::optional<bool> below;
    std::optional<bool> at;
    bool ok() const { return above && below.value_or(true) && at.value_or(true); }
};
FlipResult check_flip(const CartanLabel& label, Notion notion, const RootBracket& bracket);

/// Labels whose generalized notion holds at h = 2 by the h = 2 membership table
/// (B_n, 2 <= n <= 9, covers its transpose C_n).
bool expected_generalized_psd_at_2(const CartanLabel& label);
bool expected_generalized_pd_at_2(const CartanLabel& label);

using Rng = std::mt19937_64;
Rational random_rational(Rng& rng, long lo, long hi, long max_den);
MatrixQ random_matrix(Rng& rng, std::size_t n, long bound, long max_den);
MatrixQ random_shuhan(Rng& rng, std::size_t n, const Rational& h);

} // namespace shuhan
