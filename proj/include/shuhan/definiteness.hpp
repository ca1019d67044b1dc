#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shuhan/matrix.hpp"

namespace shuhan {

enum class Notion { SymPSD, SymPD, VirtualPSD, VirtualPD, GeneralizedPSD, GeneralizedPD };

inline constexpr std::array<Notion, 6> kAllNotions = {
    Notion::SymPSD,     Notion::SymPD,          Notion::VirtualPSD,
    Notion::VirtualPD,  Notion::GeneralizedPSD, Notion::GeneralizedPD,
};

/// "sym_psd", "virtual_pd", ...
std::string notion_name(Notion notion);
Notion parse_notion(std::string_view text);
bool is_strict(Notion notion);
/// The semi-definite notion with the same threshold (SymPD -> SymPSD, ...).
Notion semidefinite_of(Notion notion);
Notion strict_of(Notion notion);

/// Failing virtual checks carry the least index subset (by size, then
/// lexicographic) whose minor breaks the inequality; failing symmetric or
/// generalized checks carry a nonzero vector x with x^T H x < 0 (<= 0 for the
/// strict notions). Passing checks carry nothing.
using Witness = std::variant<std::monostate, IndexSet, Vector>;

struct NotionReport {
    Notion notion = Notion::SymPSD;
    bool verdict = false;
    Witness witness;
    /// False for the symmetric notions on a non-symmetric matrix.
    bool applicable = true;
};

struct ClassificationReport {
    std::size_t order = 0;
    bool symmetric = false;
    std::vector<NotionReport> verdicts; // kAllNotions order

    const NotionReport& at(Notion notion) const;
    bool verdict(Notion notion) const { return at(notion).verdict; }
};

struct CheckLimits {
    /// Largest order for which the 2^n principal-minor enumeration runs.
    std::size_t order_cap = 16;

    /// Default limits, with SHUHAN_ORDER_CAP overriding the cap when set.
    static CheckLimits from_env();
};

/// All principal minors >= 0 (> 0 when strict). Throws ResourceLimit above the cap.
NotionReport is_virtual_psd(const MatrixQ& m, bool strict = false, const CheckLimits& limits = {});

/// Positive (semi-)definiteness of a symmetric matrix from the signs of its
/// characteristic-polynomial coefficients. Throws InvalidArgument if m is not symmetric.
NotionReport is_sym_psd(const MatrixQ& m, bool strict = false);

/// x^T m x >= 0 (> 0 for x != 0 when strict), decided on (m + m^T) / 2.
NotionReport is_generalized_psd(const MatrixQ& m, bool strict = false);

/// True iff the characteristic polynomial has no negative real root.
bool eigen_nonneg_check(const MatrixQ& m);

/// All six notions; the minors are enumerated once.
ClassificationReport classify(const MatrixQ& m, const CheckLimits& limits = {});

/// Re-checks a failing report's witness against m.
bool witness_valid(const MatrixQ& m, const NotionReport& report);

/// Exact rational x != 0 with x^T s x < 0 (<= 0 when `strict`), for symmetric s,
/// or nullopt if none exists.
std::optional<Vector> negative_direction(const MatrixQ& s, bool strict);

enum class GcmType { Finite, Affine, Indefinite };
std::string gcm_type_name(GcmType type);

/// Finite: all principal minors > 0. Affine: det == 0 and all proper principal
/// minors > 0. Indefinite otherwise. Requires an indecomposable h-Shuhan matrix with h = 2.
GcmType gcm_classify(const MatrixQ& m, const CheckLimits& limits = {});

} // namespace shuhan
