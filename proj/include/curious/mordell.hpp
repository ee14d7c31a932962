#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curious/core.hpp"

namespace curious {

/// y^2 = x^3 + B with B = N^2 * 10^(2j) * M for a family and j in {0,1,2}.
/// Multiplying 9*value = N*10^n + M through by N^2*10^(2j) turns every square
/// family value with n = 3k + j into an integral point on this curve.
struct MordellCurve {
    Int B;
    FamilyKey family;
    unsigned j = 0;
};

/// Integral point with y >= 0 (points come in +/- pairs; the sign carries no
/// information).
struct IntegralPoint {
    Int x;
    Int y;
    friend bool operator==(const IntegralPoint&, const IntegralPoint&) = default;
    friend bool operator<(const IntegralPoint& lhs, const IntegralPoint& rhs) {
        return lhs.x != rhs.x ? lhs.x < rhs.x : lhs.y < rhs.y;
    }
};

/// A point of the special shape (N*10^(j+k), N*10^j * 3*y0). These are
/// exactly the images of square family values: 9*y0^2 = N*10^(3k+j) + M.
struct LFormPoint {
    unsigned k = 0;
    Int y0;
    friend bool operator==(const LFormPoint&, const LFormPoint&) = default;
};

/// One record of the bundled integral-point data: the complete point list
/// (up to sign) of the curve for (family, j), as computed externally.
struct AppendixRow {
    FamilyKey family;
    unsigned j = 0;
    Int B;
    std::vector<IntegralPoint> points;  // ascending by (x, y)
};

MordellCurve curve_for(const FamilyKey& f, unsigned j);

bool is_on_curve(const MordellCurve& c, const IntegralPoint& p);

/// Exhaustive search over the x-range [least x with x^3 + B >= 0, x_max]:
/// every returned point is on the curve, and every on-curve point with x in
/// range is returned. A desk-scale cross-check, not a completeness proof.
std::vector<IntegralPoint> bounded_point_search(const MordellCurve& c,
                                                std::int64_t x_max);

/// Keeps exactly the points of shape (N*10^(j+k), 3*N*10^j*y0) with k, y0 >= 0.
std::vector<LFormPoint> filter_L(const FamilyKey& f, unsigned j,
                                 const std::vector<IntegralPoint>& points);

/// Maps a square family value at index n = 3k + j to its curve point.
/// Rejects non-square values.
std::pair<unsigned, IntegralPoint> phi_forward(const FamilyKey& f, unsigned n);

/// Provenance of a point list: externally computed and complete, or produced
/// by bounded_point_search (complete only within its bound).
enum class PointListTrust { External, Bounded };

std::string to_string(PointListTrust t);

struct CurveProof {
    FamilyKey family;
    std::array<AppendixRow, 3> rows;  // j = 0, 1, 2
    PointListTrust trust = PointListTrust::External;
    std::vector<unsigned> squares;  // {3k + j} from the L-filters, ascending
};

/// Determines the family's square set from the three point lists: the family
/// value at n = 3k + j is a square exactly when the j-th list has the
/// corresponding L-form point. Rows must match the family's curves exactly;
/// a mismatch or off-curve point signals corrupted data and throws.
CurveProof prove_family_via_curves(const FamilyKey& f,
                                   const std::array<AppendixRow, 3>& rows,
                                   PointListTrust trust = PointListTrust::External);

// --- bundled data file ---

struct AppendixData {
    std::vector<AppendixRow> rows;
    std::vector<std::string> warnings;  // e.g. sign normalizations
};

/// Parses the whitespace-separated appendix format: a record starts with a
/// five-field header "a b m j B" followed by "x y" point lines; '#' starts a
/// comment. Negative y values are normalized to |y| with a warning.
AppendixData load_appendix(const std::string& path);

/// CURIOUS_APPENDIX_PATH override, else the bundled file.
std::string default_appendix_path();

struct AppendixReport {
    bool ok = false;
    bool coverage_ok = false;   // 39 rows: 13 sieve families x j in {0,1,2}
    bool b_values_ok = false;   // every B equals curve_for(family, j).B
    bool on_curve_ok = false;   // every tabulated point satisfies the curve
    bool search_ok = false;     // bounded search finds nothing absent from the table
    std::int64_t x_max = 0;
    Int largest_x;              // largest tabulated x
    std::size_t rows_checked = 0;
    std::size_t points_checked = 0;
    std::vector<std::string> failures;
};

/// Cross-checks the appendix data against recomputation. jobs == 0 means one
/// worker per hardware thread.
AppendixReport verify_appendix(const std::vector<AppendixRow>& rows,
                               std::int64_t x_max, unsigned jobs = 0);

}  // namespace curious
