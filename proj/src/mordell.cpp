#include "curious/mordell.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "curious/parallel.hpp"
#include "curious/sieve.hpp"

namespace curious {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

Int icbrt_floor(const Int& v) {
    if (v < 0) throw std::invalid_argument("icbrt_floor expects v >= 0");
    if (v == 0) return 0;
    unsigned bits = boost::multiprecision::msb(v) + 1;
    Int r = Int(1) << (bits / 3 + 1);
    for (;;) {  // Newton iteration, monotone from above
        Int next = (2 * r + v / (r * r)) / 3;
        if (next >= r) break;
        r = next;
    }
    while (r * r * r > v) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Least x with x^3 + B >= 0.
Int domain_lower(const Int& B) {
    if (B > 0) return -icbrt_floor(B);
    Int c = icbrt_floor(-B);
    return c * c * c == -B ? c : c + 1;
}

template <unsigned Mod>
constexpr std::array<bool, Mod> square_table() {
    std::array<bool, Mod> t{};
    for (unsigned i = 0; i < Mod; ++i) t[i * i % Mod] = true;
    return t;
}

constexpr u64 square_mask64() {
    u64 mask = 0;
    for (unsigned i = 0; i < 64; ++i) mask |= u64{1} << (i * i % 64);
    return mask;
}

u64 isqrt_u128(u128 v) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && static_cast<u128>(r) * r > v) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Exact perfect-square test for the search loop: cheap residue filters, then
// one integer square root.
std::optional<u64> square_root_u128(u128 v) {
    static constexpr u64 mask64 = square_mask64();
    static constexpr auto t63 = square_table<63>();
    static constexpr auto t65 = square_table<65>();
    static constexpr auto t11 = square_table<11>();
    if (!((mask64 >> (v & 63)) & 1)) return std::nullopt;
    u64 m = static_cast<u64>(v % (63 * 65 * 11));
    if (!t63[m % 63] || !t65[m % 65] || !t11[m % 11]) return std::nullopt;
    u64 r = isqrt_u128(v);
    if (static_cast<u128>(r) * r == v) return r;
    return std::nullopt;
}

i128 to_i128(const Int& v) {
    bool neg = v < 0;
    Int a = abs(v);
    if (a > (Int(1) << 126)) throw std::invalid_argument("value exceeds 128-bit search range");
    u128 out = 0;
    for (int shift = 96; shift >= 0; shift -= 32) {
        out = (out << 32) | ((a >> shift) & 0xffffffff).convert_to<u64>();
    }
    return neg ? -static_cast<i128>(out) : static_cast<i128>(out);
}

const std::vector<FamilyKey>& sieve_families() {
    static const std::vector<FamilyKey> families = candidate_set(7).families;
    return families;
}

}  // namespace

MordellCurve curve_for(const FamilyKey& f, unsigned j) {
    if (j > 2) throw std::invalid_argument("j must be 0, 1 or 2");
    auto [M, N] = coefficients(f);
    if (M == 0) throw std::invalid_argument("degenerate family: M == 0");
    return {N * N * pow10(2 * j) * M, f, j};
}

bool is_on_curve(const MordellCurve& c, const IntegralPoint& p) {
    return p.y * p.y == p.x * p.x * p.x + c.B;
}

std::vector<IntegralPoint> bounded_point_search(const MordellCurve& c,
                                                std::int64_t x_max) {
    if (x_max < 1) throw std::invalid_argument("x_max must be >= 1");
    Int lower = domain_lower(c.B);
    std::vector<IntegralPoint> out;
    if (lower > x_max) return out;
    i128 B = to_i128(c.B);
    i128 lo = to_i128(lower);
    for (i128 x = lo; x <= x_max; ++x) {
        u128 t = static_cast<u128>(x * x * x + B);
        if (auto r = square_root_u128(t)) {
            out.push_back({Int(static_cast<std::int64_t>(x)), Int(*r)});
        }
    }
    return out;
}

std::vector<LFormPoint> filter_L(const FamilyKey& f, unsigned j,
                                 const std::vector<IntegralPoint>& points) {
    if (j > 2) throw std::invalid_argument("j must be 0, 1 or 2");
    Int N = coefficients(f).N;
    Int y_unit = 3 * N * pow10(j);
    std::vector<LFormPoint> out;
    for (const IntegralPoint& p : points) {
        if (p.x <= 0 || p.y < 0) continue;
        Int q, rem;
        divide_qr(p.x, N, q, rem);
        if (rem != 0) continue;
        unsigned t = 0;  // x / N must be a power of ten with exponent >= j
        while (q % 10 == 0) {
            q /= 10;
            ++t;
        }
        if (q != 1 || t < j) continue;
        Int y0, yrem;
        divide_qr(p.y, y_unit, y0, yrem);
        if (yrem != 0) continue;
        out.push_back({t - j, y0});
    }
    return out;
}

std::pair<unsigned, IntegralPoint> phi_forward(const FamilyKey& f, unsigned n) {
    auto root = is_perfect_square(curious_value(f, n));
    if (!root) throw std::invalid_argument("family value at n is not a perfect square");
    unsigned j = n % 3;
    unsigned k = n / 3;
    Int N = coefficients(f).N;
    return {j, {N * pow10(j + k), 3 * N * pow10(j) * *root}};
}

std::string to_string(PointListTrust t) {
    return t == PointListTrust::External ? "external" : "bounded";
}

CurveProof prove_family_via_curves(const FamilyKey& f,
                                   const std::array<AppendixRow, 3>& rows,
                                   PointListTrust trust) {
    CurveProof proof{f, rows, trust, {}};
    for (unsigned j = 0; j < 3; ++j) {
        const AppendixRow& row = rows[j];
        MordellCurve curve = curve_for(f, j);
        if (row.family != f || row.j != j || row.B != curve.B) {
            throw std::runtime_error("point data does not match curve for " +
                                     f.display() + " j=" + std::to_string(j));
        }
        for (const IntegralPoint& p : row.points) {
            if (p.y < 0 || !is_on_curve(curve, p)) {
                throw std::runtime_error("off-curve point in data for " + f.display() +
                                         " j=" + std::to_string(j) + " at x=" + p.x.str());
            }
        }
        for (const LFormPoint& lp : filter_L(f, j, row.points)) {
            proof.squares.push_back(3 * lp.k + j);
        }
    }
    std::sort(proof.squares.begin(), proof.squares.end());
    return proof;
}

AppendixReport verify_appendix(const std::vector<AppendixRow>& rows,
                               std::int64_t x_max, unsigned jobs) {
    AppendixReport rep;
    rep.x_max = x_max;
    rep.rows_checked = rows.size();
    rep.largest_x = 0;

    // (i) coverage: one row per (family, j) for the thirteen sieve families.
    std::set<std::pair<FamilyKey, unsigned>> seen;
    for (const AppendixRow& row : rows) {
        if (!seen.insert({row.family, row.j}).second) {
            rep.failures.push_back("duplicate row " + row.family.display() +
                                   " j=" + std::to_string(row.j));
        }
    }
    const auto& families = sieve_families();
    for (const FamilyKey& f : families) {
        for (unsigned j = 0; j < 3; ++j) {
            if (!seen.count({f, j})) {
                rep.failures.push_back("missing row " + f.display() +
                                       " j=" + std::to_string(j));
            }
        }
    }
    rep.coverage_ok =
        rep.failures.empty() && rows.size() == families.size() * 3;
    if (!rep.coverage_ok && rep.failures.empty()) {
        rep.failures.push_back("unexpected row count " + std::to_string(rows.size()));
    }

    // (ii) + (iii): B values and curve membership.
    rep.b_values_ok = true;
    rep.on_curve_ok = true;
    for (const AppendixRow& row : rows) {
        MordellCurve curve = curve_for(row.family, row.j);
        if (row.B != curve.B) {
            rep.b_values_ok = false;
            rep.failures.push_back("B mismatch for " + row.family.display() +
                                   " j=" + std::to_string(row.j) + ": file has " +
                                   row.B.str() + ", expected " + curve.B.str());
            continue;
        }
        for (const IntegralPoint& p : row.points) {
            ++rep.points_checked;
            if (p.x > rep.largest_x) rep.largest_x = p.x;
            if (p.y < 0 || !is_on_curve(curve, p)) {
                rep.on_curve_ok = false;
                rep.failures.push_back("off-curve point (" + p.x.str() + ", " +
                                       p.y.str() + ") for " + row.family.display() +
                                       " j=" + std::to_string(row.j));
            }
        }
    }

    // (iv) bounded search: nothing in range may be absent from the table, and
    // every in-range tabulated point must be rediscovered.
    std::vector<std::vector<std::string>> search_failures(rows.size());
    parallel_for(rows.size(), jobs, [&](std::size_t i) {
        const AppendixRow& row = rows[i];
        MordellCurve curve = curve_for(row.family, row.j);
        if (row.B != curve.B) return;  // already reported
        std::string where = row.family.display() + " j=" + std::to_string(row.j);
        std::set<IntegralPoint> tabulated(row.points.begin(), row.points.end());
        std::set<IntegralPoint> found;
        for (const IntegralPoint& p : bounded_point_search(curve, x_max)) {
            found.insert(p);
            if (!tabulated.count(p)) {
                search_failures[i].push_back("point (" + p.x.str() + ", " + p.y.str() +
                                             ") on " + where + " is absent from the table");
            }
        }
        for (const IntegralPoint& p : row.points) {
            if (p.x <= x_max && !found.count(p)) {
                search_failures[i].push_back("tabulated point (" + p.x.str() + ", " +
                                             p.y.str() + ") on " + where +
                                             " not rediscovered by the search");
            }
        }
    });
    rep.search_ok = true;
    for (const auto& fs : search_failures) {
        if (!fs.empty()) rep.search_ok = false;
        rep.failures.insert(rep.failures.end(), fs.begin(), fs.end());
    }

    rep.ok = rep.coverage_ok && rep.b_values_ok && rep.on_curve_ok && rep.search_ok;
    return rep;
}

}  // namespace curious
