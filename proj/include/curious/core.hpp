#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curious/bigint.hpp"

namespace curious {

/// Digit pattern a^m b^n a^m: m copies of the outer digit a, n copies of the
/// inner digit b, m copies of a again. When m == 0 the value is the repdigit
/// b^n and a is normalized to 1 (it does not contribute to the value).
struct DigitPattern {
    int a = 1;
    int b = 0;
    unsigned m = 0;
    unsigned n = 0;

    DigitPattern() = default;
    DigitPattern(int outer, int inner, unsigned outer_len, unsigned inner_len);

    unsigned digit_count() const { return 2 * m + n; }

    friend bool operator==(const DigitPattern&, const DigitPattern&) = default;
};

/// A single-variable family {a^m b^n a^m : n >= 0} with fixed a, b and m >= 1.
struct FamilyKey {
    int a = 1;
    int b = 0;
    unsigned m = 1;

    FamilyKey() = default;
    FamilyKey(int outer, int inner, unsigned outer_len);

    friend auto operator<=>(const FamilyKey&, const FamilyKey&) = default;

    /// Human-readable name, e.g. "42..24" or "4443..3444".
    std::string display() const;
};

/// The pair attached to a family: M = 10^m (a-b) - a and
/// N = 10^m (a 10^m + b - a), satisfying 9 * value(a,b,m,n) = N * 10^n + M.
struct Coefficients {
    Int M;
    Int N;
};

/// Value of the repdigit d^len, i.e. d * (10^len - 1) / 9. Zero when len == 0.
Int repdigit_value(int digit, unsigned len);

Int curious_value(const DigitPattern& p);
Int curious_value(const FamilyKey& f, unsigned n);

Coefficients coefficients(const FamilyKey& f);

/// Returns r with r * r == x when x is a perfect square, nullopt otherwise.
/// Negative input is rejected.
std::optional<Int> is_perfect_square(const Int& x);

/// Recognizes curious values. Returns the canonical pattern (the one
/// minimizing (m, n), so repdigits always come back with m == 0), or nullopt
/// if v is not curious.
std::optional<DigitPattern> pattern_of_value(const Int& v);

/// Every curious number with at most max_digits digits, ascending by value,
/// one canonical pattern per value.
std::vector<std::pair<DigitPattern, Int>> enumerate_curious(unsigned max_digits);

}  // namespace curious
