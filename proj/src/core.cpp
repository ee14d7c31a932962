#include "curious/core.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace curious {

namespace {

void check_digit(int d, int lo, const char* what) {
    if (d < lo || d > 9) {
        throw std::invalid_argument(std::string(what) + " out of range");
    }
}

// Canonical choice among patterns with equal value: smallest (m, n, a, b).
std::tuple<unsigned, unsigned, int, int> pattern_key(const DigitPattern& p) {
    return {p.m, p.n, p.a, p.b};
}

}  // namespace

DigitPattern::DigitPattern(int outer, int inner, unsigned outer_len, unsigned inner_len)
    : a(outer_len == 0 ? 1 : outer), b(inner), m(outer_len), n(inner_len) {
    check_digit(outer, 1, "outer digit");
    check_digit(inner, 0, "inner digit");
}

FamilyKey::FamilyKey(int outer, int inner, unsigned outer_len)
    : a(outer), b(inner), m(outer_len) {
    check_digit(outer, 1, "outer digit");
    check_digit(inner, 0, "inner digit");
    if (outer_len < 1) throw std::invalid_argument("family outer run must be nonempty");
}

std::string FamilyKey::display() const {
    std::string outer(m, static_cast<char>('0' + a));
    char inner = static_cast<char>('0' + b);
    return outer + inner + ".." + inner + outer;
}

Int repdigit_value(int digit, unsigned len) {
    check_digit(digit, 0, "digit");
    return digit * (pow10(len) - 1) / 9;
}

Int curious_value(const DigitPattern& p) {
    Int outer = repdigit_value(p.a, p.m);
    return pow10(p.m + p.n) * outer + pow10(p.m) * repdigit_value(p.b, p.n) + outer;
}

Int curious_value(const FamilyKey& f, unsigned n) {
    return curious_value(DigitPattern(f.a, f.b, f.m, n));
}

Coefficients coefficients(const FamilyKey& f) {
    Int p = pow10(f.m);
    return {p * (f.a - f.b) - f.a, p * (f.a * p + f.b - f.a)};
}

std::optional<Int> is_perfect_square(const Int& x) {
    if (x < 0) throw std::invalid_argument("negative input to square test");
    Int r = boost::multiprecision::sqrt(x);
    if (r * r == x) return r;
    return std::nullopt;
}

std::optional<DigitPattern> pattern_of_value(const Int& v) {
    if (v < 0) return std::nullopt;
    if (v == 0) return DigitPattern(1, 0, 0, 0);
    std::string s = v.str();
    // Run-length decomposition: curious values have one run (repdigit) or
    // three runs with matching outer digit and length.
    std::vector<std::pair<char, unsigned>> runs;
    for (char c : s) {
        if (!runs.empty() && runs.back().first == c) {
            ++runs.back().second;
        } else {
            runs.push_back({c, 1});
        }
    }
    if (runs.size() == 1) {
        return DigitPattern(1, runs[0].first - '0', 0, runs[0].second);
    }
    if (runs.size() == 3 && runs[0].first == runs[2].first &&
        runs[0].second == runs[2].second) {
        return DigitPattern(runs[0].first - '0', runs[1].first - '0',
                            runs[0].second, runs[1].second);
    }
    return std::nullopt;
}

std::vector<std::pair<DigitPattern, Int>> enumerate_curious(unsigned max_digits) {
    if (max_digits < 1) throw std::invalid_argument("max_digits must be >= 1");
    std::map<Int, DigitPattern> best;
    auto consider = [&](const DigitPattern& p) {
        Int v = curious_value(p);
        auto [it, inserted] = best.try_emplace(v, p);
        if (!inserted && pattern_key(p) < pattern_key(it->second)) it->second = p;
    };
    consider(DigitPattern(1, 0, 0, 0));
    for (int b = 1; b <= 9; ++b) {
        for (unsigned n = 1; n <= max_digits; ++n) consider(DigitPattern(1, b, 0, n));
    }
    for (unsigned m = 1; 2 * m <= max_digits; ++m) {
        for (unsigned n = 0; 2 * m + n <= max_digits; ++n) {
            for (int a = 1; a <= 9; ++a) {
                for (int b = 0; b <= 9; ++b) consider(DigitPattern(a, b, m, n));
            }
        }
    }
    std::vector<std::pair<DigitPattern, Int>> out;
    out.reserve(best.size());
    for (const auto& [v, p] : best) out.push_back({p, v});
    return out;
}

}  // namespace curious
