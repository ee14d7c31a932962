#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "curious/core.hpp"

using namespace curious;

TEST_CASE("repdigit values") {
    CHECK(repdigit_value(5, 3) == 555);
    CHECK(repdigit_value(7, 0) == 0);
    CHECK(repdigit_value(1, 6) == 111111);
    CHECK(repdigit_value(0, 4) == 0);
    CHECK_THROWS_AS(repdigit_value(10, 2), std::invalid_argument);
    CHECK_THROWS_AS(repdigit_value(-1, 2), std::invalid_argument);
}

TEST_CASE("curious values by concatenation") {
    CHECK(curious_value(DigitPattern(7, 1, 1, 2)) == 7117);
    CHECK(curious_value(DigitPattern(4, 9, 2, 1)) == 44944);
    CHECK(curious_value(DigitPattern(1, 0, 0, 0)) == 0);
    CHECK(curious_value(DigitPattern(1, 2, 1, 1)) == 121);
    CHECK(curious_value(FamilyKey(4, 2, 1), 0) == 44);
    CHECK(curious_value(FamilyKey(4, 2, 1), 3) == 42224);
}

TEST_CASE("pattern normalization and validation") {
    DigitPattern z(5, 3, 0, 2);  // m == 0: outer digit is a don't-care
    CHECK(z.a == 1);
    CHECK(curious_value(z) == 33);
    CHECK_THROWS_AS(DigitPattern(0, 3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FamilyKey(3, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(FamilyKey(3, 1, 0), std::invalid_argument);
    CHECK(FamilyKey(4, 2, 1).display() == "42..24");
    CHECK(FamilyKey(4, 3, 3).display() == "4443..3444");
}

TEST_CASE("coefficient pairs") {
    auto c = coefficients(FamilyKey(1, 4, 1));
    CHECK(c.M == -31);
    CHECK(c.N == 130);
    c = coefficients(FamilyKey(4, 3, 3));
    CHECK(c.M == 996);
    CHECK(c.N == 3999000);
    c = coefficients(FamilyKey(1, 0, 1));
    CHECK(c.M == 9);
    CHECK(c.N == 90);
}

TEST_CASE("coefficient identity 9*value == N*10^n + M") {
    std::mt19937_64 rng(20240731);
    std::uniform_int_distribution<int> digit(0, 9), outer(1, 9);
    std::uniform_int_distribution<unsigned> mlen(1, 9), nlen(0, 12);
    for (int i = 0; i < 500; ++i) {
        FamilyKey f(outer(rng), digit(rng), mlen(rng));
        unsigned n = nlen(rng);
        auto [M, N] = coefficients(f);
        CHECK(9 * curious_value(f, n) == N * pow10(n) + M);
    }
}

TEST_CASE("decimal strings are literal concatenations") {
    std::mt19937_64 rng(8181);
    std::uniform_int_distribution<int> digit(0, 9), outer(1, 9);
    std::uniform_int_distribution<unsigned> mlen(1, 6), nlen(0, 10);
    for (int i = 0; i < 300; ++i) {
        int a = outer(rng), b = digit(rng);
        unsigned m = mlen(rng), n = nlen(rng);
        std::string want = std::string(m, char('0' + a)) + std::string(n, char('0' + b)) +
                           std::string(m, char('0' + a));
        CHECK(curious_value(DigitPattern(a, b, m, n)).str() == want);
    }
    for (int b = 1; b <= 9; ++b) {
        for (unsigned n = 1; n <= 8; ++n) {
            CHECK(curious_value(DigitPattern(1, b, 0, n)).str() ==
                  std::string(n, char('0' + b)));
        }
    }
}

TEST_CASE("perfect square detection") {
    CHECK(is_perfect_square(Int(44944)) == Int(212));
    CHECK(!is_perfect_square(Int(711117)));
    CHECK(is_perfect_square(Int(0)) == Int(0));
    CHECK_THROWS_AS(is_perfect_square(Int(-4)), std::invalid_argument);

    // agreement with exhaustive squaring below 10^6
    std::set<Int> squares;
    for (Int s = 0; s * s < 1000000; ++s) squares.insert(s * s);
    for (Int x = 0; x < 1000000; ++x) {
        bool expect = squares.count(x) > 0;
        CHECK(is_perfect_square(x).has_value() == expect);
    }
    // large inputs round-trip
    Int big = pow10(40) + 12345;
    CHECK(is_perfect_square(big * big) == big);
    CHECK(!is_perfect_square(big * big + 1));
}

TEST_CASE("pattern recognition") {
    CHECK(pattern_of_value(Int(0)) == DigitPattern(1, 0, 0, 0));
    CHECK(pattern_of_value(Int(44944)) == DigitPattern(4, 9, 2, 1));
    CHECK(pattern_of_value(Int(444)) == DigitPattern(1, 4, 0, 3));
    CHECK(pattern_of_value(Int(7117)) == DigitPattern(7, 1, 1, 2));
    CHECK(!pattern_of_value(Int(123)));
    CHECK(!pattern_of_value(Int(4433444)));  // unequal outer runs
    CHECK(!pattern_of_value(Int(-121)));
}

TEST_CASE("enumeration basics") {
    auto one = enumerate_curious(1);
    REQUIRE(one.size() == 10);
    for (int d = 0; d <= 9; ++d) CHECK(one[d].second == d);

    auto three = enumerate_curious(3);
    bool saw121 = false;
    for (const auto& [p, v] : three) {
        if (v == 121) {
            saw121 = true;
            CHECK(p == DigitPattern(1, 2, 1, 1));
        }
        if (v == 444) CHECK(p == DigitPattern(1, 4, 0, 3));  // canonical repdigit
    }
    CHECK(saw121);
    CHECK_THROWS_AS(enumerate_curious(0), std::invalid_argument);
}

TEST_CASE("enumeration is ascending, duplicate-free and canonical") {
    auto all = enumerate_curious(9);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].second < all[i].second);
    for (const auto& [p, v] : all) {
        CHECK(curious_value(p) == v);
        CHECK(pattern_of_value(v) == p);
        CHECK(p.digit_count() <= 9);
    }
    // every pattern's value shows up exactly once
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned n = 0; 2 * m + n <= 9; ++n) {
            for (int a = 1; a <= 9; ++a) {
                for (int b = 0; b <= 9; ++b) {
                    Int v = curious_value(DigitPattern(a, b, m, n));
                    auto it = std::lower_bound(
                        all.begin(), all.end(), v,
                        [](const auto& e, const Int& x) { return e.second < x; });
                    CHECK(it != all.end());
                    CHECK(it->second == v);
                }
            }
        }
    }
}
