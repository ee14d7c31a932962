#include "curious/sieve.hpp"

#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace curious {

namespace {

std::uint64_t pow10_u64(unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= 10;
    return r;
}

// a^m b^n a^m mod `mod`, built digit by digit.
std::uint64_t value_mod(int a, int b, unsigned m, unsigned n, std::uint64_t mod) {
    std::uint64_t r = 0;
    auto push = [&](int d, unsigned cnt) {
        while (cnt--) r = (r * 10 + static_cast<unsigned>(d)) % mod;
    };
    push(a, m);
    push(b, n);
    push(a, m);
    return r;
}

void check_exponent(unsigned k) {
    if (k < 1 || k > kMaxSieveExponent) {
        throw std::invalid_argument("sieve exponent must be in 1.." +
                                    std::to_string(kMaxSieveExponent));
    }
}

}  // namespace

ResidueSet::ResidueSet(unsigned k) : k_(k), mod_(pow10_u64(k)) {
    check_exponent(k);
    bits_.assign((mod_ + 63) / 64, 0);
}

bool ResidueSet::contains(std::uint64_t r) const {
    return r < mod_ && ((bits_[r >> 6] >> (r & 63)) & 1);
}

void ResidueSet::insert(std::uint64_t r) {
    if (r >= mod_) throw std::invalid_argument("residue exceeds modulus");
    std::uint64_t& blk = bits_[r >> 6];
    std::uint64_t bit = std::uint64_t{1} << (r & 63);
    if (!(blk & bit)) {
        blk |= bit;
        ++count_;
    }
}

std::vector<std::uint64_t> ResidueSet::members() const {
    std::vector<std::uint64_t> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        std::uint64_t blk = bits_[i];
        while (blk) {
            unsigned bit = std::countr_zero(blk);
            out.push_back(i * 64 + bit);
            blk &= blk - 1;
        }
    }
    return out;
}

ResidueSet ResidueSet::intersect(const ResidueSet& lhs, const ResidueSet& rhs) {
    if (lhs.k_ != rhs.k_) throw std::invalid_argument("mismatched moduli");
    ResidueSet out(lhs.k_);
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < out.bits_.size(); ++i) {
        out.bits_[i] = lhs.bits_[i] & rhs.bits_[i];
        cnt += std::popcount(out.bits_[i]);
    }
    out.count_ = cnt;
    return out;
}

ResidueSet curious_residues(unsigned k) {
    check_exponent(k);
    ResidueSet out(k);
    std::uint64_t mod = out.modulus();
    for (unsigned m = 0; m <= k; ++m) {
        for (unsigned n = 0; n + m <= k; ++n) {
            if (m == 0) {
                for (int b = 0; b <= 9; ++b) out.insert(value_mod(1, b, 0, n, mod));
            } else {
                for (int a = 1; a <= 9; ++a) {
                    for (int b = 0; b <= 9; ++b) out.insert(value_mod(a, b, m, n, mod));
                }
            }
        }
    }
    return out;
}

ResidueSet square_residues(unsigned k) {
    check_exponent(k);
    ResidueSet out(k);
    std::uint64_t mod = out.modulus();
    std::uint64_t cur = 0;  // s^2 mod 10^k, advanced by 2s + 1
    for (std::uint64_t s = 0; s <= mod; ++s) {
        out.insert(cur);
        cur += 2 * s + 1;
        while (cur >= mod) cur -= mod;
    }
    return out;
}

ResidueSet residue_intersection(unsigned k) {
    return ResidueSet::intersect(curious_residues(k), square_residues(k));
}

PreimageStructure preimage_structure(std::uint64_t r, unsigned k) {
    check_exponent(k);
    std::uint64_t mod = pow10_u64(k);
    if (r >= mod) throw std::invalid_argument("residue exceeds modulus");

    PreimageStructure out;
    out.residue = r;
    out.k = k;

    // Finite part: patterns below the stabilization threshold. Repdigits with
    // n >= k and families with m + n >= k repeat residues already owned by
    // their tails.
    std::map<Int, DigitPattern> finite;
    auto consider = [&](const DigitPattern& p) {
        if (value_mod(p.a, p.b, p.m, p.n, mod) != r) return;
        finite.try_emplace(curious_value(p), p);
    };
    if (r == 0) consider(DigitPattern(1, 0, 0, 0));
    for (int b = 1; b <= 9; ++b) {
        for (unsigned n = 1; n < k; ++n) consider(DigitPattern(1, b, 0, n));
    }
    for (unsigned m = 1; m < k; ++m) {
        for (unsigned n = 0; m + n < k; ++n) {
            for (int a = 1; a <= 9; ++a) {
                for (int b = 0; b <= 9; ++b) consider(DigitPattern(a, b, m, n));
            }
        }
    }
    out.finite_members.reserve(finite.size());
    for (const auto& [v, p] : finite) out.finite_members.push_back({p, v});

    // Stable part: families whose tail residue b^(k-m) a^m equals r. Families
    // with m > k share the tail residue of m = k, so the cap is exact.
    std::set<FamilyKey> stable;
    for (unsigned m = 1; m <= k; ++m) {
        for (int a = 1; a <= 9; ++a) {
            for (int b = 0; b <= 9; ++b) {
                if (value_mod(a, b, m, k > m ? k - m : 0, mod) == r) {
                    stable.insert(FamilyKey(a, b, m));
                }
            }
        }
    }
    out.stable_families.assign(stable.begin(), stable.end());
    return out;
}

CandidateSet candidate_set(unsigned k) {
    check_exponent(k);
    if (k < 4) {
        throw std::invalid_argument(
            "candidate pruning requires k >= 4: below that, repdigit tail "
            "residues survive the square intersection and the preimage "
            "decomposition is not sound");
    }
    ResidueSet squares = square_residues(k);
    ResidueSet inter = ResidueSet::intersect(curious_residues(k), squares);

    // Every repdigit tail d..d (k digits) must be a non-square class, else
    // the finite/stable decomposition below would miss the repdigit tails.
    // Holds for every k >= 4 because it holds modulo 10^4.
    std::uint64_t mod = inter.modulus();
    for (int d = 1; d <= 9; ++d) {
        if (squares.contains(value_mod(1, d, 0, k, mod))) {
            throw std::logic_error("repdigit tail residue is a square class");
        }
    }

    std::set<Int> sporadics;
    std::set<FamilyKey> families;
    for (std::uint64_t r : inter.members()) {
        PreimageStructure pre = preimage_structure(r, k);
        for (const auto& [pattern, value] : pre.finite_members) {
            if (is_perfect_square(value)) sporadics.insert(value);
        }
        families.insert(pre.stable_families.begin(), pre.stable_families.end());
    }

    CandidateSet out;
    out.sporadic_squares.assign(sporadics.begin(), sporadics.end());
    out.families.assign(families.begin(), families.end());
    return out;
}

}  // namespace curious
