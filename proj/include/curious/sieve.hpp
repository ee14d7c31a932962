#pragma once

#include <cstdint>
#include <vector>

#include "curious/core.hpp"

namespace curious {

/// Largest supported sieve exponent. The square-residue pass stores a bitset
/// of 10^k bits and walks 10^k values, so 8 (12.5 MB, well under a second)
/// is a sensible ceiling.
inline constexpr unsigned kMaxSieveExponent = 8;

/// A set of residues modulo 10^k, stored as a flat bitset.
class ResidueSet {
public:
    explicit ResidueSet(unsigned k);

    unsigned modulus_exponent() const { return k_; }
    std::uint64_t modulus() const { return mod_; }

    bool contains(std::uint64_t r) const;
    void insert(std::uint64_t r);
    std::size_t count() const { return count_; }
    std::vector<std::uint64_t> members() const;  // ascending

    static ResidueSet intersect(const ResidueSet& lhs, const ResidueSet& rhs);

private:
    unsigned k_;
    std::uint64_t mod_;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Residues mod 10^k of all curious numbers. A value's residue depends only
/// on its last k digits, so the finite covering m <= k, n <= k - m is exact:
/// longer inner runs repeat the residue of n = k - m (the run fills the
/// window), and longer outer runs repeat the residue of m = k.
ResidueSet curious_residues(unsigned k);

/// Residues mod 10^k of all perfect squares, from one incremental pass
/// s = 0 .. 10^k.
ResidueSet square_residues(unsigned k);

ResidueSet residue_intersection(unsigned k);

/// Decomposition of the curious preimage of a residue class: the finitely
/// many curious numbers below the stabilization threshold whose residue is r,
/// plus the families whose entire tail (n >= k - m) lands on r.
struct PreimageStructure {
    std::uint64_t residue = 0;
    unsigned k = 0;
    std::vector<std::pair<DigitPattern, Int>> finite_members;  // ascending by value
    std::vector<FamilyKey> stable_families;                    // ascending
};

PreimageStructure preimage_structure(std::uint64_t r, unsigned k);

struct CandidateSet {
    std::vector<Int> sporadic_squares;  // ascending
    std::vector<FamilyKey> families;    // ascending
};

/// Prunes the residue intersection: keeps square finite preimage members as
/// sporadics and stable families as single-variable candidates. Requires
/// k >= 4 so that every repdigit tail residue d^k is a non-square class.
CandidateSet candidate_set(unsigned k);

}  // namespace curious
