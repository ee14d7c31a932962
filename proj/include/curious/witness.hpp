#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curious/core.hpp"

namespace curious {

/// Quadratic residuosity is decided by a dense table of squares modulo q,
/// which keeps composite moduli exact (a Jacobi symbol of +1 certifies
/// nothing). The table costs O(q) bits, hence this ceiling.
inline constexpr std::uint64_t kMaxDenseModulus = 100'000'000;

enum class WitnessKind {
    NonResidue,      // M is a non-residue modulo N
    Periodic,        // N*10^t + M is a non-residue mod q for every t < ord_q(10)
    DirectPeriodic,  // family values are non-residues mod q over a full period
    SquareFactor,    // family is c^2 times another family, proved recursively
};

/// A finite certificate that a family contains no perfect square.
struct ModularWitness {
    WitnessKind kind = WitnessKind::NonResidue;
    Int modulus;               // N for NonResidue, q otherwise; unused for SquareFactor
    unsigned period = 0;       // Periodic / DirectPeriodic
    std::vector<Int> residues; // the tested classes, reduced into [0, modulus)
    int factor = 0;                              // SquareFactor: c in {2, 3}
    std::optional<FamilyKey> target;             // SquareFactor: the reduced family
    std::shared_ptr<const ModularWitness> sub;   // SquareFactor: proof of the target
};

/// True iff x^2 = v (mod q) is solvable. v may be negative; it is reduced
/// into [0, q). q must be in [1, kMaxDenseModulus].
bool is_quadratic_residue(const Int& v, const Int& q);

/// Least t >= 1 with g^t = 1 (mod q). Requires gcd(g, q) == 1.
unsigned multiplicative_order(const Int& g, const Int& q);

/// Witness with modulus N when M is a quadratic non-residue mod N.
/// Families whose N exceeds kMaxDenseModulus report absent (untestable here).
std::optional<ModularWitness> coefficient_nonresidue_test(const FamilyKey& f);

/// Witness iff N*10^t + M is a non-residue mod q for every 0 <= t < ord_q(10).
/// Requires gcd(q, 10) == 1.
std::optional<ModularWitness> periodic_nonresidue_test(const FamilyKey& f, const Int& q);

/// Witness iff the family values themselves are non-residues mod q over a
/// full period ord_{9q}(10). Stronger than the 9x-scaled test when 3 | q.
std::optional<ModularWitness> direct_periodic_test(const FamilyKey& f, const Int& q);

/// (c, target) with c in {2, 3} when a = c^2 a' and b = c^2 b'; every family
/// value is then c^2 times the corresponding target value.
std::optional<std::pair<int, FamilyKey>> square_factor_reduce(const FamilyKey& f);

struct WitnessSearchCaps {
    std::uint64_t max_modulus = 100'000;
    unsigned max_period = 1'000;
};

/// Deterministic search: coefficient test, then square-factor reduction with
/// a recursive proof of the target, then ascending q coprime to 10 trying the
/// periodic tests. Absent means "unproven within caps", never "has a square".
std::optional<ModularWitness> search_witness(const FamilyKey& f,
                                             const WitnessSearchCaps& caps = {});

/// Re-derives every quantity in a witness and re-checks non-residuosity.
bool verify_witness(const FamilyKey& f, const ModularWitness& w,
                    std::string* why = nullptr);

struct ModularFamilyProof {
    FamilyKey family;
    std::optional<ModularWitness> witness;  // absent: search failed within caps
    WitnessSearchCaps caps;
    std::vector<unsigned> squares_found;    // small-n squares, failure diagnostics
};

/// search_witness plus, on failure, a scan of small n for actual squares
/// (a family containing a square can never have a witness).
ModularFamilyProof prove_family(const FamilyKey& f, const WitnessSearchCaps& caps = {});

}  // namespace curious
