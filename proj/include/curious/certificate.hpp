#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curious/mordell.hpp"
#include "curious/sieve.hpp"
#include "curious/witness.hpp"

namespace curious {

enum class Strategy { Modular, Elliptic, Both };

std::string to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& s);

/// Canonical bound for locally computed point lists (families the bundled
/// data does not cover). Fixed so verification can recompute the exact lists
/// from the certificate alone.
inline constexpr std::int64_t kBoundedEvidenceLimit = 1'000'000;

struct FamilyProofEntry {
    FamilyKey family;
    std::optional<ModularWitness> witness;
    std::optional<CurveProof> curves;
    std::vector<unsigned> squares;  // indices n with value(family, n) square
};

/// The full serialized proof: sieve output, one proof per surviving family,
/// and the sporadic square checks. Self-contained up to the completeness of
/// externally computed point lists, which is declared, not proved.
struct TheoremCertificate {
    unsigned k = 7;
    Strategy strategy = Strategy::Both;
    std::vector<std::uint64_t> intersection;  // residue_intersection(k), ascending
    CandidateSet candidates;
    std::vector<std::pair<Int, Int>> sporadic_checks;  // (value, root), ascending
    std::vector<FamilyProofEntry> proofs;              // one per family, in order
    std::vector<Int> conclusion;                       // ascending
};

struct BuildOptions {
    std::string appendix_path;  // empty: default_appendix_path()
    unsigned jobs = 0;
    WitnessSearchCaps caps{};
};

/// Runs the sieve at exponent k, proves every surviving family, and checks
/// the sporadics. Families proved by the requested strategy where possible;
/// a family that contains a sporadic square cannot have a modular emptiness
/// witness and always carries curve evidence instead. Any family left
/// unproven aborts with a named error.
TheoremCertificate build_certificate(unsigned k, Strategy strategy,
                                     const BuildOptions& options = {});

std::string serialize_certificate(const TheoremCertificate& cert);

/// Strict parse of the canonical text format; throws std::runtime_error with
/// a line reference on any deviation.
TheoremCertificate parse_certificate(const std::string& text);

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> failures;
};

/// Re-derives the sieve sets, re-checks every witness and every curve proof,
/// and re-checks the sporadics and the conclusion. External point lists are
/// compared against the appendix file; bounded ones are recomputed.
VerifyResult verify_certificate(const TheoremCertificate& cert,
                                const std::string& appendix_path = {},
                                unsigned jobs = 0);

/// Parse + verify; parse failures count as verification failures.
VerifyResult verify_certificate_text(const std::string& text,
                                     const std::string& appendix_path = {},
                                     unsigned jobs = 0);

/// Oracle: every curious number with at most max_digits digits that is a
/// perfect square, by direct enumeration.
std::vector<Int> brute_force_crosscheck(unsigned max_digits = 19);

}  // namespace curious
