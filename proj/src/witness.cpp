#include "curious/witness.hpp"

#include <stdexcept>

namespace curious {

namespace {

class QrTable {
public:
    explicit QrTable(std::uint64_t q) : bits_((q + 63) / 64, 0) {
        for (std::uint64_t x = 0; x <= q / 2; ++x) {
            std::uint64_t r = (x * x) % q;
            bits_[r >> 6] |= std::uint64_t{1} << (r & 63);
        }
    }
    bool is_residue(std::uint64_t r) const {
        return (bits_[r >> 6] >> (r & 63)) & 1;
    }

private:
    std::vector<std::uint64_t> bits_;
};

std::uint64_t check_modulus(const Int& q) {
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    if (q > kMaxDenseModulus) {
        throw std::invalid_argument("modulus exceeds dense residue-table limit");
    }
    return q.convert_to<std::uint64_t>();
}

std::uint64_t reduce(const Int& v, std::uint64_t q) {
    Int r = v % q;
    if (r < 0) r += q;
    return r.convert_to<std::uint64_t>();
}

// ord_q(10), or 0 if it exceeds cap.
unsigned order10_capped(std::uint64_t q, unsigned cap) {
    std::uint64_t acc = 10 % q;
    for (unsigned t = 1; t <= cap; ++t) {
        if (acc == 1 % q) return t;
        acc = acc * 10 % q;
    }
    return 0;
}

// Witness body shared by periodic_nonresidue_test and the search loop, which
// reuses one QrTable per modulus.
std::optional<ModularWitness> periodic_test_with(const FamilyKey& f, std::uint64_t q,
                                                 unsigned period, const QrTable& table) {
    auto [M, N] = coefficients(f);
    std::uint64_t mq = reduce(M, q);
    std::uint64_t nq = reduce(N, q);
    std::uint64_t t10 = 1 % q;
    std::vector<Int> residues;
    residues.reserve(period);
    for (unsigned t = 0; t < period; ++t) {
        std::uint64_t r = (nq * t10 + mq) % q;
        if (table.is_residue(r)) return std::nullopt;
        residues.push_back(r);
        t10 = t10 * 10 % q;
    }
    return ModularWitness{WitnessKind::Periodic, Int(q), period, std::move(residues),
                          0, std::nullopt, nullptr};
}

std::optional<ModularWitness> direct_test_with(const FamilyKey& f, std::uint64_t q,
                                               unsigned period, const QrTable& table) {
    auto [M, N] = coefficients(f);
    // value(f, t+1) = value(f, t) + N * 10^t, so one running sum suffices.
    std::uint64_t nq = reduce(N, q);
    std::uint64_t cur = reduce(curious_value(f, 0), q);
    std::uint64_t t10 = 1 % q;
    std::vector<Int> residues;
    residues.reserve(period);
    for (unsigned t = 0; t < period; ++t) {
        if (table.is_residue(cur)) return std::nullopt;
        residues.push_back(cur);
        cur = (cur + nq * t10) % q;
        t10 = t10 * 10 % q;
    }
    return ModularWitness{WitnessKind::DirectPeriodic, Int(q), period, std::move(residues),
                          0, std::nullopt, nullptr};
}

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

}  // namespace

bool is_quadratic_residue(const Int& v, const Int& q) {
    std::uint64_t qq = check_modulus(q);
    return QrTable(qq).is_residue(reduce(v, qq));
}

unsigned multiplicative_order(const Int& g, const Int& q) {
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    if (gcd(g, q) != 1) throw std::invalid_argument("base not coprime to modulus");
    if (q == 1) return 1;
    Int acc = g % q;
    if (acc < 0) acc += q;
    for (unsigned t = 1;; ++t) {
        if (acc == 1) return t;
        acc = acc * g % q;
        if (acc < 0) acc += q;
    }
}

std::optional<ModularWitness> coefficient_nonresidue_test(const FamilyKey& f) {
    auto [M, N] = coefficients(f);
    if (N > kMaxDenseModulus) return std::nullopt;
    std::uint64_t q = N.convert_to<std::uint64_t>();
    std::uint64_t r = reduce(M, q);
    if (QrTable(q).is_residue(r)) return std::nullopt;
    return ModularWitness{WitnessKind::NonResidue, N, 0, {Int(r)}, 0, std::nullopt, nullptr};
}

std::optional<ModularWitness> periodic_nonresidue_test(const FamilyKey& f, const Int& q) {
    std::uint64_t qq = check_modulus(q);
    if (qq % 2 == 0 || qq % 5 == 0) {
        throw std::invalid_argument("modulus must be coprime to 10");
    }
    unsigned period = multiplicative_order(10, q);
    return periodic_test_with(f, qq, period, QrTable(qq));
}

std::optional<ModularWitness> direct_periodic_test(const FamilyKey& f, const Int& q) {
    std::uint64_t qq = check_modulus(q);
    if (qq % 2 == 0 || qq % 5 == 0) {
        throw std::invalid_argument("modulus must be coprime to 10");
    }
    unsigned period = multiplicative_order(10, Int(9 * qq));
    return direct_test_with(f, qq, period, QrTable(qq));
}

std::optional<std::pair<int, FamilyKey>> square_factor_reduce(const FamilyKey& f) {
    for (int c : {2, 3}) {
        int cc = c * c;
        if (f.a % cc == 0 && f.b % cc == 0) {
            return std::pair{c, FamilyKey(f.a / cc, f.b / cc, f.m)};
        }
    }
    return std::nullopt;
}

std::optional<ModularWitness> search_witness(const FamilyKey& f,
                                             const WitnessSearchCaps& caps) {
    if (caps.max_modulus < 1 || caps.max_period < 1) {
        throw std::invalid_argument("search caps must be >= 1");
    }
    if (auto w = coefficient_nonresidue_test(f)) return w;
    if (auto sf = square_factor_reduce(f)) {
        // The target's outer digit is at most 2, so it cannot reduce again.
        if (auto sub = search_witness(sf->second, caps)) {
            return ModularWitness{WitnessKind::SquareFactor, Int(0), 0, {}, sf->first,
                                  sf->second,
                                  std::make_shared<const ModularWitness>(std::move(*sub))};
        }
    }
    std::uint64_t limit = std::min(caps.max_modulus, kMaxDenseModulus);
    for (std::uint64_t q = 3; q <= limit; q += 2) {
        if (q % 5 == 0) continue;
        unsigned p1 = order10_capped(q, caps.max_period);
        unsigned p2 = order10_capped(9 * q, caps.max_period);
        if (!p1 && !p2) continue;
        QrTable table(q);
        if (p1) {
            if (auto w = periodic_test_with(f, q, p1, table)) return w;
        }
        if (p2) {
            if (auto w = direct_test_with(f, q, p2, table)) return w;
        }
    }
    return std::nullopt;
}

bool verify_witness(const FamilyKey& f, const ModularWitness& w, std::string* why) {
    auto [M, N] = coefficients(f);
    switch (w.kind) {
        case WitnessKind::NonResidue: {
            if (w.modulus != N) return fail(why, "witness modulus differs from N");
            if (N > kMaxDenseModulus) return fail(why, "modulus exceeds dense limit");
            std::uint64_t q = N.convert_to<std::uint64_t>();
            std::uint64_t r = reduce(M, q);
            if (w.residues != std::vector<Int>{Int(r)}) {
                return fail(why, "recorded residue differs from M mod N");
            }
            if (QrTable(q).is_residue(r)) return fail(why, "M is a residue mod N");
            return true;
        }
        case WitnessKind::Periodic:
        case WitnessKind::DirectPeriodic: {
            if (w.modulus < 1 || w.modulus > kMaxDenseModulus) {
                return fail(why, "modulus out of range");
            }
            std::uint64_t q = w.modulus.convert_to<std::uint64_t>();
            if (q % 2 == 0 || q % 5 == 0) return fail(why, "modulus not coprime to 10");
            bool direct = w.kind == WitnessKind::DirectPeriodic;
            unsigned period = multiplicative_order(10, direct ? Int(9 * q) : Int(q));
            if (w.period != period) return fail(why, "period differs from order of 10");
            QrTable table(q);
            auto recomputed = direct ? direct_test_with(f, q, period, table)
                                     : periodic_test_with(f, q, period, table);
            if (!recomputed) return fail(why, "a tested class is a quadratic residue");
            if (recomputed->residues != w.residues) {
                return fail(why, "recorded residues differ from recomputation");
            }
            return true;
        }
        case WitnessKind::SquareFactor: {
            if (w.factor != 2 && w.factor != 3) return fail(why, "factor must be 2 or 3");
            if (!w.target || !w.sub) return fail(why, "square-factor witness incomplete");
            if (w.sub->kind == WitnessKind::SquareFactor) {
                return fail(why, "nested square-factor reduction");
            }
            int cc = w.factor * w.factor;
            if (f.a != cc * w.target->a || f.b != cc * w.target->b ||
                f.m != w.target->m) {
                return fail(why, "family is not factor^2 times target");
            }
            return verify_witness(*w.target, *w.sub, why);
        }
    }
    return fail(why, "unknown witness kind");
}

ModularFamilyProof prove_family(const FamilyKey& f, const WitnessSearchCaps& caps) {
    ModularFamilyProof out{f, search_witness(f, caps), caps, {}};
    if (!out.witness) {
        for (unsigned n = 0; n <= 60; ++n) {
            if (is_perfect_square(curious_value(f, n))) out.squares_found.push_back(n);
        }
    }
    return out;
}

}  // namespace curious
