#include "curious/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "curious/parallel.hpp"

namespace curious {

namespace {

// --- proof routing -------------------------------------------------------

struct ProofShape {
    bool want_witness = false;
    bool want_curves = false;
    PointListTrust trust = PointListTrust::External;
};

// A family that contains a sporadic square can never have a modular
// emptiness witness, so it carries curve evidence under every strategy.
// Families outside the bundled data fall back to bounded lists.
ProofShape expected_shape(Strategy s, bool has_square, bool covered) {
    PointListTrust trust = covered ? PointListTrust::External : PointListTrust::Bounded;
    if (has_square) return {false, true, trust};
    switch (s) {
        case Strategy::Modular:
            return {true, false, trust};
        case Strategy::Elliptic:
            return {false, true, trust};
        case Strategy::Both:
            return {true, true, trust};
    }
    throw std::logic_error("unknown strategy");
}

// Indices n at which the family value equals a sporadic square.
std::vector<unsigned> sporadic_members(const FamilyKey& f, const std::vector<Int>& sporadics) {
    std::vector<unsigned> out;
    if (sporadics.empty()) return out;
    const Int& biggest = sporadics.back();
    for (unsigned n = 0;; ++n) {
        Int v = curious_value(f, n);
        if (v > biggest) break;
        if (std::binary_search(sporadics.begin(), sporadics.end(), v)) out.push_back(n);
    }
    return out;
}

using AppendixMap = std::map<FamilyKey, std::array<std::optional<AppendixRow>, 3>>;

AppendixMap index_appendix(const std::vector<AppendixRow>& rows) {
    AppendixMap map;
    for (const AppendixRow& row : rows) map[row.family][row.j] = row;
    return map;
}

bool covered_by(const AppendixMap& map, const FamilyKey& f) {
    auto it = map.find(f);
    return it != map.end() && it->second[0] && it->second[1] && it->second[2];
}

std::array<AppendixRow, 3> bounded_rows(const FamilyKey& f) {
    std::array<AppendixRow, 3> rows{AppendixRow{f, 0, 0, {}}, AppendixRow{f, 1, 0, {}},
                                    AppendixRow{f, 2, 0, {}}};
    for (unsigned j = 0; j < 3; ++j) {
        MordellCurve curve = curve_for(f, j);
        rows[j].B = curve.B;
        rows[j].points = bounded_point_search(curve, kBoundedEvidenceLimit);
    }
    return rows;
}

// --- serialization -------------------------------------------------------

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::NonResidue: return "non-residue";
        case WitnessKind::Periodic: return "periodic";
        case WitnessKind::DirectPeriodic: return "direct-periodic";
        case WitnessKind::SquareFactor: return "square-factor";
    }
    throw std::logic_error("unknown witness kind");
}

std::optional<WitnessKind> witness_kind_from(const std::string& s) {
    if (s == "non-residue") return WitnessKind::NonResidue;
    if (s == "periodic") return WitnessKind::Periodic;
    if (s == "direct-periodic") return WitnessKind::DirectPeriodic;
    if (s == "square-factor") return WitnessKind::SquareFactor;
    return std::nullopt;
}

void write_plain_witness(std::ostream& os, const ModularWitness& w, const char* label) {
    os << label << ' ' << witness_kind_name(w.kind) << '\n';
    os << "modulus " << w.modulus << '\n';
    if (w.kind != WitnessKind::NonResidue) os << "period " << w.period << '\n';
    os << "residues";
    for (const Int& r : w.residues) os << ' ' << r;
    os << '\n';
}

void write_witness(std::ostream& os, const ModularWitness& w) {
    if (w.kind == WitnessKind::SquareFactor) {
        os << "witness square-factor\n";
        os << "factor " << w.factor << '\n';
        os << "target " << w.target->a << ' ' << w.target->b << ' ' << w.target->m << '\n';
        write_plain_witness(os, *w.sub, "subwitness");
    } else {
        write_plain_witness(os, w, "witness");
    }
}

// --- strict line parser ---------------------------------------------------

class Parser {
public:
    explicit Parser(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines_.push_back(line);
    }

    [[noreturn]] void error(const std::string& msg) const {
        throw std::runtime_error("certificate line " + std::to_string(pos_) + ": " + msg);
    }

    bool at_end() const { return pos_ >= lines_.size(); }

    std::vector<std::string> next_line() {
        if (at_end()) throw std::runtime_error("certificate truncated");
        const std::string& line = lines_[pos_++];
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) tokens.push_back(t);
        if (tokens.empty()) error("blank line");
        // Canonical spacing: single spaces, no leading/trailing whitespace.
        std::string rebuilt;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i) rebuilt += ' ';
            rebuilt += tokens[i];
        }
        if (rebuilt != line) error("non-canonical spacing");
        return tokens;
    }

    std::vector<std::string> peek() {
        std::size_t save = pos_;
        auto tokens = next_line();
        pos_ = save;
        return tokens;
    }

    Int integer(const std::string& token) {
        Int v;
        try {
            v = Int(token);
        } catch (const std::exception&) {
            error("bad integer '" + token + "'");
        }
        if (v.str() != token) error("non-canonical integer '" + token + "'");
        return v;
    }

    std::uint64_t uint_in(const std::string& token, std::uint64_t lo, std::uint64_t hi) {
        Int v = integer(token);
        if (v < lo || v > hi) error("value '" + token + "' out of range");
        return v.convert_to<std::uint64_t>();
    }

private:
    std::vector<std::string> lines_;
    std::size_t pos_ = 0;
};

FamilyKey parse_family(Parser& p, const std::vector<std::string>& tokens, std::size_t at) {
    int a = static_cast<int>(p.uint_in(tokens[at], 1, 9));
    int b = static_cast<int>(p.uint_in(tokens[at + 1], 0, 9));
    unsigned m = static_cast<unsigned>(p.uint_in(tokens[at + 2], 1, 1000));
    return FamilyKey(a, b, m);
}

ModularWitness parse_plain_witness(Parser& p, WitnessKind kind) {
    ModularWitness w;
    w.kind = kind;
    auto mod_line = p.next_line();
    if (mod_line.size() != 2 || mod_line[0] != "modulus") p.error("expected 'modulus <q>'");
    w.modulus = p.integer(mod_line[1]);
    std::size_t expected = 1;
    if (kind != WitnessKind::NonResidue) {
        auto period_line = p.next_line();
        if (period_line.size() != 2 || period_line[0] != "period") {
            p.error("expected 'period <p>'");
        }
        w.period = static_cast<unsigned>(p.uint_in(period_line[1], 1, 1'000'000));
        expected = w.period;
    }
    auto res_line = p.next_line();
    if (res_line.empty() || res_line[0] != "residues") p.error("expected 'residues ...'");
    if (res_line.size() != expected + 1) p.error("wrong residue count");
    for (std::size_t i = 1; i < res_line.size(); ++i) {
        w.residues.push_back(p.integer(res_line[i]));
    }
    return w;
}

ModularWitness parse_witness(Parser& p) {
    auto head = p.next_line();
    if (head.size() != 2 || head[0] != "witness") p.error("expected 'witness <kind>'");
    auto kind = witness_kind_from(head[1]);
    if (!kind) p.error("unknown witness kind '" + head[1] + "'");
    if (*kind != WitnessKind::SquareFactor) return parse_plain_witness(p, *kind);

    ModularWitness w;
    w.kind = WitnessKind::SquareFactor;
    auto factor_line = p.next_line();
    if (factor_line.size() != 2 || factor_line[0] != "factor") p.error("expected 'factor <c>'");
    w.factor = static_cast<int>(p.uint_in(factor_line[1], 2, 3));
    auto target_line = p.next_line();
    if (target_line.size() != 4 || target_line[0] != "target") {
        p.error("expected 'target <a> <b> <m>'");
    }
    w.target = parse_family(p, target_line, 1);
    auto sub_head = p.next_line();
    if (sub_head.size() != 2 || sub_head[0] != "subwitness") {
        p.error("expected 'subwitness <kind>'");
    }
    auto sub_kind = witness_kind_from(sub_head[1]);
    if (!sub_kind || *sub_kind == WitnessKind::SquareFactor) {
        p.error("bad subwitness kind '" + sub_head[1] + "'");
    }
    w.sub = std::make_shared<const ModularWitness>(parse_plain_witness(p, *sub_kind));
    return w;
}

}  // namespace

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Modular: return "modular";
        case Strategy::Elliptic: return "elliptic";
        case Strategy::Both: return "both";
    }
    throw std::logic_error("unknown strategy");
}

std::optional<Strategy> strategy_from_string(const std::string& s) {
    if (s == "modular") return Strategy::Modular;
    if (s == "elliptic") return Strategy::Elliptic;
    if (s == "both") return Strategy::Both;
    return std::nullopt;
}

TheoremCertificate build_certificate(unsigned k, Strategy strategy,
                                     const BuildOptions& options) {
    TheoremCertificate cert;
    cert.k = k;
    cert.strategy = strategy;
    cert.intersection = residue_intersection(k).members();
    cert.candidates = candidate_set(k);

    for (const Int& v : cert.candidates.sporadic_squares) {
        auto root = is_perfect_square(v);
        if (!root) throw std::logic_error("sporadic candidate is not a square");
        cert.sporadic_checks.push_back({v, *root});
    }

    // The appendix file is needed only when some family takes the curve route.
    bool any_curves = strategy != Strategy::Modular;
    std::vector<bool> has_square(cert.candidates.families.size());
    for (std::size_t i = 0; i < cert.candidates.families.size(); ++i) {
        has_square[i] = !sporadic_members(cert.candidates.families[i],
                                          cert.candidates.sporadic_squares)
                             .empty();
        any_curves = any_curves || has_square[i];
    }
    AppendixMap appendix;
    if (any_curves) {
        std::string path =
            options.appendix_path.empty() ? default_appendix_path() : options.appendix_path;
        appendix = index_appendix(load_appendix(path).rows);
    }

    cert.proofs.resize(cert.candidates.families.size());
    parallel_for(cert.candidates.families.size(), options.jobs, [&](std::size_t i) {
        const FamilyKey& f = cert.candidates.families[i];
        ProofShape shape = expected_shape(strategy, has_square[i], covered_by(appendix, f));
        FamilyProofEntry entry;
        entry.family = f;
        if (shape.want_witness) {
            entry.witness = search_witness(f, options.caps);
            if (!entry.witness) {
                throw std::runtime_error("family " + f.display() +
                                         " unproven: no modular witness within caps");
            }
        }
        if (shape.want_curves) {
            std::array<AppendixRow, 3> rows;
            if (shape.trust == PointListTrust::External) {
                const auto& triple = appendix.at(f);
                rows = {*triple[0], *triple[1], *triple[2]};
            } else {
                rows = bounded_rows(f);
            }
            entry.curves = prove_family_via_curves(f, rows, shape.trust);
            entry.squares = entry.curves->squares;
        }
        if (entry.witness && !entry.squares.empty()) {
            throw std::logic_error("family " + f.display() +
                                   " has both a witness and curve squares");
        }
        cert.proofs[i] = std::move(entry);
    });

    std::set<Int> conclusion(cert.candidates.sporadic_squares.begin(),
                             cert.candidates.sporadic_squares.end());
    for (const FamilyProofEntry& entry : cert.proofs) {
        for (unsigned n : entry.squares) conclusion.insert(curious_value(entry.family, n));
    }
    cert.conclusion.assign(conclusion.begin(), conclusion.end());
    return cert;
}

std::string serialize_certificate(const TheoremCertificate& cert) {
    std::ostringstream os;
    os << "curious-certificate 1\n";
    os << "k " << cert.k << '\n';
    os << "strategy " << to_string(cert.strategy) << '\n';

    os << "begin intersection " << cert.intersection.size() << '\n';
    for (std::uint64_t r : cert.intersection) os << r << '\n';
    os << "end intersection\n";

    os << "begin sporadics " << cert.sporadic_checks.size() << '\n';
    for (const auto& [value, root] : cert.sporadic_checks) {
        os << value << ' ' << root << '\n';
    }
    os << "end sporadics\n";

    os << "begin families " << cert.candidates.families.size() << '\n';
    for (const FamilyKey& f : cert.candidates.families) {
        os << f.a << ' ' << f.b << ' ' << f.m << '\n';
    }
    os << "end families\n";

    for (const FamilyProofEntry& entry : cert.proofs) {
        const FamilyKey& f = entry.family;
        os << "begin proof " << f.a << ' ' << f.b << ' ' << f.m << '\n';
        if (entry.witness) write_witness(os, *entry.witness);
        if (entry.curves) {
            os << "curves " << to_string(entry.curves->trust) << '\n';
            for (unsigned j = 0; j < 3; ++j) {
                const AppendixRow& row = entry.curves->rows[j];
                os << "curve " << j << ' ' << row.B << ' ' << row.points.size() << '\n';
                for (const IntegralPoint& p : row.points) {
                    os << p.x << ' ' << p.y << '\n';
                }
            }
        }
        os << "squares";
        for (unsigned n : entry.squares) os << ' ' << n;
        os << '\n';
        os << "end proof\n";
    }

    os << "begin conclusion " << cert.conclusion.size() << '\n';
    for (const Int& v : cert.conclusion) os << v << '\n';
    os << "end conclusion\n";
    os << "end-certificate\n";
    return os.str();
}

TheoremCertificate parse_certificate(const std::string& text) {
    Parser p(text);
    TheoremCertificate cert;

    auto magic = p.next_line();
    if (magic.size() != 2 || magic[0] != "curious-certificate" || magic[1] != "1") {
        p.error("bad certificate header");
    }
    auto k_line = p.next_line();
    if (k_line.size() != 2 || k_line[0] != "k") p.error("expected 'k <exponent>'");
    cert.k = static_cast<unsigned>(p.uint_in(k_line[1], 1, kMaxSieveExponent));
    auto strat_line = p.next_line();
    if (strat_line.size() != 2 || strat_line[0] != "strategy") {
        p.error("expected 'strategy <name>'");
    }
    auto strategy = strategy_from_string(strat_line[1]);
    if (!strategy) p.error("unknown strategy '" + strat_line[1] + "'");
    cert.strategy = *strategy;

    auto expect_begin = [&](const char* section) -> std::size_t {
        auto line = p.next_line();
        if (line.size() != 3 || line[0] != "begin" || line[1] != section) {
            p.error(std::string("expected 'begin ") + section + " <count>'");
        }
        return p.uint_in(line[2], 0, 100'000'000);
    };
    auto expect_end = [&](const char* section) {
        auto line = p.next_line();
        if (line.size() != 2 || line[0] != "end" || line[1] != section) {
            p.error(std::string("expected 'end ") + section + "'");
        }
    };

    std::size_t n = expect_begin("intersection");
    for (std::size_t i = 0; i < n; ++i) {
        auto line = p.next_line();
        if (line.size() != 1) p.error("expected one residue per line");
        std::uint64_t r = p.uint_in(line[0], 0, 9'999'999'999ull);
        if (i && r <= cert.intersection.back()) p.error("residues not ascending");
        cert.intersection.push_back(r);
    }
    expect_end("intersection");

    n = expect_begin("sporadics");
    for (std::size_t i = 0; i < n; ++i) {
        auto line = p.next_line();
        if (line.size() != 2) p.error("expected '<value> <root>'");
        Int value = p.integer(line[0]);
        Int root = p.integer(line[1]);
        if (i && value <= cert.sporadic_checks.back().first) {
            p.error("sporadics not ascending");
        }
        cert.sporadic_checks.push_back({value, root});
        cert.candidates.sporadic_squares.push_back(value);
    }
    expect_end("sporadics");

    n = expect_begin("families");
    for (std::size_t i = 0; i < n; ++i) {
        auto line = p.next_line();
        if (line.size() != 3) p.error("expected '<a> <b> <m>'");
        FamilyKey f = parse_family(p, line, 0);
        if (i && !(cert.candidates.families.back() < f)) p.error("families not ascending");
        cert.candidates.families.push_back(f);
    }
    expect_end("families");

    for (const FamilyKey& f : cert.candidates.families) {
        auto head = p.next_line();
        if (head.size() != 5 || head[0] != "begin" || head[1] != "proof") {
            p.error("expected 'begin proof <a> <b> <m>'");
        }
        if (parse_family(p, head, 2) != f) p.error("proof out of order");
        FamilyProofEntry entry;
        entry.family = f;

        if (p.peek()[0] == "witness") entry.witness = parse_witness(p);
        if (p.peek()[0] == "curves") {
            auto trust_line = p.next_line();
            if (trust_line.size() != 2) p.error("expected 'curves <trust>'");
            CurveProof proof;
            proof.family = f;
            if (trust_line[1] == "external") {
                proof.trust = PointListTrust::External;
            } else if (trust_line[1] == "bounded") {
                proof.trust = PointListTrust::Bounded;
            } else {
                p.error("unknown trust level '" + trust_line[1] + "'");
            }
            for (unsigned j = 0; j < 3; ++j) {
                auto curve_line = p.next_line();
                if (curve_line.size() != 4 || curve_line[0] != "curve") {
                    p.error("expected 'curve <j> <B> <npoints>'");
                }
                if (p.uint_in(curve_line[1], 0, 2) != j) p.error("curve out of order");
                AppendixRow row{f, j, p.integer(curve_line[2]), {}};
                std::size_t npoints = p.uint_in(curve_line[3], 0, 1'000'000);
                for (std::size_t i = 0; i < npoints; ++i) {
                    auto pt = p.next_line();
                    if (pt.size() != 2) p.error("expected '<x> <y>'");
                    IntegralPoint point{p.integer(pt[0]), p.integer(pt[1])};
                    if (point.y < 0) p.error("negative y in point list");
                    if (i && !(row.points.back() < point)) p.error("points not ascending");
                    row.points.push_back(std::move(point));
                }
                proof.rows[j] = std::move(row);
            }
            entry.curves = std::move(proof);
        }

        auto squares_line = p.next_line();
        if (squares_line.empty() || squares_line[0] != "squares") {
            p.error("expected 'squares ...'");
        }
        for (std::size_t i = 1; i < squares_line.size(); ++i) {
            unsigned nn = static_cast<unsigned>(p.uint_in(squares_line[i], 0, 1'000'000));
            if (i > 1 && nn <= entry.squares.back()) p.error("squares not ascending");
            entry.squares.push_back(nn);
        }
        if (entry.curves) entry.curves->squares = entry.squares;
        auto tail = p.next_line();
        if (tail.size() != 2 || tail[0] != "end" || tail[1] != "proof") {
            p.error("expected 'end proof'");
        }
        cert.proofs.push_back(std::move(entry));
    }

    n = expect_begin("conclusion");
    for (std::size_t i = 0; i < n; ++i) {
        auto line = p.next_line();
        if (line.size() != 1) p.error("expected one value per line");
        Int v = p.integer(line[0]);
        if (v < 0) p.error("negative conclusion value");
        if (i && v <= cert.conclusion.back()) p.error("conclusion not ascending");
        cert.conclusion.push_back(std::move(v));
    }
    expect_end("conclusion");

    auto last = p.next_line();
    if (last.size() != 1 || last[0] != "end-certificate") p.error("expected 'end-certificate'");
    if (!p.at_end()) p.error("trailing data after end-certificate");
    return cert;
}

VerifyResult verify_certificate(const TheoremCertificate& cert,
                                const std::string& appendix_path, unsigned jobs) {
    VerifyResult result;
    auto fail = [&](const std::string& msg) { result.failures.push_back(msg); };

    if (cert.k < 4 || cert.k > kMaxSieveExponent) {
        fail("sieve exponent out of range");
        return result;
    }

    // Sieve sets.
    if (cert.intersection != residue_intersection(cert.k).members()) {
        fail("intersection differs from recomputation");
    }
    CandidateSet cand = candidate_set(cert.k);
    if (cert.candidates.families != cand.families) {
        fail("candidate families differ from recomputation");
    }
    if (cert.candidates.sporadic_squares != cand.sporadic_squares) {
        fail("sporadic squares differ from recomputation");
    }

    // Sporadic checks.
    if (cert.sporadic_checks.size() != cert.candidates.sporadic_squares.size()) {
        fail("sporadic check count mismatch");
    }
    for (const auto& [value, root] : cert.sporadic_checks) {
        if (root < 0 || root * root != value) {
            fail("sporadic " + value.str() + ": recorded root does not square to it");
        }
        if (!pattern_of_value(value)) fail("sporadic " + value.str() + " is not curious");
    }

    if (cert.proofs.size() != cert.candidates.families.size()) {
        fail("family/proof count mismatch");
        result.ok = result.failures.empty();
        return result;
    }

    // The appendix is the trust anchor for external point lists; load it only
    // if some proof carries curve evidence.
    bool any_curves = false;
    for (const FamilyProofEntry& e : cert.proofs) any_curves |= e.curves.has_value();
    AppendixMap appendix;
    bool appendix_loaded = false;
    if (any_curves) {
        try {
            std::string path = appendix_path.empty() ? default_appendix_path() : appendix_path;
            appendix = index_appendix(load_appendix(path).rows);
            appendix_loaded = true;
        } catch (const std::exception& e) {
            fail(std::string("appendix unavailable: ") + e.what());
        }
    }

    std::vector<std::vector<std::string>> proof_failures(cert.proofs.size());
    parallel_for(cert.proofs.size(), jobs, [&](std::size_t i) {
        auto pfail = [&](const std::string& msg) {
            proof_failures[i].push_back("proof " + cert.proofs[i].family.display() + ": " + msg);
        };
        const FamilyProofEntry& entry = cert.proofs[i];
        if (i < cand.families.size() && entry.family != cand.families[i]) {
            pfail("family out of order");
            return;
        }
        const FamilyKey& f = entry.family;
        bool has_square = !sporadic_members(f, cand.sporadic_squares).empty();
        bool covered = appendix_loaded && covered_by(appendix, f);
        ProofShape shape = expected_shape(cert.strategy, has_square, covered);

        if (shape.want_witness != entry.witness.has_value()) {
            pfail(shape.want_witness ? "missing modular witness"
                                     : "unexpected modular witness");
            return;
        }
        if (shape.want_curves != entry.curves.has_value()) {
            pfail(shape.want_curves ? "missing curve evidence" : "unexpected curve evidence");
            return;
        }

        if (entry.witness) {
            std::string why;
            if (!verify_witness(f, *entry.witness, &why)) pfail("witness invalid: " + why);
        }

        if (entry.curves) {
            const CurveProof& proof = *entry.curves;
            if (proof.trust != shape.trust) {
                pfail("trust level differs from the expected '" + to_string(shape.trust) + "'");
                return;
            }
            try {
                CurveProof redone = prove_family_via_curves(f, proof.rows, proof.trust);
                if (redone.squares != entry.squares) {
                    pfail("square set differs from the recomputed L-filter");
                }
            } catch (const std::exception& e) {
                pfail(e.what());
                return;
            }
            for (unsigned j = 0; j < 3; ++j) {
                const AppendixRow& row = proof.rows[j];
                if (proof.trust == PointListTrust::External) {
                    if (!covered) {
                        pfail("external evidence for a family absent from the appendix");
                        break;
                    }
                    const AppendixRow& ref = *appendix.at(f)[j];
                    if (row.B != ref.B || row.points != ref.points) {
                        pfail("embedded points differ from the appendix file at j=" +
                              std::to_string(j));
                    }
                } else {
                    MordellCurve curve = curve_for(f, j);
                    if (row.points != bounded_point_search(curve, kBoundedEvidenceLimit)) {
                        pfail("bounded point list differs from recomputation at j=" +
                              std::to_string(j));
                    }
                }
            }
        } else if (!entry.squares.empty()) {
            pfail("witness-only proof cannot report squares");
        }
    });
    for (const auto& fs : proof_failures) {
        result.failures.insert(result.failures.end(), fs.begin(), fs.end());
    }

    // Conclusion: sporadics plus every square found inside a family.
    std::set<Int> expected(cand.sporadic_squares.begin(), cand.sporadic_squares.end());
    for (const FamilyProofEntry& entry : cert.proofs) {
        for (unsigned nn : entry.squares) expected.insert(curious_value(entry.family, nn));
    }
    if (cert.conclusion != std::vector<Int>(expected.begin(), expected.end())) {
        fail("conclusion differs from sporadics plus family squares");
    }

    result.ok = result.failures.empty();
    return result;
}

VerifyResult verify_certificate_text(const std::string& text,
                                     const std::string& appendix_path, unsigned jobs) {
    try {
        return verify_certificate(parse_certificate(text), appendix_path, jobs);
    } catch (const std::exception& e) {
        return {false, {std::string("parse error: ") + e.what()}};
    }
}

std::vector<Int> brute_force_crosscheck(unsigned max_digits) {
    std::vector<Int> out;
    for (const auto& [pattern, value] : enumerate_curious(max_digits)) {
        if (is_perfect_square(value)) out.push_back(value);
    }
    return out;
}

}  // namespace curious
