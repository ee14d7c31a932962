#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "curious/certificate.hpp"

namespace {

using namespace curious;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // proof or verification failure
constexpr int kExitUsage = 2;    // flag errors

void print_family_list(const std::vector<FamilyKey>& families) {
    for (const FamilyKey& f : families) {
        std::cout << f.display() << " (a=" << f.a << " b=" << f.b << " m=" << f.m << ")\n";
    }
}

void print_witness(const ModularWitness& w, const std::string& indent = "") {
    switch (w.kind) {
        case WitnessKind::NonResidue:
            std::cout << indent << "witness: M is a quadratic non-residue modulo N = "
                      << w.modulus << " (M mod N = " << w.residues[0] << ")\n";
            break;
        case WitnessKind::Periodic:
        case WitnessKind::DirectPeriodic: {
            bool direct = w.kind == WitnessKind::DirectPeriodic;
            std::cout << indent << "witness: every "
                      << (direct ? "family value" : "9x family value")
                      << " class mod q = " << w.modulus
                      << " is a quadratic non-residue (period " << w.period << ")\n"
                      << indent << "classes:";
            for (const Int& r : w.residues) std::cout << ' ' << r;
            std::cout << '\n';
            break;
        }
        case WitnessKind::SquareFactor:
            std::cout << indent << "witness: family is " << w.factor << "^2 times "
                      << w.target->display() << ", which has no squares:\n";
            print_witness(*w.sub, indent + "  ");
            break;
    }
}

int cmd_enumerate(unsigned max_digits, bool patterns) {
    for (const auto& [p, v] : enumerate_curious(max_digits)) {
        std::cout << v;
        if (patterns) {
            std::cout << " a=" << p.a << " b=" << p.b << " m=" << p.m << " n=" << p.n;
        }
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_sieve(unsigned k, const std::string& format) {
    CandidateSet cand = candidate_set(k);  // validates k >= 4 before the heavy work
    std::vector<std::uint64_t> inter = residue_intersection(k).members();
    if (format == "structured") {
        std::cout << "begin intersection " << inter.size() << '\n';
        for (auto r : inter) std::cout << r << '\n';
        std::cout << "end intersection\n";
        std::cout << "begin sporadics " << cand.sporadic_squares.size() << '\n';
        for (const Int& v : cand.sporadic_squares) {
            std::cout << v << ' ' << *is_perfect_square(v) << '\n';
        }
        std::cout << "end sporadics\n";
        std::cout << "begin families " << cand.families.size() << '\n';
        for (const FamilyKey& f : cand.families) {
            std::cout << f.a << ' ' << f.b << ' ' << f.m << '\n';
        }
        std::cout << "end families\n";
    } else {
        std::cout << "intersection mod 10^" << k << ": " << inter.size() << " residues\n";
        for (auto r : inter) std::cout << r << '\n';
        std::cout << "sporadic squares: " << cand.sporadic_squares.size() << '\n';
        for (const Int& v : cand.sporadic_squares) std::cout << v << '\n';
        std::cout << "families: " << cand.families.size() << '\n';
        print_family_list(cand.families);
    }
    return kExitOk;
}

int cmd_prove_family(const FamilyKey& f, Strategy strategy,
                     const std::string& appendix_path) {
    auto [M, N] = coefficients(f);
    std::cout << "family " << f.display() << ": M = " << M << ", N = " << N << '\n';
    bool proven_empty = false;

    if (strategy != Strategy::Elliptic) {
        ModularFamilyProof proof = prove_family(f);
        if (proof.witness) {
            print_witness(*proof.witness);
            std::cout << "modular conclusion: no perfect squares in " << f.display() << '\n';
            proven_empty = true;
        } else {
            std::cout << "no modular witness within caps (q <= " << proof.caps.max_modulus
                      << ", period <= " << proof.caps.max_period << ")\n";
            for (unsigned n : proof.squares_found) {
                std::cout << "  note: value at n=" << n << " is the square "
                          << curious_value(f, n) << '\n';
            }
        }
    }

    if (strategy != Strategy::Modular) {
        AppendixData data = load_appendix(appendix_path);
        for (const std::string& w : data.warnings) std::cerr << "note: " << w << '\n';
        std::array<std::optional<AppendixRow>, 3> triple;
        for (const AppendixRow& row : data.rows) {
            if (row.family == f) triple[row.j] = row;
        }
        std::array<AppendixRow, 3> rows;
        PointListTrust trust;
        if (triple[0] && triple[1] && triple[2]) {
            rows = {*triple[0], *triple[1], *triple[2]};
            trust = PointListTrust::External;
        } else {
            for (unsigned j = 0; j < 3; ++j) {
                MordellCurve curve = curve_for(f, j);
                rows[j] = {f, j, curve.B,
                           bounded_point_search(curve, kBoundedEvidenceLimit)};
            }
            trust = PointListTrust::Bounded;
            std::cout << "note: no external point data for " << f.display()
                      << "; falling back to a search to x <= " << kBoundedEvidenceLimit
                      << " (not a completeness proof)\n";
        }
        CurveProof proof = prove_family_via_curves(f, rows, trust);
        for (unsigned j = 0; j < 3; ++j) {
            std::cout << "curve j=" << j << ": y^2 = x^3 + " << rows[j].B << " with "
                      << rows[j].points.size() << " integral points ("
                      << to_string(trust) << ")\n";
        }
        if (proof.squares.empty()) {
            if (trust == PointListTrust::External) {
                std::cout << "curve conclusion: no perfect squares in " << f.display() << '\n';
                proven_empty = true;
            } else {
                std::cout << "curve conclusion: no squares with x <= "
                          << kBoundedEvidenceLimit << "; completeness not established\n";
            }
        } else {
            // Filter hits are squares unconditionally; only emptiness needs a
            // complete point list.
            std::cout << "curve conclusion: squares at";
            for (unsigned n : proof.squares) std::cout << " n=" << n;
            std::cout << '\n';
            for (unsigned n : proof.squares) {
                std::cout << "  value " << curious_value(f, n) << " = "
                          << *is_perfect_square(curious_value(f, n)) << "^2\n";
            }
        }
    }

    return proven_empty ? kExitOk : kExitFailure;
}

int cmd_curves(const FamilyKey& f, unsigned j, std::int64_t x_max) {
    MordellCurve curve = curve_for(f, j);
    std::cout << "curve for " << f.display() << ", j=" << j << ": y^2 = x^3 + " << curve.B
              << '\n';
    auto points = bounded_point_search(curve, x_max);
    std::cout << "integral points with x <= " << x_max << ": " << points.size() << '\n';
    for (const IntegralPoint& p : points) {
        std::cout << "(" << p.x << ", " << p.y << ")\n";
    }
    auto lpoints = filter_L(f, j, points);
    std::cout << "square-encoding points: " << lpoints.size() << '\n';
    for (const LFormPoint& lp : lpoints) {
        unsigned n = 3 * lp.k + j;
        std::cout << "k=" << lp.k << " y0=" << lp.y0 << " -> n=" << n << " value "
                  << curious_value(f, n) << '\n';
    }
    return kExitOk;
}

int cmd_verify_appendix(const std::string& path, std::int64_t x_max, unsigned jobs) {
    AppendixData data = load_appendix(path);
    for (const std::string& w : data.warnings) std::cerr << "note: " << w << '\n';
    AppendixReport rep = verify_appendix(data.rows, x_max, jobs);
    std::cout << "rows: " << rep.rows_checked << ", points: " << rep.points_checked
              << ", largest tabulated x: " << rep.largest_x << '\n';
    std::cout << "coverage: " << (rep.coverage_ok ? "ok" : "FAIL") << '\n';
    std::cout << "constant terms: " << (rep.b_values_ok ? "ok" : "FAIL") << '\n';
    std::cout << "curve membership: " << (rep.on_curve_ok ? "ok" : "FAIL") << '\n';
    std::cout << "search cross-check to x <= " << x_max << ": "
              << (rep.search_ok ? "ok" : "FAIL") << '\n';
    for (const std::string& f : rep.failures) std::cout << "failure: " << f << '\n';
    std::cout << (rep.ok ? "appendix data verified" : "appendix data INVALID") << '\n';
    return rep.ok ? kExitOk : kExitFailure;
}

int cmd_theorem(unsigned k, Strategy strategy, const std::string& out_path,
                const std::string& appendix_path, unsigned jobs) {
    BuildOptions options;
    options.appendix_path = appendix_path;
    options.jobs = jobs;
    TheoremCertificate cert = build_certificate(k, strategy, options);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kExitFailure;
        }
        out << serialize_certificate(cert);
    }
    for (std::size_t i = 0; i < cert.conclusion.size(); ++i) {
        std::cout << (i ? " " : "") << cert.conclusion[i];
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_verify_cert(const std::string& path, const std::string& appendix_path,
                    unsigned jobs) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << '\n';
        return kExitFailure;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    VerifyResult res = verify_certificate_text(buf.str(), appendix_path, jobs);
    for (const std::string& f : res.failures) std::cout << "failure: " << f << '\n';
    std::cout << (res.ok ? "certificate verified" : "certificate INVALID") << '\n';
    return res.ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curious squares: sieve, family proofs, curve checks and certificates"};
    app.require_subcommand(1);

    unsigned max_digits = 19;
    bool patterns = false;
    auto* enumerate = app.add_subcommand("enumerate", "list curious numbers");
    enumerate->add_option("--max-digits", max_digits, "largest digit count")
        ->check(CLI::Range(1u, 200u));
    enumerate->add_flag("--patterns", patterns, "include pattern fields");

    unsigned k = 7;
    std::string format = "plain";
    auto* sieve = app.add_subcommand("sieve", "residue intersection and candidate set");
    sieve->add_option("--k", k, "sieve exponent (moduli 10^k), k >= 4");
    sieve->add_option("--format", format, "plain or structured")
        ->check(CLI::IsMember({"plain", "structured"}));

    int fa = 1, fb = 0;
    unsigned fm = 1, fj = 0;
    std::string strategy_name = "both";
    std::string appendix_path;
    auto add_family_options = [&](CLI::App* cmd) {
        cmd->add_option("--a", fa, "outer digit")->required()->check(CLI::Range(1, 9));
        cmd->add_option("--b", fb, "inner digit")->required()->check(CLI::Range(0, 9));
        cmd->add_option("--m", fm, "outer run length")->required()->check(CLI::Range(1u, 100u));
    };
    auto* prove = app.add_subcommand("prove-family", "prove a family square-free");
    add_family_options(prove);
    prove->add_option("--strategy", strategy_name, "modular, elliptic or both")
        ->check(CLI::IsMember({"modular", "elliptic", "both"}));
    prove->add_option("--file", appendix_path, "appendix data file");

    std::int64_t x_max = 10'000'000;
    auto* curves = app.add_subcommand("curves", "curve, bounded points, square filter");
    add_family_options(curves);
    curves->add_option("--j", fj, "power-of-ten offset")->required()->check(CLI::Range(0u, 2u));
    curves->add_option("--x-max", x_max, "search bound")->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000'000}));

    unsigned jobs = 0;
    auto* va = app.add_subcommand("verify-appendix", "cross-check the point data file");
    va->add_option("--file", appendix_path, "appendix data file");
    va->add_option("--x-max", x_max, "search bound")->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000'000}));
    va->add_option("--jobs", jobs, "worker threads (0 = auto)");

    std::string out_path;
    auto* theorem = app.add_subcommand("theorem", "build the end-to-end certificate");
    theorem->add_option("--k", k, "sieve exponent, 4..8");
    theorem->add_option("--strategy", strategy_name, "modular, elliptic or both")
        ->check(CLI::IsMember({"modular", "elliptic", "both"}));
    theorem->add_option("--out", out_path, "write the certificate here");
    theorem->add_option("--file", appendix_path, "appendix data file");
    theorem->add_option("--jobs", jobs, "worker threads (0 = auto)");

    std::string cert_path;
    auto* vc = app.add_subcommand("verify-cert", "re-check a certificate");
    vc->add_option("--file", cert_path, "certificate file")->required();
    vc->add_option("--appendix", appendix_path, "appendix data file");
    vc->add_option("--jobs", jobs, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (appendix_path.empty()) appendix_path = default_appendix_path();
    Strategy strategy = *strategy_from_string(strategy_name);

    try {
        if (enumerate->parsed()) return cmd_enumerate(max_digits, patterns);
        if (sieve->parsed()) return cmd_sieve(k, format);
        if (prove->parsed()) return cmd_prove_family(FamilyKey(fa, fb, fm), strategy, appendix_path);
        if (curves->parsed()) return cmd_curves(FamilyKey(fa, fb, fm), fj, x_max);
        if (va->parsed()) return cmd_verify_appendix(appendix_path, x_max, jobs);
        if (theorem->parsed()) return cmd_theorem(k, strategy, out_path, appendix_path, jobs);
        if (vc->parsed()) return cmd_verify_cert(cert_path, appendix_path, jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
