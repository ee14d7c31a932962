#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "curious/certificate.hpp"

using namespace curious;

namespace {

std::vector<Int> eight_squares() {
    return {0, 1, 4, 9, 121, 484, 676, 44944};
}

// Replace the idx-th whitespace-separated token, preserving line layout.
std::string tamper_token(const std::string& text, std::size_t idx,
                         const std::string& replacement) {
    std::istringstream in(text);
    std::string line, out;
    std::size_t seen = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok, rebuilt;
        bool first = true;
        while (ls >> tok) {
            if (seen == idx) tok = replacement;
            ++seen;
            rebuilt += (first ? "" : " ") + tok;
            first = false;
        }
        out += rebuilt + "\n";
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

}  // namespace

TEST_CASE("brute force crosscheck") {
    CHECK(brute_force_crosscheck(5) == eight_squares());
    CHECK(brute_force_crosscheck(2) == std::vector<Int>{0, 1, 4, 9});
    CHECK(brute_force_crosscheck(12) == eight_squares());
}

TEST_CASE("build and verify at k=7, all strategies") {
    for (Strategy s : {Strategy::Modular, Strategy::Elliptic, Strategy::Both}) {
        TheoremCertificate cert = build_certificate(7, s, {});
        CHECK(cert.conclusion == eight_squares());
        CHECK(cert.candidates.families.size() == 13);
        CHECK(cert.intersection.size() == 77);
        VerifyResult res = verify_certificate(cert);
        for (const std::string& f : res.failures) MESSAGE(f);
        CHECK(res.ok);

        for (const FamilyProofEntry& entry : cert.proofs) {
            CHECK(entry.squares.empty());  // no thirteen-family squares
            if (s == Strategy::Modular) {
                CHECK(entry.witness);
                CHECK(!entry.curves);
            } else if (s == Strategy::Elliptic) {
                CHECK(!entry.witness);
                REQUIRE(entry.curves);
                CHECK(entry.curves->trust == PointListTrust::External);
            } else {
                CHECK(entry.witness);
                CHECK(entry.curves);
            }
        }
    }
}

TEST_CASE("conclusion is independent of exponent and strategy") {
    for (unsigned k = 4; k <= 7; ++k) {
        for (Strategy s : {Strategy::Modular, Strategy::Elliptic, Strategy::Both}) {
            CAPTURE(k);
            CAPTURE(to_string(s));
            TheoremCertificate cert = build_certificate(k, s, {});
            CHECK(cert.conclusion == eight_squares());
            VerifyResult res = verify_certificate(cert);
            for (const std::string& f : res.failures) MESSAGE(f);
            CHECK(res.ok);
        }
    }
}

TEST_CASE("square-containing families carry curve evidence at k=4") {
    TheoremCertificate cert = build_certificate(4, Strategy::Modular, {});
    bool saw_481 = false, saw_671 = false;
    for (const FamilyProofEntry& entry : cert.proofs) {
        if (entry.family == FamilyKey(4, 8, 1)) {
            saw_481 = true;
            CHECK(!entry.witness);
            REQUIRE(entry.curves);
            CHECK(entry.curves->trust == PointListTrust::Bounded);
            CHECK(entry.squares == std::vector<unsigned>{1});  // 484
        } else if (entry.family == FamilyKey(6, 7, 1)) {
            saw_671 = true;
            REQUIRE(entry.curves);
            CHECK(entry.squares == std::vector<unsigned>{1});  // 676
        } else {
            CHECK(entry.witness);
        }
    }
    CHECK(saw_481);
    CHECK(saw_671);
    CHECK(cert.conclusion == eight_squares());
}

TEST_CASE("serialization round trip") {
    TheoremCertificate cert = build_certificate(7, Strategy::Both, {});
    std::string text = serialize_certificate(cert);
    TheoremCertificate back = parse_certificate(text);
    CHECK(serialize_certificate(back) == text);
    CHECK(back.k == cert.k);
    CHECK(back.strategy == cert.strategy);
    CHECK(back.intersection == cert.intersection);
    CHECK(back.conclusion == cert.conclusion);
    CHECK(back.candidates.families == cert.candidates.families);
    VerifyResult res = verify_certificate_text(text);
    CHECK(res.ok);
}

TEST_CASE("verification rejects specific corruptions") {
    TheoremCertificate cert = build_certificate(7, Strategy::Both, {});

    // witness modulus 130 -> 131 for 14..41
    TheoremCertificate bad = cert;
    for (FamilyProofEntry& entry : bad.proofs) {
        if (entry.family == FamilyKey(1, 4, 1)) entry.witness->modulus = 131;
    }
    CHECK(!verify_certificate(bad).ok);

    // sporadic 44944 -> 44945
    bad = cert;
    bad.sporadic_checks.back().first = 44945;
    CHECK(!verify_certificate(bad).ok);

    // conclusion tampered
    bad = cert;
    bad.conclusion.push_back(Int("123454321"));
    CHECK(!verify_certificate(bad).ok);

    // strategy relabeled without reshaping the evidence
    bad = cert;
    bad.strategy = Strategy::Modular;
    CHECK(!verify_certificate(bad).ok);

    // curve point dropped from external evidence
    bad = cert;
    for (FamilyProofEntry& entry : bad.proofs) {
        if (entry.family == FamilyKey(4, 2, 1)) {
            entry.curves->rows[0].points.pop_back();
        }
    }
    CHECK(!verify_certificate(bad).ok);
}

TEST_CASE("token-level tampering always fails verification") {
    TheoremCertificate cert = build_certificate(7, Strategy::Both, {});
    std::string text = serialize_certificate(cert);
    REQUIRE(verify_certificate_text(text).ok);

    std::vector<std::string> toks = tokens_of(text);
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::size_t> pick(0, toks.size() - 1);
    int integer_tampers = 0;
    for (int tries = 0; integer_tampers < 60 && tries < 4000; ++tries) {
        std::size_t idx = pick(rng);
        Int v;
        try {
            v = Int(toks[idx]);
        } catch (const std::exception&) {
            continue;  // keyword token; covered below
        }
        if (v.str() != toks[idx]) continue;
        ++integer_tampers;
        std::string mutated = tamper_token(text, idx, Int(v + 1).str());
        VerifyResult res = verify_certificate_text(mutated);
        CAPTURE(idx);
        CAPTURE(toks[idx]);
        CHECK(!res.ok);
    }
    CHECK(integer_tampers == 60);

    // a few keyword corruptions
    for (const char* keyword : {"both", "external", "witness", "squares", "end-certificate"}) {
        std::size_t idx = 0;
        for (; idx < toks.size(); ++idx) {
            if (toks[idx] == keyword) break;
        }
        REQUIRE(idx < toks.size());
        std::string mutated = tamper_token(text, idx, "tampered");
        CHECK(!verify_certificate_text(mutated).ok);
    }
}

TEST_CASE("verification requires the appendix for external evidence") {
    TheoremCertificate cert = build_certificate(7, Strategy::Elliptic, {});
    VerifyResult res = verify_certificate(cert, "/nonexistent/appendix.txt");
    CHECK(!res.ok);

    TheoremCertificate modular = build_certificate(7, Strategy::Modular, {});
    res = verify_certificate(modular, "/nonexistent/appendix.txt");
    CHECK(res.ok);  // no curve evidence, no appendix needed
}

TEST_CASE("certificate build rejects bad exponents") {
    CHECK_THROWS_AS(build_certificate(3, Strategy::Both, {}), std::invalid_argument);
}

TEST_CASE("brute force results are contained in the conclusion") {
    TheoremCertificate cert = build_certificate(7, Strategy::Modular, {});
    for (unsigned d = 1; d <= 19; ++d) {
        for (const Int& v : brute_force_crosscheck(d)) {
            CHECK(std::binary_search(cert.conclusion.begin(), cert.conclusion.end(), v));
        }
    }
}
