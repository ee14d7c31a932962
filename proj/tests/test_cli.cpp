#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* env = std::getenv("CURIOUS_CLI");
    REQUIRE_MESSAGE(env != nullptr, "CURIOUS_CLI must point at the binary");
    return env;
}

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("help and flag validation") {
    CHECK(run("--help").status == 0);
    CHECK(run("sieve --help").status == 0);
    CHECK(run("sieve --no-such-flag").status == 2);
    CHECK(run("bogus-subcommand").status == 2);
    CHECK(run("prove-family --a 4").status == 2);  // missing required flags
}

TEST_CASE("sieve rejects k below 4 with exit 2") {
    RunResult r = run("sieve --k 3");
    CHECK(r.status == 2);
}

TEST_CASE("sieve output") {
    RunResult r = run("sieve --k 7");
    CHECK(r.status == 0);
    CHECK(r.out.find("77 residues") != std::string::npos);
    CHECK(r.out.find("sporadic squares: 8") != std::string::npos);
    CHECK(r.out.find("families: 13") != std::string::npos);
    CHECK(r.out.find("4447..7444") != std::string::npos);

    RunResult structured = run("sieve --k 7 --format structured");
    CHECK(structured.status == 0);
    CHECK(structured.out.find("begin intersection 77") != std::string::npos);
    CHECK(structured.out.find("begin families 13") != std::string::npos);
}

TEST_CASE("identical flags produce byte-identical output") {
    RunResult a = run("sieve --k 5");
    RunResult b = run("sieve --k 5");
    CHECK(a.out == b.out);
    a = run("theorem --k 4 --strategy modular");
    b = run("theorem --k 4 --strategy modular");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("enumerate") {
    RunResult r = run("enumerate --max-digits 1");
    CHECK(r.status == 0);
    CHECK(r.out == "0\n1\n2\n3\n4\n5\n6\n7\n8\n9\n");
    r = run("enumerate --max-digits 3 --patterns");
    CHECK(r.out.find("121 a=1 b=2 m=1 n=1") != std::string::npos);
}

TEST_CASE("prove-family") {
    RunResult r = run("prove-family --a 4 --b 2 --m 1 --strategy modular");
    CHECK(r.status == 0);
    CHECK(r.out.find("non-residue") != std::string::npos);
    CHECK(r.out.find("no perfect squares") != std::string::npos);

    r = run("prove-family --a 1 --b 4 --m 1 --strategy both");
    CHECK(r.status == 0);

    // 12..21 contains 121: modular proof must fail
    r = run("prove-family --a 1 --b 2 --m 1 --strategy modular");
    CHECK(r.status == 1);
    CHECK(r.out.find("121") != std::string::npos);
}

TEST_CASE("curves subcommand") {
    RunResult r = run("curves --a 4 --b 2 --m 1 --j 0 --x-max 2000");
    CHECK(r.status == 0);
    CHECK(r.out.find("y^2 = x^3 + 2310400") != std::string::npos);
    CHECK(r.out.find("(80, 1680)") != std::string::npos);
    CHECK(r.out.find("square-encoding points: 0") != std::string::npos);

    r = run("curves --a 1 --b 2 --m 1 --j 1 --x-max 2000");
    CHECK(r.status == 0);
    CHECK(r.out.find("(1100, 36300)") != std::string::npos);
    CHECK(r.out.find("n=1 value 121") != std::string::npos);
}

TEST_CASE("verify-appendix at a modest bound") {
    RunResult r = run("verify-appendix --x-max 20000 --jobs 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("rows: 39") != std::string::npos);
    CHECK(r.out.find("appendix data verified") != std::string::npos);
}

TEST_CASE("theorem and verify-cert round trip") {
    auto cert = temp_path("curious_cli_cert.txt");
    RunResult r = run("theorem --k 7 --strategy both --out " + cert.string());
    CHECK(r.status == 0);
    CHECK(r.out == "0 1 4 9 121 484 676 44944\n");

    RunResult v = run("verify-cert --file " + cert.string());
    CHECK(v.status == 0);
    CHECK(v.out.find("certificate verified") != std::string::npos);

    // corrupt one byte of a known token
    std::ifstream in(cert);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("44944");
    REQUIRE(pos != std::string::npos);
    text[pos] = '5';
    auto bad = temp_path("curious_cli_cert_bad.txt");
    std::ofstream(bad) << text;
    v = run("verify-cert --file " + bad.string());
    CHECK(v.status == 1);
    CHECK(v.out.find("certificate INVALID") != std::string::npos);

    std::filesystem::remove(cert);
    std::filesystem::remove(bad);
}

TEST_CASE("theorem honors the appendix override environment variable") {
    std::string cmd = "CURIOUS_APPENDIX_PATH=/nonexistent/file.txt " + cli_path() +
                      " theorem --k 7 --strategy elliptic 2>/dev/null";
    int rc = std::system(cmd.c_str());
    CHECK(WIFEXITED(rc));
    CHECK(WEXITSTATUS(rc) == 1);
}
