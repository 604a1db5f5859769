#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef WSDALG_BIN
#error "WSDALG_BIN must point at the built binary"
#endif

namespace {

struct Run {
    int exit_code;
    std::string output;
};

// run the binary with stderr folded into stdout
Run cli(const std::string& args) {
    std::string cmd = std::string(WSDALG_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("verify a single suite") {
    Run r = cli("verify --suite clifford");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("suite clifford") != std::string::npos);
    CHECK(r.output.find("[pass] prop-2.5/unit/E10.I10") != std::string::npos);
    CHECK(r.output.find("162 checks, 0 failures") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify everything in JSON") {
    Run r = cli("verify --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j["suite"] == "all");
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() > 500);
    // byte-identical round-trip
    CHECK(j.dump(2) + "\n" == r.output);
    // spot-check one pinned id
    bool found = false;
    for (const auto& c : j["checks"])
        if (c["id"] == "thm-5.9/kernel-zero") {
            found = true;
            CHECK(c["pass"] == true);
            CHECK(c["anchor"] == "thm-5.9");
        }
    CHECK(found);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli("").exit_code == 2);
    CHECK(cli("verify --suite bogus").exit_code == 2);
    CHECK(cli("verify --format yaml").exit_code == 2);
    CHECK(cli("matrix").exit_code == 2);
    CHECK(cli("matrix NoSuchOp").exit_code == 2);
    CHECK(cli("table bogus").exit_code == 2);
    CHECK(cli("closure --generators L0,Nope").exit_code == 2);
    Run r = cli("verify --suite bogus");
    CHECK(r.output.find("unknown suite: bogus") != std::string::npos);
}

TEST_CASE("help exits 0") {
    Run r = cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verify") != std::string::npos);
    CHECK(cli("verify --help").exit_code == 0);
}

TEST_CASE("matrix output") {
    Run r = cli("matrix L0 --restrict-v --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j["name"] == "L0");
    CHECK(j["dim"] == 6);
    CHECK(j["entries"][4][0] == "-1/2");
    CHECK(j["entries"][5][1] == "-1/2");
    CHECK(j["entries"][0][0] == "0");

    Run rv = cli("matrix J --restrict-v --format json");
    auto jv = nlohmann::ordered_json::parse(rv.output);
    for (int k = 0; k < 6; ++k) CHECK(jv["entries"][k][k] == "-2*i");

    Run big = cli("matrix V0 --format json");
    auto jb = nlohmann::ordered_json::parse(big.output);
    CHECK(jb["dim"] == 64);
    CHECK(jb["entries"][3][0] == "1");   // v10^v20 row, scalar column

    Run txt = cli("matrix H0 --restrict-v");
    CHECK(txt.exit_code == 0);
    CHECK(txt.output.find("-1") != std::string::npos);

    // a non-invariant operator is a domain failure, not a usage error
    Run bad = cli("matrix E10 --restrict-v");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("subspace not preserved") != std::string::npos);
}

TEST_CASE("table output") {
    Run r = cli("table weights");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("L0  (2,1,1)") != std::string::npos);
    CHECK(r.output.find("A2  (-2,-2,0)") != std::string::npos);

    Run iso = cli("table isotypical --format json");
    auto j = nlohmann::ordered_json::parse(iso.output);
    CHECK(j["kind"] == "isotypical");
    CHECK(j["degrees"].size() == 7);
}

TEST_CASE("closure output") {
    Run r = cli("closure --generators L0,Lam0 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.output);
    CHECK(j["dim"] == 3);
    CHECK(j["basis"].size() == 3);

    Run full = cli("closure --format json");
    auto jf = nlohmann::ordered_json::parse(full.output);
    CHECK(jf["dim"] == 35);
    CHECK(jf["generators"].size() == 12);
}

TEST_CASE("round cap env var stops a deep closure") {
    Run r = cli("closure --generators V0,A0,V1,A1");
    CHECK(r.exit_code == 0);
    std::string cmd = "WSDALG_MAX_CLOSURE_ROUNDS=1 " + std::string(WSDALG_BIN) +
                      " closure 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(out.find("still growing after 1 rounds") != std::string::npos);
}
