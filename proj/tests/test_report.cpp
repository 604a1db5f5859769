#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include <json.hpp>

#include "wsd/report.hpp"

using namespace wsd;

namespace {

// run each suite once for the whole binary
const std::vector<Report>& all_reports() {
    static std::vector<Report> r = run_all();
    return r;
}

int count_prefix(const Report& r, const std::string& prefix) {
    int n = 0;
    for (const Check& c : r.checks)
        if (c.id.rfind(prefix, 0) == 0) ++n;
    return n;
}

} // namespace

TEST_CASE("every suite passes with zero failures") {
    for (const Report& r : all_reports()) {
        INFO("suite " << r.suite);
        for (const Check& c : r.checks) {
            INFO(c.id << ": " << c.witness);
            CHECK(c.pass);
        }
        CHECK(r.pass());
        CHECK(r.failures() == 0);
    }
}

TEST_CASE("suite inventory and check counts") {
    const auto& reports = all_reports();
    REQUIRE(reports.size() == 9);
    CHECK(suite_names() == std::vector<std::string>{"clifford", "so2", "sl6", "quadratic",
                                                    "cartan", "serre", "mdeg", "spans", "s3"});

    std::map<std::string, const Report*> by_name;
    for (const Report& r : reports) by_name[r.suite] = &r;

    CHECK(count_prefix(*by_name["clifford"], "prop-2.5/anti/") == 144);
    CHECK(count_prefix(*by_name["clifford"], "prop-2.5/unit/") == 6);
    CHECK(count_prefix(*by_name["clifford"], "prop-2.5/adjoint/") == 12);
    CHECK(count_prefix(*by_name["so2"], "thm-3.3/commutes/") == 12);
    CHECK(count_prefix(*by_name["sl6"], "prop-4.1/M_") == 12);
    CHECK(count_prefix(*by_name["cartan"], "prop-6.2/") == 24);
    CHECK(count_prefix(*by_name["cartan"], "cor-6.5/H-L/") == 18);
    CHECK(count_prefix(*by_name["cartan"], "cor-6.5/H-Lam/") == 18);
    CHECK(count_prefix(*by_name["cartan"], "cor-6.5/S-L/") == 18);
    CHECK(count_prefix(*by_name["cartan"], "cor-6.5/S-Lam/") == 18);
    CHECK(count_prefix(*by_name["cartan"], "def-6.5/unit/") == 12);
    CHECK(count_prefix(*by_name["serre"], "prop-6.7/rel/") == 125);
    CHECK(count_prefix(*by_name["serre"], "def-6.6/matrix-unit/") == 5);
    CHECK(count_prefix(*by_name["mdeg"], "prop-6.8/mdeg/") == 45);
    CHECK(count_prefix(*by_name["spans"], "sec-6-final/") == 13);
    CHECK(count_prefix(*by_name["s3"], "sec-2/s3/") ==
          static_cast<int>(by_name["s3"]->checks.size()));

    // ids are globally unique and anchors are the id head
    std::set<std::string> ids;
    for (const Report& r : reports)
        for (const Check& c : r.checks) {
            CHECK(ids.insert(c.id).second);
            CHECK(c.id.rfind(c.anchor + "/", 0) == 0);
        }
}

TEST_CASE("single-suite runner and errors") {
    Report r = run_suite("so2");
    CHECK(r.suite == "so2");
    CHECK(r.pass());
    CHECK_THROWS_AS(run_suite("all"), wsd::UnknownSuite);
    CHECK_THROWS_AS(run_suite("bogus"), wsd::UnknownSuite);
}

TEST_CASE("merged report concatenates in suite order") {
    Report merged = merge_reports(all_reports());
    CHECK(merged.suite == "all");
    std::size_t total = 0;
    for (const Report& r : all_reports()) total += r.checks.size();
    CHECK(merged.checks.size() == total);
    CHECK(merged.pass());
    CHECK(merged.checks.front().id == all_reports().front().checks.front().id);
}

TEST_CASE("report JSON is stable and round-trips byte-identically") {
    Report r = run_suite("spans");
    std::string text = report_json(r);
    auto parsed = nlohmann::ordered_json::parse(text);
    CHECK(parsed["suite"] == "spans");
    CHECK(parsed["pass"] == true);
    CHECK(parsed["checks"].size() == r.checks.size());
    // keys in fixed order; passing checks with recorded values keep witness
    CHECK(parsed.dump(2) + "\n" == text);

    // a synthetic failing report serializes its witness
    Report bad{"demo", {{"x/y", "x", false, "got 1"}}};
    auto j = nlohmann::ordered_json::parse(report_json(bad));
    CHECK(j["pass"] == false);
    CHECK(j["checks"][0]["witness"] == "got 1");
    CHECK(j["checks"][0]["anchor"] == "x");
}

TEST_CASE("report text lists one line per check plus a summary") {
    Report r = run_suite("spans");
    std::string text = report_text(r);
    CHECK(text.find("suite spans\n") == 0);
    CHECK(text.find("[pass] sec-6-final/V/j0") != std::string::npos);
    CHECK(text.find("13 checks, 0 failures") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("matrix renderers") {
    Registry reg = full_registry();
    std::string mj = matrix_json("L0", reg.at("L0"));
    auto j = nlohmann::ordered_json::parse(mj);
    CHECK(j["name"] == "L0");
    CHECK(j["dim"] == 64);
    CHECK(j["entries"].size() == 64);
    // column 0 holds omega_D: coefficient 1 at the v11^v12 row (mask 0b010100)
    CHECK(j["entries"][0b010100][0] == "1");
    CHECK(j["entries"][0][0] == "0");
    CHECK(nlohmann::ordered_json::parse(mj).dump(2) + "\n" == mj);

    SubrepV v;
    Matrix6 m = restrict_to_v(reg.at("L0"), v);
    auto j6 = nlohmann::ordered_json::parse(matrix6_json("L0", m));
    CHECK(j6["dim"] == 6);
    CHECK(j6["entries"][4][0] == "-1/2");
    std::string t6 = matrix6_text(m);
    CHECK(t6.find("-1/2") != std::string::npos);

    std::string mt = matrix_text(reg.at("V0"));
    CHECK(mt.find("nonzero entries 16") != std::string::npos);
    CHECK(mt.find("(v10^v20; 1) = 1") != std::string::npos);
}

TEST_CASE("table renderers") {
    for (const char* kind : {"isotypical", "weights", "diagonals", "mdeg"}) {
        std::string tj = table_json(kind);
        auto j = nlohmann::ordered_json::parse(tj);
        CHECK(j["kind"] == kind);
        CHECK(j.dump(2) + "\n" == tj);
        CHECK(!table_text(kind).empty());
    }
    auto j = nlohmann::ordered_json::parse(table_json("isotypical"));
    CHECK(j["degrees"].size() == 7);
    CHECK(j["degrees"][0]["weights"][0]["dim"] == 1);

    std::string wt = table_text("weights");
    CHECK(wt.find("L0  (2,1,1)") != std::string::npos);
    CHECK_THROWS_AS(table_text("bogus"), wsd::UnknownTable);
    CHECK_THROWS_AS(table_json("bogus"), wsd::UnknownTable);
}

TEST_CASE("closure renderer") {
    std::vector<std::pair<std::string, Operator>> gens = {{"L0", build_L(0)},
                                                          {"Lam0", build_Lambda(0)}};
    OperatorSpan s = span_closure(gens, 12);
    std::string ct = closure_text(s);
    CHECK(ct.find("dimension 3") != std::string::npos);
    CHECK(ct.find("[L0,Lam0]") != std::string::npos);

    auto j = nlohmann::ordered_json::parse(closure_json(s, {"L0", "Lam0"}));
    CHECK(j["dim"] == 3);
    CHECK(j["generators"] == nlohmann::ordered_json::array({"L0", "Lam0"}));
    CHECK(j["basis"].size() == 3);
    CHECK(j["pivots"].size() == 3);
}
