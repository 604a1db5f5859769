#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsd/report.hpp"

namespace {

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
    }
    return out;
}

int run_verify(const std::string& suite, const std::string& format) {
    std::vector<wsd::Report> reports;
    if (suite == "all")
        reports = wsd::run_all();
    else
        reports.push_back(wsd::run_suite(suite));

    bool pass = true;
    std::size_t checks = 0;
    int failures = 0;
    for (const wsd::Report& r : reports) {
        pass = pass && r.pass();
        checks += r.checks.size();
        failures += r.failures();
    }
    if (format == "json") {
        std::cout << wsd::report_json(reports.size() == 1 ? reports.front()
                                                          : wsd::merge_reports(reports));
    } else {
        for (const wsd::Report& r : reports) std::cout << wsd::report_text(r);
        if (reports.size() > 1)
            std::cout << reports.size() << " suites, " << checks << " checks, " << failures
                      << " failures\n";
    }
    return pass ? 0 : 1;
}

int run_matrix(const std::string& name, bool restrict_v, const std::string& format) {
    wsd::Registry reg = wsd::full_registry();
    const wsd::Operator& op = reg.at(name);
    if (restrict_v) {
        wsd::SubrepV v;
        wsd::Matrix6 m = wsd::restrict_to_v(op, v);
        std::cout << (format == "json" ? wsd::matrix6_json(name, m) : wsd::matrix6_text(m));
    } else {
        std::cout << (format == "json" ? wsd::matrix_json(name, op) : wsd::matrix_text(op));
    }
    return 0;
}

int run_table(const std::string& kind, const std::string& format) {
    std::cout << (format == "json" ? wsd::table_json(kind) : wsd::table_text(kind));
    return 0;
}

int run_closure(const std::string& csv, const std::string& format) {
    wsd::Registry reg = wsd::full_registry();
    std::vector<std::string> names = split_names(csv);
    std::vector<std::pair<std::string, wsd::Operator>> gens;
    for (const std::string& n : names) gens.emplace_back(n, reg.at(n));
    wsd::OperatorSpan s = wsd::span_closure(gens, wsd::closure_round_cap());
    std::cout << (format == "json" ? wsd::closure_json(s, names) : wsd::closure_text(s));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wsdalg: exact operator algebra of the rank-2 weakly-self-dual fiber model.\n"
        "Builds the canonical operators on the 64-dimensional exterior algebra over "
        "Q(i), computes their Lie closure, and verifies the structural identities "
        "with zero tolerance."};
    app.require_subcommand(1);

    std::string suite = "all";
    std::string format = "text";
    std::string name;
    std::string kind;
    bool restrict_v = false;
    std::string generators = "L0,L1,L2,Lam0,Lam1,Lam2,V0,V1,V2,A0,A1,A2";

    auto fmt_check = CLI::IsMember({"text", "json"});

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite,
                       "all, clifford, so2, sl6, quadratic, cartan, serre, mdeg, spans, s3");
    verify->add_option("--format", format, "text or json")->check(fmt_check);

    CLI::App* matrix = app.add_subcommand(
        "matrix", "Print the exact matrix of a named operator");
    matrix->add_option("name", name, "operator registry name, e.g. L0, Lam2, V1, J, H0, e3")
        ->required();
    matrix->add_flag("--restrict-v", restrict_v,
                     "6x6 matrix on the invariant subspace V instead of 64x64");
    matrix->add_option("--format", format, "text or json")->check(fmt_check);

    CLI::App* table = app.add_subcommand("table", "Print a computed table");
    table->add_option("kind", kind, "isotypical, weights, diagonals, or mdeg")->required();
    table->add_option("--format", format, "text or json")->check(fmt_check);

    CLI::App* closure = app.add_subcommand(
        "closure", "Compute the Lie closure of a generator list");
    closure->add_option("--generators", generators, "comma-separated registry names");
    closure->add_option("--format", format, "text or json")->check(fmt_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;   // --help is success; bad usage is 2
    }

    try {
        if (verify->parsed()) return run_verify(suite, format);
        if (matrix->parsed()) return run_matrix(name, restrict_v, format);
        if (table->parsed()) return run_table(kind, format);
        if (closure->parsed()) return run_closure(generators, format);
    } catch (const wsd::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wsd::UnknownOperator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wsd::UnknownTable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wsd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
