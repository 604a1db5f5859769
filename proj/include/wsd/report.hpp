#pragma once

#include "wsd/cartan.hpp"

namespace wsd {

struct Check {
    std::string id;       // e.g. "prop-4.1/M_L0"
    std::string anchor;   // e.g. "prop-4.1"
    bool pass;
    std::string witness;  // failure detail, or a recorded value
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    int failures() const;
    bool pass() const { return failures() == 0; }
};

// The nine runnable suites, in canonical order.
const std::vector<std::string>& suite_names();

// Throws UnknownSuite; "all" is handled by the caller via run_all().
Report run_suite(const std::string& name);
std::vector<Report> run_all();
// One report carrying every check, suite name "all".
Report merge_reports(const std::vector<Report>& reports);

std::string report_text(const Report& r);
std::string report_json(const Report& r);

// CLI renderings
std::string matrix_text(const Operator& op);
std::string matrix_json(const std::string& name, const Operator& op);
std::string matrix6_text(const Matrix6& m);
std::string matrix6_json(const std::string& name, const Matrix6& m);
std::string table_text(const std::string& kind);   // throws UnknownTable
std::string table_json(const std::string& kind);
std::string closure_text(const OperatorSpan& s);
std::string closure_json(const OperatorSpan& s,
                         const std::vector<std::string>& generator_names);

} // namespace wsd
