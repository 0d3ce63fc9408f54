#ifndef SIEVED_REPORT_HPP
#define SIEVED_REPORT_HPP

#include "sieved/bannai_ito.hpp"
#include "sieved/quadrature.hpp"

namespace sieved {

// Rational "p/q" (just "p" when q = 1); Cyclo as an array of those in
// ascending power order; LaurentPoly as {"exponent": cyclo} with string keys.
std::string cyclo_json(const Cyclo& c);
std::string laurent_json(const LaurentPoly& f);
Cyclo cyclo_from_json(const std::string& text, unsigned order);
LaurentPoly laurent_from_json(const std::string& text, unsigned order);

struct RunEntry {
    std::string name;
    int n = 0;
    bool pass = false;
    std::string detail;

    friend bool operator==(const RunEntry&, const RunEntry&) = default;
};

struct RunConfig {
    std::string command; // gen | verify
    std::string target;
    unsigned N = 1;
    Rational alpha, beta;
    int n_max = 0;
    double tolerance = 1e-10;
    std::string format = "json"; // json | csv
    std::string out_path;
    std::string weight_form = "cosN"; // cosN | Ncos

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct RunReport {
    std::string tool_version;
    RunConfig config;
    std::vector<RunEntry> entries; // sorted by (name, n) before serialization
    long elapsed_ms = 0;

    int passed() const;
    int failed() const;
    void sort_entries();

    // elapsed_ms deliberately excluded: identical configs must produce
    // byte-identical reports modulo the elapsed-time field
    friend bool operator==(const RunReport& a, const RunReport& b) {
        return a.tool_version == b.tool_version && a.config == b.config && a.entries == b.entries;
    }
};

std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

// header row, LF line endings
std::string report_to_csv(const RunReport& report);

std::string eigen_report_json(const EigenReport& report);
std::string bi_report_json(const BIDiagReport& report);
std::string gram_csv(const Matrix& g);

} // namespace sieved

#endif
