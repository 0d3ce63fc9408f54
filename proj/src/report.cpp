#include "sieved/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace sieved {

namespace {

using nlohmann::json;

json cyclo_value(const Cyclo& c) {
    json arr = json::array();
    for (const auto& r : c.coeffs()) arr.push_back(rational_str(r));
    return arr;
}

Cyclo cyclo_value_from(const json& arr, unsigned order) {
    if (!arr.is_array() || arr.size() != totient(order))
        throw usage_error("cyclotomic value must be an array of totient(N) rationals");
    Cyclo out = Cyclo::zero(order);
    Cyclo zeta = Cyclo::root_power(order, 1);
    Cyclo power = Cyclo::one(order);
    for (const auto& item : arr) {
        out += parse_rational(item.get<std::string>()) * power;
        power *= zeta;
    }
    return out;
}

json laurent_value(const LaurentPoly& f) {
    json obj = json::object();
    for (const auto& [exp, coeff] : f.terms()) obj[std::to_string(exp)] = cyclo_value(coeff);
    return obj;
}

LaurentPoly laurent_value_from(const json& obj, unsigned order) {
    if (!obj.is_object()) throw usage_error("laurent value must be an object");
    LaurentPoly out(order);
    for (const auto& [key, value] : obj.items())
        out.set_coeff(std::stoi(key), cyclo_value_from(value, order));
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string cyclo_json(const Cyclo& c) { return cyclo_value(c).dump(); }

std::string laurent_json(const LaurentPoly& f) { return laurent_value(f).dump(); }

Cyclo cyclo_from_json(const std::string& text, unsigned order) {
    return cyclo_value_from(json::parse(text), order);
}

LaurentPoly laurent_from_json(const std::string& text, unsigned order) {
    return laurent_value_from(json::parse(text), order);
}

int RunReport::passed() const {
    int count = 0;
    for (const auto& e : entries)
        if (e.pass) ++count;
    return count;
}

int RunReport::failed() const { return static_cast<int>(entries.size()) - passed(); }

void RunReport::sort_entries() {
    std::stable_sort(entries.begin(), entries.end(), [](const RunEntry& a, const RunEntry& b) {
        return std::tie(a.name, a.n) < std::tie(b.name, b.n);
    });
}

std::string report_to_json(const RunReport& report) {
    json j;
    j["tool_version"] = report.tool_version;
    j["config"] = {{"command", report.config.command},
                   {"target", report.config.target},
                   {"N", report.config.N},
                   {"alpha", rational_str(report.config.alpha)},
                   {"beta", rational_str(report.config.beta)},
                   {"n_max", report.config.n_max},
                   {"tolerance", report.config.tolerance},
                   {"format", report.config.format},
                   {"out", report.config.out_path},
                   {"weight_form", report.config.weight_form}};
    j["entries"] = json::array();
    for (const auto& e : report.entries)
        j["entries"].push_back(
            {{"name", e.name}, {"n", e.n}, {"pass", e.pass}, {"detail", e.detail}});
    j["summary"] = {{"passed", report.passed()},
                    {"failed", report.failed()},
                    {"elapsed_ms", report.elapsed_ms}};
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    RunReport report;
    report.tool_version = j.at("tool_version").get<std::string>();
    const json& c = j.at("config");
    report.config.command = c.at("command").get<std::string>();
    report.config.target = c.at("target").get<std::string>();
    report.config.N = c.at("N").get<unsigned>();
    report.config.alpha = parse_rational(c.at("alpha").get<std::string>());
    report.config.beta = parse_rational(c.at("beta").get<std::string>());
    report.config.n_max = c.at("n_max").get<int>();
    report.config.tolerance = c.at("tolerance").get<double>();
    report.config.format = c.at("format").get<std::string>();
    report.config.out_path = c.at("out").get<std::string>();
    report.config.weight_form = c.at("weight_form").get<std::string>();
    for (const auto& item : j.at("entries"))
        report.entries.push_back({item.at("name").get<std::string>(), item.at("n").get<int>(),
                                  item.at("pass").get<bool>(),
                                  item.at("detail").get<std::string>()});
    report.elapsed_ms = j.at("summary").at("elapsed_ms").get<long>();
    return report;
}

std::string report_to_csv(const RunReport& report) {
    std::ostringstream os;
    os << "name,n,pass,detail\n";
    for (const auto& e : report.entries)
        os << csv_escape(e.name) << "," << e.n << "," << (e.pass ? "true" : "false") << ","
           << csv_escape(e.detail) << "\n";
    return os.str();
}

std::string eigen_report_json(const EigenReport& report) {
    json j;
    j["family"] = report.family;
    j["N"] = report.N;
    j["alpha"] = rational_str(report.alpha);
    j["beta"] = rational_str(report.beta);
    j["entries"] = json::array();
    for (const auto& e : report.entries)
        j["entries"].push_back(
            {{"n", e.n}, {"eigenvalue", rational_str(e.eigenvalue)}, {"pass", e.pass}});
    j["all_pass"] = report.all_pass();
    return j.dump(2) + "\n";
}

std::string bi_report_json(const BIDiagReport& report) {
    json j;
    j["params"] = {{"rho1", rational_str(report.params.rho1)},
                   {"rho2", rational_str(report.params.rho2)},
                   {"r1", rational_str(report.params.r1)},
                   {"r2", rational_str(report.params.r2)}};
    j["upper_triangular"] = report.upper_triangular;
    j["even_branch_ok"] = report.even_branch_ok;
    j["diagonal"] = json::array();
    for (const auto& e : report.diagonal)
        j["diagonal"].push_back({{"n", e.n},
                                 {"computed", rational_str(e.computed)},
                                 {"displayed", rational_str(e.displayed)},
                                 {"match", e.match}});
    return j.dump(2) + "\n";
}

std::string gram_csv(const Matrix& g) {
    std::ostringstream os;
    os.precision(17);
    os << "n";
    for (std::size_t m = 0; m < g.size(); ++m) os << ",m" << m;
    os << "\n";
    for (std::size_t n = 0; n < g.size(); ++n) {
        os << n;
        for (double v : g[n]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

} // namespace sieved
