#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sieved/report.hpp"

namespace py = pybind11;
using namespace sieved;

namespace {

std::vector<std::string> rationals_as_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(rational_str(r));
    return out;
}

py::dict eigen_report_dict(const EigenReport& r) {
    py::dict d;
    d["family"] = r.family;
    d["N"] = r.N;
    d["alpha"] = rational_str(r.alpha);
    d["beta"] = rational_str(r.beta);
    d["all_pass"] = r.all_pass();
    py::list entries;
    for (const auto& e : r.entries) {
        py::dict item;
        item["n"] = e.n;
        item["eigenvalue"] = rational_str(e.eigenvalue);
        item["pass"] = e.pass;
        entries.append(item);
    }
    d["entries"] = entries;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "sieved Jacobi polynomials: exact construction and verification";

    m.def(
        "verblunsky",
        [](const std::string& alpha, const std::string& beta, unsigned N, int n_max) {
            VerblunskySeq seq(parse_rational(alpha), parse_rational(beta), N);
            std::vector<Rational> out;
            for (int n = 0; n <= n_max; ++n) out.push_back(seq.sieved_a(n));
            return rationals_as_strings(out);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n_max"),
        "sieved Verblunsky parameters a_0 .. a_n_max as exact 'p/q' strings");

    m.def(
        "phi_coeffs",
        [](const std::string& alpha, const std::string& beta, unsigned N, int n) {
            VerblunskySeq seq(parse_rational(alpha), parse_rational(beta), N);
            return rationals_as_strings(seq.phi_coeffs(n));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n"),
        "ascending coefficients of the monic Phi_n(z;N)");

    m.def(
        "psi_json",
        [](const std::string& alpha, const std::string& beta, unsigned N, int n) {
            VerblunskySeq seq(parse_rational(alpha), parse_rational(beta), N);
            return laurent_json(seq.psi(n));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n"),
        "psi_n(z;N) as a JSON exponent->coefficient map");

    m.def(
        "prl_coeffs",
        [](const std::string& kind, const std::string& alpha, const std::string& beta, unsigned N,
           int n) {
            VerblunskySeq seq(parse_rational(alpha), parse_rational(beta), N);
            PrlFamily fam(kind == "first" ? PrlKind::first : PrlKind::second, seq);
            return rationals_as_strings(fam.x_coeffs(n));
        },
        py::arg("kind"), py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n"),
        "ascending x-coefficients of P_n (kind='first') or Q_n (kind='second')");

    m.def(
        "eigencheck_psi",
        [](const std::string& alpha, const std::string& beta, unsigned N, int n_max) {
            return eigen_report_dict(
                eigencheck_psi(N, parse_rational(alpha), parse_rational(beta), n_max));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n_max"));

    m.def(
        "eigencheck_prl",
        [](const std::string& alpha, const std::string& beta, unsigned N, int n_max) {
            py::dict out;
            out["P"] = eigen_report_dict(
                eigencheck_P(N, parse_rational(alpha), parse_rational(beta), n_max));
            out["Q"] = eigen_report_dict(
                eigencheck_Q(N, parse_rational(alpha), parse_rational(beta), n_max));
            return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n_max"));

    m.def(
        "verify_identities",
        [](const std::string& alpha, const std::string& beta, unsigned N) {
            Rational a = parse_rational(alpha);
            Rational b = parse_rational(beta);
            py::dict out;
            out["Ek_zero"] = verify_Ek_zero(N, a, b);
            out["B_reflection"] = verify_B_identity(N, a, b);
            bool sums = true;
            for (unsigned h = 0; h < N; ++h) sums = sums && verify_sum_general(N, h);
            for (unsigned j = 0; j < N; j += 2) sums = sums && verify_sum_first(N, j);
            for (unsigned j = N % 2; j < N; j += 2) sums = sums && verify_sum_second(N, j);
            out["sums"] = sums;
            return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"));

    m.def(
        "gram_circle",
        [](const std::string& family, const std::string& alpha, const std::string& beta,
           unsigned N, int n_max) {
            return gram_circle(family == "phi" ? GramFamily::phi : GramFamily::psi, N,
                               parse_rational(alpha), parse_rational(beta), n_max);
        },
        py::arg("family"), py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n_max"));

    m.def(
        "selfadjointness_defect",
        [](const std::string& alpha, const std::string& beta, unsigned N, int trials) {
            SelfAdjointResult r =
                selfadjointness_check(N, parse_rational(alpha), parse_rational(beta), trials);
            return py::make_tuple(r.max_defect, r.scale);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("trials") = 20);

    m.def(
        "bannai_ito_diagonal",
        [](const std::string& rho1, const std::string& rho2, const std::string& r1,
           const std::string& r2, int n_max) {
            BIParams params{parse_rational(rho1), parse_rational(rho2), parse_rational(r1),
                            parse_rational(r2)};
            BIDiagReport rep = bi_matrix(params, n_max);
            py::list diag;
            for (const auto& e : rep.diagonal) {
                py::dict item;
                item["n"] = e.n;
                item["computed"] = rational_str(e.computed);
                item["displayed"] = rational_str(e.displayed);
                item["match"] = e.match;
                diag.append(item);
            }
            py::dict out;
            out["upper_triangular"] = rep.upper_triangular;
            out["even_branch_ok"] = rep.even_branch_ok;
            out["diagonal"] = diag;
            return out;
        },
        py::arg("rho1"), py::arg("rho2"), py::arg("r1"), py::arg("r2"), py::arg("n_max"));
}
