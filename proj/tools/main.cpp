#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sieved/report.hpp"

using namespace sieved;

namespace {

const char* tool_version = "1.0.0";

std::string rvec_str(const std::vector<Rational>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rational_str(v[i]);
    }
    os << "]";
    return os.str();
}

void append(RunReport& report, std::string name, int n, bool pass, std::string detail = "") {
    report.entries.push_back({std::move(name), n, pass, std::move(detail)});
}

void append_eigen(RunReport& report, const std::string& name, const EigenReport& er) {
    for (const auto& e : er.entries)
        report.entries.push_back({name, e.n, e.pass, rational_str(e.eigenvalue)});
}

void append_check(RunReport& report, const std::string& name, const CheckReport& cr) {
    for (const auto& e : cr.entries) report.entries.push_back({name, e.n, e.pass, e.detail});
}

std::string gen_csv(const RunConfig& cfg) {
    VerblunskySeq seq(cfg.alpha, cfg.beta, cfg.N);
    std::ostringstream os;
    if (cfg.target == "verblunsky") {
        os << "n,a_n,h_n\n";
        for (int n = 0; n <= cfg.n_max; ++n)
            os << n << "," << rational_str(seq.sieved_a(n)) << "," << rational_str(seq.h_norm(n))
               << "\n";
    } else if (cfg.target == "phi" || cfg.target == "psi") {
        os << "n,exponent,coefficient\n";
        for (int n = 0; n <= cfg.n_max; ++n) {
            LaurentPoly f = (cfg.target == "phi") ? seq.phi(n) : seq.psi(n);
            for (const auto& [exp, coeff] : f.terms())
                os << n << "," << exp << ",\"" << coeff.str() << "\"\n";
        }
    } else { // P | Q
        PrlFamily fam(cfg.target == "P" ? PrlKind::first : PrlKind::second, seq);
        os << "n,k,coefficient\n";
        for (int n = 0; n <= cfg.n_max; ++n) {
            std::vector<Rational> cs = fam.x_coeffs(n);
            for (std::size_t k = 0; k < cs.size(); ++k)
                os << n << "," << k << "," << rational_str(cs[k]) << "\n";
        }
    }
    return os.str();
}

void run_gen(RunReport& report) {
    const RunConfig& cfg = report.config;
    VerblunskySeq seq(cfg.alpha, cfg.beta, cfg.N);
    if (cfg.target == "verblunsky") {
        for (int n = 0; n <= cfg.n_max; ++n)
            append(report, "a_n", n, true, rational_str(seq.sieved_a(n)));
        for (int n = 0; n <= cfg.n_max; ++n)
            append(report, "h_n", n, true, rational_str(seq.h_norm(n)));
    } else if (cfg.target == "phi" || cfg.target == "psi") {
        for (int n = 0; n <= cfg.n_max; ++n) {
            LaurentPoly f = (cfg.target == "phi") ? seq.phi(n) : seq.psi(n);
            append(report, cfg.target, n, true, laurent_json(f));
        }
    } else if (cfg.target == "P" || cfg.target == "Q") {
        PrlFamily fam(cfg.target == "P" ? PrlKind::first : PrlKind::second, seq);
        for (int n = 0; n <= cfg.n_max; ++n)
            append(report, cfg.target, n, true, rvec_str(fam.x_coeffs(n)));
    } else {
        throw usage_error("gen target must be one of verblunsky, phi, psi, P, Q");
    }
}

void run_verify_identities(RunReport& report) {
    const RunConfig& cfg = report.config;
    const unsigned N = cfg.N;
    for (unsigned h = 0; h < N; ++h)
        append(report, "sum-general", static_cast<int>(h), verify_sum_general(N, h));
    for (unsigned j = 0; j < N; j += 2)
        append(report, "sum-first", static_cast<int>(j), verify_sum_first(N, j));
    for (unsigned j = N % 2; j < N; j += 2)
        append(report, "sum-second", static_cast<int>(j), verify_sum_second(N, j));
    append(report, "Ek-zero", 0, verify_Ek_zero(N, cfg.alpha, cfg.beta));
    append(report, "B-reflection", 0, verify_B_identity(N, cfg.alpha, cfg.beta));
    append(report, "reflection-rotation", 0,
           verify_reflection_rotation_equivalence(N, std::max(cfg.n_max, 4)));

    VerblunskySeq seq(cfg.alpha, cfg.beta, N);
    append_check(report, "factorization", check_factorization(seq, cfg.n_max));
    append_check(report, "psi-parity", check_psi_parity_relations(seq, cfg.n_max));
    for (int n = 1; n <= cfg.n_max; ++n)
        append(report, "christoffel", n, christoffel_check(seq, n));
    for (int n = 2; n <= cfg.n_max; ++n)
        append(report, "geronimus", n, geronimus_check(seq, n));
    for (PrlKind kind : {PrlKind::first, PrlKind::second}) {
        PrlFamily fam(kind, seq);
        std::string name = (kind == PrlKind::first) ? "recurrence-P" : "recurrence-Q";
        for (int n = 1; n <= cfg.n_max; ++n) {
            auto formula = fam.recurrence_from_formula(n);
            auto oracle = fam.recurrence_from_polys(n);
            append(report, name, n, formula == oracle,
                   "b=" + rational_str(oracle.first) + " u=" + rational_str(oracle.second));
        }
    }
    if (cfg.alpha == cfg.beta && N >= 2) {
        for (PrlKind kind : {PrlKind::first, PrlKind::second}) {
            PrlFamily fam(kind, seq);
            std::string name =
                (kind == PrlKind::first) ? "ultraspherical-u-P" : "ultraspherical-u-Q";
            for (int n = 1; n <= cfg.n_max; ++n) {
                Rational closed = ultraspherical_u(kind, N, cfg.alpha, n);
                Rational actual = fam.recurrence_from_polys(n).second;
                append(report, name, n, closed == actual, rational_str(actual));
            }
        }
    }
}

void run_verify_orthogonality(RunReport& report) {
    const RunConfig& cfg = report.config;
    QuadratureConfig qcfg;
    qcfg.tolerance = cfg.tolerance;
    WeightForm form = (cfg.weight_form == "Ncos") ? WeightForm::Ncos : WeightForm::cosN;
    VerblunskySeq seq(cfg.alpha, cfg.beta, cfg.N);

    for (GramFamily family : {GramFamily::phi, GramFamily::psi}) {
        std::string name = (family == GramFamily::phi) ? "gram-phi" : "gram-psi";
        Matrix g = gram_circle(family, cfg.N, cfg.alpha, cfg.beta, cfg.n_max, qcfg, form);
        for (int n = 0; n <= cfg.n_max; ++n) {
            bool row_ok = true;
            std::ostringstream detail;
            for (int m = 0; m <= cfg.n_max; ++m) {
                if (n == m) continue;
                if (!(std::abs(g[n][m]) < cfg.tolerance)) row_ok = false;
            }
            double h = seq.h_norm(n).get_d();
            double rel = std::abs(g[n][n] - h) / h;
            if (!(rel < 10 * cfg.tolerance)) row_ok = false;
            detail << "diag=" << g[n][n] << " h=" << h;
            append(report, name, n, row_ok, detail.str());
        }
    }
    for (PrlKind kind : {PrlKind::first, PrlKind::second}) {
        std::string name = (kind == PrlKind::first) ? "gram-P" : "gram-Q";
        Matrix g = gram_realline(kind, cfg.N, cfg.alpha, cfg.beta, cfg.n_max, qcfg);
        for (int n = 0; n <= cfg.n_max; ++n) {
            bool row_ok = true;
            for (int m = 0; m <= cfg.n_max; ++m)
                if (n != m && !(std::abs(g[n][m]) < cfg.tolerance)) row_ok = false;
            append(report, name, n, row_ok);
        }
    }
    SelfAdjointResult sa = selfadjointness_check(cfg.N, cfg.alpha, cfg.beta, 20, 6, qcfg);
    std::ostringstream detail;
    detail << "defect=" << sa.max_defect << " scale=" << sa.scale;
    append(report, "self-adjoint", 0, sa.pass(cfg.tolerance), detail.str());
}

void run_verify_bannai_ito(RunReport& report) {
    const RunConfig& cfg = report.config;
    // rho1, rho2 from --alpha/--beta; r1, r2 from the swapped pair keeps the
    // four parameters distinct without extra flags
    BIParams params{cfg.alpha, cfg.beta, cfg.beta + Rational(1) / 2, cfg.alpha + 1};
    BIDiagReport bi = bi_matrix(params, cfg.n_max);
    append(report, "bi-triangular", 0, bi.upper_triangular);
    Rational swapped_sum = params.r1 + params.r2 - params.rho1 - params.rho2;
    for (const auto& e : bi.diagonal) {
        if (e.n % 2 == 0) {
            append(report, "bi-diagonal", e.n, e.match, rational_str(e.computed));
        } else {
            // two readings of the odd branch are in circulation; the entry
            // passes when either one matches and carries both for the record
            Rational alt = swapped_sum - Rational(e.n + 1) / 2;
            bool pass = (e.computed == e.displayed) || (e.computed == alt);
            append(report, "bi-diagonal", e.n, pass,
                   "computed=" + rational_str(e.computed) +
                       " displayed=" + rational_str(e.displayed) + " swapped-sign=" +
                       rational_str(alt));
        }
    }
}

void run_verify(RunReport& report) {
    const RunConfig& cfg = report.config;
    if (cfg.target == "eigen-psi") {
        append_eigen(report, "eigen-psi", eigencheck_psi(cfg.N, cfg.alpha, cfg.beta, cfg.n_max));
    } else if (cfg.target == "eigen-prl") {
        append_eigen(report, "eigen-P", eigencheck_P(cfg.N, cfg.alpha, cfg.beta, cfg.n_max));
        append_eigen(report, "eigen-Q", eigencheck_Q(cfg.N, cfg.alpha, cfg.beta, cfg.n_max));
        if (cfg.alpha == cfg.beta)
            append_eigen(report, "eigen-Q-ultra",
                         eigencheck_ultraspherical_Q(cfg.N, cfg.alpha, cfg.n_max));
    } else if (cfg.target == "identities") {
        run_verify_identities(report);
    } else if (cfg.target == "orthogonality") {
        run_verify_orthogonality(report);
    } else if (cfg.target == "bannai-ito") {
        run_verify_bannai_ito(report);
    } else {
        throw usage_error(
            "verify target must be one of eigen-psi, eigen-prl, identities, orthogonality, "
            "bannai-ito");
    }
}

int run(RunConfig cfg) {
    auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.tool_version = tool_version;
    report.config = cfg;

    if (cfg.command == "gen")
        run_gen(report);
    else
        run_verify(report);
    report.sort_entries();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();

    std::string payload;
    if (cfg.format == "csv")
        payload = (cfg.command == "gen") ? gen_csv(cfg) : report_to_csv(report);
    else
        payload = report_to_json(report);

    if (cfg.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) throw usage_error("cannot open output path " + cfg.out_path);
        out << payload;
    }
    return report.failed() == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sieved Jacobi polynomials: exact construction and verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string alpha_str = "0", beta_str = "0";

    auto add_common = [&](CLI::App* sub, const std::vector<std::string>& targets) {
        sub->add_option("target", cfg.target, "what to " + sub->get_name())
            ->required()
            ->check(CLI::IsMember(targets));
        sub->add_option("--N", cfg.N, "sieve order")->required()->check(CLI::PositiveNumber);
        sub->add_option("--alpha", alpha_str, "alpha as p/q")->required();
        sub->add_option("--beta", beta_str, "beta as p/q")->required();
        sub->add_option("--n-max", cfg.n_max, "largest degree")
            ->required()
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--tolerance", cfg.tolerance, "numeric tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--weight-form", cfg.weight_form, "circle weight reading")
            ->check(CLI::IsMember({"cosN", "Ncos"}));
    };

    CLI::App* gen = app.add_subcommand("gen", "emit exact data");
    add_common(gen, {"verblunsky", "phi", "psi", "P", "Q"});
    CLI::App* verify = app.add_subcommand("verify", "run verification sweeps");
    add_common(verify,
               {"eigen-psi", "eigen-prl", "identities", "orthogonality", "bannai-ito"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    cfg.command = gen->parsed() ? "gen" : "verify";
    try {
        cfg.alpha = parse_rational(alpha_str);
        cfg.beta = parse_rational(beta_str);
        if (cfg.alpha <= -1 || cfg.beta <= -1)
            throw usage_error("alpha and beta must be greater than -1");
        return run(std::move(cfg));
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
