#include "sieved/quadrature.hpp"

#include <cmath>
#include <random>

namespace sieved {

namespace {

constexpr double pi = 3.14159265358979323846;

void validate_config(const QuadratureConfig& config) {
    if (config.tolerance <= 0) throw usage_error("quadrature tolerance must be positive");
    if (config.panels < 64) throw usage_error("quadrature needs at least 64 panels");
}

// Tanh-sinh on (a,b); endpoint singularities of the integrands here are of
// the form (dist)^p with p > -1, which the double-exponential map absorbs.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& config) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double t_max = 4.5;
    const int level_max = 4 + static_cast<int>(std::ceil(std::log2(config.panels)));

    auto node_sum = [&](double h, bool odd_only) {
        double s = 0.0;
        long k_start = odd_only ? 1 : 0;
        long k_step = odd_only ? 2 : 1;
        for (long k = k_start;; k += k_step) {
            double t = k * h;
            if (t > t_max) break;
            double u = 0.5 * pi * std::sinh(t);
            double x = std::tanh(u);
            double w = 0.5 * pi * std::cosh(t) / (std::cosh(u) * std::cosh(u));
            double vp = f(mid + half * x);
            double vm = (k == 0) ? 0.0 : f(mid - half * x);
            if (std::isfinite(vp)) s += w * vp;
            if (std::isfinite(vm)) s += w * vm;
        }
        return s;
    };

    double h = 1.0;
    double sum = node_sum(h, false);
    double integral = half * h * sum;
    for (int level = 1; level <= level_max; ++level) {
        h *= 0.5;
        sum += node_sum(h, true);
        double next = half * h * sum;
        if (level >= 4 && std::abs(next - integral) <=
                              0.1 * config.tolerance * std::max(1.0, std::abs(next))) {
            return next;
        }
        integral = next;
    }
    return integral;
}

std::vector<double> panel_cuts(double theta_max, unsigned N) {
    std::vector<double> cuts;
    const double step = pi / N;
    for (long m = 0; m * step < theta_max + 1e-12; ++m) cuts.push_back(std::min(m * step, theta_max));
    if (cuts.back() < theta_max) cuts.push_back(theta_max);
    return cuts;
}

std::complex<double> pairing(const LaurentPoly& f, const LaurentPoly& g, double theta_max,
                             unsigned N, double da, double db, const QuadratureConfig& config) {
    auto part = [&](bool imag_part) {
        return integrate_weighted(
            [&](double theta) {
                std::complex<double> z(std::cos(theta), std::sin(theta));
                std::complex<double> v = f.eval(z) * g.eval(std::conj(z));
                return imag_part ? v.imag() : v.real();
            },
            theta_max, N, da, db, config);
    };
    return {part(false), part(true)};
}

} // namespace

double weight_circle(double theta, unsigned N, double alpha, double beta, WeightForm form) {
    if (alpha <= -1.0 || beta <= -1.0) throw usage_error("weight requires alpha, beta > -1");
    double c = (form == WeightForm::cosN) ? std::cos(N * theta)
                                          : static_cast<double>(N) * std::cos(theta);
    return std::pow(1.0 - c, alpha + 0.5) * std::pow(1.0 + c, beta + 0.5);
}

double integrate_weighted(const std::function<double(double)>& g, double theta_max, unsigned N,
                          double alpha, double beta, const QuadratureConfig& config,
                          WeightForm form) {
    validate_config(config);
    auto integrand = [&](double theta) { return g(theta) * weight_circle(theta, N, alpha, beta, form); };
    std::vector<double> cuts = panel_cuts(theta_max, N);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += tanh_sinh(integrand, cuts[i], cuts[i + 1], config);
    return total;
}

Matrix gram_circle(GramFamily family, unsigned N, const Rational& alpha, const Rational& beta,
                   int n_max, const QuadratureConfig& config, WeightForm form) {
    validate_config(config);
    VerblunskySeq seq(alpha, beta, N);
    const double da = alpha.get_d();
    const double db = beta.get_d();
    std::vector<LaurentPoly> polys;
    for (int n = 0; n <= n_max; ++n)
        polys.push_back(family == GramFamily::phi ? seq.phi(n) : seq.psi(n));

    const double mass =
        integrate_weighted([](double) { return 1.0; }, 2 * pi, N, da, db, config, form);

    Matrix g(n_max + 1, std::vector<double>(n_max + 1, 0.0));
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m) {
            auto entry = integrate_weighted(
                [&](double theta) {
                    std::complex<double> z(std::cos(theta), std::sin(theta));
                    return (polys[n].eval(z) * polys[m].eval(std::conj(z))).real();
                },
                2 * pi, N, da, db, config, form);
            g[n][m] = entry / mass;
        }
    return g;
}

Matrix gram_realline(PrlKind kind, unsigned N, const Rational& alpha, const Rational& beta,
                     int n_max, const QuadratureConfig& config) {
    validate_config(config);
    VerblunskySeq seq(alpha, beta, N);
    PrlFamily fam(kind, seq);
    const double da = alpha.get_d();
    const double db = beta.get_d();
    std::vector<LaurentPoly> polys;
    for (int n = 0; n <= n_max; ++n) polys.push_back(fam.poly(n));

    // x = 2 cos theta: the [-2,2] weight integral becomes int_0^pi . rho d theta,
    // with the second kind carrying the extra 4 - x^2 = 4 sin^2 theta.
    auto extra = [&](double theta) {
        if (kind == PrlKind::first) return 1.0;
        double s = std::sin(theta);
        return 4.0 * s * s;
    };
    const double mass = integrate_weighted(extra, pi, N, da, db, config);

    Matrix g(n_max + 1, std::vector<double>(n_max + 1, 0.0));
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m) {
            auto entry = integrate_weighted(
                [&](double theta) {
                    std::complex<double> z(std::cos(theta), std::sin(theta));
                    return extra(theta) * (polys[n].eval(z) * polys[m].eval(z)).real();
                },
                pi, N, da, db, config);
            g[n][m] = entry / mass;
        }
    return g;
}

SelfAdjointResult selfadjointness_check(unsigned N, const Rational& alpha, const Rational& beta,
                                        int trials, int exp_max, const QuadratureConfig& config) {
    validate_config(config);
    if (trials < 1) throw usage_error("selfadjointness_check needs trials >= 1");
    CircleOperator L = build_L(N, alpha, beta);
    const double da = alpha.get_d();
    const double db = beta.get_d();

    std::mt19937 rng(config.seed);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    std::uniform_int_distribution<int> exp_dist(-exp_max, exp_max);
    auto random_poly = [&]() {
        LaurentPoly f(N);
        for (int t = 0; t < 5; ++t) {
            int c = coeff_dist(rng);
            if (c == 0) continue;
            int e = exp_dist(rng);
            f += Rational(c) * LaurentPoly::z_pow(N, e);
        }
        return f;
    };

    SelfAdjointResult result;
    for (int t = 0; t < trials; ++t) {
        // L sends every Laurent polynomial to a Laurent polynomial: (R_k - I)f
        // vanishes at both square roots of q^k, killing the A_k pole.
        LaurentPoly f = random_poly();
        LaurentPoly g = random_poly();
        LaurentPoly lf = L.apply_poly(f);
        LaurentPoly lg = L.apply_poly(g);
        std::complex<double> lhs = pairing(lf, g, 2 * pi, N, da, db, config);
        std::complex<double> rhs = pairing(f, lg, 2 * pi, N, da, db, config);
        result.max_defect = std::max(result.max_defect, std::abs(lhs - rhs));
        result.scale = std::max({result.scale, std::abs(lhs), std::abs(rhs)});
    }
    return result;
}

} // namespace sieved
