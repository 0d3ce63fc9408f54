#ifndef SIEVED_QUADRATURE_HPP
#define SIEVED_QUADRATURE_HPP

#include <algorithm>
#include <functional>

#include "sieved/operators.hpp"

namespace sieved {

struct QuadratureConfig {
    int panels = 256;
    double tolerance = 1e-10;
    unsigned seed = 20240915;
};

// cosN: (1 - cos N theta)^{alpha+1/2} (1 + cos N theta)^{beta+1/2}.
// Ncos: the alternative (1 - N cos theta)^... (1 + N cos theta)^... reading,
// only sensible at N = 1; kept for side-by-side comparison.
enum class WeightForm { cosN, Ncos };

double weight_circle(double theta, unsigned N, double alpha, double beta,
                     WeightForm form = WeightForm::cosN);

using Matrix = std::vector<std::vector<double>>;

enum class GramFamily { phi, psi };

// Normalized circle Gram (f_n, f_m) = int f_n(e^{i theta}) f_m(e^{-i theta})
// rho d theta / int rho d theta. Diagonal converges to h_n.
Matrix gram_circle(GramFamily family, unsigned N, const Rational& alpha, const Rational& beta,
                   int n_max, const QuadratureConfig& config = {},
                   WeightForm form = WeightForm::cosN);

// Gram of P_n with weight w(x) = rho/sqrt(4-x^2) on [-2,2] (first kind), of
// Q_n with the extra (4-x^2) factor (second kind); x = 2 cos theta pullback.
Matrix gram_realline(PrlKind kind, unsigned N, const Rational& alpha, const Rational& beta,
                     int n_max, const QuadratureConfig& config = {});

struct SelfAdjointResult {
    double max_defect = 0.0;
    double scale = 0.0; // largest |(Lf,g)| seen; defect is judged against it
    bool pass(double tolerance) const { return max_defect < tolerance * std::max(scale, 1.0); }
};

// Random Laurent polynomials with integer coefficients in [-5,5] and
// exponents bounded by exp_max; L applied exactly, pairing integrated.
SelfAdjointResult selfadjointness_check(unsigned N, const Rational& alpha, const Rational& beta,
                                        int trials, int exp_max = 6,
                                        const QuadratureConfig& config = {});

// Integrates g(theta) rho(theta;N) over [0, 2 pi) (or a prefix of it), with
// panel splits at every zero of 1 -+ cos N theta; tanh-sinh per panel.
double integrate_weighted(const std::function<double(double)>& g, double theta_max, unsigned N,
                          double alpha, double beta, const QuadratureConfig& config,
                          WeightForm form = WeightForm::cosN);

} // namespace sieved

#endif
