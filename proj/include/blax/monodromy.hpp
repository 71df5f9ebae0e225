#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "blax/pcm.hpp"

namespace blax {

// Smooth bandlimited currents on [-length, 0], stored as a short Fourier
// recipe so they can be evaluated at arbitrary points (lattice nodes and cell
// midpoints alike).  cos[0] is the constant term; sin[0] is unused.
struct CurrentSample {
    int dim = 0;
    double length = 1.0;
    int cells = 2000;
    unsigned seed = 0;
    std::vector<Eigen::MatrixXd> j0_cos, j0_sin, j1_cos, j1_sin;

    double h() const { return length / cells; }
    Eigen::MatrixXd j0_at(double x) const;
    Eigen::MatrixXd j1_at(double x) const;

    static CurrentSample random(int dim, unsigned seed, int bands = 3,
                                double amplitude = 0.3, double length = 1.0,
                                int cells = 2000);
    static CurrentSample constant(const Eigen::MatrixXd& j0, const Eigen::MatrixXd& j1,
                                  double length = 1.0, int cells = 2000);
    static CurrentSample zero(int dim, double length = 1.0, int cells = 2000);
};

// Asymptotic boundary matrix K(lambda) ~ k + f/lambda + O(1/lambda^2).
struct KSeries {
    Eigen::MatrixXd k, f;
};

// Ordered product of per-cell midpoint exponentials over [a, b] (a < b), the
// cell nearest b multiplying on the left.  Throws PoleError when lambda^2 - 1
// is smaller than pole_eps in absolute value.
Eigen::MatrixXd path_ordered_exp(const CurrentSample& sample, double lambda, double a,
                                 double b, int cells, double pole_eps = 1e-6);

// Monodromy over the full interval [-length, 0].
Eigen::MatrixXd monodromy(const CurrentSample& sample, double lambda,
                          double pole_eps = 1e-6);

struct MonodromySeries {
    Eigen::MatrixXd t0;          // integral of j0
    Eigen::MatrixXd t1;          // integral of j0 plus the ordered double integral
    Eigen::MatrixXd t1_variant;  // integral of j1 plus the ordered double integral
};

// First Laurent coefficients of the monodromy, T = I + sum_k T^(k)/lambda^{k+1},
// by composite quadrature: trapezoid for single integrals, triangle rule with
// half-weight diagonal for the ordered double integral.  t1 keeps the printed
// single-integral summand (j0); t1_variant replaces it by j1.
MonodromySeries monodromy_series(const CurrentSample& sample, int order = 1);

struct DressedResult {
    Eigen::MatrixXd value;
    double condition = 0.0;  // condition number of T(-lambda)
};

// Dressed monodromy: T(lambda) K(lambda) T^{-1}(-lambda) for the reflection
// automorphism, T(lambda) K(lambda) T^t(-lambda) for the twisted one.
DressedResult dressed_monodromy(const CurrentSample& sample,
                                const std::function<Eigen::MatrixXd(double)>& K,
                                double lambda, const AntiAutomorphism& sigma,
                                double pole_eps = 1e-6);
DressedResult dressed_monodromy(const CurrentSample& sample, const KSeries& K,
                                double lambda, const AntiAutomorphism& sigma,
                                double pole_eps = 1e-6);

struct ChargeEstimates {
    Eigen::MatrixXd t0, t1;    // bulk coefficients (t1 is the j1 variant)
    Eigen::MatrixXd ct0, ct1;  // boundary non-local charges
    std::string method;
    double h = 0.0;
};

// Direct quadrature of the boundary non-local charges: single integrals by
// trapezoid, the unordered double integral by the product rule, ordered double
// integrals by triangle rules with half-weight diagonal.
ChargeEstimates boundary_charges_direct(const CurrentSample& sample, const KSeries& K,
                                        const AntiAutomorphism& sigma);

struct CrosscheckReport {
    Eigen::MatrixXd fit_const, fit_c1, fit_c2;  // 1/lambda fit of the dressed monodromy
    double rel_ct0 = 0.0;  // fit_c1 vs direct ct0 + f-term
    double rel_ct1 = 0.0;  // fit_c2 vs direct ct1
    double rel_t1_printed = 0.0;  // lambda^2 coefficient of T vs the printed T^(1)
    double rel_t1_variant = 0.0;  // ... vs the j1 variant
    std::vector<double> grid;
    double step = 0.0;
};

// Fits the dressed monodromy (and the bare monodromy) in powers of 1/lambda on
// the grid and compares the coefficients with the direct quadratures.  The fit
// uses one basis function 1/lambda^p per grid point (up to seven) so truncation
// error is controlled at O(lambda^{-grid size}).
CrosscheckReport expansion_crosscheck(const CurrentSample& sample, const KSeries& K,
                                      const AntiAutomorphism& sigma,
                                      std::vector<double> grid = {8, 12, 16, 24},
                                      double pole_eps = 1e-6);

struct LinearLimitReport {
    struct Candidate {
        std::string name;
        bool order0_zero = false;  // c-number part of the quadratic relation vanishes
        bool matches = false;      // O(eta) part equals the integrated linear bracket
    };
    std::vector<Candidate> candidates;
    bool found = false;   // some candidate reading matches exactly
    std::string chosen;   // its name
    bool gen_matches = false;  // double integral of the closed linear bracket
                               // equals the integrated right side
};

// Symbolic check that the quadratic boundary relation, linearized via
// T -> 1 + eta * integral(L), reduces exactly to the integrated closed linear
// bracket.  Scans the standard argument readings of the difference/sum
// r-matrix slots and reports the one that matches.
LinearLimitReport linear_limit_check(const PCMData& pcm, const PCMSpec& spec);

}  // namespace blax
