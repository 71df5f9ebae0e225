#include <algorithm>
#include "blax/monodromy.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

#include "blax/errors.hpp"

namespace blax {

namespace {

const std::string kLambda = "lambda";
const std::string kMu = "mu";
constexpr double kTau = 6.283185307179586476925286766559;

RatFunc var(const std::string& name) { return RatFunc::variable({name}, name); }

Eigen::MatrixXd eval_fourier(const std::vector<Eigen::MatrixXd>& cs,
                             const std::vector<Eigen::MatrixXd>& sn, double x,
                             double length, int dim) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t m = 0; m < cs.size(); ++m) {
        const double phase = kTau * static_cast<double>(m) * x / length;
        out += cs[m] * std::cos(phase);
        if (m > 0 && m < sn.size()) out += sn[m] * std::sin(phase);
    }
    return out;
}

// Trapezoid weight of lattice node i among 0..cells.
double trap_weight(int i, int cells, double h) {
    return (i == 0 || i == cells) ? h / 2 : h;
}

}  // namespace

Eigen::MatrixXd CurrentSample::j0_at(double x) const {
    return eval_fourier(j0_cos, j0_sin, x, length, dim);
}

Eigen::MatrixXd CurrentSample::j1_at(double x) const {
    return eval_fourier(j1_cos, j1_sin, x, length, dim);
}

CurrentSample CurrentSample::random(int dim, unsigned seed, int bands, double amplitude,
                                    double length, int cells) {
    CurrentSample s;
    s.dim = dim;
    s.length = length;
    s.cells = cells;
    s.seed = seed;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const auto draw = [&](int band) {
        Eigen::MatrixXd m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                m(i, j) = amplitude * uni(rng) / static_cast<double>(band + 1);
        return m;
    };
    for (int b = 0; b <= bands; ++b) {
        s.j0_cos.push_back(draw(b));
        s.j0_sin.push_back(b == 0 ? Eigen::MatrixXd::Zero(dim, dim).eval() : draw(b));
        s.j1_cos.push_back(draw(b));
        s.j1_sin.push_back(b == 0 ? Eigen::MatrixXd::Zero(dim, dim).eval() : draw(b));
    }
    return s;
}

CurrentSample CurrentSample::constant(const Eigen::MatrixXd& j0, const Eigen::MatrixXd& j1,
                                      double length, int cells) {
    CurrentSample s;
    s.dim = static_cast<int>(j0.rows());
    s.length = length;
    s.cells = cells;
    s.j0_cos = {j0};
    s.j0_sin = {Eigen::MatrixXd::Zero(s.dim, s.dim)};
    s.j1_cos = {j1};
    s.j1_sin = {Eigen::MatrixXd::Zero(s.dim, s.dim)};
    return s;
}

CurrentSample CurrentSample::zero(int dim, double length, int cells) {
    return constant(Eigen::MatrixXd::Zero(dim, dim), Eigen::MatrixXd::Zero(dim, dim),
                    length, cells);
}

Eigen::MatrixXd path_ordered_exp(const CurrentSample& sample, double lambda, double a,
                                 double b, int cells, double pole_eps) {
    const double denom = lambda * lambda - 1.0;
    if (std::abs(denom) < pole_eps)
        throw PoleError("spectral parameter too close to a pole of the Lax matrix");
    const double h = (b - a) / cells;
    Eigen::MatrixXd t = Eigen::MatrixXd::Identity(sample.dim, sample.dim);
    for (int c = 0; c < cells; ++c) {
        const double mid = a + (c + 0.5) * h;
        const Eigen::MatrixXd l =
            (lambda * sample.j0_at(mid) + sample.j1_at(mid)) / denom;
        t = (h * l).exp() * t;  // later cells multiply on the left
    }
    return t;
}

Eigen::MatrixXd monodromy(const CurrentSample& sample, double lambda, double pole_eps) {
    return path_ordered_exp(sample, lambda, -sample.length, 0.0, sample.cells, pole_eps);
}

MonodromySeries monodromy_series(const CurrentSample& sample, int order) {
    if (order < 0 || order > 1) throw MalformedInput("series order must be 0 or 1");
    const int m = sample.cells;
    const double h = sample.h();
    const int n = sample.dim;

    Eigen::MatrixXd i0 = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd i1 = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd ordered = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd prefix = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i <= m; ++i) {
        const double x = -sample.length + i * h;
        const double w = trap_weight(i, m, h);
        const Eigen::MatrixXd j0 = sample.j0_at(x);
        i0 += w * j0;
        i1 += w * sample.j1_at(x);
        // triangle rule: strict lower part plus half-weight diagonal
        ordered += (w * j0) * prefix + 0.5 * w * w * j0 * j0;
        prefix += w * j0;
    }

    MonodromySeries s;
    s.t0 = i0;
    if (order >= 1) {
        s.t1 = i0 + ordered;
        s.t1_variant = i1 + ordered;
    } else {
        s.t1 = Eigen::MatrixXd::Zero(n, n);
        s.t1_variant = s.t1;
    }
    return s;
}

DressedResult dressed_monodromy(const CurrentSample& sample,
                                const std::function<Eigen::MatrixXd(double)>& K,
                                double lambda, const AntiAutomorphism& sigma,
                                double pole_eps) {
    const Eigen::MatrixXd tp = monodromy(sample, lambda, pole_eps);
    const Eigen::MatrixXd tm = monodromy(sample, -lambda, pole_eps);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(tm);
    DressedResult out;
    out.condition =
        svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
    if (sigma.transpose)
        out.value = tp * K(lambda) * tm.transpose();
    else
        out.value = tp * K(lambda) * tm.inverse();
    return out;
}

DressedResult dressed_monodromy(const CurrentSample& sample, const KSeries& K,
                                double lambda, const AntiAutomorphism& sigma,
                                double pole_eps) {
    return dressed_monodromy(
        sample, [&](double l) { return (K.k + K.f / l).eval(); }, lambda, sigma,
        pole_eps);
}

ChargeEstimates boundary_charges_direct(const CurrentSample& sample, const KSeries& K,
                                        const AntiAutomorphism& sigma) {
    const int m = sample.cells;
    const double h = sample.h();
    const int n = sample.dim;

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);   // integral of j0
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);   // integral of j1
    Eigen::MatrixXd dg = Eigen::MatrixXd::Zero(n, n);  // ordered, larger point left
    Eigen::MatrixXd dl = Eigen::MatrixXd::Zero(n, n);  // ordered, smaller point left
    std::vector<Eigen::MatrixXd> j0(m + 1);
    for (int i = 0; i <= m; ++i) j0[i] = sample.j0_at(-sample.length + i * h);

    Eigen::MatrixXd prefix = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i <= m; ++i) {
        const double w = trap_weight(i, m, h);
        a += w * j0[i];
        b += w * sample.j1_at(-sample.length + i * h);
        dg += (w * j0[i]) * prefix + 0.5 * w * w * j0[i] * j0[i];
        prefix += w * j0[i];
    }
    Eigen::MatrixXd suffix = Eigen::MatrixXd::Zero(n, n);
    for (int i = m; i >= 0; --i) {
        const double w = trap_weight(i, m, h);
        dl += (w * j0[i]) * suffix + 0.5 * w * w * j0[i] * j0[i];
        suffix += w * j0[i];
    }

    ChargeEstimates est;
    est.method = "direct quadrature";
    est.h = h;
    est.t0 = a;
    est.t1 = b + dg;
    if (sigma.transpose) {
        est.ct0 = a * K.k - K.k * a.transpose();
        est.ct1 = b * K.k + K.k * b.transpose() - a * K.k * a.transpose() +
                  a * K.f - K.f * a.transpose() + dg * K.k + K.k * dg.transpose();
    } else {
        est.ct0 = a * K.k + K.k * a;
        est.ct1 = b * K.k - K.k * b + a * K.k * a + a * K.f + K.f * a + dg * K.k +
                  K.k * dl;
    }
    return est;
}

CrosscheckReport expansion_crosscheck(const CurrentSample& sample, const KSeries& K,
                                      const AntiAutomorphism& sigma,
                                      std::vector<double> grid, double pole_eps) {
    if (grid.size() < 3) throw MalformedInput("crosscheck grid needs at least 3 points");
    const int n = sample.dim;
    const int g = static_cast<int>(grid.size());
    const int p = std::min(g, 7);

    // columns are scaled by lmin^j so every Vandermonde entry lies in (0, 1];
    // the raw entries would otherwise underflow the rank tolerance at high order
    const double lmin = *std::min_element(grid.begin(), grid.end());
    Eigen::MatrixXd vand(g, p);
    Eigen::MatrixXd dressed_rows(g, n * n);
    Eigen::MatrixXd bare_rows(g, n * n);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < p; ++j) vand(i, j) = std::pow(lmin / grid[i], j);
        const Eigen::MatrixXd d =
            dressed_monodromy(sample, K, grid[i], sigma, pole_eps).value;
        const Eigen::MatrixXd t = monodromy(sample, grid[i], pole_eps);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                dressed_rows(i, r * n + c) = d(r, c);
                bare_rows(i, r * n + c) = t(r, c);
            }
    }
    const auto qr = vand.colPivHouseholderQr();
    Eigen::MatrixXd dressed_fit = qr.solve(dressed_rows);
    Eigen::MatrixXd bare_fit = qr.solve(bare_rows);
    if (qr.rank() < p) throw MalformedInput("degenerate crosscheck fit");
    for (int j = 0; j < p; ++j) {
        const double undo = std::pow(lmin, j);
        dressed_fit.row(j) *= undo;
        bare_fit.row(j) *= undo;
    }

    const auto unvec = [&](const Eigen::MatrixXd& rows, int row) {
        Eigen::MatrixXd m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = rows(row, r * n + c);
        return m;
    };
    const auto rel = [](const Eigen::MatrixXd& got, const Eigen::MatrixXd& want) {
        const double scale = want.norm();
        return scale > 1e-300 ? (got - want).norm() / scale : (got - want).norm();
    };

    CrosscheckReport rep;
    rep.grid = std::move(grid);
    rep.step = sample.h();
    rep.fit_const = unvec(dressed_fit, 0);
    rep.fit_c1 = unvec(dressed_fit, 1);
    rep.fit_c2 = p > 2 ? unvec(dressed_fit, 2) : Eigen::MatrixXd::Zero(n, n).eval();

    const ChargeEstimates direct = boundary_charges_direct(sample, K, sigma);
    rep.rel_ct0 = rel(rep.fit_c1, (direct.ct0 + K.f).eval());
    rep.rel_ct1 = rel(rep.fit_c2, direct.ct1);

    const MonodromySeries series = monodromy_series(sample, 1);
    const Eigen::MatrixXd bare_c2 =
        p > 2 ? unvec(bare_fit, 2) : Eigen::MatrixXd::Zero(n, n).eval();
    rep.rel_t1_printed = rel(bare_c2, series.t1);
    rep.rel_t1_variant = rel(bare_c2, series.t1_variant);
    return rep;
}

namespace {

// ---- symbolic linear-limit machinery ----

SpectralTensor r21_of(const SpectralTensor& t) {
    return t.swap_legs().substitute({{kLambda, var(kMu)}, {kMu, var(kLambda)}});
}

SpectralTensor at_plus(const SpectralTensor& t) {
    return t.substitute({{kMu, -var(kMu)}});
}

struct Reading {
    std::string name;
    SpectralTensor rm12, rm21, rp12, rp21;  // rm21/rp21 carry any transposes already
};

MatrixFieldExpr lift(const SpectralTensor& t) {
    return MatrixFieldExpr::from_constant(t.matrix());
}

}  // namespace

LinearLimitReport linear_limit_check(const PCMData& pcm, const PCMSpec& spec) {
    const int n = pcm.algebra.N;
    const auto& table = pcm.table;
    const auto& sigma = spec.sigma;
    const MatrixRF& k = spec.k;

    // Left side: double integral of the closed linear bracket, computed from
    // the bracket table.
    const MatrixFieldExpr tx = build_boundary_field(pcm.L, k, sigma);
    const MatrixFieldExpr ty =
        tx.substitute({{kLambda, var(kMu)}}).rename_points({{"x", "y"}});
    const MatrixFieldExpr raw = poisson_bracket(tx, ty, table);
    MatrixFieldExpr lhs(n * n);
    for (int i = 0; i < n * n; ++i)
        for (int j = 0; j < n * n; ++j)
            lhs.at(i, j) = integrate(integrate(raw.at(i, j), "y"), "x");

    // Integrated fields: one copy per spectral argument.
    MatrixFieldExpr w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.at(i, j) = integrate(tx.at(i, j), "x");
    const MatrixFieldExpr w1 = embed_leg1(w);
    const MatrixFieldExpr w2 = embed_leg2(w.substitute({{kLambda, var(kMu)}}));

    LinearLimitReport rep;

    // Cross-check: the integrated closed-form right side equals the bracket.
    {
        const DerivedRMatrices d = derived_r(pcm.r, pcm.s, k, sigma);
        const MatrixFieldExpr rhs_gen = lift(d.r_minus) * w1 - w1 * lift(d.r_minus_tilde) +
                                        lift(d.r_plus) * w2 - w2 * lift(d.r_plus_tilde);
        rep.gen_matches = lhs == rhs_gen;
    }

    const MatrixFieldExpr k1 =
        MatrixFieldExpr::from_constant(kron(k, MatrixRF::identity(n)));
    const MatrixFieldExpr k2 =
        MatrixFieldExpr::from_constant(kron(MatrixRF::identity(n), k));
    const MatrixRF k1m = kron(k, MatrixRF::identity(n));
    const MatrixRF k2m = kron(MatrixRF::identity(n), k);

    // Candidate argument readings for the four r-matrix slots.
    std::vector<Reading> readings;
    const std::vector<std::pair<std::string, SpectralTensor>> kernels = {
        {"r", pcm.r}, {"r-s", pcm.r - pcm.s}, {"r+s", pcm.r + pcm.s}};
    // Two principled conventions per 21-slot: "conj" conjugates the legs only
    // (a difference-kernel reading, argument unchanged), "swap" exchanges legs
    // and spectral arguments.
    for (const auto& [mname, rho_m] : kernels)
        for (const auto& [pname, rho_p] : kernels)
            for (int mv = 0; mv < 2; ++mv)
                for (int pv = 0; pv < 2; ++pv) {
                    Reading rd;
                        rd.name = "minus:" + mname + " plus:" + pname +
                                  (mv ? " m21:swap" : " m21:conj") +
                                  (pv ? " p21:swap" : " p21:conj");
                        rd.rm12 = rho_m;
                        rd.rm21 = mv ? r21_of(rho_m) : rho_m.swap_legs();
                        rd.rp12 = at_plus(rho_p);
                        rd.rp21 = pv ? at_plus(r21_of(rho_p)) : rd.rp12.swap_legs();
                        if (sigma.transpose) {
                            rd.rm21 = rd.rm21.partial_transpose(1).partial_transpose(2);
                            rd.rp12 = rd.rp12.partial_transpose(1);
                            rd.rp21 = rd.rp21.partial_transpose(2);
                        }
                        readings.push_back(std::move(rd));
                }

    for (const auto& rd : readings) {
        LinearLimitReport::Candidate cand;
        cand.name = rd.name;

        MatrixRF order0(n * n);
        MatrixFieldExpr rhs(n * n);
        if (sigma.transpose) {
            // ... - T1 T2 r21^{t1t2}(-) + T1 r12^{t1}(+) T2 - T2 r21^{t2}(+) T1
            order0 = rd.rm12.matrix() * k1m * k2m - k1m * k2m * rd.rm21.matrix() +
                     k1m * rd.rp12.matrix() * k2m - k2m * rd.rp21.matrix() * k1m;
            rhs = lift(rd.rm12) * (w1 * k2 + k1 * w2) -
                  (w1 * k2 + k1 * w2) * lift(rd.rm21) + w1 * lift(rd.rp12) * k2 +
                  k1 * lift(rd.rp12) * w2 - w2 * lift(rd.rp21) * k1 -
                  k2 * lift(rd.rp21) * w1;
        } else {
            // ... - T1 T2 r21(-) + T1 r21(+) T2 - T2 r12(+) T1
            order0 = rd.rm12.matrix() * k1m * k2m - k1m * k2m * rd.rm21.matrix() +
                     k1m * rd.rp21.matrix() * k2m - k2m * rd.rp12.matrix() * k1m;
            rhs = lift(rd.rm12) * (w1 * k2 + k1 * w2) -
                  (w1 * k2 + k1 * w2) * lift(rd.rm21) + w1 * lift(rd.rp21) * k2 +
                  k1 * lift(rd.rp21) * w2 - w2 * lift(rd.rp12) * k1 -
                  k2 * lift(rd.rp12) * w1;
        }
        cand.order0_zero = order0.is_zero();
        cand.matches = lhs == rhs;
        if (cand.matches && cand.order0_zero && !rep.found) {
            rep.found = true;
            rep.chosen = cand.name;
        }
        rep.candidates.push_back(std::move(cand));
    }
    return rep;
}

}  // namespace blax
