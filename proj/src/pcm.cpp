#include "blax/pcm.hpp"

#include "blax/errors.hpp"

namespace blax {

namespace {

const std::string kLambda = "lambda";
const std::string kMu = "mu";

RatFunc var(const std::string& name) { return RatFunc::variable({name}, name); }

RatFunc one() { return RatFunc::constant({}, Rational(1)); }

MatrixFieldExpr lift(const MatrixRF& m) { return MatrixFieldExpr::from_constant(m); }

}  // namespace

PCMData build_pcm(const LieBasisSpec& algebra, bool verify) {
    PCMData pcm;
    pcm.algebra = algebra;
    pcm.pi = casimir(algebra).pi;

    const RatFunc l = var(kLambda);
    const RatFunc m = var(kMu);
    const RatFunc l2m1 = l * l - one();
    const RatFunc m2m1 = m * m - one();
    const RatFunc half = RatFunc::constant({}, make_rational(1, 2));

    const RatFunc r_coeff = half / (l - m) * (m * m / m2m1 + l * l / l2m1);
    const RatFunc s_coeff = -(l + m) * half / (l2m1 * m2m1);
    pcm.r = pcm.pi * r_coeff;
    pcm.s = pcm.pi * s_coeff;

    const MatrixFieldExpr j0 = current_matrix(algebra, "j0", "x");
    const MatrixFieldExpr j1 = current_matrix(algebra, "j1", "x");
    pcm.L = j0 * (l / l2m1) + j1 * (one() / l2m1);

    const auto pif = MatrixFieldExpr::from_constant(pcm.pi.matrix());
    const FieldExpr dxy = FieldExpr::distribution({0, "x", "y"});
    const FieldExpr dpxy = FieldExpr::distribution({1, "x", "y"});
    component_brackets_from_matrix_rule(pcm.table, commutator(pif, embed_leg2(j0)) * dxy,
                                        algebra, "j0", "x", "j0", "y");
    component_brackets_from_matrix_rule(pcm.table,
                                        commutator(pif, embed_leg2(j1)) * dxy + pif * dpxy,
                                        algebra, "j0", "x", "j1", "y");
    component_brackets_from_matrix_rule(pcm.table, MatrixFieldExpr(algebra.N * algebra.N),
                                        algebra, "j1", "x", "j1", "y");

    if (verify) {
        const CybeResult cy = cybe_residual(pcm.r, pcm.s);
        pcm.r_skew = cy.r_skew;
        pcm.s_symmetric = cy.s_symmetric;
        pcm.cybe_ok = cy.residual.is_zero();

        // {L_1(lambda,x), L_2(mu,y)} = delta ( [(r-s), L_1(lambda,x)]
        //   + [(r+s), L_2(mu,x)] ) - 2 s delta'(x-y)
        const MatrixFieldExpr lx1 = embed_leg1(pcm.L);
        const MatrixFieldExpr lx2 = embed_leg2(pcm.L.substitute({{kLambda, var(kMu)}}));
        const MatrixFieldExpr ly = pcm.L.substitute({{kLambda, var(kMu)}})
                                       .rename_points({{"x", "y"}});
        const MatrixFieldExpr expect =
            (commutator(lift((pcm.r - pcm.s).matrix()), lx1) +
             commutator(lift((pcm.r + pcm.s).matrix()), lx2)) *
                dxy -
            lift((pcm.s * Rational(2)).matrix()) * dpxy;
        pcm.fundam_ok = poisson_bracket(pcm.L, ly, pcm.table) == expect;
    }
    return pcm;
}

BoundaryCurrentReport boundary_current_closure(const PCMData& pcm, const PCMSpec& spec) {
    const int n = pcm.algebra.N;
    const MatrixRF& k = spec.k;
    const MatrixRF id = MatrixRF::identity(n);
    const MatrixRF k1 = kron(k, id);
    const MatrixRF pim = pcm.pi.matrix();

    const MatrixFieldExpr j0 = current_matrix(pcm.algebra, "j0", "x");
    const MatrixFieldExpr j1 = current_matrix(pcm.algebra, "j1", "x");
    const auto kf = lift(k);

    MatrixFieldExpr j0b, j1b;
    MatrixRF rmat;
    if (spec.sigma.transpose) {
        j0b = j0 * kf - kf * j0.transpose();
        j1b = j1 * kf + kf * j1.transpose();
        rmat = pim * k1 -
               k1 * SpectralTensor(pcm.pi).partial_transpose(1).matrix();
    } else {
        j0b = j0 * kf + kf * j0;
        j1b = j1 * kf - kf * j1;
        rmat = pim * k1 + k1 * pim;
    }

    const FieldExpr dxy = FieldExpr::distribution({0, "x", "y"});
    const auto rf = MatrixFieldExpr::from_constant(rmat);
    BoundaryCurrentReport rep;
    rep.pass = true;
    const auto check = [&](const std::string& name, const MatrixFieldExpr& a,
                           const MatrixFieldExpr& b, bool with_rhs) {
        const MatrixFieldExpr lhs =
            poisson_bracket(a, b.rename_points({{"x", "y"}}), pcm.table);
        const MatrixFieldExpr rhs =
            with_rhs ? commutator(rf, embed_leg2(b)) * dxy : MatrixFieldExpr(a.dim() * a.dim());
        if (lhs != rhs) {
            rep.pass = false;
            rep.failed_relations.push_back(name);
        }
    };
    check("{j0b, j0b}", j0b, j0b, true);
    check("{j0b, j1b}", j0b, j1b, true);
    check("{j1b, j1b}", j1b, j1b, false);
    return rep;
}

SpectralTensor restr_residual(const PCMData& pcm, const MatrixRF& k,
                              const AntiAutomorphism& sigma) {
    const int n = pcm.algebra.N;
    if (sigma.transpose) {
        const MatrixRF id = MatrixRF::identity(n);
        const MatrixRF k1 = kron(k, id);
        const MatrixRF k2 = kron(id, k);
        const MatrixRF pit = SpectralTensor(pcm.pi).partial_transpose(1).matrix();
        return {n, {1, 2}, k1 * pit * k2 - k2 * pit * k1};
    }
    const MatrixRF k2m = k * k;
    const RatFunc c = k2m.trace() * RatFunc::constant({}, Rational(1, n));
    return {n, {1}, k2m - MatrixRF::identity(n) * c};
}

std::vector<MatrixRF> restr_enumerate_diagonal(int n) {
    std::vector<MatrixRF> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        MatrixRF k(n);
        for (int i = 0; i < n; ++i)
            k.at(i, i) = RatFunc::constant({}, Rational((mask >> i) & 1 ? -1 : 1));
        out.push_back(std::move(k));
    }
    return out;
}

ChargeDensitySeries charge_densities(const PCMData& pcm, const MatrixRF& k, int order) {
    const RatFunc l = var(kLambda);
    const MatrixRF ki = k.inverse();
    const MatrixFieldExpr inner =
        lift(ki) * pcm.L * lift(k) - pcm.L.substitute({{kLambda, -l}});
    const FieldExpr tr2 = (inner * inner).trace();

    ChargeDensitySeries series;
    series.coeffs.assign(static_cast<std::size_t>(order) + 1, FieldExpr{});
    for (const auto& t : tr2.terms()) {
        const LaurentSeries ls = t.coeff.laurent_at_infinity(kLambda, order + 1);
        for (const auto& [pow, c] : ls.coeffs) {
            if (c.is_zero()) continue;
            if (pow < 2)
                throw UnsupportedGrowth("tr L^2 must start at order lambda^-2");
            const int idx = pow - 1;  // lambda^{-(k+1)} carries I^(k)
            if (idx > order) continue;
            FieldTerm u;
            u.coeff = c;
            u.gens = t.gens;
            u.dist = t.dist;
            series.coeffs[static_cast<std::size_t>(idx)] +=
                FieldExpr::from_terms({std::move(u)});
        }
    }
    return series;
}

LaxPartner pcm_lax_partner(const PCMData& pcm, const PCMSpec& spec) {
    return lax_partner(pcm.L, spec.k, spec.sigma, pcm.table, pcm.r, pcm.s, 2);
}

}  // namespace blax
