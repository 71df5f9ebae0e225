#include "blax/boundary.hpp"

#include "blax/errors.hpp"

namespace blax {

namespace {

const std::string kLambda = "lambda";
const std::string kMu = "mu";
const std::string kEta = "eta";

RatFunc var(const std::string& name) { return RatFunc::variable({name}, name); }

// Second-leg copy of a lambda-dependent boundary matrix.
MatrixRF on_mu(const MatrixRF& k) { return k.substitute({{kLambda, var(kMu)}}); }

SpectralTensor leg1(const MatrixRF& k) {
    return {k.dim(), {1, 2}, kron(k, MatrixRF::identity(k.dim()))};
}

SpectralTensor leg2(const MatrixRF& k) {
    return {k.dim(), {1, 2}, kron(MatrixRF::identity(k.dim()), k)};
}

MatrixFieldExpr lift(const SpectralTensor& t) {
    return MatrixFieldExpr::from_constant(t.matrix());
}

MatrixFieldExpr second_copy(const MatrixFieldExpr& a) {
    return a.substitute({{kLambda, var(kMu)}}).rename_points({{"x", "y"}});
}

MatrixFieldExpr matpow(const MatrixFieldExpr& a, int n) {
    MatrixFieldExpr acc = MatrixFieldExpr::from_constant(MatrixRF::identity(a.dim()));
    for (int i = 0; i < n; ++i) acc = acc * a;
    return acc;
}

// tr_1 of an N^2-dimensional two-leg matrix of fields.
MatrixFieldExpr partial_trace_leg1(const MatrixFieldExpr& a, int n) {
    MatrixFieldExpr out(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            FieldExpr acc;
            for (int i = 0; i < n; ++i) acc += a.at(i * n + k, i * n + l);
            out.at(k, l) = std::move(acc);
        }
    return out;
}

MatrixFieldExpr boundary_lax(const MatrixFieldExpr& L, const MatrixRF& k,
                             const AntiAutomorphism& sigma) {
    return MatrixFieldExpr::from_constant(k.inverse()) * build_boundary_field(L, k, sigma);
}

}  // namespace

SpectralTensor sigma_on_tensor(const SpectralTensor& a, const AntiAutomorphism& sigma,
                               const std::vector<int>& legs,
                               const std::vector<std::string>& leg_vars) {
    if (legs.size() != leg_vars.size())
        throw ShapeError("one spectral variable required per acted leg");
    SpectralTensor out = a;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (sigma.transpose) out = out.partial_transpose(legs[i]);
        if (sigma.negate_spectral) out = out.substitute({{leg_vars[i], -var(leg_vars[i])}});
        if (sigma.sign == -1) out = -out;
    }
    return out;
}

CybeResult cybe_residual(const SpectralTensor& r, const SpectralTensor& s) {
    if (r.base_dim() != s.base_dim() || r.legs() != std::vector<int>{1, 2} ||
        s.legs() != std::vector<int>{1, 2})
        throw ShapeError("cybe_residual expects two-leg tensors on legs {1,2}");
    const int n = r.base_dim();

    const std::map<std::string, RatFunc> swap_lm{{kLambda, var(kMu)}, {kMu, var(kLambda)}};
    CybeResult res;
    res.r_skew = (r.swap_legs().substitute(swap_lm) + r).is_zero();
    res.s_symmetric = (s.swap_legs().substitute(swap_lm) - s).is_zero();

    const SpectralTensor rm = r - s;
    const SpectralTensor rp = r + s;
    const auto at_13 = [&](const SpectralTensor& a) {
        return SpectralTensor(n, {1, 3}, a.substitute({{kMu, var(kEta)}}).matrix())
            .embed({1, 2, 3});
    };
    const auto at_23 = [&](const SpectralTensor& a) {
        return SpectralTensor(
                   n, {2, 3},
                   a.substitute({{kLambda, var(kMu)}, {kMu, var(kEta)}}).matrix())
            .embed({1, 2, 3});
    };
    const SpectralTensor rm12 = rm.embed({1, 2, 3});
    const SpectralTensor rp12 = rp.embed({1, 2, 3});
    res.residual = commutator(at_13(rp), rm12) + commutator(at_23(rp), rp12) +
                   commutator(at_23(rp), at_13(rp));
    res.pass = res.r_skew && res.s_symmetric && res.residual.is_zero();
    return res;
}

MatrixFieldExpr build_boundary_field(const MatrixFieldExpr& L, const MatrixRF& k,
                                     const AntiAutomorphism& sigma) {
    if (k.dim() != L.dim()) throw ShapeError("boundary matrix does not match the Lax matrix");
    const auto kf = MatrixFieldExpr::from_constant(k);
    return L * kf + kf * sigma_transform(L, sigma, kLambda);
}

SpectralTensor constraint_residual(const MatrixRF& k, const SpectralTensor& a,
                                   const AntiAutomorphism& sigma) {
    if (k.det().is_zero()) throw MalformedInput("boundary matrix must be invertible");
    const SpectralTensor k1 = leg1(k);
    const SpectralTensor k2 = leg2(on_mu(k));
    const SpectralTensor a1 = sigma_on_tensor(a, sigma, {1}, {kLambda});
    const SpectralTensor a2 = sigma_on_tensor(a, sigma, {2}, {kMu});
    const SpectralTensor a12 = sigma_on_tensor(a, sigma, {1, 2}, {kLambda, kMu});
    return a * k1 * k2 + k1 * k2 * a12 + k1 * a1 * k2 + k2 * a2 * k1;
}

DerivedRMatrices derived_r(const SpectralTensor& r, const SpectralTensor& s,
                           const MatrixRF& k, const AntiAutomorphism& sigma) {
    const SpectralTensor k1 = leg1(k);
    const SpectralTensor k2 = leg2(on_mu(k));
    const SpectralTensor rm = r - s;
    const SpectralTensor rp = r + s;
    const auto s1 = [&](const SpectralTensor& a) {
        return sigma_on_tensor(a, sigma, {1}, {kLambda});
    };
    const auto s2 = [&](const SpectralTensor& a) {
        return sigma_on_tensor(a, sigma, {2}, {kMu});
    };
    const auto s12 = [&](const SpectralTensor& a) {
        return sigma_on_tensor(a, sigma, {1, 2}, {kLambda, kMu});
    };
    DerivedRMatrices d;
    d.r_minus = rm * k2 + k2 * s2(rm);
    d.r_minus_tilde = -(k2 * s12(rm)) - s1(rm) * k2;
    d.r_plus = rp * k1 + k1 * s1(rp);
    d.r_plus_tilde = -(k1 * s12(rp)) - s2(rp) * k1;
    return d;
}

std::pair<SpectralTensor, SpectralTensor> footnote_residuals(const DerivedRMatrices& d,
                                                             const MatrixRF& k) {
    const SpectralTensor ki1 = leg1(k.inverse());
    const SpectralTensor ki2 = leg2(on_mu(k).inverse());
    return {ki1 * d.r_minus - d.r_minus_tilde * ki1,
            ki2 * d.r_plus - d.r_plus_tilde * ki2};
}

ClosureReport closure_check(const MatrixFieldExpr& L, const MatrixRF& k,
                            const AntiAutomorphism& sigma, const BracketTable& table,
                            const SpectralTensor& r, const SpectralTensor& s) {
    const int n = L.dim();
    ClosureReport rep;

    rep.constraints_hold = constraint_residual(k, r, sigma).is_zero() &&
                           constraint_residual(k, s, sigma).is_zero();

    const MatrixFieldExpr tx = build_boundary_field(L, k, sigma);
    const MatrixFieldExpr ty = second_copy(tx);
    rep.raw = poisson_bracket(tx, ty, table);

    rep.delta_prime_coeff = SpectralTensor(n, {1, 2}, MatrixRF(n * n));
    rep.delta_prime_cnumber = true;
    for (int i = 0; i < n * n; ++i)
        for (int j = 0; j < n * n; ++j) {
            const FieldExpr dp = rep.raw.at(i, j).filter_dist(1);
            RatFunc coeff;
            for (const auto& t : dp.terms()) {
                if (!t.gens.empty()) {
                    rep.delta_prime_cnumber = false;
                    continue;
                }
                coeff += t.coeff;
            }
            rep.delta_prime_coeff.at(i, j) = std::move(coeff);
        }
    rep.delta_prime_matches_fin =
        rep.delta_prime_cnumber &&
        rep.delta_prime_coeff == constraint_residual(k, s, sigma) * Rational(-2);

    const DerivedRMatrices d = derived_r(r, s, k, sigma);
    const MatrixFieldExpr t1 = embed_leg1(tx);
    const MatrixFieldExpr t2 = embed_leg2(tx.substitute({{kLambda, var(kMu)}}));
    const FieldExpr dxy = FieldExpr::distribution({0, "x", "y"});
    const MatrixFieldExpr rhs = (lift(d.r_minus) * t1 - t1 * lift(d.r_minus_tilde) +
                                 lift(d.r_plus) * t2 - t2 * lift(d.r_plus_tilde)) *
                                dxy;
    rep.residual = rep.raw - rhs;
    rep.pass = rep.delta_prime_cnumber && rep.delta_prime_coeff.is_zero() &&
               rep.residual.is_zero();
    return rep;
}

FieldExpr trace_commute(const MatrixFieldExpr& L, const MatrixRF& k,
                        const AntiAutomorphism& sigma, const BracketTable& table,
                        int npow, int mpow) {
    const MatrixFieldExpr lx = boundary_lax(L, k, sigma);
    const MatrixFieldExpr ly = second_copy(lx);
    return poisson_bracket(matpow(lx, npow).trace(), matpow(ly, mpow).trace(), table);
}

LaxPartner lax_partner(const MatrixFieldExpr& L, const MatrixRF& k,
                       const AntiAutomorphism& sigma, const BracketTable& table,
                       const SpectralTensor& r, const SpectralTensor& s, int n) {
    (void)table;
    const int dim = L.dim();
    const MatrixFieldExpr lx = boundary_lax(L, k, sigma);
    const DerivedRMatrices d = derived_r(r, s, k, sigma);
    const MatrixFieldExpr head =
        matpow(lx, n - 1) * MatrixFieldExpr::from_constant(k.inverse());
    LaxPartner p;
    p.order = n;
    p.a_n = partial_trace_leg1(embed_leg1(head) * lift(d.r_plus_tilde), dim) * Rational(n);
    return p;
}

MatrixFieldExpr zero_curvature_residual(const LaxPartner& partner,
                                        const MatrixFieldExpr& L, const MatrixRF& k,
                                        const AntiAutomorphism& sigma,
                                        const BracketTable& table) {
    const int n = L.dim();
    const MatrixFieldExpr lx = boundary_lax(L, k, sigma);
    const MatrixFieldExpr ly = second_copy(lx);
    const FieldExpr tr_pow = matpow(lx, partner.order).trace();

    MatrixFieldExpr lhs(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            lhs.at(i, j) = poisson_bracket(tr_pow, ly.at(i, j), table);

    const MatrixFieldExpr l_mu_x = lx.substitute({{kLambda, var(kMu)}});
    const FieldExpr dxy = FieldExpr::distribution({0, "x", "y"});
    return lhs - commutator(partner.a_n, l_mu_x) * dxy;
}

}  // namespace blax
