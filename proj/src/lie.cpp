#include "blax/lie.hpp"

#include "blax/errors.hpp"

namespace blax {

namespace {

MatrixRF constant_matrix(int n, std::initializer_list<long> rows) {
    MatrixRF m(n);
    auto it = rows.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = RatFunc::constant({}, Rational(*it++));
    return m;
}

// Gram matrix of the basis under the Frobenius pairing; positive definite
// for a linearly independent real basis.
MatrixRF frobenius_gram(const std::vector<MatrixRF>& basis) {
    const int m = static_cast<int>(basis.size());
    MatrixRF g(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            RatFunc acc;
            for (int i = 0; i < basis[0].dim(); ++i)
                for (int j = 0; j < basis[0].dim(); ++j)
                    acc += basis[static_cast<std::size_t>(a)].at(i, j) *
                           basis[static_cast<std::size_t>(b)].at(i, j);
            g.at(a, b) = acc;
        }
    return g;
}

}  // namespace

LieBasisSpec LieBasisSpec::gl(int N) {
    LieBasisSpec s;
    s.name = "gl(" + std::to_string(N) + ")";
    s.N = N;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            MatrixRF e(N);
            e.at(i, j) = RatFunc::constant({}, Rational(1));
            s.basis.push_back(std::move(e));
        }
    return s;
}

LieBasisSpec LieBasisSpec::su2() {
    LieBasisSpec s;
    s.name = "su2";
    s.N = 2;
    s.basis = {constant_matrix(2, {1, 0, 0, -1}),    // sigma3
               constant_matrix(2, {0, 1, 1, 0}),     // sigma1
               constant_matrix(2, {0, 1, -1, 0})};   // i*sigma2
    return s;
}

LieBasisSpec LieBasisSpec::su2_adjoint() {
    LieBasisSpec s;
    s.name = "su2_adjoint";
    s.N = 3;
    // (t_a)_{bc} = -eps_{abc}: real antisymmetric, [t_a,t_b] = eps_abc t_c
    s.basis = {constant_matrix(3, {0, 0, 0, 0, 0, -1, 0, 1, 0}),
               constant_matrix(3, {0, 0, 1, 0, 0, 0, -1, 0, 0}),
               constant_matrix(3, {0, -1, 0, 1, 0, 0, 0, 0, 0})};
    return s;
}

LieBasisSpec LieBasisSpec::abelian_diagonal(int N) {
    LieBasisSpec s;
    s.name = "abelian_diagonal";
    s.N = N;
    for (int i = 0; i < N; ++i) {
        MatrixRF e(N);
        e.at(i, i) = RatFunc::constant({}, Rational(1));
        s.basis.push_back(std::move(e));
    }
    return s;
}

bool StructureConstants::fully_antisymmetric() const {
    const std::size_t m = C.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                if (C[a][b][c] != -C[b][a][c]) return false;
                if (C[a][b][c] != C[b][c][a]) return false;
            }
    return true;
}

StructureConstants structure_constants(const LieBasisSpec& basis) {
    const int m = basis.size();
    const int N = basis.N;
    const MatrixRF gram = frobenius_gram(basis.basis);
    if (gram.det().is_zero()) throw NotALieBasis("basis is linearly dependent");
    const MatrixRF gram_inv = gram.inverse();

    StructureConstants sc;
    sc.C.assign(static_cast<std::size_t>(m),
                std::vector<std::vector<Rational>>(
                    static_cast<std::size_t>(m),
                    std::vector<Rational>(static_cast<std::size_t>(m), Rational(0))));

    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const MatrixRF comm = commutator(basis.basis[static_cast<std::size_t>(a)],
                                             basis.basis[static_cast<std::size_t>(b)]);
            // Frobenius projection onto the basis, then exact residual check
            std::vector<RatFunc> proj(static_cast<std::size_t>(m));
            for (int c = 0; c < m; ++c) {
                RatFunc acc;
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j)
                        acc += basis.basis[static_cast<std::size_t>(c)].at(i, j) * comm.at(i, j);
                proj[static_cast<std::size_t>(c)] = acc;
            }
            MatrixRF resid = comm;
            for (int c = 0; c < m; ++c) {
                RatFunc coeff;
                for (int d = 0; d < m; ++d)
                    coeff += gram_inv.at(c, d) * proj[static_cast<std::size_t>(d)];
                resid -= basis.basis[static_cast<std::size_t>(c)] * coeff;
                sc.C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                    [static_cast<std::size_t>(c)] = coeff.is_zero() ? Rational(0)
                                                                    : coeff.constant_value();
            }
            if (!resid.is_zero())
                throw NotALieBasis("commutator [t_" + std::to_string(a) + ", t_" +
                                   std::to_string(b) + "] is outside the basis span");
        }

    // Jacobi residual must vanish exactly
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    Rational acc(0);
                    for (int e = 0; e < m; ++e) {
                        acc += sc.C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                                   [static_cast<std::size_t>(e)] *
                               sc.C[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)]
                                   [static_cast<std::size_t>(d)];
                        acc += sc.C[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]
                                   [static_cast<std::size_t>(e)] *
                               sc.C[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)]
                                   [static_cast<std::size_t>(d)];
                        acc += sc.C[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)]
                                   [static_cast<std::size_t>(e)] *
                               sc.C[static_cast<std::size_t>(e)][static_cast<std::size_t>(b)]
                                   [static_cast<std::size_t>(d)];
                    }
                    if (acc != 0) throw NotALieBasis("Jacobi identity fails for basis");
                }

    sc.metric.assign(static_cast<std::size_t>(m),
                     std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const RatFunc tr = (basis.basis[static_cast<std::size_t>(a)] *
                                basis.basis[static_cast<std::size_t>(b)])
                                   .trace();
            sc.metric[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                tr.is_zero() ? Rational(0) : tr.constant_value();
        }
    return sc;
}

CasimirTensor casimir(const LieBasisSpec& basis) {
    const int m = basis.size();
    const StructureConstants sc = structure_constants(basis);
    MatrixRF kappa(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            kappa.at(a, b) = RatFunc::constant(
                {}, sc.metric[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    if (kappa.det().is_zero()) throw MalformedInput("degenerate trace metric");
    const MatrixRF kinv = kappa.inverse();

    SpectralTensor pi(basis.N, {1, 2});
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (kinv.at(a, b).is_zero()) continue;
            const MatrixRF prod = kron(basis.basis[static_cast<std::size_t>(a)],
                                       basis.basis[static_cast<std::size_t>(b)]) *
                                  kinv.at(a, b);
            pi.matrix() += prod;
        }
    return {pi};
}

PiIdentityReport pi_identity_check(const LieBasisSpec& basis) {
    const StructureConstants sc = structure_constants(basis);
    const CasimirTensor cas = casimir(basis);
    const int m = basis.size();
    const int N = basis.N;
    PiIdentityReport rep;
    rep.pass = true;
    const MatrixRF id = MatrixRF::identity(N);

    MatrixRF kappa(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            kappa.at(a, b) = RatFunc::constant(
                {}, sc.metric[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    const MatrixRF kinv = kappa.inverse();

    // invariant all-lower tensor C_abc = tr([t_a,t_b] t_c); the identity
    // C_bca t_a (x) t_b acquires a kappa^{-1} on each free index when the
    // basis is not orthonormal
    auto c_lower = [&](int a, int b, int c) {
        Rational acc(0);
        for (int e = 0; e < m; ++e)
            acc += sc.C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                       [static_cast<std::size_t>(e)] *
                   sc.metric[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)];
        return acc;
    };

    for (int c = 0; c < m; ++c) {
        MatrixRF rhs(N * N);
        for (int b = 0; b < m; ++b)
            for (int a = 0; a < m; ++a) {
                RatFunc coeff;
                for (int bp = 0; bp < m; ++bp)
                    for (int ap = 0; ap < m; ++ap) {
                        const Rational cl = c_lower(bp, c, ap);
                        if (cl == 0) continue;
                        coeff += kinv.at(b, bp) * kinv.at(a, ap) * cl;
                    }
                if (coeff.is_zero()) continue;
                rhs += kron(basis.basis[static_cast<std::size_t>(a)],
                            basis.basis[static_cast<std::size_t>(b)]) *
                       coeff;
            }
        const MatrixRF lhs1 =
            commutator(cas.pi.matrix(), kron(basis.basis[static_cast<std::size_t>(c)], id));
        const MatrixRF lhs2 =
            commutator(cas.pi.matrix(), kron(id, basis.basis[static_cast<std::size_t>(c)]));
        SpectralTensor r1(N, {1, 2}, lhs1 - rhs);
        SpectralTensor r2(N, {1, 2}, lhs2 + rhs);
        if (!r1.is_zero() || !r2.is_zero()) rep.pass = false;
        rep.left_residual.push_back(std::move(r1));
        rep.right_residual.push_back(std::move(r2));
    }
    return rep;
}

std::vector<std::vector<RatFunc>> expand_in_tensor_basis(const LieBasisSpec& basis,
                                                         const SpectralTensor& m) {
    if (m.legs().size() != 2 || m.base_dim() != basis.N)
        throw ShapeError("expand_in_tensor_basis expects a 2-leg tensor over the basis rep");
    const int nb = basis.size();
    const int N = basis.N;
    const MatrixRF gram = frobenius_gram(basis.basis);
    const MatrixRF gram_inv = gram.inverse();

    // y[c][d] = <t_c (x) t_d, M> under the Frobenius pairing
    std::vector<std::vector<RatFunc>> y(static_cast<std::size_t>(nb),
                                        std::vector<RatFunc>(static_cast<std::size_t>(nb)));
    for (int c = 0; c < nb; ++c)
        for (int d = 0; d < nb; ++d) {
            RatFunc acc;
            const auto& tc = basis.basis[static_cast<std::size_t>(c)];
            const auto& td = basis.basis[static_cast<std::size_t>(d)];
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    if (tc.at(i, j).is_zero()) continue;
                    for (int k = 0; k < N; ++k)
                        for (int l = 0; l < N; ++l) {
                            if (td.at(k, l).is_zero()) continue;
                            acc += tc.at(i, j) * td.at(k, l) * m.at(i * N + k, j * N + l);
                        }
                }
            y[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] = acc;
        }

    std::vector<std::vector<RatFunc>> coeff(static_cast<std::size_t>(nb),
                                            std::vector<RatFunc>(static_cast<std::size_t>(nb)));
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b) {
            RatFunc acc;
            for (int c = 0; c < nb; ++c)
                for (int d = 0; d < nb; ++d)
                    acc += gram_inv.at(a, c) * gram_inv.at(b, d) *
                           y[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
            coeff[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = acc;
        }

    // exact residual check
    MatrixRF resid = m.matrix();
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b) {
            if (coeff[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].is_zero()) continue;
            resid -= kron(basis.basis[static_cast<std::size_t>(a)],
                          basis.basis[static_cast<std::size_t>(b)]) *
                     coeff[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }
    if (!resid.is_zero())
        throw Unrepresentable("matrix is not in the span of t_a (x) t_b");
    return coeff;
}

}  // namespace blax
