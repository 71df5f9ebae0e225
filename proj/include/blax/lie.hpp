#pragma once

#include <string>
#include <vector>

#include "blax/tensor.hpp"

namespace blax {

// Lie algebra data in the defining representation: a list of constant basis
// matrices, assumed linearly independent and closed under commutation.
struct LieBasisSpec {
    std::string name;
    int N = 0;                     // matrix dimension of the representation
    std::vector<MatrixRF> basis;   // constant entries

    int size() const { return static_cast<int>(basis.size()); }

    // gl(N) with the elementary-matrix basis E_ab, ordered row-major; with
    // this basis the Casimir tensor equals the permutation operator exactly.
    static LieBasisSpec gl(int N);
    // Real rational su(2)-type bases.  "su2" is the defining 2x2 basis
    // {sigma3, sigma1, i*sigma2} with diagonal indefinite metric;
    // "su2_adjoint" is the 3x3 antisymmetric basis with [t_a,t_b] = eps_abc t_c.
    static LieBasisSpec su2();
    static LieBasisSpec su2_adjoint();
    static LieBasisSpec abelian_diagonal(int N);  // diagonal E_aa only
};

// C stored in mixed position: [t_a, t_b] = sum_c C[a][b][c] t_c, together
// with the trace metric kappa_ab = tr(t_a t_b).
struct StructureConstants {
    std::vector<std::vector<std::vector<Rational>>> C;
    std::vector<std::vector<Rational>> metric;

    bool fully_antisymmetric() const;  // meaningful when metric is a multiple of I
};

struct CasimirTensor {
    SpectralTensor pi;  // 2 legs, constant entries
};

// Solves [t_a, t_b] = sum_c C_abc t_c exactly and verifies the Jacobi
// identity; throws NotALieBasis when the basis does not close.
StructureConstants structure_constants(const LieBasisSpec& basis);

// Pi = sum_ab (kappa^{-1})_ab t_a (x) t_b; throws on degenerate metric.
CasimirTensor casimir(const LieBasisSpec& basis);

// Residuals of [Pi, t_c (x) I] - C_bca t_a (x) t_b and
// [Pi, I (x) t_c] + C_bca t_a (x) t_b, for each basis index c.
struct PiIdentityReport {
    std::vector<SpectralTensor> left_residual;
    std::vector<SpectralTensor> right_residual;
    bool pass = false;
};

PiIdentityReport pi_identity_check(const LieBasisSpec& basis);

// Expands a constant N^2 x N^2 matrix in the t_a (x) t_b basis:
// M = sum_ab coeff[a][b] t_a (x) t_b; throws Unrepresentable when M is not
// in the span (possible for su-type bases).
std::vector<std::vector<RatFunc>> expand_in_tensor_basis(const LieBasisSpec& basis,
                                                         const SpectralTensor& m);

}  // namespace blax
