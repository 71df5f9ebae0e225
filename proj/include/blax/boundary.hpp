#pragma once

#include "blax/field_algebra.hpp"

namespace blax {

// Conventions used throughout this layer: the first tensor leg carries the
// spectral variable "lambda" and position "x", the second "mu" and "y", the
// third (CYBE only) "eta".  Lax-type inputs are N x N matrices of fields in
// (lambda, x); second copies are produced by substitution and point renaming.

// Induced action of sigma on a c-number tensor: per acted leg, apply the
// partial transpose when sigma transposes, negate that leg's spectral
// variable, and multiply by sigma's scalar sign.
SpectralTensor sigma_on_tensor(const SpectralTensor& a, const AntiAutomorphism& sigma,
                               const std::vector<int>& legs,
                               const std::vector<std::string>& leg_vars);

struct CybeResult {
    SpectralTensor residual;  // 3 legs, arguments (lambda, mu, eta)
    bool r_skew = false;
    bool s_symmetric = false;
    bool pass = false;
};

// Consistency (classical Yang-Baxter type) equation for the pair (r, s):
//   [(r+s)_13(l,e), (r-s)_12(l,m)] + [(r+s)_23(m,e), (r+s)_12(l,m)]
//     + [(r+s)_23(m,e), (r+s)_13(l,e)] = 0.
CybeResult cybe_residual(const SpectralTensor& r, const SpectralTensor& s);

// T = L k + k L^sigma.
MatrixFieldExpr build_boundary_field(const MatrixFieldExpr& L, const MatrixRF& k,
                                     const AntiAutomorphism& sigma);

// A_12 k_1 k_2 + k_1 k_2 A^{s1 s2} + k_1 A^{s1} k_2 + k_2 A^{s2} k_1, with
// A in {r, s}; zero iff the boundary matrix is admissible for this A.
SpectralTensor constraint_residual(const MatrixRF& k, const SpectralTensor& a,
                                   const AntiAutomorphism& sigma);

struct DerivedRMatrices {
    SpectralTensor r_minus, r_minus_tilde, r_plus, r_plus_tilde;
};

DerivedRMatrices derived_r(const SpectralTensor& r, const SpectralTensor& s,
                           const MatrixRF& k, const AntiAutomorphism& sigma);

// The two equivalent forms of the constraints:
//   k_1^{-1} r^- - r~^- k_1^{-1}  and  k_2^{-1} r^+ - r~^+ k_2^{-1}.
std::pair<SpectralTensor, SpectralTensor> footnote_residuals(const DerivedRMatrices& d,
                                                             const MatrixRF& k);

struct ClosureReport {
    MatrixFieldExpr raw;                 // {T_1(lambda,x), T_2(mu,y)}
    SpectralTensor delta_prime_coeff;    // c-number coefficient of delta'(x-y)
    bool delta_prime_cnumber = false;    // no field rides the delta' part
    bool delta_prime_matches_fin = false;  // equals -2 * constraint residual for s
    MatrixFieldExpr residual;            // raw minus the closed right side
    bool constraints_hold = false;       // (re1) for both r and s
    bool pass = false;
};

ClosureReport closure_check(const MatrixFieldExpr& L, const MatrixRF& k,
                            const AntiAutomorphism& sigma, const BracketTable& table,
                            const SpectralTensor& r, const SpectralTensor& s);

// {tr L^Npow(lambda,x), tr L^Mpow(mu,y)} with L = k^{-1} T; canonically zero
// when the closure holds.
FieldExpr trace_commute(const MatrixFieldExpr& L, const MatrixRF& k,
                        const AntiAutomorphism& sigma, const BracketTable& table,
                        int npow, int mpow);

struct LaxPartner {
    MatrixFieldExpr a_n;  // N x N, in (lambda, mu, x)
    int order = 0;
};

// A_n = n tr_a( L_a^{n-1} k_a^{-1} r~^+_ab ).
LaxPartner lax_partner(const MatrixFieldExpr& L, const MatrixRF& k,
                       const AntiAutomorphism& sigma, const BracketTable& table,
                       const SpectralTensor& r, const SpectralTensor& s, int n);

// {tr_a L_a^n(lambda,x), L_b(mu,y)} - [A_n(lambda,mu,x), L_b(mu,y)] delta(x-y).
MatrixFieldExpr zero_curvature_residual(const LaxPartner& partner,
                                        const MatrixFieldExpr& L, const MatrixRF& k,
                                        const AntiAutomorphism& sigma,
                                        const BracketTable& table);

}  // namespace blax
