#pragma once

#include "blax/boundary.hpp"

namespace blax {

// The Principal Chiral Model data on a chosen Lie basis:
//   r = (1/(2(l-m))) (m^2/(m^2-1) + l^2/(l^2-1)) Pi,
//   s = -((l+m)/(2(l^2-1)(m^2-1))) Pi,
//   L = (l j0 + j1)/(l^2-1),
// together with the current bracket table
//   {j0 (x) j0} = delta [Pi, I (x) j0(x)],
//   {j0 (x) j1} = delta [Pi, I (x) j1(x)] + Pi delta'(x-y),
//   {j1 (x) j1} = 0.
struct PCMData {
    LieBasisSpec algebra;
    SpectralTensor pi;     // two legs, constant
    SpectralTensor r, s;   // legs {1,2}, arguments (lambda, mu)
    MatrixFieldExpr L;     // (lambda, x)
    BracketTable table;

    bool r_skew = false;
    bool s_symmetric = false;
    bool cybe_ok = false;
    bool fundam_ok = false;  // {L_1, L_2} reproduces the fundamental bracket
};

PCMData build_pcm(const LieBasisSpec& algebra, bool verify = true);

struct PCMSpec {
    AntiAutomorphism sigma;
    MatrixRF k;  // constant boundary matrix
};

struct BoundaryCurrentReport {
    bool pass = false;
    std::vector<std::string> failed_relations;
};

// The closed boundary-current relations: {j0b (x) j_ab} = [r, I (x) j_ab(x)] delta
// for a in {0,1} with r = Pi k_1 + k_1 Pi (reflection) or
// r~ = Pi k~_1 - k~_1 Pi^{t_1} (twisted), plus {j1b (x) j1b} = 0.
BoundaryCurrentReport boundary_current_closure(const PCMData& pcm, const PCMSpec& spec);

// Reflection: k^2 - (tr k^2 / N) I on one leg; twisted: the exchange residual
// k~_1 Pi^{t_1} k~_2 - k~_2 Pi^{t_1} k~_1 on two legs.
SpectralTensor restr_residual(const PCMData& pcm, const MatrixRF& k,
                              const AntiAutomorphism& sigma);

// All 2^N diagonal +-1 matrices.
std::vector<MatrixRF> restr_enumerate_diagonal(int n);

struct ChargeDensitySeries {
    // coeffs[k] is the raw Laurent coefficient of lambda^{-(k+1)} in tr L^2,
    // for k = 1..order (index 0 unused).
    std::vector<FieldExpr> coeffs;
};

// Laurent expansion of tr L^2 with L = k^{-1} L(lambda,x) k - L(-lambda,x);
// requires the reflection automorphism (the twisted series is computed the
// same way by the caller via trace of boundary_lax powers).
ChargeDensitySeries charge_densities(const PCMData& pcm, const MatrixRF& k, int order);

// A_2 = 2 tr_a( L_a(lambda,x) k_a^{-1} r~^+_ab(lambda,mu) ).
LaxPartner pcm_lax_partner(const PCMData& pcm, const PCMSpec& spec);

}  // namespace blax
