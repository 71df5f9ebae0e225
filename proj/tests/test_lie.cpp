#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blax/errors.hpp"
#include "blax/lie.hpp"

using namespace blax;

namespace {

Rational eps(int a, int b, int c) {
    if (a == b || b == c || a == c) return Rational(0);
    // parity of the permutation (a,b,c) of (0,1,2)
    const int p = (b - a + 3) % 3;
    return p == 1 ? Rational(1) : Rational(-1);
}

}  // namespace

TEST_CASE("su(2) adjoint basis has eps_abc structure constants") {
    const auto sc = structure_constants(LieBasisSpec::su2_adjoint());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                CHECK(sc.C[a][b][c] == eps(a, b, c));
    CHECK(sc.fully_antisymmetric());
}

TEST_CASE("gl(2) elementary basis structure constants") {
    const auto spec = LieBasisSpec::gl(2);
    const auto sc = structure_constants(spec);
    // oracle: [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb, index (i,j) -> 2i+j
    auto idx = [](int i, int j) { return 2 * i + j; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    std::vector<Rational> expect(4, Rational(0));
                    if (b == c) expect[idx(a, d)] += 1;
                    if (d == a) expect[idx(c, b)] -= 1;
                    for (int e = 0; e < 4; ++e)
                        CHECK(sc.C[idx(a, b)][idx(c, d)][e] == expect[e]);
                }
}

TEST_CASE("abelian diagonal basis has zero structure constants") {
    const auto sc = structure_constants(LieBasisSpec::abelian_diagonal(3));
    for (const auto& plane : sc.C)
        for (const auto& row : plane)
            for (const auto& c : row) CHECK(c == 0);
}

TEST_CASE("metric is symmetric; gl(N) metric is kappa_(ab),(cd) = delta_ad delta_bc") {
    const auto sc = structure_constants(LieBasisSpec::gl(3));
    auto idx = [](int i, int j) { return 3 * i + j; };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    const Rational expect = (a == d && b == c) ? Rational(1) : Rational(0);
                    CHECK(sc.metric[idx(a, b)][idx(c, d)] == expect);
                    CHECK(sc.metric[idx(a, b)][idx(c, d)] == sc.metric[idx(c, d)][idx(a, b)]);
                }
}

TEST_CASE("casimir of gl(N) elementary basis is the permutation operator") {
    for (int N : {2, 3}) {
        const auto cas = casimir(LieBasisSpec::gl(N));
        CHECK(cas.pi == SpectralTensor::permutation(N));
        // oracle: direct sum E_ab (x) E_ba
        MatrixRF oracle(N * N);
        const auto spec = LieBasisSpec::gl(N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                oracle += kron(spec.basis[i * N + j], spec.basis[j * N + i]);
        CHECK(cas.pi.matrix() == oracle);
    }
}

TEST_CASE("casimir of the rational su(2) basis is P - I/2") {
    const auto cas = casimir(LieBasisSpec::su2());
    const auto p = SpectralTensor::permutation(2);
    const auto id = SpectralTensor::identity(2, {1, 2});
    CHECK(cas.pi == p - id * make_rational(1, 2));
    // leg-exchange symmetry P Pi P = Pi
    CHECK(p * cas.pi * p == cas.pi);
}

TEST_CASE("pi identity holds for closed bases with nondegenerate metric") {
    CHECK(pi_identity_check(LieBasisSpec::gl(2)).pass);
    CHECK(pi_identity_check(LieBasisSpec::su2()).pass);
    CHECK(pi_identity_check(LieBasisSpec::abelian_diagonal(2)).pass);

    // the identity is covariant under basis changes, so rescaling a
    // generator cannot break it; a nilpotent basis with degenerate trace
    // metric is rejected before a bogus Pi can be formed
    LieBasisSpec nil;
    nil.name = "nilpotent";
    nil.N = 2;
    MatrixRF e01(2);
    e01.at(0, 1) = RatFunc::constant({}, Rational(1));
    nil.basis = {e01};
    CHECK_THROWS_AS(pi_identity_check(nil), MalformedInput);
}

TEST_CASE("pi commutes with the diagonal action: [Pi, t_a x I + I x t_a] = 0") {
    for (const auto& spec : {LieBasisSpec::gl(2), LieBasisSpec::su2()}) {
        const auto cas = casimir(spec);
        const auto id = MatrixRF::identity(spec.N);
        for (const auto& t : spec.basis) {
            const MatrixRF diag = kron(t, id) + kron(id, t);
            CHECK(commutator(cas.pi.matrix(), diag).is_zero());
        }
    }
}

TEST_CASE("non-closed basis is rejected") {
    LieBasisSpec bad;
    bad.name = "bad";
    bad.N = 2;
    MatrixRF e01(2), e10(2);
    e01.at(0, 1) = RatFunc::constant({}, Rational(1));
    e10.at(1, 0) = RatFunc::constant({}, Rational(1));
    bad.basis = {e01, e10};  // [e01, e10] = diag(1,-1) outside the span
    CHECK_THROWS_AS(structure_constants(bad), NotALieBasis);
}

TEST_CASE("expand_in_tensor_basis round-trips the permutation operator") {
    const auto spec = LieBasisSpec::gl(2);
    const auto coeff = expand_in_tensor_basis(spec, SpectralTensor::permutation(2));
    // P = sum E_ab (x) E_ba: coefficient 1 exactly when b-index pairs swap
    auto idx = [](int i, int j) { return 2 * i + j; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    const Rational expect = (a == d && b == c) ? Rational(1) : Rational(0);
                    CHECK(coeff[idx(a, b)][idx(c, d)] ==
                          RatFunc::constant({}, expect));
                }
}

TEST_CASE("expand_in_tensor_basis rejects matrices outside the span") {
    // su2 tensor basis spans only traceless (x) traceless: identity fails
    CHECK_THROWS_AS(expand_in_tensor_basis(LieBasisSpec::su2(),
                                           SpectralTensor::identity(2, {1, 2})),
                    Unrepresentable);
}
