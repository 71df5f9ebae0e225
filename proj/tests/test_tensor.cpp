#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "blax/errors.hpp"
#include "blax/tensor.hpp"

using namespace blax;

namespace {

RatFunc q(long n, long d = 1) { return RatFunc::constant({}, make_rational(n, d)); }

MatrixRF random_matrix(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    MatrixRF m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = q(coeff(rng));
    return m;
}

SpectralTensor random_two_leg(std::mt19937_64& rng, int n) {
    return {n, {1, 2}, random_matrix(rng, n * n)};
}

}  // namespace

TEST_CASE("permutation operator: definition, involution, trace") {
    const auto p2 = SpectralTensor::permutation(2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool expect = (i == 0 && j == 0) || (i == 1 && j == 2) ||
                                (i == 2 && j == 1) || (i == 3 && j == 3);
            CHECK(p2.at(i, j) == (expect ? q(1) : q(0)));
        }
    const auto p3 = SpectralTensor::permutation(3);
    CHECK(p3 * p3 == SpectralTensor::identity(3, {1, 2}));
    CHECK(p3.full_trace() == q(3));  // one fixed point per diagonal pair
}

TEST_CASE("embed matches the brute-force Kronecker oracle") {
    const auto p = SpectralTensor::permutation(2);
    const auto embedded = p.embed({1, 2, 3});
    const MatrixRF oracle = kron(p.matrix(), MatrixRF::identity(2));
    CHECK(embedded.matrix() == oracle);

    // placement on legs (2,3): I (x) P
    SpectralTensor p23(2, {2, 3}, p.matrix());
    CHECK(p23.embed({1, 2, 3}).matrix() == kron(MatrixRF::identity(2), p.matrix()));

    // placement on legs (1,3): middle leg untouched
    std::mt19937_64 rng(5);
    const auto t = random_two_leg(rng, 2);
    SpectralTensor t13(2, {1, 3}, t.matrix());
    const auto e13 = t13.embed({1, 2, 3});
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int i3 = 0; i3 < 2; ++i3)
                for (int j1 = 0; j1 < 2; ++j1)
                    for (int j2 = 0; j2 < 2; ++j2)
                        for (int j3 = 0; j3 < 2; ++j3) {
                            const RatFunc expect = i2 == j2
                                ? t.at(i1 * 2 + i3, j1 * 2 + j3)
                                : q(0);
                            CHECK(e13.at(i1 * 4 + i2 * 2 + i3, j1 * 4 + j2 * 2 + j3) == expect);
                        }
}

TEST_CASE("identity embeds to identity") {
    const auto id = SpectralTensor::identity(3, {1, 2});
    CHECK(id.embed({1, 2, 3}) == SpectralTensor::identity(3, {1, 2, 3}));
}

TEST_CASE("embed then partial-trace over the absent leg gives N x original") {
    std::mt19937_64 rng(9);
    const auto t = random_two_leg(rng, 2);
    const auto traced = t.embed({1, 2, 3}).partial_trace(3);
    CHECK(traced == t * Rational(2));
}

TEST_CASE("embed applies spectral relabeling to the entries") {
    const VarList LM{"lambda", "mu"};
    SpectralTensor t(2, {1, 2}, LM);
    t.at(0, 0) = RatFunc::variable(LM, "lambda") - RatFunc::variable(LM, "mu");
    const auto e = t.embed({1, 2, 3}, {{"mu", RatFunc::variable({"eta"}, "eta")}});
    CHECK(e.at(0, 0) == RatFunc::variable(LM, "lambda") - RatFunc::variable({"eta"}, "eta"));
}

TEST_CASE("embed rejects leg collisions") {
    const auto p = SpectralTensor::permutation(2);
    CHECK_THROWS_AS(p.embed({2, 3}), MalformedInput);
}

TEST_CASE("partial transpose of the permutation operator is sum |ii><jj|") {
    const int N = 2;
    const auto pt = SpectralTensor::permutation(N).partial_transpose(1);
    for (int i = 0; i < N; ++i)
        for (int ip = 0; ip < N; ++ip)
            for (int j = 0; j < N; ++j)
                for (int jp = 0; jp < N; ++jp) {
                    const bool expect = (i == ip) && (j == jp);
                    CHECK(pt.at(i * N + ip, j * N + jp) == (expect ? q(1) : q(0)));
                }
}

TEST_CASE("double partial transpose is the identity map") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        const auto t = random_two_leg(rng, 3);
        CHECK(t.partial_transpose(1).partial_transpose(1) == t);
        CHECK(t.partial_transpose(2).partial_transpose(2) == t);
    }
}

TEST_CASE("partial trace of a product state and trace linearity") {
    std::mt19937_64 rng(17);
    const auto a = random_matrix(rng, 2);
    const auto b = random_matrix(rng, 2);
    SpectralTensor ab(2, {1, 2}, kron(a, b));
    const auto tr1 = ab.partial_trace(1);
    CHECK(tr1.matrix() == b * a.trace());
    const auto tr2 = ab.partial_trace(2);
    CHECK(tr2.matrix() == a * b.trace());
    // tr1 tr2 = full trace
    CHECK(ab.partial_trace(1).matrix().trace() == ab.full_trace());
}

TEST_CASE("trace of a commutator vanishes; [Pi,Pi]=0") {
    std::mt19937_64 rng(21);
    const auto t = random_two_leg(rng, 2);
    const auto u = random_two_leg(rng, 2);
    CHECK(commutator(t, u).full_trace().is_zero());
    const auto p = SpectralTensor::permutation(3);
    CHECK(commutator(p, p).is_zero());
}

TEST_CASE("embed respects multiplication for same-leg operands") {
    std::mt19937_64 rng(29);
    const auto a = random_two_leg(rng, 2);
    const auto b = random_two_leg(rng, 2);
    CHECK((a * b).embed({1, 2, 3}) == a.embed({1, 2, 3}) * b.embed({1, 2, 3}));
}

TEST_CASE("exact inverse and determinant") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 4; ++trial) {
        MatrixRF m = random_matrix(rng, 3);
        if (m.det().is_zero()) continue;
        CHECK(m * m.inverse() == MatrixRF::identity(3));
        CHECK(m.inverse() * m == MatrixRF::identity(3));
    }
    MatrixRF sing(2);
    sing.at(0, 0) = q(1);
    sing.at(1, 0) = q(2);
    CHECK(sing.det().is_zero());
    CHECK_THROWS_AS(sing.inverse(), MalformedInput);
}
