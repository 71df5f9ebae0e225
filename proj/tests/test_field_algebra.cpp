#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "blax/errors.hpp"
#include "blax/field_algebra.hpp"

using namespace blax;

namespace {

RatFunc q(long n, long d = 1) { return RatFunc::constant({}, make_rational(n, d)); }

GeneratorSymbol g(const std::string& fam, int color, const std::string& point, int deriv = 0) {
    return {fam, color, point, deriv};
}

FieldExpr gen(const std::string& fam, int color, const std::string& point) {
    return FieldExpr::generator(g(fam, color, point));
}

// The PCM-style current table on gl(2): {j0 (x) j0} = delta [Pi, I (x) j0(x)],
// {j0 (x) j1} = delta [Pi, I (x) j1(x)] + Pi delta', {j1 (x) j1} = 0.
BracketTable current_table(const LieBasisSpec& basis) {
    const auto pi = MatrixFieldExpr::from_constant(casimir(basis).pi.matrix());
    const FieldExpr dxy = FieldExpr::distribution({0, "x", "y"});
    const FieldExpr dpxy = FieldExpr::distribution({1, "x", "y"});

    BracketTable table;
    const auto r00 =
        commutator(pi, embed_leg2(current_matrix(basis, "j0", "x"))) * dxy;
    component_brackets_from_matrix_rule(table, r00, basis, "j0", "x", "j0", "y");
    const auto r01 =
        commutator(pi, embed_leg2(current_matrix(basis, "j1", "x"))) * dxy + pi * dpxy;
    component_brackets_from_matrix_rule(table, r01, basis, "j0", "x", "j1", "y");
    component_brackets_from_matrix_rule(table, MatrixFieldExpr(basis.N * basis.N), basis,
                                        "j1", "x", "j1", "y");
    return table;
}

FieldExpr random_expr(std::mt19937_64& rng, const std::string& point) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> color(0, 3);
    std::uniform_int_distribution<int> fam(0, 1);
    std::uniform_int_distribution<int> deg(1, 2);
    std::vector<FieldTerm> raw;
    for (int t = 0; t < 3; ++t) {
        FieldTerm term;
        term.coeff = q(coeff(rng));
        const int d = deg(rng);
        for (int k = 0; k < d; ++k)
            term.gens.push_back(g(fam(rng) ? "j1" : "j0", color(rng), point));
        raw.push_back(std::move(term));
    }
    return FieldExpr::from_terms(std::move(raw));
}

}  // namespace

TEST_CASE("canonicalization aligns field points to the first distribution point") {
    const FieldExpr lhs = FieldExpr::from_terms(
        {{q(1), {g("j0", 0, "y")}, {{0, "x", "y"}}}});
    const FieldExpr expect = FieldExpr::from_terms(
        {{q(1), {g("j0", 0, "x")}, {{0, "x", "y"}}}});
    CHECK(lhs == expect);
}

TEST_CASE("canonicalization expands fields riding a delta-prime") {
    const FieldExpr lhs = FieldExpr::from_terms(
        {{q(1), {g("j0", 0, "y")}, {{1, "x", "y"}}}});
    const FieldExpr expect = FieldExpr::from_terms(
        {{q(1), {g("j0", 0, "x")}, {{1, "x", "y"}}},
         {q(-1), {g("j0", 0, "x", 1)}, {{0, "x", "y"}}}});
    CHECK(lhs == expect);

    // oddness: delta'(y-x) = -delta'(x-y)
    CHECK(FieldExpr::distribution({1, "y", "x"}) == -FieldExpr::distribution({1, "x", "y"}));
    CHECK(FieldExpr::distribution({0, "y", "x"}) == FieldExpr::distribution({0, "x", "y"}));
}

TEST_CASE("product rule when two fields ride the delta-prime") {
    const FieldExpr lhs = FieldExpr::from_terms(
        {{q(1), {g("j0", 0, "y"), g("j0", 1, "y")}, {{1, "x", "y"}}}});
    const FieldExpr expect = FieldExpr::from_terms(
        {{q(1), {g("j0", 0, "x"), g("j0", 1, "x")}, {{1, "x", "y"}}},
         {q(-1), {g("j0", 0, "x", 1), g("j0", 1, "x")}, {{0, "x", "y"}}},
         {q(-1), {g("j0", 0, "x"), g("j0", 1, "x", 1)}, {{0, "x", "y"}}}});
    CHECK(lhs == expect);
}

TEST_CASE("canonicalization is idempotent on random expressions") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> color(0, 3);
    std::uniform_int_distribution<int> pick(0, 2);
    const std::vector<std::string> pts{"x", "y", "z"};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FieldTerm> raw;
        for (int t = 0; t < 4; ++t) {
            FieldTerm term;
            term.coeff = q(coeff(rng));
            term.gens.push_back(g("j0", color(rng), pts[static_cast<std::size_t>(pick(rng))]));
            const int a = pick(rng), b = pick(rng);
            if (a != b) term.dist.push_back({pick(rng) == 0 ? 1 : 0, pts[static_cast<std::size_t>(a)],
                                            pts[static_cast<std::size_t>(b)]});
            raw.push_back(std::move(term));
        }
        const FieldExpr once = FieldExpr::from_terms(raw);
        const FieldExpr twice = FieldExpr::from_terms(
            std::vector<FieldTerm>(once.terms().begin(), once.terms().end()));
        CHECK(once == twice);
    }
}

TEST_CASE("component brackets match the direct structure-constant contraction") {
    const auto basis = LieBasisSpec::gl(2);
    const auto table = current_table(basis);
    const auto sc = structure_constants(basis);
    const int m = basis.size();

    MatrixRF kappa(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            kappa.at(a, b) = RatFunc::constant(
                {}, sc.metric[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    const MatrixRF kinv = kappa.inverse();

    // oracle: {g^a(x), g^b(y)} = sum_{d,e} (kappa^-1)_{ad} C[d][e][b] g^e(x) delta(x-y)
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            FieldExpr expect;
            for (int d = 0; d < m; ++d)
                for (int e = 0; e < m; ++e) {
                    const RatFunc c =
                        kinv.at(a, d) *
                        RatFunc::constant({}, sc.C[static_cast<std::size_t>(d)]
                                                  [static_cast<std::size_t>(e)]
                                                  [static_cast<std::size_t>(b)]);
                    if (c.is_zero()) continue;
                    expect += gen("j0", e, "x") * c;
                }
            expect *= FieldExpr::distribution({0, "x", "y"});
            CHECK(table.bracket(g("j0", a, "x"), g("j0", b, "y")) == expect);
        }
}

TEST_CASE("delta-prime part of the matrix rule decomposes to 2 kappa^-1") {
    const auto basis = LieBasisSpec::gl(2);
    const auto pi = MatrixFieldExpr::from_constant(casimir(basis).pi.matrix());
    BracketTable table;
    component_brackets_from_matrix_rule(
        table, pi * q(2) * FieldExpr::distribution({1, "x", "y"}), basis, "g", "x", "h", "y");

    const auto sc = structure_constants(basis);
    const int m = basis.size();
    MatrixRF kappa(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            kappa.at(a, b) = RatFunc::constant(
                {}, sc.metric[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    const MatrixRF kinv = kappa.inverse();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const FieldExpr expect =
                FieldExpr::distribution({1, "x", "y"}) * (kinv.at(a, b) * q(2));
            CHECK(table.bracket(g("g", a, "x"), g("h", b, "y")) == expect);
        }
}

TEST_CASE("matrix rule outside the tensor span is rejected") {
    const auto basis = LieBasisSpec::su2();
    BracketTable table;
    // identity (x) identity is outside span(t_a (x) t_b) for traceless t_a
    const auto rule = MatrixFieldExpr::from_constant(MatrixRF::identity(4));
    CHECK_THROWS_AS(component_brackets_from_matrix_rule(table, rule, basis, "g", "x", "h", "y"),
                    Unrepresentable);
}

TEST_CASE("poisson bracket is bilinear, Leibniz, and kills c-numbers") {
    const auto basis = LieBasisSpec::gl(2);
    const auto table = current_table(basis);

    CHECK(poisson_bracket(FieldExpr::scalar(q(7)), gen("j0", 1, "y"), table).is_zero());

    const FieldExpr a = gen("j0", 1, "x");
    const FieldExpr b = gen("j0", 2, "y");
    CHECK(poisson_bracket(a * a, b, table) ==
          poisson_bracket(a, b, table) * a * q(2));

    const FieldExpr sum = poisson_bracket(a + b.rename_points({{"y", "x"}}), b, table);
    CHECK(sum == poisson_bracket(a, b, table) +
                     poisson_bracket(b.rename_points({{"y", "x"}}), b, table));
}

TEST_CASE("poisson bracket is antisymmetric on random expressions") {
    const auto basis = LieBasisSpec::gl(2);
    const auto table = current_table(basis);
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const FieldExpr a = random_expr(rng, "x");
        const FieldExpr b = random_expr(rng, "y");
        const FieldExpr lhs = poisson_bracket(a, b, table);
        const FieldExpr rhs = poisson_bracket(b, a, table);
        CHECK((lhs + rhs).is_zero());
    }
}

TEST_CASE("current table satisfies the Jacobi identity on all generator triples") {
    const auto basis = LieBasisSpec::gl(2);
    const auto table = current_table(basis);
    const std::vector<std::string> fams{"j0", "j1"};
    for (const auto& f1 : fams)
        for (const auto& f2 : fams)
            for (const auto& f3 : fams)
                for (int c1 = 0; c1 < 4; ++c1)
                    for (int c2 = 0; c2 < 4; ++c2)
                        for (int c3 = 0; c3 < 4; ++c3) {
                            const FieldExpr A = gen(f1, c1, "x");
                            const FieldExpr B = gen(f2, c2, "y");
                            const FieldExpr C = gen(f3, c3, "z");
                            FieldExpr cyc =
                                poisson_bracket(A, poisson_bracket(B, C, table), table);
                            cyc += poisson_bracket(B, poisson_bracket(C, A, table), table);
                            cyc += poisson_bracket(C, poisson_bracket(A, B, table), table);
                            REQUIRE(cyc.is_zero());
                        }
}

TEST_CASE("unknown generator pairs raise a missing-rule error") {
    const auto table = current_table(LieBasisSpec::gl(2));
    CHECK_THROWS_AS(poisson_bracket(gen("unknown", 0, "x"), gen("j0", 0, "y"), table),
                    MissingRule);
    const FieldExpr deriv = FieldExpr::generator(g("j0", 0, "x", 1));
    CHECK_THROWS_AS(poisson_bracket(deriv, gen("j0", 0, "y"), table), MissingRule);
}

TEST_CASE("integration: delta collapse, odd delta-prime, integrated generators") {
    // \int dy delta(x-y) j0(x) = j0(x); then \int dx -> integrated generator
    const FieldExpr e = gen("j0", 0, "x") * FieldExpr::distribution({0, "x", "y"});
    const FieldExpr step1 = integrate(e, "y");
    CHECK(step1 == gen("j0", 0, "x"));
    CHECK(integrate(step1, "x") == FieldExpr::generator({"j0", 0, "", 0}));

    // \int\int delta'(x-y) dx dy = 0
    const FieldExpr dp = FieldExpr::distribution({1, "x", "y"});
    CHECK(integrate(integrate(dp, "y"), "x").is_zero());

    // \int dy j0(y) delta'(x-y) = -dj0(x)
    const FieldExpr f = gen("j0", 0, "y") * dp;
    CHECK(integrate(f, "y") == -FieldExpr::generator({"j0", 0, "x", 1}));

    // \int dx of a lone spatial derivative is a dropped boundary term
    CHECK(integrate(FieldExpr::generator({"j0", 0, "x", 1}), "x").is_zero());
}

TEST_CASE("double integral of a bracket equals single integral of its delta part") {
    const auto basis = LieBasisSpec::gl(2);
    const auto table = current_table(basis);
    const FieldExpr br = poisson_bracket(gen("j0", 1, "x"), gen("j1", 2, "y"), table);
    const FieldExpr both = integrate(integrate(br, "y"), "x");
    const FieldExpr delta_only = integrate(integrate(br.filter_dist(0), "y"), "x");
    CHECK(both == delta_only);
}

TEST_CASE("sigma transforms: reflection, twisted, involutivity") {
    const auto basis = LieBasisSpec::gl(2);
    const VarList lv{"lambda"};
    const RatFunc lambda = RatFunc::variable(lv, "lambda");
    const RatFunc prop = (lambda * lambda - RatFunc::constant(lv, Rational(1))).inverse();

    const auto j0 = current_matrix(basis, "j0", "x");
    const auto j1 = current_matrix(basis, "j1", "x");
    const auto L = (j0 * (lambda * prop)) + (j1 * prop);

    const auto refl = sigma_transform(L, AntiAutomorphism::reflection(), "lambda");
    CHECK(refl == (j0 * (lambda * prop)) - (j1 * prop));
    CHECK(sigma_transform(refl, AntiAutomorphism::reflection(), "lambda") == L);

    const auto tw = sigma_transform(L, AntiAutomorphism::twisted(), "lambda");
    CHECK(tw == ((j0.transpose() * (lambda * prop)) - (j1.transpose() * prop)) * q(-1));
    CHECK(sigma_transform(tw, AntiAutomorphism::twisted(), "lambda") == L);

    // twisted sigma on a diagonal field matrix is just lambda -> -lambda
    MatrixFieldExpr diag(2);
    diag.at(0, 0) = gen("j0", 0, "x") * lambda;
    diag.at(1, 1) = gen("j0", 3, "x");
    CHECK(sigma_transform(diag, AntiAutomorphism::twisted(), "lambda") ==
          diag.substitute({{"lambda", -lambda}}));
}

TEST_CASE("nested distribution products reduce to star form") {
    // delta'(x-y) delta(y-z) = delta(x-z) delta'(x-y) + delta'(x-z) delta(x-y)
    const FieldExpr chain = FieldExpr::from_terms({{q(1), {}, {{1, "x", "y"}, {0, "y", "z"}}}});
    const FieldExpr star = FieldExpr::from_terms(
        {{q(1), {}, {{0, "x", "z"}, {1, "x", "y"}}},
         {q(1), {}, {{1, "x", "z"}, {0, "x", "y"}}}});
    CHECK(chain == star);

    // plain-delta substitution merges chained deltas
    const FieldExpr dd = FieldExpr::from_terms(
        {{q(1), {g("j0", 0, "z")}, {{0, "x", "y"}, {0, "y", "z"}}}});
    const FieldExpr dd_star = FieldExpr::from_terms(
        {{q(1), {g("j0", 0, "x")}, {{0, "x", "y"}, {0, "x", "z"}}}});
    CHECK(dd == dd_star);
}
