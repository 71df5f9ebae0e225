#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "blax/lie.hpp"
#include "blax/tensor.hpp"

namespace blax {

// One abstract field component, e.g. j0^a(x) or its spatial derivative.
// An empty point label marks an integrated (x-independent) generator.
struct GeneratorSymbol {
    std::string family;
    int color = 0;
    std::string point;
    int deriv = 0;

    auto key() const { return std::tie(family, color, point, deriv); }
    bool operator<(const GeneratorSymbol& o) const { return key() < o.key(); }
    bool operator==(const GeneratorSymbol& o) const { return key() == o.key(); }
    std::string str() const;
};

// delta^(order)(p - q), order 0 or 1.  Canonical orientation keeps the
// lexicographically smaller point first; delta' is odd under the swap.
struct DistFactor {
    int order = 0;
    std::string p, q;

    auto key() const { return std::tie(order, p, q); }
    bool operator<(const DistFactor& o) const { return key() < o.key(); }
    bool operator==(const DistFactor& o) const { return key() == o.key(); }
    std::string str() const;
};

// coeff * (product of generators) * (product of distribution factors).
// Classical fields commute, so the monomial is a sorted multiset.
struct FieldTerm {
    RatFunc coeff;
    std::vector<GeneratorSymbol> gens;
    std::vector<DistFactor> dist;
};

// Formal sum of FieldTerms, always held canonical: field points aligned to
// the first point of each distribution factor, like terms merged, zero
// coefficients dropped.  Canonical equality is structural equality.
class FieldExpr {
public:
    FieldExpr() = default;

    static FieldExpr scalar(RatFunc c);
    static FieldExpr generator(GeneratorSymbol g);
    static FieldExpr distribution(DistFactor d);
    static FieldExpr from_terms(std::vector<FieldTerm> raw);

    const std::vector<FieldTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldExpr operator-() const;
    FieldExpr& operator+=(const FieldExpr& rhs);
    FieldExpr& operator-=(const FieldExpr& rhs);
    FieldExpr& operator*=(const FieldExpr& rhs);
    friend FieldExpr operator+(FieldExpr a, const FieldExpr& b) { return a += b; }
    friend FieldExpr operator-(FieldExpr a, const FieldExpr& b) { return a -= b; }
    friend FieldExpr operator*(FieldExpr a, const FieldExpr& b) { return a *= b; }
    FieldExpr operator*(const RatFunc& c) const;
    FieldExpr operator*(const Rational& c) const;

    bool operator==(const FieldExpr& rhs) const;
    bool operator!=(const FieldExpr& rhs) const { return !(*this == rhs); }

    // Substitution on the spectral coefficients only (bindings filtered to
    // the variables each coefficient actually carries).
    FieldExpr substitute(const std::map<std::string, RatFunc>& bindings) const;
    // Rename position labels in generators and distribution factors.
    FieldExpr rename_points(const std::map<std::string, std::string>& renames) const;

    // Keep only terms whose distribution list matches the predicate.
    FieldExpr filter_dist(int delta_prime_count) const;

    std::string str() const;

private:
    std::vector<FieldTerm> terms_;  // canonical, sorted by (gens, dist)
};

// Base Poisson brackets between single generators.  Rules are stored as
// FieldExpr templates over the placeholder points P1, P2; antisymmetry fills
// in reversed lookups automatically.
class BracketTable {
public:
    static const std::string P1;  // "@1"
    static const std::string P2;  // "@2"

    void set_rule(const std::string& famA, int a, const std::string& famB, int b,
                  FieldExpr rule);
    // {g(at its point), h(at its point)}; throws MissingRule when no rule
    // covers the pair (including derivative generators, which carry no rules).
    FieldExpr bracket(const GeneratorSymbol& g, const GeneratorSymbol& h) const;

    bool has_rule(const std::string& famA, int a, const std::string& famB, int b) const;

private:
    std::map<std::tuple<std::string, int, std::string, int>, FieldExpr> rules_;
};

// Scalar Poisson bracket via bilinearity and the Leibniz rule; result
// canonicalized.
FieldExpr poisson_bracket(const FieldExpr& a, const FieldExpr& b,
                          const BracketTable& table);

// Formal integration over one position label on [-L, 0] with the interior
// point convention: \int dp delta(p-q) f(p) = f(q), \int dp delta'(q-p) = 0,
// and a final integration (no distribution left) maps generators at p to
// integrated generators (empty point); derivative generators integrate to
// dropped boundary terms.
FieldExpr integrate(const FieldExpr& e, const std::string& point);

// Square matrix of field expressions (dimension N or N^2).
class MatrixFieldExpr {
public:
    MatrixFieldExpr() = default;
    explicit MatrixFieldExpr(int dim);
    static MatrixFieldExpr from_constant(const MatrixRF& m);

    int dim() const { return dim_; }
    FieldExpr& at(int i, int j) { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }
    const FieldExpr& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i * dim_ + j)];
    }

    MatrixFieldExpr operator-() const;
    MatrixFieldExpr& operator+=(const MatrixFieldExpr& rhs);
    MatrixFieldExpr& operator-=(const MatrixFieldExpr& rhs);
    friend MatrixFieldExpr operator+(MatrixFieldExpr a, const MatrixFieldExpr& b) {
        return a += b;
    }
    friend MatrixFieldExpr operator-(MatrixFieldExpr a, const MatrixFieldExpr& b) {
        return a -= b;
    }
    friend MatrixFieldExpr operator*(const MatrixFieldExpr& a, const MatrixFieldExpr& b);
    MatrixFieldExpr operator*(const FieldExpr& c) const;
    MatrixFieldExpr operator*(const RatFunc& c) const;
    MatrixFieldExpr operator*(const Rational& c) const;

    MatrixFieldExpr transpose() const;
    FieldExpr trace() const;
    MatrixFieldExpr substitute(const std::map<std::string, RatFunc>& bindings) const;
    MatrixFieldExpr rename_points(const std::map<std::string, std::string>& renames) const;

    bool is_zero() const;
    bool operator==(const MatrixFieldExpr& rhs) const;
    bool operator!=(const MatrixFieldExpr& rhs) const { return !(*this == rhs); }

private:
    int dim_ = 0;
    std::vector<FieldExpr> entries_;
};

MatrixFieldExpr commutator(const MatrixFieldExpr& a, const MatrixFieldExpr& b);

// Place an N x N matrix of fields on leg 1 or leg 2 of an N^2-dimensional
// two-leg space (leg 1 slowest).
MatrixFieldExpr embed_leg1(const MatrixFieldExpr& a);
MatrixFieldExpr embed_leg2(const MatrixFieldExpr& a);

// j(x) = sum_a j^a(x) t_a as a matrix of single-generator expressions.
MatrixFieldExpr current_matrix(const LieBasisSpec& basis, const std::string& family,
                               const std::string& point);

// Entrywise Poisson bracket of an N x N matrix on leg 1 with one on leg 2:
// out[(i N + k), (j N + l)] = {a_ij, b_kl}.
MatrixFieldExpr poisson_bracket(const MatrixFieldExpr& a, const MatrixFieldExpr& b,
                                const BracketTable& table);

// An order-reversing symmetry acting on Lax-type matrices,
// L^sigma(lambda) = sign * (optionally transposed) L(-lambda).
struct AntiAutomorphism {
    enum class Kind { reflection, twisted, custom };
    Kind kind = Kind::reflection;
    int sign = -1;
    bool transpose = false;
    bool negate_spectral = true;

    static AntiAutomorphism reflection() { return {Kind::reflection, -1, false, true}; }
    static AntiAutomorphism twisted() { return {Kind::twisted, 1, true, true}; }
    static AntiAutomorphism custom(int sign, bool transpose, bool negate_spectral) {
        return {Kind::custom, sign, transpose, negate_spectral};
    }
};

// Apply sigma to a matrix of fields whose spectral argument is `var`.
MatrixFieldExpr sigma_transform(const MatrixFieldExpr& a, const AntiAutomorphism& sigma,
                                const std::string& var);

// Decompose a matrix-form bracket rule {g (x) h} (an N^2 x N^2 two-leg
// matrix of field expressions, with g at pointA and h at pointB) into
// component brackets {g^a, h^b} over the given Lie basis, and record them in
// the table under the placeholder points.  Throws Unrepresentable when the
// rule is not in the span of t_a (x) t_b.
void component_brackets_from_matrix_rule(BracketTable& table,
                                         const MatrixFieldExpr& rule,
                                         const LieBasisSpec& basis,
                                         const std::string& famA,
                                         const std::string& pointA,
                                         const std::string& famB,
                                         const std::string& pointB);

}  // namespace blax
