#pragma once

#include <map>
#include <string>
#include <vector>

#include "blax/rational.hpp"

namespace blax {

using VarList = std::vector<std::string>;

// Graded lexicographic order on exponent vectors: compare total degree
// first, then lexicographically on the declared variable list.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Exact multivariate polynomial with Rational coefficients over an ordered
// variable list.  No zero coefficients are stored; equality of term maps is
// equality of polynomials.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, Rational, GradedLexLess>;

    MultiPoly() = default;  // zero over the empty variable list
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarList vars, const Rational& c);
    static MultiPoly variable(VarList vars, const std::string& name);

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    int total_degree() const;  // -1 for zero
    int degree_in(int var_index) const;
    int degree_in(const std::string& name) const;

    // Coefficient of var^power viewed as a univariate polynomial in the
    // given variable; result lives over the same variable list.
    MultiPoly coeff_of(int var_index, int power) const;
    MultiPoly times_var_power(int var_index, int power) const;

    Rational leading_coeff() const;  // under graded lex; 0 for zero poly

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(unsigned n) const;

    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    Rational eval(const std::map<std::string, Rational>& point) const;

    // Exact division; throws MalformedInput if d does not divide *this.
    MultiPoly divide_exact(const MultiPoly& d) const;

    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // Rewrites the polynomial over a superset variable list.
    MultiPoly with_vars(const VarList& vars) const;

    // Canonical printing: terms from highest graded-lex monomial down,
    // explicit signs, e.g. "lambda^2*mu - 2*lambda + 1/2".
    std::string str() const;

    void add_term(std::vector<int> exps, const Rational& c);

private:
    int var_index_of(const std::string& name) const;  // -1 if absent

    VarList vars_;
    TermMap terms_;
};

// Shared variable list used by both sides of a binary operation.
VarList merge_vars(const VarList& a, const VarList& b);

}  // namespace blax
