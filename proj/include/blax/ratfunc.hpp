#pragma once

#include <map>
#include <string>

#include "blax/multipoly.hpp"

namespace blax {

class RatFunc;

// Series in inverse powers of one variable: coeffs[k] multiplies var^{-k}.
// Negative keys hold the polynomially growing part, down to -(deg num - deg den).
struct LaurentSeries {
    std::string var;
    int order = 0;  // coefficients kept for k <= order
    std::map<int, RatFunc> coeffs;

    const RatFunc& at(int k) const;  // zero for absent powers within order
};

// Exact rational function, always held in canonical form: gcd(num,den)=1
// and den monic under graded lex.  Canonical equality is functional equality.
class RatFunc {
public:
    RatFunc() = default;  // zero over empty variable list
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc constant(VarList vars, const Rational& c);
    static RatFunc from_int(VarList vars, long n) { return constant(std::move(vars), Rational(n)); }
    static RatFunc variable(VarList vars, const std::string& name);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarList& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    RatFunc& operator/=(const RatFunc& rhs);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator*(const Rational& c) const;
    RatFunc inverse() const;
    RatFunc pow(int n) const;

    bool operator==(const RatFunc& rhs) const;
    bool operator!=(const RatFunc& rhs) const { return !(*this == rhs); }

    // Exact composition followed by normalization.  Substituting into a
    // denominator that vanishes identically raises PoleError.
    RatFunc substitute(const std::map<std::string, RatFunc>& bindings) const;

    Rational eval(const std::map<std::string, Rational>& point) const;

    LaurentSeries laurent_at_infinity(const std::string& var, int order) const;

    std::string str() const;

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_ = MultiPoly::constant({}, Rational(1));
};

}  // namespace blax
