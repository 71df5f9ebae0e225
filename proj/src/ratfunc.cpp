#include "blax/ratfunc.hpp"

#include <algorithm>

#include "blax/errors.hpp"

namespace blax {

const RatFunc& LaurentSeries::at(int k) const {
    static const RatFunc zero;
    auto it = coeffs.find(k);
    return it == coeffs.end() ? zero : it->second;
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MalformedInput("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    const VarList merged = merge_vars(num_.vars(), den_.vars());
    num_ = num_.with_vars(merged);
    den_ = den_.with_vars(merged);
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(merged, Rational(1));
        return;
    }
    const MultiPoly g = MultiPoly::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    const Rational lc = den_.leading_coeff();
    num_ = num_ * (Rational(1) / lc);
    den_ = den_ * (Rational(1) / lc);
}

RatFunc RatFunc::constant(VarList vars, const Rational& c) {
    RatFunc f;
    f.num_ = MultiPoly::constant(vars, c);
    f.den_ = MultiPoly::constant(std::move(vars), Rational(1));
    return f;
}

RatFunc RatFunc::variable(VarList vars, const std::string& name) {
    RatFunc f;
    f.num_ = MultiPoly::variable(vars, name);
    f.den_ = MultiPoly::constant(std::move(vars), Rational(1));
    return f;
}

RatFunc RatFunc::operator-() const {
    RatFunc f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
    *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
    return *this += -rhs;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    *this = RatFunc(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
    if (rhs.is_zero()) throw MalformedInput("division by zero rational function");
    *this = RatFunc(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

RatFunc RatFunc::operator*(const Rational& c) const {
    RatFunc f;
    if (c == 0) return RatFunc::constant(vars(), Rational(0));
    f.num_ = num_ * c;
    f.den_ = den_;
    return f;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw MalformedInput("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc out = RatFunc::constant(vars(), Rational(1));
    RatFunc base = *this;
    unsigned m = static_cast<unsigned>(n);
    while (m > 0) {
        if (m & 1u) out *= base;
        m >>= 1u;
        if (m > 0) base *= base;
    }
    return out;
}

bool RatFunc::operator==(const RatFunc& rhs) const {
    // both sides canonical: cross-multiplied difference is zero iff equal
    return num_ * rhs.den_ == rhs.num_ * den_;
}

RatFunc RatFunc::substitute(const std::map<std::string, RatFunc>& bindings) const {
    VarList target = vars();
    for (const auto& [name, value] : bindings) {
        if (std::find(vars().begin(), vars().end(), name) == vars().end())
            throw MalformedInput("substitute: '" + name + "' is not a variable of this function");
        target = merge_vars(target, value.vars());
    }
    auto subst_poly = [&](const MultiPoly& p) {
        RatFunc acc = RatFunc::constant(target, Rational(0));
        for (const auto& [e, c] : p.terms()) {
            RatFunc term = RatFunc::constant(target, c);
            for (std::size_t i = 0; i < p.vars().size(); ++i) {
                if (e[i] == 0) continue;
                auto it = bindings.find(p.vars()[i]);
                const RatFunc base = it != bindings.end()
                                         ? it->second
                                         : RatFunc::variable(target, p.vars()[i]);
                term *= base.pow(e[i]);
            }
            acc += term;
        }
        return acc;
    };
    const RatFunc n = subst_poly(num_);
    const RatFunc d = subst_poly(den_);
    if (d.is_zero()) throw PoleError("substitution lands on a pole");
    return n / d;
}

Rational RatFunc::eval(const std::map<std::string, Rational>& point) const {
    const Rational d = den_.eval(point);
    if (d == 0) throw PoleError("evaluation at a pole");
    return num_.eval(point) / d;
}

LaurentSeries RatFunc::laurent_at_infinity(const std::string& var, int order) const {
    LaurentSeries s;
    s.var = var;
    s.order = order;
    if (is_zero()) return s;

    VarList rest;
    int vi = -1;
    for (std::size_t i = 0; i < vars().size(); ++i) {
        if (vars()[i] == var)
            vi = static_cast<int>(i);
        else
            rest.push_back(vars()[i]);
    }
    if (vi < 0) {
        // var-free: single power-0 coefficient
        if (order >= 0) s.coeffs.emplace(0, *this);
        return s;
    }

    const int dn = num_.degree_in(vi);
    const int dd = den_.degree_in(vi);
    const int kmin = dd - dn;
    if (kmin < -order)
        throw UnsupportedGrowth("polynomial growth in '" + var +
                                "' exceeds the requested representation");

    auto coeff_rf = [&](const MultiPoly& p, int i) {
        return RatFunc(p.coeff_of(vi, i), MultiPoly::constant(p.vars(), Rational(1)));
    };

    // match coefficients of den * series = num, solving top power down
    for (int k = kmin; k <= order; ++k) {
        const int p = dd - k;
        RatFunc rhs = p >= 0 && p <= dn ? coeff_rf(num_, p) : RatFunc::constant(vars(), Rational(0));
        for (int j = kmin; j < k; ++j) {
            const int dpow = p + j;
            if (dpow < 0 || dpow > dd) continue;
            rhs -= coeff_rf(den_, dpow) * s.at(j);
        }
        const RatFunc ck = rhs / coeff_rf(den_, dd);
        if (!ck.is_zero()) s.coeffs.emplace(k, ck);
    }
    return s;
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace blax
