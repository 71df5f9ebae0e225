#include "blax/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "blax/errors.hpp"

namespace blax {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    // lexicographic: earlier variable more significant; smaller exponent first
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int ea = i < a.size() ? a[i] : 0;
        const int eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

void MultiPoly::add_term(std::vector<int> exps, const Rational& c) {
    if (c == 0) return;
    exps.resize(vars_.size(), 0);
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(VarList vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(std::vector<int>(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarList vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    const int idx = p.var_index_of(name);
    if (idx < 0) throw MalformedInput("unknown variable '" + name + "'");
    std::vector<int> e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(idx)] = 1;
    p.add_term(std::move(e), Rational(1));
    return p;
}

int MultiPoly::var_index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw MalformedInput("polynomial is not constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(int var_index) const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[static_cast<std::size_t>(var_index)]);
    return d;
}

int MultiPoly::degree_in(const std::string& name) const {
    const int idx = var_index_of(name);
    if (idx < 0) return is_zero() ? -1 : 0;
    return degree_in(idx);
}

MultiPoly MultiPoly::coeff_of(int var_index, int power) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(var_index)] != power) continue;
        auto e2 = e;
        e2[static_cast<std::size_t>(var_index)] = 0;
        out.add_term(std::move(e2), c);
    }
    return out;
}

MultiPoly MultiPoly::times_var_power(int var_index, int power) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        auto e2 = e;
        e2[static_cast<std::size_t>(var_index)] += power;
        if (e2[static_cast<std::size_t>(var_index)] < 0)
            throw MalformedInput("negative exponent in times_var_power");
        out.add_term(std::move(e2), c);
    }
    return out;
}

Rational MultiPoly::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

VarList merge_vars(const VarList& a, const VarList& b) {
    if (a == b) return a;
    VarList out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

MultiPoly MultiPoly::with_vars(const VarList& vars) const {
    if (vars == vars_) return *this;
    MultiPoly out(vars);
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end())
            throw MalformedInput("with_vars: target list drops variable '" + vars_[i] + "'");
        pos[i] = static_cast<int>(it - vars.begin());
    }
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2(vars.size(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            e2[static_cast<std::size_t>(pos[i])] = e[i];
        out.add_term(std::move(e2), c);
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    if (vars_ != rhs.vars_) {
        const VarList merged = merge_vars(vars_, rhs.vars_);
        *this = with_vars(merged);
        return *this += rhs.with_vars(merged);
    }
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    return *this += -rhs;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    if (vars_ != rhs.vars_) {
        const VarList merged = merge_vars(vars_, rhs.vars_);
        *this = with_vars(merged);
        return *this *= rhs.with_vars(merged);
    }
    MultiPoly out(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly out = MultiPoly::constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1u) out *= base;
        n >>= 1u;
        if (n > 0) base *= base;
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    if (vars_ == rhs.vars_) return terms_ == rhs.terms_;
    const VarList merged = merge_vars(vars_, rhs.vars_);
    return with_vars(merged).terms_ == rhs.with_vars(merged).terms_;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw MalformedInput("eval: no value bound for '" + vars_[i] + "'");
            for (int k = 0; k < e[i]; ++k) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw MalformedInput("division by zero polynomial");
    const VarList merged = merge_vars(vars_, d.vars_);
    MultiPoly r = with_vars(merged);
    const MultiPoly dv = d.with_vars(merged);
    MultiPoly q(merged);
    const auto& lead_d = *dv.terms_.rbegin();
    while (!r.terms_.empty()) {
        const auto& lead_r = *r.terms_.rbegin();
        std::vector<int> e(lead_r.first.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = lead_r.first[i] - lead_d.first[i];
            if (e[i] < 0) throw MalformedInput("divide_exact: not divisible");
        }
        const Rational c = lead_r.second / lead_d.second;
        MultiPoly mono(merged);
        mono.add_term(std::move(e), c);
        q += mono;
        r -= mono * dv;
    }
    return q;
}

namespace {

// Pseudo-remainder of a by b in variable x (index), coefficients in the
// polynomial ring of the remaining variables.
MultiPoly prem(MultiPoly a, const MultiPoly& b, int x) {
    const int db = b.degree_in(x);
    const MultiPoly lcb = b.coeff_of(x, db);
    int da = a.degree_in(x);
    while (!a.is_zero() && da >= db) {
        const MultiPoly lca = a.coeff_of(x, da);
        a = a * lcb - (lca * b).times_var_power(x, da - db);
        const int da2 = a.degree_in(x);
        if (da2 >= da && !a.is_zero())
            throw MalformedInput("prem: degree did not drop");
        da = da2;
    }
    return a;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& p, int x) {
    MultiPoly c(p.vars());
    for (int i = 0; i <= p.degree_in(x); ++i) {
        const MultiPoly ci = p.coeff_of(x, i);
        if (ci.is_zero()) continue;
        c = c.is_zero() ? ci : gcd_rec(c, ci);
        if (c.is_constant()) break;
    }
    return c;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(a.vars(), Rational(1));
    int x = -1;
    for (std::size_t i = 0; i < a.vars().size(); ++i) {
        if (a.degree_in(static_cast<int>(i)) > 0 || b.degree_in(static_cast<int>(i)) > 0) {
            x = static_cast<int>(i);
            break;
        }
    }
    if (x < 0) return MultiPoly::constant(a.vars(), Rational(1));

    const MultiPoly ca = content_in(a, x);
    const MultiPoly cb = content_in(b, x);
    MultiPoly pa = a.divide_exact(ca);
    MultiPoly pb = b.divide_exact(cb);
    if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);

    // primitive Euclidean sequence
    while (true) {
        if (pb.degree_in(x) == 0) {
            // x-free nonzero remainder: primitive parts are coprime in x
            pa = MultiPoly::constant(a.vars(), Rational(1));
            break;
        }
        MultiPoly r = prem(pa, pb, x);
        if (r.is_zero()) {
            pa = pb.divide_exact(content_in(pb, x));
            break;
        }
        pa = pb;
        pb = r.divide_exact(content_in(r, x));
    }
    return gcd_rec(ca, cb) * pa;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    const VarList merged = merge_vars(a.vars(), b.vars());
    MultiPoly g = gcd_rec(a.with_vars(merged), b.with_vars(merged));
    if (g.is_zero()) return g;
    // monic under graded lex so the result is canonical
    const Rational lc = g.leading_coeff();
    return g * (Rational(1) / lc);
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? vars_[i]
                                        : vars_[i] + "^" + std::to_string(e[i]));
        }
        if (factors.empty()) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

}  // namespace blax
