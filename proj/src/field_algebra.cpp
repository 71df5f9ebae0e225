#include "blax/field_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "blax/errors.hpp"

namespace blax {

namespace {

using TermKey = std::pair<std::vector<GeneratorSymbol>, std::vector<DistFactor>>;

std::string rename(const std::map<std::string, std::string>& renames,
                   const std::string& point) {
    const auto it = renames.find(point);
    return it == renames.end() ? point : it->second;
}

// Rewrites one raw term into canonical terms:
//  A. a plain delta(p-q) substitutes its larger point q by p everywhere else;
//  B. delta'(p-q) delta(q-t) expands along the chain into star factors
//     rooted at p: delta(p-t) delta'(p-q) + delta'(p-t) delta(p-q);
//  C. generators at the second point of delta'(p-q) move to the first via
//     h(q) delta'(p-q) = h(p) delta'(p-q) - h'(p) delta(p-q)  (product rule).
// Factors are kept oriented (smaller point first; delta' is odd).
void reduce_term(FieldTerm t, std::vector<FieldTerm>& out, int depth) {
    if (depth > 64) throw MalformedInput("distribution reduction does not terminate");
    if (t.coeff.is_zero()) return;

    for (;;) {
        for (auto& f : t.dist) {
            if (f.p == f.q) throw MalformedInput("distribution at coincident points");
            if (f.p > f.q) {
                std::swap(f.p, f.q);
                if (f.order == 1) t.coeff = -t.coeff;
            }
        }
        std::sort(t.dist.begin(), t.dist.end());
        for (std::size_t i = 0; i + 1 < t.dist.size(); ++i)
            if (t.dist[i].p == t.dist[i + 1].p && t.dist[i].q == t.dist[i + 1].q)
                throw MalformedInput("ill-defined product of distributions at one point pair");

        // rule A
        bool changed = false;
        for (std::size_t i = 0; i < t.dist.size() && !changed; ++i) {
            if (t.dist[i].order != 0) continue;
            const std::string from = t.dist[i].q, to = t.dist[i].p;
            bool used = false;
            for (const auto& g : t.gens) used = used || g.point == from;
            for (std::size_t j = 0; j < t.dist.size(); ++j)
                if (j != i) used = used || t.dist[j].p == from || t.dist[j].q == from;
            if (!used) continue;
            for (auto& g : t.gens)
                if (g.point == from) g.point = to;
            for (std::size_t j = 0; j < t.dist.size(); ++j) {
                if (j == i) continue;
                if (t.dist[j].p == from) t.dist[j].p = to;
                if (t.dist[j].q == from) t.dist[j].q = to;
            }
            changed = true;
        }
        if (changed) continue;

        // rule B
        for (std::size_t i = 0; i < t.dist.size(); ++i) {
            if (t.dist[i].order != 1) continue;
            for (std::size_t j = 0; j < t.dist.size(); ++j) {
                if (t.dist[j].order != 0 || t.dist[j].p != t.dist[i].q) continue;
                const std::string p = t.dist[i].p, q = t.dist[i].q, tt = t.dist[j].q;
                FieldTerm b1 = t, b2 = t;
                b1.dist[i] = {1, p, q};
                b1.dist[j] = {0, p, tt};
                b2.dist[i] = {1, p, tt};
                b2.dist[j] = {0, p, q};
                reduce_term(std::move(b1), out, depth + 1);
                reduce_term(std::move(b2), out, depth + 1);
                return;
            }
        }

        for (std::size_t i = 0; i < t.dist.size(); ++i)
            for (std::size_t j = i + 1; j < t.dist.size(); ++j)
                if (t.dist[i].order == 1 && t.dist[j].order == 1 &&
                    (t.dist[i].p == t.dist[j].p || t.dist[i].q == t.dist[j].q ||
                     t.dist[i].q == t.dist[j].p))
                    throw MalformedInput("unsupported product of two delta' factors");

        // rule C
        for (std::size_t i = 0; i < t.dist.size(); ++i) {
            if (t.dist[i].order != 1) continue;
            std::vector<std::size_t> at_q;
            for (std::size_t g = 0; g < t.gens.size(); ++g)
                if (t.gens[g].point == t.dist[i].q) at_q.push_back(g);
            if (at_q.empty()) continue;
            FieldTerm moved = t;
            for (const auto g : at_q) moved.gens[g].point = t.dist[i].p;
            reduce_term(std::move(moved), out, depth + 1);
            for (const auto g : at_q) {
                FieldTerm d = t;
                d.coeff = -d.coeff;
                for (const auto h : at_q) d.gens[h].point = t.dist[i].p;
                d.gens[g].deriv += 1;
                d.dist[i].order = 0;
                reduce_term(std::move(d), out, depth + 1);
            }
            return;
        }

        break;
    }

    std::sort(t.gens.begin(), t.gens.end());
    std::sort(t.dist.begin(), t.dist.end());
    out.push_back(std::move(t));
}

std::vector<FieldTerm> canonicalize(std::vector<FieldTerm> raw) {
    std::vector<FieldTerm> flat;
    for (auto& t : raw) reduce_term(std::move(t), flat, 0);
    std::map<TermKey, RatFunc> merged;
    for (auto& t : flat) {
        auto& slot = merged[{std::move(t.gens), std::move(t.dist)}];
        slot += t.coeff;
    }
    std::vector<FieldTerm> result;
    for (auto& [key, coeff] : merged) {
        if (coeff.is_zero()) continue;
        result.push_back({std::move(coeff), key.first, key.second});
    }
    return result;
}

std::map<std::string, RatFunc> applicable(const std::map<std::string, RatFunc>& bindings,
                                          const VarList& vars) {
    std::map<std::string, RatFunc> out;
    for (const auto& [name, value] : bindings)
        if (std::find(vars.begin(), vars.end(), name) != vars.end()) out.emplace(name, value);
    return out;
}

}  // namespace

std::string GeneratorSymbol::str() const {
    std::ostringstream os;
    for (int i = 0; i < deriv; ++i) os << "d";
    os << family << "^" << color;
    if (point.empty())
        os << "[int]";
    else
        os << "(" << point << ")";
    return os.str();
}

std::string DistFactor::str() const {
    return std::string("delta") + (order == 1 ? "'" : "") + "(" + p + "-" + q + ")";
}

FieldExpr FieldExpr::scalar(RatFunc c) {
    return from_terms({{std::move(c), {}, {}}});
}

FieldExpr FieldExpr::generator(GeneratorSymbol g) {
    return from_terms({{RatFunc::constant({}, Rational(1)), {std::move(g)}, {}}});
}

FieldExpr FieldExpr::distribution(DistFactor d) {
    return from_terms({{RatFunc::constant({}, Rational(1)), {}, {std::move(d)}}});
}

FieldExpr FieldExpr::from_terms(std::vector<FieldTerm> raw) {
    FieldExpr e;
    e.terms_ = canonicalize(std::move(raw));
    return e;
}

FieldExpr FieldExpr::operator-() const {
    FieldExpr e = *this;
    for (auto& t : e.terms_) t.coeff = -t.coeff;
    return e;
}

FieldExpr& FieldExpr::operator+=(const FieldExpr& rhs) {
    std::vector<FieldTerm> raw = terms_;
    raw.insert(raw.end(), rhs.terms_.begin(), rhs.terms_.end());
    terms_ = canonicalize(std::move(raw));
    return *this;
}

FieldExpr& FieldExpr::operator-=(const FieldExpr& rhs) { return *this += -rhs; }

FieldExpr& FieldExpr::operator*=(const FieldExpr& rhs) {
    std::vector<FieldTerm> raw;
    raw.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& s : terms_)
        for (const auto& t : rhs.terms_) {
            FieldTerm u;
            u.coeff = s.coeff * t.coeff;
            u.gens = s.gens;
            u.gens.insert(u.gens.end(), t.gens.begin(), t.gens.end());
            u.dist = s.dist;
            u.dist.insert(u.dist.end(), t.dist.begin(), t.dist.end());
            raw.push_back(std::move(u));
        }
    terms_ = canonicalize(std::move(raw));
    return *this;
}

FieldExpr FieldExpr::operator*(const RatFunc& c) const {
    if (c.is_zero()) return {};
    FieldExpr e = *this;
    for (auto& t : e.terms_) t.coeff *= c;
    return e;
}

FieldExpr FieldExpr::operator*(const Rational& c) const {
    return *this * RatFunc::constant({}, c);
}

bool FieldExpr::operator==(const FieldExpr& rhs) const {
    if (terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].gens == rhs.terms_[i].gens)) return false;
        if (!(terms_[i].dist == rhs.terms_[i].dist)) return false;
        if (terms_[i].coeff != rhs.terms_[i].coeff) return false;
    }
    return true;
}

FieldExpr FieldExpr::substitute(const std::map<std::string, RatFunc>& bindings) const {
    std::vector<FieldTerm> raw = terms_;
    for (auto& t : raw) {
        const auto local = applicable(bindings, t.coeff.vars());
        if (!local.empty()) t.coeff = t.coeff.substitute(local);
    }
    return from_terms(std::move(raw));
}

FieldExpr FieldExpr::rename_points(const std::map<std::string, std::string>& renames) const {
    std::vector<FieldTerm> raw = terms_;
    for (auto& t : raw) {
        for (auto& g : t.gens)
            if (!g.point.empty()) g.point = rename(renames, g.point);
        for (auto& f : t.dist) {
            f.p = rename(renames, f.p);
            f.q = rename(renames, f.q);
        }
    }
    return from_terms(std::move(raw));
}

FieldExpr FieldExpr::filter_dist(int delta_prime_count) const {
    std::vector<FieldTerm> kept;
    for (const auto& t : terms_) {
        int n = 0;
        for (const auto& f : t.dist) n += f.order == 1 ? 1 : 0;
        if (n == delta_prime_count) kept.push_back(t);
    }
    FieldExpr e;
    e.terms_ = std::move(kept);
    return e;
}

std::string FieldExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")";
        for (const auto& g : t.gens) os << "*" << g.str();
        for (const auto& f : t.dist) os << "*" << f.str();
    }
    return os.str();
}

const std::string BracketTable::P1 = "@1";
const std::string BracketTable::P2 = "@2";

void BracketTable::set_rule(const std::string& famA, int a, const std::string& famB, int b,
                            FieldExpr rule) {
    rules_[{famA, a, famB, b}] = std::move(rule);
}

bool BracketTable::has_rule(const std::string& famA, int a, const std::string& famB,
                            int b) const {
    return rules_.count({famA, a, famB, b}) != 0 || rules_.count({famB, b, famA, a}) != 0;
}

FieldExpr BracketTable::bracket(const GeneratorSymbol& g, const GeneratorSymbol& h) const {
    if (g.deriv > 0 || h.deriv > 0)
        throw MissingRule("no bracket rule for derivative generator " +
                          (g.deriv > 0 ? g.str() : h.str()));
    const auto fwd = rules_.find({g.family, g.color, h.family, h.color});
    if (fwd != rules_.end())
        return fwd->second.rename_points({{P1, g.point}, {P2, h.point}});
    const auto rev = rules_.find({h.family, h.color, g.family, g.color});
    if (rev != rules_.end())
        return -rev->second.rename_points({{P1, h.point}, {P2, g.point}});
    throw MissingRule("no bracket rule for {" + g.str() + ", " + h.str() + "}");
}

FieldExpr poisson_bracket(const FieldExpr& a, const FieldExpr& b, const BracketTable& table) {
    std::vector<FieldTerm> raw;
    for (const auto& s : a.terms())
        for (const auto& t : b.terms())
            for (std::size_t i = 0; i < s.gens.size(); ++i)
                for (std::size_t j = 0; j < t.gens.size(); ++j) {
                    const FieldExpr fb = table.bracket(s.gens[i], t.gens[j]);
                    if (fb.is_zero()) continue;
                    FieldTerm base;
                    base.coeff = s.coeff * t.coeff;
                    for (std::size_t k = 0; k < s.gens.size(); ++k)
                        if (k != i) base.gens.push_back(s.gens[k]);
                    for (std::size_t k = 0; k < t.gens.size(); ++k)
                        if (k != j) base.gens.push_back(t.gens[k]);
                    base.dist = s.dist;
                    base.dist.insert(base.dist.end(), t.dist.begin(), t.dist.end());
                    for (const auto& u : fb.terms()) {
                        FieldTerm w = base;
                        w.coeff *= u.coeff;
                        w.gens.insert(w.gens.end(), u.gens.begin(), u.gens.end());
                        w.dist.insert(w.dist.end(), u.dist.begin(), u.dist.end());
                        raw.push_back(std::move(w));
                    }
                }
    return FieldExpr::from_terms(std::move(raw));
}

FieldExpr integrate(const FieldExpr& e, const std::string& point) {
    std::vector<FieldTerm> raw;
    for (const auto& t : e.terms()) {
        std::vector<std::size_t> carrying;
        for (std::size_t i = 0; i < t.dist.size(); ++i)
            if (t.dist[i].p == point || t.dist[i].q == point) carrying.push_back(i);
        if (carrying.size() >= 2)
            throw MalformedInput("integration point appears in several distribution factors");

        if (carrying.size() == 1) {
            const std::size_t i = carrying[0];
            const DistFactor f = t.dist[i];
            const std::string other = f.p == point ? f.q : f.p;
            if (f.order == 0) {
                FieldTerm u = t;
                u.dist.erase(u.dist.begin() + static_cast<std::ptrdiff_t>(i));
                for (auto& g : u.gens)
                    if (g.point == point) g.point = other;
                raw.push_back(std::move(u));
            } else if (f.q == point) {
                // canonical form keeps no generator at the second point:
                // \int dp delta'(q - p) = 0 for interior q
                continue;
            } else {
                // \int dp h(p) delta'(p - q) = h'(q)
                std::vector<std::size_t> at_p;
                for (std::size_t g = 0; g < t.gens.size(); ++g)
                    if (t.gens[g].point == point) at_p.push_back(g);
                for (const auto g : at_p) {
                    FieldTerm u = t;
                    u.dist.erase(u.dist.begin() + static_cast<std::ptrdiff_t>(i));
                    for (const auto h : at_p) u.gens[h].point = other;
                    u.gens[g].deriv += 1;
                    raw.push_back(std::move(u));
                }
            }
            continue;
        }

        bool at_point = false, total_derivative = false;
        for (const auto& g : t.gens) {
            at_point = at_point || g.point == point;
            total_derivative = total_derivative || (g.point == point && g.deriv > 0);
        }
        if (!at_point)
            throw MalformedInput("integration point absent from a term");
        if (total_derivative) {
            std::size_t n_at = 0;
            for (const auto& g : t.gens) n_at += g.point == point ? 1 : 0;
            if (n_at > 1)
                throw MalformedInput("cannot integrate mixed derivative monomial exactly");
            continue;  // boundary term, dropped by the interior convention
        }
        FieldTerm u = t;
        for (auto& g : u.gens)
            if (g.point == point) g.point.clear();
        raw.push_back(std::move(u));
    }
    return FieldExpr::from_terms(std::move(raw));
}

MatrixFieldExpr::MatrixFieldExpr(int dim)
    : dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

MatrixFieldExpr MatrixFieldExpr::from_constant(const MatrixRF& m) {
    MatrixFieldExpr e(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).is_zero()) e.at(i, j) = FieldExpr::scalar(m.at(i, j));
    return e;
}

MatrixFieldExpr MatrixFieldExpr::operator-() const {
    MatrixFieldExpr e(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) e.entries_[i] = -entries_[i];
    return e;
}

MatrixFieldExpr& MatrixFieldExpr::operator+=(const MatrixFieldExpr& rhs) {
    if (dim_ != rhs.dim_) throw ShapeError("matrix dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

MatrixFieldExpr& MatrixFieldExpr::operator-=(const MatrixFieldExpr& rhs) {
    if (dim_ != rhs.dim_) throw ShapeError("matrix dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

MatrixFieldExpr operator*(const MatrixFieldExpr& a, const MatrixFieldExpr& b) {
    if (a.dim() != b.dim()) throw ShapeError("matrix dimension mismatch");
    MatrixFieldExpr c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            FieldExpr acc;
            for (int k = 0; k < a.dim(); ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc += a.at(i, k) * b.at(k, j);
            }
            c.at(i, j) = std::move(acc);
        }
    return c;
}

MatrixFieldExpr MatrixFieldExpr::operator*(const FieldExpr& c) const {
    MatrixFieldExpr e(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) e.entries_[i] = entries_[i] * c;
    return e;
}

MatrixFieldExpr MatrixFieldExpr::operator*(const RatFunc& c) const {
    MatrixFieldExpr e(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) e.entries_[i] = entries_[i] * c;
    return e;
}

MatrixFieldExpr MatrixFieldExpr::operator*(const Rational& c) const {
    return *this * RatFunc::constant({}, c);
}

MatrixFieldExpr MatrixFieldExpr::transpose() const {
    MatrixFieldExpr e(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) e.at(j, i) = at(i, j);
    return e;
}

FieldExpr MatrixFieldExpr::trace() const {
    FieldExpr acc;
    for (int i = 0; i < dim_; ++i) acc += at(i, i);
    return acc;
}

MatrixFieldExpr MatrixFieldExpr::substitute(
    const std::map<std::string, RatFunc>& bindings) const {
    MatrixFieldExpr e(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        e.entries_[i] = entries_[i].substitute(bindings);
    return e;
}

MatrixFieldExpr MatrixFieldExpr::rename_points(
    const std::map<std::string, std::string>& renames) const {
    MatrixFieldExpr e(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        e.entries_[i] = entries_[i].rename_points(renames);
    return e;
}

bool MatrixFieldExpr::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool MatrixFieldExpr::operator==(const MatrixFieldExpr& rhs) const {
    return dim_ == rhs.dim_ && entries_ == rhs.entries_;
}

MatrixFieldExpr commutator(const MatrixFieldExpr& a, const MatrixFieldExpr& b) {
    return a * b - b * a;
}

MatrixFieldExpr embed_leg1(const MatrixFieldExpr& a) {
    const int n = a.dim();
    MatrixFieldExpr e(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) e.at(i * n + k, j * n + k) = a.at(i, j);
    return e;
}

MatrixFieldExpr embed_leg2(const MatrixFieldExpr& a) {
    const int n = a.dim();
    MatrixFieldExpr e(n * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i) e.at(i * n + k, i * n + l) = a.at(k, l);
    return e;
}

MatrixFieldExpr current_matrix(const LieBasisSpec& basis, const std::string& family,
                               const std::string& point) {
    MatrixFieldExpr j(basis.N);
    for (int a = 0; a < basis.size(); ++a) {
        const FieldExpr ja =
            FieldExpr::generator({family, a, point, 0});
        for (int i = 0; i < basis.N; ++i)
            for (int k = 0; k < basis.N; ++k) {
                const RatFunc& c = basis.basis[static_cast<std::size_t>(a)].at(i, k);
                if (!c.is_zero()) j.at(i, k) += ja * c;
            }
    }
    return j;
}

MatrixFieldExpr poisson_bracket(const MatrixFieldExpr& a, const MatrixFieldExpr& b,
                                const BracketTable& table) {
    const int n = a.dim();
    if (b.dim() != n) throw ShapeError("bracket operands must share the base dimension");
    MatrixFieldExpr out(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    out.at(i * n + k, j * n + l) = poisson_bracket(a.at(i, j), b.at(k, l), table);
    return out;
}

MatrixFieldExpr sigma_transform(const MatrixFieldExpr& a, const AntiAutomorphism& sigma,
                                const std::string& var) {
    MatrixFieldExpr out = sigma.transpose ? a.transpose() : a;
    if (sigma.negate_spectral) {
        const RatFunc mv = -RatFunc::variable({var}, var);
        out = out.substitute({{var, mv}});
    }
    if (sigma.sign == -1) out = -out;
    return out;
}

void component_brackets_from_matrix_rule(BracketTable& table, const MatrixFieldExpr& rule,
                                         const LieBasisSpec& basis, const std::string& famA,
                                         const std::string& pointA, const std::string& famB,
                                         const std::string& pointB) {
    const int m = basis.size();
    const int N = basis.N;
    if (rule.dim() != N * N)
        throw ShapeError("matrix rule must be a two-leg matrix over the basis representation");

    std::vector<MatrixRF> tab;
    tab.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            tab.push_back(kron(basis.basis[static_cast<std::size_t>(a)],
                               basis.basis[static_cast<std::size_t>(b)]));

    MatrixRF gram(m * m);
    for (int u = 0; u < m * m; ++u)
        for (int v = 0; v < m * m; ++v) {
            RatFunc acc;
            for (int i = 0; i < N * N; ++i)
                for (int j = 0; j < N * N; ++j)
                    acc += tab[static_cast<std::size_t>(u)].at(i, j) *
                           tab[static_cast<std::size_t>(v)].at(i, j);
            gram.at(u, v) = acc;
        }
    const MatrixRF ginv = gram.inverse();

    std::vector<FieldExpr> rhs(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int u = 0; u < m * m; ++u) {
        FieldExpr acc;
        for (int i = 0; i < N * N; ++i)
            for (int j = 0; j < N * N; ++j) {
                const RatFunc& c = tab[static_cast<std::size_t>(u)].at(i, j);
                if (!c.is_zero() && !rule.at(i, j).is_zero()) acc += rule.at(i, j) * c;
            }
        rhs[static_cast<std::size_t>(u)] = std::move(acc);
    }

    std::vector<FieldExpr> comp(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int u = 0; u < m * m; ++u) {
        FieldExpr acc;
        for (int v = 0; v < m * m; ++v) {
            if (ginv.at(u, v).is_zero() || rhs[static_cast<std::size_t>(v)].is_zero()) continue;
            acc += rhs[static_cast<std::size_t>(v)] * ginv.at(u, v);
        }
        comp[static_cast<std::size_t>(u)] = std::move(acc);
    }

    for (int i = 0; i < N * N; ++i)
        for (int j = 0; j < N * N; ++j) {
            FieldExpr recon;
            for (int u = 0; u < m * m; ++u) {
                const RatFunc& c = tab[static_cast<std::size_t>(u)].at(i, j);
                if (!c.is_zero() && !comp[static_cast<std::size_t>(u)].is_zero())
                    recon += comp[static_cast<std::size_t>(u)] * c;
            }
            if (recon != rule.at(i, j))
                throw Unrepresentable("matrix rule is not in the span of t_a (x) t_b");
        }

    const std::map<std::string, std::string> to_placeholders{{pointA, BracketTable::P1},
                                                             {pointB, BracketTable::P2}};
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table.set_rule(famA, a, famB, b,
                           comp[static_cast<std::size_t>(a * m + b)].rename_points(
                               to_placeholders));
}

}  // namespace blax
