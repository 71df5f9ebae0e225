#include "blax/tensor.hpp"

#include <algorithm>

#include "blax/errors.hpp"

namespace blax {

MatrixRF::MatrixRF(int dim, VarList vars) : dim_(dim) {
    if (dim < 1) throw ShapeError("matrix dimension must be >= 1");
    entries_.assign(static_cast<std::size_t>(dim) * dim, RatFunc::constant(vars, Rational(0)));
}

MatrixRF MatrixRF::identity(int dim, VarList vars) {
    MatrixRF m(dim, vars);
    for (int i = 0; i < dim; ++i) m.at(i, i) = RatFunc::constant(vars, Rational(1));
    return m;
}

MatrixRF MatrixRF::operator-() const {
    MatrixRF out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

MatrixRF& MatrixRF::operator+=(const MatrixRF& rhs) {
    if (dim_ != rhs.dim_) throw ShapeError("matrix dimension mismatch in +");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

MatrixRF& MatrixRF::operator-=(const MatrixRF& rhs) {
    if (dim_ != rhs.dim_) throw ShapeError("matrix dimension mismatch in -");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

MatrixRF operator*(const MatrixRF& a, const MatrixRF& b) {
    if (a.dim() != b.dim()) throw ShapeError("matrix dimension mismatch in *");
    const int n = a.dim();
    MatrixRF out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RatFunc acc;
            for (int k = 0; k < n; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc += a.at(i, k) * b.at(k, j);
            }
            out.at(i, j) = acc;
        }
    }
    return out;
}

MatrixRF MatrixRF::operator*(const RatFunc& c) const {
    MatrixRF out = *this;
    for (auto& e : out.entries_) e *= c;
    return out;
}

MatrixRF MatrixRF::operator*(const Rational& c) const {
    MatrixRF out = *this;
    for (auto& e : out.entries_) e = e * c;
    return out;
}

MatrixRF MatrixRF::transpose() const {
    MatrixRF out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RatFunc MatrixRF::trace() const {
    RatFunc acc;
    for (int i = 0; i < dim_; ++i) acc += at(i, i);
    return acc;
}

RatFunc MatrixRF::det() const {
    // fraction-field Gauss elimination; exact
    MatrixRF m = *this;
    RatFunc d = RatFunc::constant({}, Rational(1));
    for (int col = 0; col < dim_; ++col) {
        int pivot = -1;
        for (int r = col; r < dim_; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return RatFunc();
        if (pivot != col) {
            for (int j = 0; j < dim_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (int r = col + 1; r < dim_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            const RatFunc f = m.at(r, col) / m.at(col, col);
            for (int j = col; j < dim_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

MatrixRF MatrixRF::inverse() const {
    MatrixRF m = *this;
    MatrixRF inv = MatrixRF::identity(dim_);
    for (int col = 0; col < dim_; ++col) {
        int pivot = -1;
        for (int r = col; r < dim_; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw MalformedInput("matrix is singular");
        if (pivot != col)
            for (int j = 0; j < dim_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const RatFunc p = m.at(col, col);
        for (int j = 0; j < dim_; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < dim_; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            const RatFunc f = m.at(r, col);
            for (int j = 0; j < dim_; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

MatrixRF MatrixRF::substitute(const std::map<std::string, RatFunc>& bindings) const {
    MatrixRF out = *this;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            std::map<std::string, RatFunc> applicable;
            for (const auto& [k, v] : bindings) {
                const auto& vs = out.at(i, j).vars();
                if (std::find(vs.begin(), vs.end(), k) != vs.end()) applicable.emplace(k, v);
            }
            if (!applicable.empty()) out.at(i, j) = out.at(i, j).substitute(applicable);
        }
    return out;
}

bool MatrixRF::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const RatFunc& e) { return e.is_zero(); });
}

bool MatrixRF::operator==(const MatrixRF& rhs) const {
    if (dim_ != rhs.dim_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != rhs.entries_[i]) return false;
    return true;
}

MatrixRF commutator(const MatrixRF& a, const MatrixRF& b) {
    return a * b - b * a;
}

MatrixRF kron(const MatrixRF& a, const MatrixRF& b) {
    const int na = a.dim(), nb = b.dim();
    MatrixRF out(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    out.at(i * nb + k, j * nb + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return out;
}

namespace {

int ipow(int base, int exp) {
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void decompose(int idx, int n_legs, int N, std::vector<int>& out) {
    out.resize(static_cast<std::size_t>(n_legs));
    for (int p = n_legs - 1; p >= 0; --p) {
        out[static_cast<std::size_t>(p)] = idx % N;
        idx /= N;
    }
}

int compose(const std::vector<int>& idx, int N) {
    int r = 0;
    for (int v : idx) r = r * N + v;
    return r;
}

}  // namespace

SpectralTensor::SpectralTensor(int base_dim, std::vector<int> legs, VarList vars)
    : base_dim_(base_dim), legs_(std::move(legs)),
      data_(ipow(base_dim, static_cast<int>(legs_.size())), std::move(vars)) {
    if (!std::is_sorted(legs_.begin(), legs_.end()) ||
        std::adjacent_find(legs_.begin(), legs_.end()) != legs_.end())
        throw ShapeError("leg labels must be strictly increasing");
}

SpectralTensor::SpectralTensor(int base_dim, std::vector<int> legs, MatrixRF data)
    : base_dim_(base_dim), legs_(std::move(legs)), data_(std::move(data)) {
    if (data_.dim() != ipow(base_dim_, static_cast<int>(legs_.size())))
        throw ShapeError("tensor data dimension does not match N^legs");
    if (!std::is_sorted(legs_.begin(), legs_.end()) ||
        std::adjacent_find(legs_.begin(), legs_.end()) != legs_.end())
        throw ShapeError("leg labels must be strictly increasing");
}

SpectralTensor SpectralTensor::identity(int base_dim, std::vector<int> legs, VarList vars) {
    const int d = ipow(base_dim, static_cast<int>(legs.size()));
    return {base_dim, std::move(legs), MatrixRF::identity(d, std::move(vars))};
}

SpectralTensor SpectralTensor::permutation(int base_dim) {
    SpectralTensor p(base_dim, {1, 2});
    for (int i = 0; i < base_dim; ++i)
        for (int j = 0; j < base_dim; ++j)
            p.at(i * base_dim + j, j * base_dim + i) = RatFunc::constant({}, Rational(1));
    return p;
}

SpectralTensor& SpectralTensor::operator+=(const SpectralTensor& rhs) {
    if (base_dim_ != rhs.base_dim_ || legs_ != rhs.legs_)
        throw ShapeError("tensor leg/shape mismatch in +");
    data_ += rhs.data_;
    return *this;
}

SpectralTensor& SpectralTensor::operator-=(const SpectralTensor& rhs) {
    if (base_dim_ != rhs.base_dim_ || legs_ != rhs.legs_)
        throw ShapeError("tensor leg/shape mismatch in -");
    data_ -= rhs.data_;
    return *this;
}

SpectralTensor operator*(const SpectralTensor& a, const SpectralTensor& b) {
    if (a.base_dim() != b.base_dim() || a.legs() != b.legs())
        throw ShapeError("tensor leg/shape mismatch in *");
    return {a.base_dim(), a.legs(), a.matrix() * b.matrix()};
}

bool SpectralTensor::operator==(const SpectralTensor& rhs) const {
    return base_dim_ == rhs.base_dim_ && legs_ == rhs.legs_ && data_ == rhs.data_;
}

int SpectralTensor::leg_position(int leg) const {
    for (std::size_t p = 0; p < legs_.size(); ++p)
        if (legs_[p] == leg) return static_cast<int>(p);
    throw ShapeError("tensor does not carry leg " + std::to_string(leg));
}

SpectralTensor SpectralTensor::embed(const std::vector<int>& target_legs,
                                     const std::map<std::string, RatFunc>& relabel) const {
    for (int leg : legs_)
        if (std::find(target_legs.begin(), target_legs.end(), leg) == target_legs.end())
            throw MalformedInput("embed: leg " + std::to_string(leg) + " missing from target");
    const MatrixRF src = relabel.empty() ? data_ : data_.substitute(relabel);

    const int tn = static_cast<int>(target_legs.size());
    const int sn = static_cast<int>(legs_.size());
    std::vector<int> src_pos;  // position of each source leg within target
    for (int leg : legs_) {
        auto it = std::find(target_legs.begin(), target_legs.end(), leg);
        src_pos.push_back(static_cast<int>(it - target_legs.begin()));
    }

    SpectralTensor out(base_dim_, target_legs);
    const int D = out.dim();
    std::vector<int> ri, ci, si(static_cast<std::size_t>(sn)), sj(static_cast<std::size_t>(sn));
    for (int I = 0; I < D; ++I) {
        decompose(I, tn, base_dim_, ri);
        for (int J = 0; J < D; ++J) {
            decompose(J, tn, base_dim_, ci);
            bool diag = true;
            for (int p = 0; p < tn; ++p) {
                if (std::find(src_pos.begin(), src_pos.end(), p) != src_pos.end()) continue;
                if (ri[static_cast<std::size_t>(p)] != ci[static_cast<std::size_t>(p)]) {
                    diag = false;
                    break;
                }
            }
            if (!diag) continue;
            for (int q = 0; q < sn; ++q) {
                si[static_cast<std::size_t>(q)] = ri[static_cast<std::size_t>(src_pos[static_cast<std::size_t>(q)])];
                sj[static_cast<std::size_t>(q)] = ci[static_cast<std::size_t>(src_pos[static_cast<std::size_t>(q)])];
            }
            out.at(I, J) = src.at(compose(si, base_dim_), compose(sj, base_dim_));
        }
    }
    return out;
}

SpectralTensor SpectralTensor::partial_transpose(int leg) const {
    const int p = leg_position(leg);
    const int n = static_cast<int>(legs_.size());
    SpectralTensor out(base_dim_, legs_);
    std::vector<int> ri, ci;
    for (int I = 0; I < dim(); ++I) {
        decompose(I, n, base_dim_, ri);
        for (int J = 0; J < dim(); ++J) {
            decompose(J, n, base_dim_, ci);
            auto ri2 = ri, ci2 = ci;
            std::swap(ri2[static_cast<std::size_t>(p)], ci2[static_cast<std::size_t>(p)]);
            out.at(compose(ri2, base_dim_), compose(ci2, base_dim_)) = at(I, J);
        }
    }
    return out;
}

SpectralTensor SpectralTensor::partial_trace(int leg) const {
    const int p = leg_position(leg);
    const int n = static_cast<int>(legs_.size());
    if (n < 2) throw ShapeError("partial_trace needs at least two legs");
    std::vector<int> rest_legs;
    for (int l : legs_)
        if (l != leg) rest_legs.push_back(l);
    SpectralTensor out(base_dim_, rest_legs);
    std::vector<int> ri(static_cast<std::size_t>(n)), ci(static_cast<std::size_t>(n)), oi, oj;
    for (int I = 0; I < out.dim(); ++I) {
        decompose(I, n - 1, base_dim_, oi);
        for (int J = 0; J < out.dim(); ++J) {
            decompose(J, n - 1, base_dim_, oj);
            RatFunc acc;
            for (int t = 0; t < base_dim_; ++t) {
                int qi = 0;
                for (int q = 0; q < n; ++q) {
                    if (q == p) {
                        ri[static_cast<std::size_t>(q)] = t;
                        ci[static_cast<std::size_t>(q)] = t;
                    } else {
                        ri[static_cast<std::size_t>(q)] = oi[static_cast<std::size_t>(qi)];
                        ci[static_cast<std::size_t>(q)] = oj[static_cast<std::size_t>(qi)];
                        ++qi;
                    }
                }
                acc += at(compose(ri, base_dim_), compose(ci, base_dim_));
            }
            out.at(I, J) = acc;
        }
    }
    return out;
}

SpectralTensor SpectralTensor::substitute(const std::map<std::string, RatFunc>& bindings) const {
    return {base_dim_, legs_, data_.substitute(bindings)};
}

SpectralTensor SpectralTensor::swap_legs() const {
    if (legs_.size() != 2) throw ShapeError("swap_legs requires a 2-leg tensor");
    SpectralTensor out(base_dim_, legs_);
    const int N = base_dim_;
    for (int i1 = 0; i1 < N; ++i1)
        for (int i2 = 0; i2 < N; ++i2)
            for (int j1 = 0; j1 < N; ++j1)
                for (int j2 = 0; j2 < N; ++j2)
                    out.at(i2 * N + i1, j2 * N + j1) = at(i1 * N + i2, j1 * N + j2);
    return out;
}

SpectralTensor commutator(const SpectralTensor& a, const SpectralTensor& b) {
    return a * b - b * a;
}

}  // namespace blax
