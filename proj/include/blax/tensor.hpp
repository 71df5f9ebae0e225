#pragma once

#include <initializer_list>
#include <vector>

#include "blax/ratfunc.hpp"

namespace blax {

// Dense square matrix over RatFunc.
class MatrixRF {
public:
    MatrixRF() = default;
    explicit MatrixRF(int dim, VarList vars = {});
    static MatrixRF identity(int dim, VarList vars = {});
    static MatrixRF zero(int dim, VarList vars = {}) { return MatrixRF(dim, std::move(vars)); }

    int dim() const { return dim_; }
    RatFunc& at(int i, int j) { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }
    const RatFunc& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }

    MatrixRF operator-() const;
    MatrixRF& operator+=(const MatrixRF& rhs);
    MatrixRF& operator-=(const MatrixRF& rhs);
    friend MatrixRF operator+(MatrixRF a, const MatrixRF& b) { return a += b; }
    friend MatrixRF operator-(MatrixRF a, const MatrixRF& b) { return a -= b; }
    friend MatrixRF operator*(const MatrixRF& a, const MatrixRF& b);
    MatrixRF operator*(const RatFunc& c) const;
    MatrixRF operator*(const Rational& c) const;

    MatrixRF transpose() const;
    RatFunc trace() const;
    RatFunc det() const;
    MatrixRF inverse() const;  // exact Gauss elimination; throws on singular

    MatrixRF substitute(const std::map<std::string, RatFunc>& bindings) const;

    bool is_zero() const;
    bool operator==(const MatrixRF& rhs) const;
    bool operator!=(const MatrixRF& rhs) const { return !(*this == rhs); }

private:
    int dim_ = 0;
    std::vector<RatFunc> entries_;
};

MatrixRF commutator(const MatrixRF& a, const MatrixRF& b);
MatrixRF kron(const MatrixRF& a, const MatrixRF& b);

// Square matrix on a tensor product of identical N-dimensional legs.  Leg
// labels are a strictly increasing subset of {1,2,3}; the composite index of
// legs (1,2,3) is i1*N^2 + i2*N + i3 (leg 1 slowest).
class SpectralTensor {
public:
    SpectralTensor() = default;
    SpectralTensor(int base_dim, std::vector<int> legs, VarList vars = {});
    SpectralTensor(int base_dim, std::vector<int> legs, MatrixRF data);

    static SpectralTensor identity(int base_dim, std::vector<int> legs, VarList vars = {});
    static SpectralTensor permutation(int base_dim);  // legs {1,2}

    int base_dim() const { return base_dim_; }
    const std::vector<int>& legs() const { return legs_; }
    int dim() const { return data_.dim(); }
    const MatrixRF& matrix() const { return data_; }
    MatrixRF& matrix() { return data_; }
    RatFunc& at(int i, int j) { return data_.at(i, j); }
    const RatFunc& at(int i, int j) const { return data_.at(i, j); }

    SpectralTensor operator-() const { return {base_dim_, legs_, -data_}; }
    SpectralTensor& operator+=(const SpectralTensor& rhs);
    SpectralTensor& operator-=(const SpectralTensor& rhs);
    friend SpectralTensor operator+(SpectralTensor a, const SpectralTensor& b) { return a += b; }
    friend SpectralTensor operator-(SpectralTensor a, const SpectralTensor& b) { return a -= b; }
    friend SpectralTensor operator*(const SpectralTensor& a, const SpectralTensor& b);
    SpectralTensor operator*(const RatFunc& c) const { return {base_dim_, legs_, data_ * c}; }
    SpectralTensor operator*(const Rational& c) const { return {base_dim_, legs_, data_ * c}; }

    bool is_zero() const { return data_.is_zero(); }
    bool operator==(const SpectralTensor& rhs) const;
    bool operator!=(const SpectralTensor& rhs) const { return !(*this == rhs); }

    // Identity on absent legs, with an optional spectral-argument relabeling
    // applied to the entries (which variable rides on which leg).
    SpectralTensor embed(const std::vector<int>& target_legs,
                         const std::map<std::string, RatFunc>& relabel = {}) const;

    SpectralTensor partial_transpose(int leg) const;
    // Trace out one leg; result lives on the remaining legs (a plain MatrixRF
    // when only one leg remains, still wrapped as SpectralTensor).
    SpectralTensor partial_trace(int leg) const;
    RatFunc full_trace() const { return data_.trace(); }

    SpectralTensor substitute(const std::map<std::string, RatFunc>& bindings) const;

    // Exchange the two legs of a 2-leg tensor (conjugation by the
    // permutation operator together with relabeling bookkeeping left to the
    // caller).
    SpectralTensor swap_legs() const;

private:
    int leg_position(int leg) const;  // throws ShapeError if absent

    int base_dim_ = 0;
    std::vector<int> legs_;
    MatrixRF data_;
};

SpectralTensor commutator(const SpectralTensor& a, const SpectralTensor& b);

}  // namespace blax
