#pragma once

#include "latfill/numeric.hpp"

#include <cstddef>
#include <initializer_list>

namespace latfill {

// Dense row-major matrix of arbitrary-precision integers.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  IntMat(int rows, int cols, std::initializer_list<Int> vals)
      : rows_(rows), cols_(cols), data_(vals) {
    if (data_.size() != std::size_t(rows) * cols)
      throw std::invalid_argument("IntMat: initializer size mismatch");
  }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  bool operator==(const IntMat& o) const = default;

  IntVec row(int i) const {
    IntVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  void set_row(int i, const IntVec& v) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  int rows_ = 0, cols_ = 0;
  IntVec data_;
};

IntMat mul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& a);

// x * G * y^T for row vectors x, y.
Int bilinear(const IntVec& x, const IntMat& g, const IntVec& y);
inline Int quadratic(const IntMat& g, const IntVec& x) { return bilinear(x, g, x); }

// y = x * G (row vector times matrix).
IntVec apply_left(const IntVec& x, const IntMat& g);

// Signed determinant, exact (fraction-free elimination).
Int det(const IntMat& a);

// Row-style Hermite normal form: H = U*A with U unimodular, pivots positive,
// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
struct HnfResult {
  IntMat h;
  int rank = 0;
};
HnfResult hermite_normal_form(const IntMat& a);

// As above but keeps zero rows and the unimodular transform u with u*a = h.
struct HnfTransform {
  IntMat h;
  IntMat u;
  int rank = 0;
};
HnfTransform hermite_with_transform(const IntMat& a);

// Basis (as HNF rows) of { w in Z^n : sum_i w_i c_i = 0 }.
IntMat kernel_of_functional(const IntVec& c);

// Index of the sublattice generated by the rows of `gens` inside Z^n,
// or 0 if the rows do not have full rank n.
Int span_index(const IntMat& gens, int n);

// adj(A) with A * adj(A) = det(A) * I; A must be nonsingular.
IntMat adjugate(const IntMat& a, const Int& deta);

// Exact inverse of a unimodular matrix (det = +-1).
IntMat inverse_unimodular(const IntMat& a);

// Signature of a symmetric matrix, computed exactly.
struct Signature {
  int positive = 0, negative = 0, zero = 0;
};
Signature signature_of(const IntMat& g);

}  // namespace latfill
