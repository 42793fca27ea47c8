#ifndef TSR_FMATRIX_HPP
#define TSR_FMATRIX_HPP

#include <vector>

#include "tsr/fpoly.hpp"

namespace tsr {

// Dense matrix over an FField. Vectors are columns; group actions multiply on
// the left, so rho(gh) = rho(g) * rho(h).
class FMatrix {
public:
  FMatrix() : rows_(0), cols_(0) {}
  FMatrix(FFieldPtr F, int rows, int cols)
      : F_(std::move(F)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  static FMatrix identity(FFieldPtr F, int n);

  const FFieldPtr& field() const { return F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  int64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  FMatrix operator+(const FMatrix& o) const;
  FMatrix operator-(const FMatrix& o) const;
  FMatrix operator*(const FMatrix& o) const;
  FMatrix scaled(int64_t s) const;
  FMatrix transposed() const;
  FMatrix pow(int64_t e) const;
  bool operator==(const FMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

  std::vector<int64_t> apply(const std::vector<int64_t>& v) const;  // matrix * column

  int rank() const;
  FMatrix inverse() const;  // throws Singular
  // basis of the right kernel {v : A v = 0}, as columns collected in a matrix
  std::vector<std::vector<int64_t>> kernel_basis() const;

  // characteristic polynomial, monic, via Hessenberg reduction
  FPoly charpoly() const;

private:
  FFieldPtr F_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> a_;
};

// g(A) for a polynomial g
FMatrix poly_eval_matrix(const FPoly& g, const FMatrix& A);

// Echelonized accumulator for spans of column vectors.
class RowSpace {
public:
  explicit RowSpace(FFieldPtr F, int dim) : F_(std::move(F)), dim_(dim) {}
  // returns true if v enlarged the span
  bool insert(std::vector<int64_t> v);
  bool contains(std::vector<int64_t> v) const;
  int dimension() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return dim_; }
  const std::vector<std::vector<int64_t>>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // coordinates of v in terms of basis(); throws NotFixed when outside
  std::vector<int64_t> coordinates(std::vector<int64_t> v) const;

private:
  FFieldPtr F_;
  int dim_;
  std::vector<std::vector<int64_t>> rows_;  // echelonized, pivot normalized to 1
  std::vector<int> pivots_;
  void reduce(std::vector<int64_t>& v, std::vector<int64_t>* coords) const;
};

}  // namespace tsr

#endif
