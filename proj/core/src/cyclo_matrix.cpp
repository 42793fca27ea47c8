#include "tsr/cyclo_matrix.hpp"

#include "tsr/errors.hpp"

namespace tsr {

CycloMatrix CycloMatrix::identity(int n, int conductor) {
  CycloMatrix I(n, n, conductor);
  for (int i = 0; i < n; ++i) I.at(i, i) = Cyclo(Rat(1), conductor);
  return I;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix add shape");
  CycloMatrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sub shape");
  CycloMatrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix mul shape");
  CycloMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Cyclo& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

CycloMatrix CycloMatrix::scaled(const Cyclo& s) const {
  CycloMatrix out = *this;
  for (Cyclo& x : out.data_) x *= s;
  return out;
}

CycloMatrix CycloMatrix::transposed() const {
  CycloMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

CycloMatrix CycloMatrix::inverse() const {
  if (rows_ != cols_) throw ShapeMismatch("inverse of a nonsquare matrix");
  const int n = rows_;
  CycloMatrix a = *this;
  CycloMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw Singular("matrix is singular");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Cyclo s = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Cyclo f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

bool CycloMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !(at(i, j) == Cyclo(Rat(1)))) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

std::vector<Cyclo> CycloMatrix::solve(const std::vector<Cyclo>& b) const {
  if (rows_ != cols_ || static_cast<int>(b.size()) != rows_)
    throw ShapeMismatch("solve expects a square system");
  CycloMatrix a = *this;
  std::vector<Cyclo> rhs = b;
  const int n = rows_;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw Singular("singular system");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      std::swap(rhs[piv], rhs[col]);
    }
    Cyclo s = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) a.at(col, j) *= s;
    rhs[col] *= s;
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Cyclo f = a.at(r, col);
      for (int j = 0; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

int CycloMatrix::rank() const {
  CycloMatrix a = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    Cyclo s = a.at(rank, col).inverse();
    for (int j = 0; j < cols_; ++j) a.at(rank, j) *= s;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || a.at(r, col).is_zero()) continue;
      Cyclo f = a.at(r, col);
      for (int j = 0; j < cols_; ++j) a.at(r, j) -= f * a.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<Rat> solve_rational_system(const std::vector<std::vector<Rat>>& A,
                                       const std::vector<Rat>& b) {
  const int rows = static_cast<int>(A.size());
  if (rows == 0) return {};
  const int cols = static_cast<int>(A[0].size());
  if (static_cast<int>(b.size()) != rows) throw ShapeMismatch("rhs length mismatch");
  std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(A[i].size()) != cols) throw ShapeMismatch("ragged system");
    for (int j = 0; j < cols; ++j) aug[i][j] = A[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(aug[piv], aug[rank]);
    Rat s = aug[rank][col];
    for (int j = col; j <= cols; ++j) aug[rank][j] /= s;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      Rat f = aug[r][col];
      for (int j = col; j <= cols; ++j) aug[r][j] -= f * aug[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < cols) throw SingularSystem("underdetermined system");
  for (int r = rank; r < rows; ++r)
    if (aug[r][cols] != 0) throw SingularSystem("inconsistent system");
  std::vector<Rat> x(cols, Rat(0));
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = aug[r][cols];
  return x;
}

}  // namespace tsr
