#include "tsr/fmatrix.hpp"

#include "tsr/errors.hpp"

namespace tsr {

FMatrix FMatrix::identity(FFieldPtr F, int n) {
  FMatrix I(std::move(F), n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix add shape");
  FMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = F_->add(a_[i], o.a_[i]);
  return out;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sub shape");
  FMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = F_->sub(a_[i], o.a_[i]);
  return out;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix mul shape");
  FMatrix out(F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.at(i, j) = F_->add(out.at(i, j), F_->mul(v, o.at(k, j)));
    }
  return out;
}

FMatrix FMatrix::scaled(int64_t s) const {
  FMatrix out = *this;
  for (auto& x : out.a_) x = F_->mul(x, s);
  return out;
}

FMatrix FMatrix::transposed() const {
  FMatrix out(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

FMatrix FMatrix::pow(int64_t e) const {
  if (rows_ != cols_) throw ShapeMismatch("power of a nonsquare matrix");
  FMatrix result = identity(F_, rows_);
  FMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool FMatrix::is_zero() const {
  for (int64_t x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<int64_t> FMatrix::apply(const std::vector<int64_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("matrix apply shape");
  std::vector<int64_t> out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    int64_t acc = 0;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) acc = F_->add(acc, F_->mul(at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

int FMatrix::rank() const {
  FMatrix a = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    int64_t s = F_->inv(a.at(rank, col));
    for (int j = 0; j < cols_; ++j) a.at(rank, j) = F_->mul(a.at(rank, j), s);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      int64_t f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j)
        a.at(r, j) = F_->sub(a.at(r, j), F_->mul(f, a.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

FMatrix FMatrix::inverse() const {
  if (rows_ != cols_) throw ShapeMismatch("inverse of a nonsquare matrix");
  FMatrix a = *this;
  FMatrix inv = identity(F_, rows_);
  for (int col = 0; col < cols_; ++col) {
    int piv = -1;
    for (int r = col; r < rows_; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Singular("matrix is singular");
    if (piv != col)
      for (int j = 0; j < cols_; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    int64_t s = F_->inv(a.at(col, col));
    for (int j = 0; j < cols_; ++j) {
      a.at(col, j) = F_->mul(a.at(col, j), s);
      inv.at(col, j) = F_->mul(inv.at(col, j), s);
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == col) continue;
      int64_t f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j) {
        a.at(r, j) = F_->sub(a.at(r, j), F_->mul(f, a.at(col, j)));
        inv.at(r, j) = F_->sub(inv.at(r, j), F_->mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

std::vector<std::vector<int64_t>> FMatrix::kernel_basis() const {
  FMatrix a = *this;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    int64_t s = F_->inv(a.at(rank, col));
    for (int j = 0; j < cols_; ++j) a.at(rank, j) = F_->mul(a.at(rank, j), s);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      int64_t f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j)
        a.at(r, j) = F_->sub(a.at(r, j), F_->mul(f, a.at(rank, j)));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<int64_t>> basis;
  for (int freec = 0; freec < cols_; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<int64_t> v(cols_, 0);
    v[freec] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = F_->neg(a.at(r, freec));
    basis.push_back(std::move(v));
  }
  return basis;
}

FPoly FMatrix::charpoly() const {
  if (rows_ != cols_) throw ShapeMismatch("charpoly of a nonsquare matrix");
  const int n = rows_;
  if (n == 0) return FPoly::constant(F_, 1);
  FMatrix h = *this;
  // similarity reduction to upper Hessenberg form
  for (int col = 0; col < n - 2; ++col) {
    int piv = -1;
    for (int r = col + 1; r < n; ++r)
      if (h.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != col + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(col + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, col + 1));
    }
    int64_t inv_piv = F_->inv(h.at(col + 1, col));
    for (int r = col + 2; r < n; ++r) {
      int64_t f = F_->mul(h.at(r, col), inv_piv);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) h.at(r, j) = F_->sub(h.at(r, j), F_->mul(f, h.at(col + 1, j)));
      for (int i = 0; i < n; ++i) h.at(i, col + 1) = F_->add(h.at(i, col + 1), F_->mul(f, h.at(i, r)));
    }
  }
  // p_m(x) = (x - h[m][m]) p_{m-1}(x) - sum_i h[i][m] (prod_{j=i..m-1} h[j+1][j]) p_{i-1}(x)
  std::vector<FPoly> p;
  p.push_back(FPoly::constant(F_, 1));
  for (int m = 0; m < n; ++m) {
    FPoly xm = FPoly(F_, {F_->neg(h.at(m, m)), 1});
    FPoly pm = xm * p[m];
    int64_t subprod = 1;
    for (int i = m - 1; i >= 0; --i) {
      subprod = F_->mul(subprod, h.at(i + 1, i));
      if (subprod == 0) break;
      int64_t coef = F_->mul(h.at(i, m), subprod);
      if (coef == 0) continue;
      pm = pm - p[i].scaled(coef);
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

FMatrix poly_eval_matrix(const FPoly& g, const FMatrix& A) {
  const FFieldPtr& F = A.field();
  const int n = A.rows();
  FMatrix out(F, n, n);
  for (int d = g.degree(); d >= 0; --d) {
    out = out * A;
    int64_t c = g.coeff(d);
    if (c != 0)
      for (int i = 0; i < n; ++i) out.at(i, i) = F->add(out.at(i, i), c);
  }
  return out;
}

bool RowSpace::insert(std::vector<int64_t> v) {
  reduce(v, nullptr);
  int piv = -1;
  for (int i = 0; i < dim_; ++i)
    if (v[i] != 0) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  int64_t s = F_->inv(v[piv]);
  for (auto& x : v) x = F_->mul(x, s);
  // keep earlier rows reduced against the new pivot
  for (size_t r = 0; r < rows_.size(); ++r) {
    int64_t f = rows_[r][piv];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j) rows_[r][j] = F_->sub(rows_[r][j], F_->mul(f, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

void RowSpace::reduce(std::vector<int64_t>& v, std::vector<int64_t>* coords) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    int64_t f = v[pivots_[r]];
    if (coords) (*coords)[r] = f;
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j) v[j] = F_->sub(v[j], F_->mul(f, rows_[r][j]));
  }
}

bool RowSpace::contains(std::vector<int64_t> v) const {
  reduce(v, nullptr);
  for (int64_t x : v)
    if (x != 0) return false;
  return true;
}

std::vector<int64_t> RowSpace::coordinates(std::vector<int64_t> v) const {
  std::vector<int64_t> coords(rows_.size(), 0);
  reduce(v, &coords);
  for (int64_t x : v)
    if (x != 0) throw NotFixed("vector lies outside the accumulated span");
  return coords;
}

}  // namespace tsr
