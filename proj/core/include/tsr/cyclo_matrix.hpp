#ifndef TSR_CYCLO_MATRIX_HPP
#define TSR_CYCLO_MATRIX_HPP

#include <vector>

#include "tsr/cyclo.hpp"

namespace tsr {

class CycloMatrix {
public:
  CycloMatrix() : rows_(0), cols_(0) {}
  CycloMatrix(int rows, int cols, int conductor = 1)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Cyclo(Rat(0), conductor)) {}

  static CycloMatrix identity(int n, int conductor = 1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyclo& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Cyclo& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  CycloMatrix operator+(const CycloMatrix& o) const;
  CycloMatrix operator-(const CycloMatrix& o) const;
  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix scaled(const Cyclo& s) const;
  CycloMatrix transposed() const;
  CycloMatrix inverse() const;  // throws Singular

  bool operator==(const CycloMatrix& o) const;
  bool is_identity() const;

  // solve A x = b for square A (throws Singular); b given column-wise
  std::vector<Cyclo> solve(const std::vector<Cyclo>& b) const;

  // least structure needed elsewhere: exact RREF rank
  int rank() const;

private:
  int rows_, cols_;
  std::vector<Cyclo> data_;
};

// exact solution of a (possibly overdetermined, consistent) rational system
std::vector<Rat> solve_rational_system(const std::vector<std::vector<Rat>>& A,
                                       const std::vector<Rat>& b);

}  // namespace tsr

#endif
