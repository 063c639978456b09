#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hollab/integer.hpp"

namespace hollab {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  IntegerMatrix(const std::vector<std::vector<long>>& rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix& o) const;
  bool is_zero() const;
  std::string to_string() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);  // row_dst += q row_src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);
  void negate_row(std::size_t i);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

struct SmithDecomposition {
  IntegerMatrix U, D, V;      // U * M * V = D, U and V unimodular
  std::vector<Int> factors;   // diagonal of D, length min(rows, cols)
};

// Full decomposition with transforms.
SmithDecomposition smith_decompose(const IntegerMatrix& m);

// Invariant factors d1 | d2 | ... with zeros last.  For matrices up to
// 60x60 the transforms are tracked and U*M*V = D is re-checked; larger
// inputs take the transform-free path.
std::vector<Int> smith_normal_form(const IntegerMatrix& m);

std::size_t smith_rank(const std::vector<Int>& factors);

}  // namespace hollab
