#pragma once

#include <cstddef>
#include <vector>

#include "tropjac/integer.hpp"

namespace tropjac {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  // elementary operations used by the normal forms
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, Int k);  // row dst += k * row src
  void add_col_multiple(std::size_t dst, std::size_t src, Int k);  // col dst += k * col src
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // rows a, b <- (x*a + y*b, u*a + v*b)
  void combine_rows(std::size_t a, std::size_t b, Int x, Int y, Int u, Int v);
  void combine_cols(std::size_t a, std::size_t b, Int x, Int y, Int u, Int v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Row Hermite form: transform * m = form, nonzero rows first with strictly
// increasing positive pivots and entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix form;
  IntMatrix transform;
  IntMatrix transform_inverse;
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

// left * m * right = diagonal, with d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  IntMatrix right_inverse;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Determinant by fraction-free elimination; square input only.
Int determinant(const IntMatrix& m);

}  // namespace tropjac
