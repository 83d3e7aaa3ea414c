#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace shadow {

// Overflow-checked int64 arithmetic; throws std::overflow_error.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int64_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  int64_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  IntMatrix transpose() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  // row_i += k * row_j
  void add_row(int i, int j, int64_t k);
  void add_col(int i, int j, int64_t k);
  void negate_row(int i);
  void negate_col(int i);

  // Exact determinant (fraction-free elimination); square matrices only.
  int64_t determinant() const;
  bool is_symmetric() const;
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> a_;
};

}  // namespace shadow
