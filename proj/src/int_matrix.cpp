#include "shadowcalc/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace shadow {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int64_t x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(x, o(k, j)));
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(int i, int j, int64_t k) {
  if (k == 0) return;
  for (int c = 0; c < cols_; ++c) (*this)(i, c) = checked_add((*this)(i, c), checked_mul(k, (*this)(j, c)));
}

void IntMatrix::add_col(int i, int j, int64_t k) {
  if (k == 0) return;
  for (int r = 0; r < rows_; ++r) (*this)(r, i) = checked_add((*this)(r, i), checked_mul(k, (*this)(r, j)));
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) (*this)(i, c) = checked_sub(0, (*this)(i, c));
}

void IntMatrix::negate_col(int i) {
  for (int r = 0; r < rows_; ++r) (*this)(r, i) = checked_sub(0, (*this)(r, i));
}

int64_t IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  // Bareiss elimination in 128-bit, exact division at every step.
  std::vector<__int128> m(a_.begin(), a_.end());
  auto at = [&](int i, int j) -> __int128& { return m[static_cast<size_t>(i) * n + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  const __int128 d = sign * at(n - 1, n - 1);
  if (d > INT64_MAX || d < INT64_MIN) throw std::overflow_error("determinant exceeds 64 bits");
  return static_cast<int64_t>(d);
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) s += (j ? "," : "") + std::to_string((*this)(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace shadow
