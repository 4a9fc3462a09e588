#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icx/field.hpp"

namespace icx {

// Dense row-major matrix over a prime field.
class Mat {
public:
  Mat(int rows, int cols, Field field)
      : rows_(rows), cols_(cols), field_(field) {
    if (rows < 1 || cols < 1)
      raise(ErrorKind::Shape, "matrix dimensions must be positive");
    e_.assign(static_cast<size_t>(rows) * cols, 0);
  }

  Mat(int rows, int cols, Field field, std::vector<Elem> entries)
      : rows_(rows), cols_(cols), field_(field), e_(std::move(entries)) {
    if (rows < 1 || cols < 1)
      raise(ErrorKind::Shape, "matrix dimensions must be positive");
    if (e_.size() != static_cast<size_t>(rows) * cols)
      raise(ErrorKind::Shape, "entry count does not match rows*cols");
    for (Elem v : e_)
      if (v >= field_.modulus())
        raise(ErrorKind::Shape, "entry out of field range");
  }

  static Mat identity(int n, Field field) {
    Mat m(n, n, field);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Convenience for literals in tests and constructions; reduces mod p.
  static Mat from_rows(std::initializer_list<std::initializer_list<int>> rows,
                       Field field);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Elem operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[static_cast<size_t>(i) * cols_ + j];
  }
  Elem& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  std::span<const Elem> row_span(int i) const {
    assert(i >= 0 && i < rows_);
    return {e_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
  }

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           field_ == other.field_ && e_ == other.e_;
  }
  bool operator!=(const Mat& other) const { return !(*this == other); }

private:
  int rows_;
  int cols_;
  Field field_;
  std::vector<Elem> e_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
std::vector<Elem> operator*(const Mat& a, const std::vector<Elem>& x);

Mat transpose(const Mat& a);
Mat hconcat(const Mat& a, const Mat& b);
Mat vconcat(const Mat& a, const Mat& b);

// Columns given as 0-based indices, kept in the given order.
Mat select_cols(const Mat& a, std::span<const int> cols);

// Rank over GF(p) by Gaussian elimination with lexicographic pivoting.
int rank(Mat a);

struct Rref {
  Mat mat;
  std::vector<int> pivot_cols;  // 0-based, ascending
};

// Reduced row echelon form; pivot choice is the first nonzero entry in
// column order then row order, so the result is deterministic.
Rref rref(Mat a);

// One solution of a*x = b with free variables zeroed, or nullopt if the
// system is inconsistent.
std::optional<std::vector<Elem>> solve_affine(const Mat& a,
                                              std::span<const Elem> b);

namespace detail {
// Elimination kernel shared with the verifier hot path. `a` is rows x cols
// row-major and `b` has `rows` entries; both are destroyed. On success the
// solution (free variables zeroed) is written to `x` (`cols` entries).
bool solve_linear_inplace(Elem* a, int rows, int cols, Elem* b, Elem* x,
                          const Field& field);
}  // namespace detail

// Text format: first line "rows cols p", then one line per row with
// base-10 entries separated by single spaces.
std::string to_text(const Mat& m);
Mat mat_from_text(const std::string& text);

}  // namespace icx
