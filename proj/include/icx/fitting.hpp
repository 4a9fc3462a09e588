#pragma once

#include <string>
#include <vector>

#include "icx/mat.hpp"

namespace icx {

enum class PatternEntry : std::uint8_t { Zero, One, Star };

// L x K grid of {0, 1, X}. One row per demand, columns are messages.
// Construction checks shape only; the demand structure (exactly one 1 per
// row, every column demanded at least once, hence L >= K) is checked by
// validate() so that files can be loaded and then diagnosed.
class FittingMatrix {
public:
  FittingMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        g_(check_shape(rows, cols), PatternEntry::Zero) {}

  FittingMatrix(int rows, int cols, std::vector<PatternEntry> grid)
      : rows_(rows), cols_(cols), g_(std::move(grid)) {
    if (g_.size() != check_shape(rows, cols))
      raise(ErrorKind::Shape, "grid size does not match rows*cols");
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  PatternEntry at(int i, int j) const {
    return g_[static_cast<size_t>(i) * cols_ + j];
  }
  void set(int i, int j, PatternEntry e) {
    g_[static_cast<size_t>(i) * cols_ + j] = e;
  }

  // Throws RowOneCount or ColumnUncovered.
  void validate() const;

  // 0-based column of the single 1 in the given row; the row must be valid.
  int demand_col(int row) const;

  bool operator==(const FittingMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && g_ == other.g_;
  }
  bool operator!=(const FittingMatrix& other) const { return !(*this == other); }

private:
  static size_t check_shape(int rows, int cols) {
    if (rows < 1 || cols < 1)
      raise(ErrorKind::Shape, "pattern dimensions must be positive");
    return static_cast<size_t>(rows) * cols;
  }

  int rows_;
  int cols_;
  std::vector<PatternEntry> g_;
};

// Pattern of {0, X} only.
class XPattern {
public:
  XPattern(int rows, int cols)
      : rows_(rows), cols_(cols),
        g_(check_shape(rows, cols), PatternEntry::Zero) {}

  XPattern(int rows, int cols, std::vector<PatternEntry> grid)
      : rows_(rows), cols_(cols), g_(std::move(grid)) {
    if (g_.size() != check_shape(rows, cols))
      raise(ErrorKind::Shape, "grid size does not match rows*cols");
    for (PatternEntry e : g_)
      if (e == PatternEntry::One)
        raise(ErrorKind::PatternHasOne, "X-pattern must not contain 1s");
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  PatternEntry at(int i, int j) const {
    return g_[static_cast<size_t>(i) * cols_ + j];
  }
  void set(int i, int j, PatternEntry e) {
    if (e == PatternEntry::One)
      raise(ErrorKind::PatternHasOne, "X-pattern must not contain 1s");
    g_[static_cast<size_t>(i) * cols_ + j] = e;
  }

  bool operator==(const XPattern& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && g_ == other.g_;
  }
  bool operator!=(const XPattern& other) const { return !(*this == other); }

private:
  static size_t check_shape(int rows, int cols) {
    if (rows < 1 || cols < 1)
      raise(ErrorKind::Shape, "pattern dimensions must be positive");
    return static_cast<size_t>(rows) * cols;
  }

  int rows_;
  int cols_;
  std::vector<PatternEntry> g_;
};

// One receiver per demand. Message indices are 1-based throughout; `side`
// is kept sorted and duplicate-free.
struct Receiver {
  int demand = 0;
  std::vector<int> side;
};

struct ICProblem {
  int message_count = 0;
  Field field;
  std::vector<Receiver> receivers;

  // Throws InvalidProblem when a demand lies in its own side set, an index
  // is out of range, or some message is never demanded.
  void validate() const;
};

// Row t becomes a receiver demanding the column of the 1 with side set at
// the X columns. The fitting matrix must validate.
ICProblem to_problem(const FittingMatrix& f, Field field);

// Inverse of to_problem; row order follows receiver order.
FittingMatrix from_problem(const ICProblem& p);

// 1s become Xs; 0s and Xs are unchanged.
XPattern x_relax(const FittingMatrix& f);
XPattern x_relax(const XPattern& x);

// Strict completion semantics: m must be 0 at every 0 of f and 1 at every
// 1 of f; X positions are unconstrained.
bool fits(const Mat& m, const FittingMatrix& f);

// Literal zero-pattern semantics: m must be 0 at every 0 of x.
bool fits_x(const Mat& m, const XPattern& x);

// Text format: first line "L K", then L lines of K tokens from {0,1,X}
// separated by single spaces.
std::string to_text(const FittingMatrix& f);
std::string to_text(const XPattern& x);
FittingMatrix fitting_from_text(const std::string& text);
XPattern xpattern_from_text(const std::string& text);

// JSON format: {"K": int, "p": int, "receivers": [{"demand": int,
// "side": [int, ...]}, ...]}.
std::string to_json(const ICProblem& p);
ICProblem problem_from_json(const std::string& text);

}  // namespace icx
