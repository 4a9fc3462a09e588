#include "icx/mat.hpp"

#include <sstream>

namespace icx {

namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field())
    raise(ErrorKind::FieldMismatch, "matrices live in different fields");
}

}  // namespace

Mat Mat::from_rows(std::initializer_list<std::initializer_list<int>> rows,
                   Field field) {
  int r = static_cast<int>(rows.size());
  if (r == 0) raise(ErrorKind::Shape, "no rows");
  int c = static_cast<int>(rows.begin()->size());
  Mat m(r, c, field);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      raise(ErrorKind::Shape, "ragged rows");
    int j = 0;
    for (int v : row) {
      int p = field.modulus();
      m(i, j++) = static_cast<Elem>(((v % p) + p) % p);
    }
    ++i;
  }
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    raise(ErrorKind::DimensionMismatch, "product of " + std::to_string(a.rows()) +
                                            "x" + std::to_string(a.cols()) + " and " +
                                            std::to_string(b.rows()) + "x" +
                                            std::to_string(b.cols()));
  const Field& f = a.field();
  Mat out(a.rows(), b.cols(), f);
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Elem aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

std::vector<Elem> operator*(const Mat& a, const std::vector<Elem>& x) {
  if (a.cols() != static_cast<int>(x.size()))
    raise(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  const Field& f = a.field();
  std::vector<Elem> y(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    Elem acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    raise(ErrorKind::DimensionMismatch, "sum of unequal shapes");
  Mat out(a.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a.field().add(a(i, j), b(i, j));
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    raise(ErrorKind::DimensionMismatch, "difference of unequal shapes");
  Mat out(a.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a.field().sub(a(i, j), b(i, j));
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.cols(), a.rows(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Mat hconcat(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows())
    raise(ErrorKind::DimensionMismatch, "hconcat row mismatch");
  Mat out(a.rows(), a.cols() + b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Mat vconcat(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols())
    raise(ErrorKind::DimensionMismatch, "vconcat column mismatch");
  Mat out(a.rows() + b.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

Mat select_cols(const Mat& a, std::span<const int> cols) {
  if (cols.empty()) raise(ErrorKind::Shape, "empty column selection");
  Mat out(a.rows(), static_cast<int>(cols.size()), a.field());
  for (size_t j = 0; j < cols.size(); ++j) {
    int c = cols[j];
    if (c < 0 || c >= a.cols())
      raise(ErrorKind::DimensionMismatch, "column index out of range");
    for (int i = 0; i < a.rows(); ++i) out(i, static_cast<int>(j)) = a(i, c);
  }
  return out;
}

namespace {

// Shared elimination: brings `m` (rows x cols, row-major, possibly with an
// extra augmented column counted in `cols`) to reduced row echelon form.
// Returns the pivot columns among the first `lim` columns.
std::vector<int> rref_inplace(Elem* m, int rows, int cols, int lim,
                              const Field& f) {
  std::vector<int> pivots;
  int prow = 0;
  for (int c = 0; c < lim && prow < rows; ++c) {
    int sel = -1;
    for (int i = prow; i < rows; ++i)
      if (m[static_cast<size_t>(i) * cols + c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != prow)
      for (int j = 0; j < cols; ++j)
        std::swap(m[static_cast<size_t>(sel) * cols + j],
                  m[static_cast<size_t>(prow) * cols + j]);
    Elem* pr = m + static_cast<size_t>(prow) * cols;
    Elem piv = pr[c];
    if (piv != 1) {
      Elem s = f.inv(piv);
      for (int j = c; j < cols; ++j) pr[j] = f.mul(pr[j], s);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == prow) continue;
      Elem* ri = m + static_cast<size_t>(i) * cols;
      Elem factor = ri[c];
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j)
        ri[j] = f.sub(ri[j], f.mul(factor, pr[j]));
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

}  // namespace

int rank(Mat a) {
  std::vector<Elem> buf(static_cast<size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) buf[static_cast<size_t>(i) * a.cols() + j] = a(i, j);
  return static_cast<int>(
      rref_inplace(buf.data(), a.rows(), a.cols(), a.cols(), a.field()).size());
}

Rref rref(Mat a) {
  std::vector<Elem> buf(static_cast<size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) buf[static_cast<size_t>(i) * a.cols() + j] = a(i, j);
  std::vector<int> pivots =
      rref_inplace(buf.data(), a.rows(), a.cols(), a.cols(), a.field());
  Mat out(a.rows(), a.cols(), a.field(), std::move(buf));
  return {std::move(out), std::move(pivots)};
}

namespace detail {

bool solve_linear_inplace(Elem* a, int rows, int cols, Elem* b, Elem* x,
                          const Field& f) {
  // Eliminate on a while mirroring row operations on b.
  int prow = 0;
  std::vector<int> pivot_col_of_row(rows, -1);
  for (int c = 0; c < cols && prow < rows; ++c) {
    int sel = -1;
    for (int i = prow; i < rows; ++i)
      if (a[static_cast<size_t>(i) * cols + c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != prow) {
      for (int j = 0; j < cols; ++j)
        std::swap(a[static_cast<size_t>(sel) * cols + j],
                  a[static_cast<size_t>(prow) * cols + j]);
      std::swap(b[sel], b[prow]);
    }
    Elem* pr = a + static_cast<size_t>(prow) * cols;
    Elem piv = pr[c];
    if (piv != 1) {
      Elem s = f.inv(piv);
      for (int j = c; j < cols; ++j) pr[j] = f.mul(pr[j], s);
      b[prow] = f.mul(b[prow], s);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == prow) continue;
      Elem* ri = a + static_cast<size_t>(i) * cols;
      Elem factor = ri[c];
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j)
        ri[j] = f.sub(ri[j], f.mul(factor, pr[j]));
      b[i] = f.sub(b[i], f.mul(factor, b[prow]));
    }
    pivot_col_of_row[prow] = c;
    ++prow;
  }
  for (int i = prow; i < rows; ++i)
    if (b[i] != 0) return false;
  for (int j = 0; j < cols; ++j) x[j] = 0;
  for (int i = 0; i < prow; ++i) x[pivot_col_of_row[i]] = b[i];
  return true;
}

}  // namespace detail

std::optional<std::vector<Elem>> solve_affine(const Mat& a,
                                              std::span<const Elem> b) {
  if (a.rows() != static_cast<int>(b.size()))
    raise(ErrorKind::DimensionMismatch, "rhs length does not match row count");
  std::vector<Elem> abuf(static_cast<size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      abuf[static_cast<size_t>(i) * a.cols() + j] = a(i, j);
  std::vector<Elem> bbuf(b.begin(), b.end());
  std::vector<Elem> x(a.cols(), 0);
  if (!detail::solve_linear_inplace(abuf.data(), a.rows(), a.cols(), bbuf.data(),
                                    x.data(), a.field()))
    return std::nullopt;
  return x;
}

std::string to_text(const Mat& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << m.field().modulus() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << static_cast<int>(m(i, j));
    }
    os << '\n';
  }
  return os.str();
}

Mat mat_from_text(const std::string& text) {
  std::istringstream is(text);
  int rows = 0, cols = 0, p = 0;
  if (!(is >> rows >> cols >> p))
    raise(ErrorKind::Parse, "matrix header must be \"rows cols p\"");
  if (rows < 1 || cols < 1)
    raise(ErrorKind::Parse, "matrix dimensions must be positive");
  Field field(p);
  Mat m(rows, cols, field);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int v;
      if (!(is >> v)) raise(ErrorKind::Parse, "matrix body ended early");
      if (v < 0 || v >= p) raise(ErrorKind::Parse, "entry out of field range");
      m(i, j) = static_cast<Elem>(v);
    }
  int extra;
  if (is >> extra) raise(ErrorKind::Parse, "trailing data after matrix body");
  return m;
}

}  // namespace icx
