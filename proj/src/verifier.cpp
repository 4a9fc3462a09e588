#include "icx/verifier.hpp"

namespace icx {

namespace {

struct RowScratch {
  std::vector<Elem> a;  // constraints x r, row-major
  std::vector<Elem> b;
  std::vector<Elem> x;
};

void check_dims(const Mat& code, const FittingMatrix& f) {
  if (code.cols() != f.cols())
    raise(ErrorKind::DimensionMismatch,
          "code has " + std::to_string(code.cols()) + " columns, problem has " +
              std::to_string(f.cols()));
}

// Constraints for row `row`: one equation per non-X column c of f,
// sum_k d_k * code(k, c) = (1 at the demand column, 0 elsewhere).
bool solve_row(const Mat& code, const FittingMatrix& f, int row,
               RowScratch& ws) {
  const int r = code.rows();
  int n = 0;
  ws.a.resize(static_cast<size_t>(f.cols()) * r);
  ws.b.resize(f.cols());
  ws.x.resize(r);
  for (int c = 0; c < f.cols(); ++c) {
    PatternEntry e = f.at(row, c);
    if (e == PatternEntry::Star) continue;
    for (int k = 0; k < r; ++k)
      ws.a[static_cast<size_t>(n) * r + k] = code(k, c);
    ws.b[n] = e == PatternEntry::One ? 1 : 0;
    ++n;
  }
  return detail::solve_linear_inplace(ws.a.data(), n, r, ws.b.data(),
                                      ws.x.data(), code.field());
}

}  // namespace

std::optional<Mat> find_decoding(const Mat& code, const FittingMatrix& f) {
  check_dims(code, f);
  RowScratch ws;
  Mat d(f.rows(), code.rows(), code.field());
  for (int t = 0; t < f.rows(); ++t) {
    if (!solve_row(code, f, t, ws)) return std::nullopt;
    for (int k = 0; k < code.rows(); ++k) d(t, k) = ws.x[k];
  }
  return d;
}

bool verify_code(const Mat& code, const FittingMatrix& f) {
  check_dims(code, f);
  RowScratch ws;
  for (int t = 0; t < f.rows(); ++t)
    if (!solve_row(code, f, t, ws)) return false;
  return true;
}

std::vector<Elem> encode(const Mat& code, std::span<const Elem> x) {
  if (code.cols() != static_cast<int>(x.size()))
    raise(ErrorKind::DimensionMismatch, "message vector length mismatch");
  const Field& fld = code.field();
  std::vector<Elem> y(code.rows(), 0);
  for (int i = 0; i < code.rows(); ++i) {
    Elem acc = 0;
    for (int j = 0; j < code.cols(); ++j) acc = fld.add(acc, fld.mul(code(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Elem receiver_decode(std::span<const Elem> d_row, const Mat& code,
                     std::span<const Elem> y,
                     const std::map<int, Elem>& side_values,
                     const FittingMatrix& f, int row) {
  if (static_cast<int>(d_row.size()) != code.rows() ||
      static_cast<int>(y.size()) != code.rows())
    raise(ErrorKind::DimensionMismatch, "decoding row length mismatch");
  if (code.cols() != f.cols())
    raise(ErrorKind::DimensionMismatch, "code/problem column mismatch");
  const Field& fld = code.field();
  Elem acc = 0;
  for (int k = 0; k < code.rows(); ++k) acc = fld.add(acc, fld.mul(d_row[k], y[k]));
  for (int j = 0; j < f.cols(); ++j) {
    if (f.at(row, j) != PatternEntry::Star) continue;
    Elem w = 0;
    for (int k = 0; k < code.rows(); ++k) w = fld.add(w, fld.mul(d_row[k], code(k, j)));
    if (w == 0) continue;
    auto it = side_values.find(j + 1);
    if (it == side_values.end())
      raise(ErrorKind::MissingSideValue,
            "no side value for message " + std::to_string(j + 1));
    acc = fld.sub(acc, fld.mul(w, it->second));
  }
  return acc;
}

}  // namespace icx
