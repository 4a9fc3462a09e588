#include "icx/extension.hpp"

#include <algorithm>

namespace icx {

BlockLayout::BlockLayout(int message_count, int block_size,
                         std::vector<std::vector<int>> blocks)
    : message_count_(message_count), block_size_(block_size),
      blocks_(std::move(blocks)) {
  if (message_count_ < 1 || block_size_ < 1)
    raise(ErrorKind::LayoutMismatch, "layout sizes must be positive");
  std::vector<bool> used(message_count_, false);
  for (size_t b = 0; b < blocks_.size(); ++b) {
    auto& blk = blocks_[b];
    if (static_cast<int>(blk.size()) != block_size_)
      raise(ErrorKind::LayoutMismatch,
            "block " + std::to_string(b + 1) + " has " +
                std::to_string(blk.size()) + " columns, expected " +
                std::to_string(block_size_));
    std::sort(blk.begin(), blk.end());
    for (int c : blk) {
      if (c < 1 || c > message_count_)
        raise(ErrorKind::LayoutMismatch,
              "column " + std::to_string(c) + " out of range");
      if (used[c - 1])
        raise(ErrorKind::LayoutMismatch,
              "column " + std::to_string(c) + " appears in two blocks");
      used[c - 1] = true;
    }
  }
}

std::vector<int> BlockLayout::residual() const {
  std::vector<bool> used(message_count_, false);
  for (const auto& blk : blocks_)
    for (int c : blk) used[c - 1] = true;
  std::vector<int> out;
  for (int c = 1; c <= message_count_; ++c)
    if (!used[c - 1]) out.push_back(c);
  return out;
}

BlockLayout BlockLayout::consecutive(int block_size, int block_count) {
  std::vector<std::vector<int>> blocks(block_count);
  for (int b = 0; b < block_count; ++b) {
    blocks[b].resize(block_size);
    for (int k = 0; k < block_size; ++k) blocks[b][k] = b * block_size + k + 1;
  }
  return BlockLayout(block_size * block_count, block_size, std::move(blocks));
}

namespace {

void require_seed(const Mat& code, const FittingMatrix& f) {
  if (!verify_code(code, f))
    raise(ErrorKind::SeedCodeInvalid, "the given code does not solve the problem");
}

FittingMatrix two_order_assemble(const FittingMatrix& f, const XPattern& b) {
  const int L = f.rows(), K = f.cols();
  FittingMatrix out(2 * L, 2 * K);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < K; ++j) {
      out.set(i, j, f.at(i, j));
      out.set(L + i, K + j, f.at(i, j));
      out.set(i, K + j, b.at(i, j));
      out.set(L + i, j, b.at(i, j));
    }
  return out;
}

// The constructions are backed by proofs; a verification failure here
// would mean a bug, so it is fatal rather than a domain error.
void check_result(const ExtensionResult& res) {
  if (!verify_code(res.g_ext, res.f_ext))
    throw std::logic_error("constructed extension failed verification");
}

}  // namespace

ExtensionResult replicate_extension(const FittingMatrix& f, const Mat& code,
                                    int m) {
  if (m < 1) raise(ErrorKind::Shape, "replication order must be >= 1");
  require_seed(code, f);
  if (m == 1) return {f, code, std::nullopt};

  const int L = f.rows(), K = f.cols();
  XPattern relaxed = x_relax(f);
  FittingMatrix f_ext(m * L, m * K);
  for (int bi = 0; bi < m; ++bi)
    for (int bj = 0; bj < m; ++bj)
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < K; ++j)
          f_ext.set(bi * L + i, bj * K + j,
                    bi == bj ? f.at(i, j) : relaxed.at(i, j));
  Mat g_ext = code;
  for (int copy = 1; copy < m; ++copy) g_ext = hconcat(g_ext, code);
  ExtensionResult res{std::move(f_ext), std::move(g_ext), std::move(relaxed)};
  check_result(res);
  return res;
}

ExtensionResult derive_bxx(const FittingMatrix& f, const Mat& code,
                           const Mat& c) {
  const int r = code.rows();
  if (c.rows() != r || c.cols() != r)
    raise(ErrorKind::DimensionMismatch, "c must be r x r");
  if (c.field() != code.field())
    raise(ErrorKind::FieldMismatch, "c and code fields differ");
  if (c * c != Mat::identity(r, c.field()))
    raise(ErrorKind::NotInvolutory, "c squared is not the identity");
  auto d = find_decoding(code, f);
  if (!d) raise(ErrorKind::SeedCodeInvalid, "the given code does not solve the problem");

  Mat dcg = *d * c * code;
  XPattern b(f.rows(), f.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (dcg(i, j) != 0) b.set(i, j, PatternEntry::Star);

  ExtensionResult res{two_order_assemble(f, b), hconcat(code, c * code), b};
  check_result(res);
  return res;
}

XPattern structured_bxx(const FittingMatrix& f, const BlockLayout& layout,
                        const Involution& c) {
  if (layout.block_size() != c.size())
    raise(ErrorKind::LayoutMismatch, "block size does not match involution size");
  if (layout.message_count() != f.cols())
    raise(ErrorKind::LayoutMismatch, "layout does not match column count");

  // Start from f with each block's columns permuted: position i of a
  // block takes the source column at position image(i).
  std::vector<std::vector<PatternEntry>> cols(f.cols());
  for (int j = 0; j < f.cols(); ++j) {
    cols[j].resize(f.rows());
    for (int i = 0; i < f.rows(); ++i) cols[j][i] = f.at(i, j);
  }
  XPattern b(f.rows(), f.cols());
  std::vector<bool> in_block(f.cols(), false);
  for (const auto& blk : layout.blocks()) {
    for (int pos = 1; pos <= layout.block_size(); ++pos) {
      int dst = blk[pos - 1] - 1;
      int src = blk[c.image(pos) - 1] - 1;
      in_block[dst] = true;
      for (int i = 0; i < f.rows(); ++i) {
        PatternEntry e = cols[src][i];
        b.set(i, dst, e == PatternEntry::Zero ? PatternEntry::Zero
                                              : PatternEntry::Star);
      }
    }
  }
  // Residual columns become all-X.
  for (int j = 0; j < f.cols(); ++j)
    if (!in_block[j])
      for (int i = 0; i < f.rows(); ++i) b.set(i, j, PatternEntry::Star);
  return b;
}

ExtensionResult involutory_block_extension(const FittingMatrix& f,
                                           const Mat& code,
                                           const BlockLayout& layout,
                                           const Involution& c) {
  if (layout.block_size() != c.size() || layout.block_size() != code.rows())
    raise(ErrorKind::LayoutMismatch,
          "block size must equal both the code length and the involution size");
  if (layout.message_count() != code.cols())
    raise(ErrorKind::LayoutMismatch, "layout does not match code columns");
  Mat cm = to_matrix(c.perm(), code.field());
  for (size_t b = 0; b < layout.blocks().size(); ++b) {
    std::vector<int> cols0;
    for (int col : layout.blocks()[b]) cols0.push_back(col - 1);
    if (!commutes(select_cols(code, cols0), cm))
      raise(ErrorKind::CommutationViolation,
            "code block " + std::to_string(b + 1) +
                " does not commute with the involution matrix");
  }
  require_seed(code, f);
  XPattern b = structured_bxx(f, layout, c);
  ExtensionResult res{two_order_assemble(f, b), hconcat(code, cm * code), b};
  check_result(res);
  return res;
}

ExtensionResult systematic_extension(const FittingMatrix& f, const Mat& code,
                                     const Involution& c) {
  const int r = code.rows();
  if (c.size() != r)
    raise(ErrorKind::LayoutMismatch, "involution size must equal the code length");
  Rref reduced = rref(code);
  if (static_cast<int>(reduced.pivot_cols.size()) < r)
    raise(ErrorKind::RankDeficient, "code must have full row rank");
  // The pivot columns of the reduced form are the lexicographically first
  // independent column set, and the reduced code is the identity there.
  std::vector<std::vector<int>> blocks(1);
  for (int c0 : reduced.pivot_cols) blocks[0].push_back(c0 + 1);
  BlockLayout layout(code.cols(), r, std::move(blocks));
  return involutory_block_extension(f, reduced.mat, layout, c);
}

std::optional<Mat> recover_involution(const Mat& code, const Mat& a) {
  if (a.rows() != code.rows() || a.cols() != code.cols())
    raise(ErrorKind::DimensionMismatch, "A must have the shape of the code");
  if (a.field() != code.field())
    raise(ErrorKind::FieldMismatch, "A and code fields differ");
  const int r = code.rows();
  if (rank(code) != r) return std::nullopt;
  if (rank(vconcat(hconcat(code, a), hconcat(a, code))) != r) return std::nullopt;

  // Row j of C solves c_j * (code | a) = (a_j | g_j).
  Mat system = vconcat(transpose(code), transpose(a));
  Mat cmat(r, r, code.field());
  for (int j = 0; j < r; ++j) {
    std::vector<Elem> rhs;
    rhs.reserve(2 * code.cols());
    auto arow = a.row_span(j);
    auto grow = code.row_span(j);
    rhs.insert(rhs.end(), arow.begin(), arow.end());
    rhs.insert(rhs.end(), grow.begin(), grow.end());
    auto x = solve_affine(system, rhs);
    if (!x) return std::nullopt;
    for (int k = 0; k < r; ++k) cmat(j, k) = (*x)[k];
  }
  if (cmat * cmat != Mat::identity(r, code.field()) || cmat * code != a)
    throw std::logic_error("recovered matrix violates its contract");
  return cmat;
}

}  // namespace icx
