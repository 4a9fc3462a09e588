#pragma once

#include <optional>

#include "icx/involution.hpp"
#include "icx/minrank.hpp"

namespace icx {

// Disjoint r-sized column blocks of a K-column code, 1-based. Columns not
// in any block form the residual set.
class BlockLayout {
public:
  BlockLayout(int message_count, int block_size,
              std::vector<std::vector<int>> blocks);

  int message_count() const noexcept { return message_count_; }
  int block_size() const noexcept { return block_size_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  std::vector<int> residual() const;

  static BlockLayout consecutive(int block_size, int block_count);

private:
  int message_count_;
  int block_size_;
  std::vector<std::vector<int>> blocks_;  // each sorted ascending
};

struct ExtensionResult {
  FittingMatrix f_ext;
  Mat g_ext;
  // Off-diagonal block pattern; x_relax(f) for replication, the
  // constructed pattern for the two-order builds. Absent when m = 1.
  std::optional<XPattern> off_diag;
};

// m-order extension: diagonal blocks are f, off-diagonal blocks are
// x_relax(f); the code is m horizontal copies of `code`.
ExtensionResult replicate_extension(const FittingMatrix& f, const Mat& code,
                                    int m);

// Two-order extension from an arbitrary involutory matrix c (c*c = I):
// computes the deterministic decoding matrix D, forms D*c*code, and takes
// the minimal X-pattern with an X exactly at its nonzero positions. The
// extension (f, B; B, f) is solved by (code | c*code).
ExtensionResult derive_bxx(const FittingMatrix& f, const Mat& code,
                           const Mat& c);

// The structured pattern: within each block the columns of f are permuted
// by the involution, every residual column becomes all-X, and finally all
// 1s become X.
XPattern structured_bxx(const FittingMatrix& f, const BlockLayout& layout,
                        const Involution& c);

// Structured two-order extension. Every block submatrix of `code` must
// commute with the involution's matrix.
ExtensionResult involutory_block_extension(const FittingMatrix& f,
                                           const Mat& code,
                                           const BlockLayout& layout,
                                           const Involution& c);

// Puts `code` in systematic form on its lexicographically first set of r
// independent columns, then applies the structured construction with that
// column set as the single block.
ExtensionResult systematic_extension(const FittingMatrix& f, const Mat& code,
                                     const Involution& c);

// Given full-row-rank G and A with (G A; A G) of rank r, recovers a matrix
// C with C*C = I and C*G = A; nullopt when the rank conditions fail.
std::optional<Mat> recover_involution(const Mat& code, const Mat& a);

}  // namespace icx
