#include "icx/minrank.hpp"

#include <algorithm>

namespace icx {

std::uint64_t subspace_count(int K, int r, const Field& field) {
  if (r < 0 || r > K) return 0;
  if (r == 0 || r == K) return 1;
  // q-Pascal recurrence [n,k] = [n-1,k-1] + q^k * [n-1,k], saturating.
  const unsigned __int128 cap = ~static_cast<std::uint64_t>(0);
  const int q = field.modulus();
  std::vector<unsigned __int128> row(r + 1, 0);
  row[0] = 1;
  for (int n = 1; n <= K; ++n) {
    for (int k = std::min(n, r); k >= 1; --k) {
      unsigned __int128 qk = 1;
      bool over = false;
      for (int i = 0; i < k; ++i) {
        qk *= static_cast<unsigned>(q);
        if (qk > cap) {
          over = true;
          break;
        }
      }
      unsigned __int128 v;
      if (row[k] == 0)
        v = row[k - 1];
      else if (over)
        v = cap + 1;
      else
        v = row[k - 1] + qk * row[k];
      row[k] = v > cap ? cap : v;
    }
  }
  return static_cast<std::uint64_t>(row[r]);
}

void enumerate_rref_bases(int K, int r, const Field& field,
                          const std::function<bool(const Mat&)>& visit) {
  if (r < 1 || r > K) raise(ErrorKind::Shape, "rank out of range [1, K]");
  const int p = field.modulus();
  std::vector<int> pivots(r);
  for (int i = 0; i < r; ++i) pivots[i] = i;

  Mat basis(r, K, field);
  std::vector<std::pair<int, int>> free_cells;

  while (true) {
    // Set up this pivot set: identity on pivot columns, free cells above
    // and to the right of the staircase.
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < K; ++j) basis(i, j) = 0;
    std::vector<bool> is_pivot(K, false);
    for (int i = 0; i < r; ++i) {
      basis(i, pivots[i]) = 1;
      is_pivot[pivots[i]] = true;
    }
    free_cells.clear();
    for (int i = 0; i < r; ++i)
      for (int j = pivots[i] + 1; j < K; ++j)
        if (!is_pivot[j]) free_cells.emplace_back(i, j);

    // Odometer over free cells, last cell fastest.
    while (true) {
      if (!visit(basis)) return;
      int k = static_cast<int>(free_cells.size()) - 1;
      while (k >= 0) {
        auto [i, j] = free_cells[k];
        if (basis(i, j) + 1 < p) {
          basis(i, j) = static_cast<Elem>(basis(i, j) + 1);
          break;
        }
        basis(i, j) = 0;
        --k;
      }
      if (k < 0) break;
    }

    // Next pivot combination in lexicographic order.
    int i = r - 1;
    while (i >= 0 && pivots[i] == K - r + i) --i;
    if (i < 0) return;
    ++pivots[i];
    for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

std::optional<Mat> is_achievable(const FittingMatrix& f, int r,
                                 const Field& field, std::uint64_t guard) {
  const int K = f.cols();
  if (r < 1 || r > K)
    raise(ErrorKind::Shape, "rank " + std::to_string(r) + " out of range [1, " +
                                std::to_string(K) + "]");
  std::uint64_t count = subspace_count(K, r, field);
  if (count > guard)
    raise(ErrorKind::ResourceGuard,
          "enumerating rank " + std::to_string(r) + " needs " +
              std::to_string(count) + " subspaces, guard is " +
              std::to_string(guard));
  std::optional<Mat> found;
  enumerate_rref_bases(K, r, field, [&](const Mat& basis) {
    if (verify_code(basis, f)) {
      found = basis;
      return false;
    }
    return true;
  });
  return found;
}

MinrankResult minrank(const FittingMatrix& f, const Field& field,
                      std::uint64_t guard) {
  f.validate();
  const int K = f.cols();
  std::vector<std::uint64_t> refuted;
  for (int r = 1; r <= K; ++r) {
    if (auto witness = is_achievable(f, r, field, guard))
      return {r, std::move(*witness), std::move(refuted)};
    refuted.push_back(subspace_count(K, r, field));
  }
  // Unreachable: r = K always succeeds (the identity code solves any
  // valid fitting matrix).
  raise(ErrorKind::Shape, "no code found up to rank K");
}

bool minrank_lower_bound_submatrix(const FittingMatrix& f_ext,
                                   const FittingMatrix& f) {
  if (f_ext.rows() < f.rows() || f_ext.cols() < f.cols())
    raise(ErrorKind::ContainmentViolation,
          "extension is smaller than the original");
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (f_ext.at(i, j) != f.at(i, j))
        raise(ErrorKind::ContainmentViolation,
              "top-left block differs at row " + std::to_string(i + 1) +
                  ", column " + std::to_string(j + 1));
  return true;
}

}  // namespace icx
