// Deterministic random generators shared by the unit and acceptance
// suites. Everything is driven by SplitMix64 so failures reproduce.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "icx/fitting.hpp"
#include "icx/involution.hpp"
#include "icx/rng.hpp"

namespace icx::testutil {

inline Mat random_mat(SplitMix64& rng, int rows, int cols, const Field& f) {
  Mat m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = static_cast<Elem>(rng.next_below(f.modulus()));
  return m;
}

inline Mat random_full_row_rank(SplitMix64& rng, int rows, int cols,
                                const Field& f) {
  for (;;) {
    Mat m = random_mat(rng, rows, cols, f);
    if (rank(m) == rows) return m;
  }
}

// A valid fitting matrix: the first K demands cover every column, extra
// rows demand random columns, and each remaining cell is an X with
// probability star_pct/100.
inline FittingMatrix random_fitting(SplitMix64& rng, int rows, int cols,
                                    int star_pct) {
  FittingMatrix f(rows, cols);
  std::vector<int> demand(rows);
  for (int i = 0; i < rows; ++i)
    demand[i] = i < cols ? i : static_cast<int>(rng.next_below(cols));
  // Shuffle demands so the covering rows are not always the first K.
  for (int i = rows - 1; i > 0; --i)
    std::swap(demand[i], demand[rng.next_below(i + 1)]);
  for (int i = 0; i < rows; ++i) {
    f.set(i, demand[i], PatternEntry::One);
    for (int j = 0; j < cols; ++j)
      if (j != demand[i] && rng.next_below(100) < static_cast<unsigned>(star_pct))
        f.set(i, j, PatternEntry::Star);
  }
  return f;
}

// Fitting matrix with at most max_stars X entries in total.
inline FittingMatrix random_fitting_bounded_stars(SplitMix64& rng, int rows,
                                                  int cols, int max_stars) {
  FittingMatrix f = random_fitting(rng, rows, cols, 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (f.at(i, j) == PatternEntry::Zero) cells.emplace_back(i, j);
  for (int i = static_cast<int>(cells.size()) - 1; i > 0; --i)
    std::swap(cells[i], cells[rng.next_below(i + 1)]);
  int stars = static_cast<int>(rng.next_below(max_stars + 1));
  for (int s = 0; s < stars && s < static_cast<int>(cells.size()); ++s)
    f.set(cells[s].first, cells[s].second, PatternEntry::Star);
  return f;
}

inline Permutation random_permutation(SplitMix64& rng, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(img[i], img[rng.next_below(i + 1)]);
  return Permutation(std::move(img));
}

// Random involution: repeatedly pair up unused points or leave them fixed.
inline Involution random_involution(SplitMix64& rng, int n) {
  std::vector<int> img(n, 0);
  std::vector<int> unused;
  for (int i = n; i >= 1; --i) unused.push_back(i);
  while (!unused.empty()) {
    int a = unused.back();
    unused.pop_back();
    if (!unused.empty() && rng.next_below(2) == 0) {
      size_t pick = rng.next_below(unused.size());
      int b = unused[pick];
      unused.erase(unused.begin() + pick);
      img[a - 1] = b;
      img[b - 1] = a;
    } else {
      img[a - 1] = a;
    }
  }
  return Involution(Permutation(std::move(img)));
}

}  // namespace icx::testutil
