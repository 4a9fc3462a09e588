#pragma once

#include <map>
#include <optional>

#include "icx/fitting.hpp"

namespace icx {

// Builds the L x r decoding matrix D with D*code fitting f, or nullopt if
// no such D exists. Each row is solved independently: row t needs
// (d_t * code) to be 1 at the demand column and 0 at every 0 column of
// row t, X columns free. The solve is deterministic (lexicographic pivots,
// free variables zeroed), so D is reproducible.
std::optional<Mat> find_decoding(const Mat& code, const FittingMatrix& f);

// True iff find_decoding succeeds; aborts at the first infeasible row.
bool verify_code(const Mat& code, const FittingMatrix& f);

// The broadcast codeword code*x.
std::vector<Elem> encode(const Mat& code, std::span<const Elem> x);

// Receiver-side decoding for row `row` of f: returns
// d_row*y - sum over side columns j of (d_row*code)_j * side_values[j].
// side_values is keyed by 1-based message index; a value is required
// wherever the combination has a nonzero coefficient.
Elem receiver_decode(std::span<const Elem> d_row, const Mat& code,
                     std::span<const Elem> y,
                     const std::map<int, Elem>& side_values,
                     const FittingMatrix& f, int row);

}  // namespace icx
