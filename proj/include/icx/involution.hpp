#pragma once

#include <string>
#include <vector>

#include "icx/mat.hpp"

namespace icx {

// Permutation of [1..n], 1-based to match cycle notation.
class Permutation {
public:
  // images[i-1] is the image of i; must be a bijection of [1..n].
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[i - 1]; }

  // Disjoint cycles, each starting at its minimum element, sorted by
  // minimum element; fixed points included.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Permutation& other) const { return img_ == other.img_; }
  bool operator!=(const Permutation& other) const { return !(*this == other); }

private:
  std::vector<int> img_;
};

bool is_involutory(const Permutation& p);

// A permutation with every cycle of length <= 2; as a matrix C this means
// C*C = I and C = C^T.
class Involution {
public:
  explicit Involution(Permutation p);

  static Involution identity(int n) { return Involution(Permutation::identity(n)); }

  const Permutation& perm() const noexcept { return p_; }
  int size() const noexcept { return p_.size(); }
  int image(int i) const { return p_.image(i); }
  bool is_fixed(int i) const { return p_.image(i) == i; }

  bool operator==(const Involution& other) const { return p_ == other.p_; }

private:
  Permutation p_;
};

// Cycle notation: concatenated parenthesized groups, e.g. "(13)(2)" or
// "(1 4)(2 3)(5)(6)(7)". Inside a group, elements are separated by spaces
// or commas; a group with no separators is read one digit per element, so
// sizes above 9 require separators. Fixed points may be omitted; `size`
// fixes the ground set.
Permutation parse_cycles(const std::string& text, int size);

// Prints every cycle including fixed points; elements are packed as single
// digits when the size allows, space-separated otherwise.
std::string format_cycles(const Permutation& p);

// Row-permutation matrix: pre-multiplication moves row i to row image(i),
// i.e. entry (image(i), i) is 1.
Mat to_matrix(const Permutation& p, Field field);

// The diagonal 0/1 matrix with a 1 exactly at the fixed points of the
// involution.
Mat fixed_point_projector(const Involution& c, Field field);

// Y = I + C - C1; commutes with C.
Mat commuting_y(const Involution& c, Field field);

bool commutes(const Mat& a, const Mat& c);

}  // namespace icx
