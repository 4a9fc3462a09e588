#pragma once

#include <cstdint>
#include <string>

#include "icx/error.hpp"

namespace icx {

using Elem = std::uint8_t;

// A prime field GF(p), 2 <= p <= 251. Elements are canonical residues in
// [0, p) stored as Elem.
class Field {
public:
  explicit Field(int p) : p_(p) {
    if (p < 2 || p > 251 || !is_prime(p))
      raise(ErrorKind::NotPrime, "field modulus must be a prime in [2, 251], got " +
                                     std::to_string(p));
  }

  int modulus() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    int s = a + b;
    if (s >= p_) s -= p_;
    return static_cast<Elem>(s);
  }

  Elem sub(Elem a, Elem b) const noexcept {
    int s = a - b;
    if (s < 0) s += p_;
    return static_cast<Elem>(s);
  }

  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : static_cast<Elem>(p_ - a); }

  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((a * b) % p_);
  }

  // Multiplicative inverse of a nonzero element.
  Elem inv(Elem a) const {
    if (a == 0) raise(ErrorKind::Shape, "inverse of zero");
    // a^(p-2) by square-and-multiply
    int result = 1;
    int base = a;
    int e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = (result * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    return static_cast<Elem>(result);
  }

  bool operator==(const Field& other) const noexcept { return p_ == other.p_; }
  bool operator!=(const Field& other) const noexcept { return p_ != other.p_; }

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  int p_;
};

}  // namespace icx
