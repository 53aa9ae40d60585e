#pragma once

#include <cstdint>
#include <vector>

namespace plift {

// Element of GF(2^ell), stored as its ell-bit polynomial representation.
using Elem = std::uint16_t;

// GF(2^ell) arithmetic for 1 <= ell <= 16 via exp/log tables over a fixed
// primitive modulus. Addition is XOR; the multiplicative group is cyclic of
// order q-1, generated by the class of x (value 2, or value 1 when ell == 1).
class Field {
public:
  explicit Field(unsigned ell);
  // Builds tables under a caller-supplied modulus (bit mask with the x^ell
  // bit set). Throws if the modulus is not primitive: table construction
  // doubles as the self-check.
  Field(unsigned ell, std::uint32_t modulus);

  unsigned ell() const { return ell_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t modulus() const { return modulus_; }
  Elem generator() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Elem inv(Elem a) const;

  // a^e with signed exponent; a^{-k} means (a^{-1})^k. Convention 0^0 = 1.
  Elem pow(Elem a, std::int64_t e) const;

  // Sorted elements of the unique multiplicative subgroup of order d | q-1.
  std::vector<Elem> subgroup(std::uint32_t d) const;

  // Discrete log base generator(); defined for a != 0.
  std::uint32_t dlog(Elem a) const;
  // generator()^e for 0 <= e < 2(q-1); the table holds two periods so hot
  // loops can add two logs without a modular reduction.
  Elem gpow(std::uint32_t e) const { return exp_[e]; }

  static std::uint32_t canonical_modulus(unsigned ell);

private:
  unsigned ell_;
  std::uint32_t q_;
  std::uint32_t modulus_;
  std::vector<Elem> exp_;           // size 2(q-1), exp_[i] = generator^i
  std::vector<std::uint32_t> log_;  // size q, inverse of exp_ on [1, q)

  void build_tables();
};

}  // namespace plift
