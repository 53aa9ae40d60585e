#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plift/field.hpp"
#include "plift/lines.hpp"

namespace plift {

// X^a Y^b with 0 <= a, b <= q-1.
struct Monomial {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool operator==(const Monomial&) const = default;
};

// A basis element of the lifted code: a single monomial, or a two-term
// binomial X^{a1}Y^{b1} + X^{a2}Y^{b2} whose per-line top coefficients cancel.
struct BasisPoly {
  Monomial first;
  std::optional<Monomial> second;
  bool is_binomial() const { return second.has_value(); }
  bool operator==(const BasisPoly&) const = default;
};

// A monomial is good when its restriction to every simple line has degree
// below q-1; this never depends on which simple line is chosen. Closed form:
// X^{q-1}Y^{q-1} is good (its two top contributions cancel), and otherwise
// X^aY^b is good iff not (q-1-a) <=_2 b.
bool is_good(const Field& f, Monomial m);

// Number of good monomials, counted exhaustively over [0,q)^2.
std::uint64_t count_good(const Field& f);

// x^a y^b under the 0^0 = 1 convention.
Elem eval_monomial(const Field& f, Monomial m, Elem x, Elem y);
Elem eval_basis_poly(const Field& f, const BasisPoly& p, Elem x, Elem y);

// Coefficient of T^{q-1} in the restriction to a simple line; zero exactly
// when the restriction has degree below q-1. Closed form:
// binom(b, q-1-a) * alpha^{-a} * beta^{a+b}, the binomial read mod 2.
Elem leading_coeff(const Field& f, Monomial m, SimpleLine line);

// Sum of the polynomial over the q points of the line. Power sums over the
// whole field kill every T^j except j = q-1, so this equals the coefficient
// of T^{q-1} in the restriction: the direct, evaluation-only niceness test.
Elem line_sum(const Field& f, Monomial m, SimpleLine line);
Elem line_sum(const Field& f, const BasisPoly& p, SimpleLine line);

// Full coefficient vector (length q, index = degree) of the restriction,
// recovered by interpolating through all q points of the line.
std::vector<Elem> restrict_to_line(const Field& f, const BasisPoly& p, SimpleLine line);

}  // namespace plift
