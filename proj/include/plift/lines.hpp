#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plift/field.hpp"

namespace plift {

// The line L(T) = (T, alpha*T + beta). Simple means alpha != 0 and beta != 0:
// the line avoids the origin and is neither horizontal nor a line through 0.
// Distinct (alpha, beta) give distinct point sets.
struct SimpleLine {
  Elem alpha = 0;
  Elem beta = 0;
  bool operator==(const SimpleLine&) const = default;
};

void require_simple(SimpleLine line);

// All s*t simple lines with alpha ranging over the order-s subgroup and beta
// over the order-t subgroup, in (alpha, beta) lexicographic order.
struct LineFamily {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::vector<Elem> alphas;               // sorted
  std::vector<Elem> betas;                // sorted
  std::vector<SimpleLine> lines;
  std::vector<std::uint8_t> beta_member;  // size-q indicator of the beta subgroup
};

LineFamily family(const Field& f, std::uint32_t s, std::uint32_t t);

// The q points (T, alpha*T + beta) in T order. None of them is the origin.
std::vector<std::pair<Elem, Elem>> points_of(const Field& f, SimpleLine line);

// Family lines through (x, y) != (0, 0), in family order. For each alpha the
// intercept beta = y - alpha*x is forced; the line exists iff that beta lies
// in the beta subgroup.
std::vector<SimpleLine> lines_through(const Field& f, const LineFamily& fam, Elem x, Elem y);

}  // namespace plift
