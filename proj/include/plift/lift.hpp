#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plift/field.hpp"
#include "plift/lines.hpp"
#include "plift/monomial.hpp"

namespace plift {

// Residue class of a monomial: i = a mod s, j = (a + b) mod t. Two not-good
// monomials in the same class have equal top coefficients on every family
// line, so their sum restricts nicely on the whole family.
struct ClassIndex {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  bool operator==(const ClassIndex&) const = default;
};

ClassIndex class_index(std::uint32_t a, std::uint32_t b, std::uint32_t s, std::uint32_t t);

// Flat key i*t + j for class maps.
inline std::uint64_t class_key(std::uint32_t i, std::uint32_t j, std::uint32_t t) {
  return static_cast<std::uint64_t>(i) * t + j;
}

// class_key -> |E_{i,j}|, the number of pairs (m, n) in [0,q)^2 with
// n <=_2 m, m = i mod s and n = j mod t. Built by walking the 3^ell submask
// pairs instead of filtering all q^2 pairs. Only nonempty classes appear.
using EijTable = std::unordered_map<std::uint64_t, std::uint64_t>;
EijTable eij_table(const Field& f, std::uint32_t s, std::uint32_t t);

// e(s, t): the number of nonempty classes. The not-good monomials of class
// (i, j) are counted by |E_{i,j}|, less one for class (0, 0) whose top pair
// corresponds to the good monomial X^{q-1}Y^{q-1}.
std::uint64_t e_st(const Field& f, std::uint32_t s, std::uint32_t t);

// Basis of the lifted code: every good monomial, plus one binomial per extra
// not-good member of each class, pairing it with the lexicographically least
// not-good member. Size is at least q^2 - e(s, t).
std::vector<BasisPoly> build_basis(const Field& f, std::uint32_t s, std::uint32_t t);

struct LiftCode {
  Field field;
  LineFamily fam;
  std::vector<BasisPoly> basis;
  std::uint64_t e = 0;  // e(s, t)

  // Punctured block length q^2 - 1.
  std::uint64_t n() const {
    return static_cast<std::uint64_t>(field.q()) * field.q() - 1;
  }
  // Dimension bound for the span of all nicely-restricting polynomials.
  std::uint64_t k_bound() const {
    return static_cast<std::uint64_t>(field.q()) * field.q() - e;
  }
};

LiftCode build_code(const Field& f, std::uint32_t s, std::uint32_t t);

// Point order: full index x*q + y over [0,q)^2. The punctured code drops the
// origin (full index 0) and shifts the remaining indices down by one.
std::uint32_t point_index(const Field& f, Elem x, Elem y);
std::pair<Elem, Elem> index_point(const Field& f, std::uint32_t index);

struct Matrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<Elem> data;  // row-major

  Elem& at(std::uint32_t r, std::uint32_t c) {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  Elem at(std::uint32_t r, std::uint32_t c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

// Row r holds the evaluations of basis[r] at every point in point order,
// with or without the origin column.
Matrix evaluation_matrix(const LiftCode& code, bool include_origin);
// The punctured evaluation matrix; its row space is the code.
Matrix generator_matrix(const LiftCode& code);

// Exact rank over GF(q) by Gaussian elimination with first-nonzero pivoting.
std::uint32_t matrix_rank(const Field& f, Matrix m);

// Exact dimension K of the punctured code.
std::uint32_t exact_dimension(const LiftCode& code);

struct RestrictionFailure {
  std::size_t poly_index = 0;
  SimpleLine line;
};

// First basis element whose sum over some family line is nonzero, if any.
std::optional<RestrictionFailure> find_bad_restriction(const LiftCode& code);
bool verify_basis(const LiftCode& code);

}  // namespace plift
