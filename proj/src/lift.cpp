#include "plift/lift.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plift {

ClassIndex class_index(std::uint32_t a, std::uint32_t b, std::uint32_t s, std::uint32_t t) {
  if (s == 0 || t == 0) throw std::invalid_argument("class moduli must be positive");
  return {a % s, (a + b) % t};
}

EijTable eij_table(const Field& f, std::uint32_t s, std::uint32_t t) {
  if (s == 0 || t == 0 || (f.q() - 1) % s != 0 || (f.q() - 1) % t != 0)
    throw std::invalid_argument("class moduli must divide q - 1");
  EijTable table;
  for (std::uint32_t m = 0; m < f.q(); ++m) {
    for (std::uint32_t n = m;; n = (n - 1) & m) {
      ++table[class_key(m % s, n % t, t)];
      if (n == 0) break;
    }
  }
  return table;
}

std::uint64_t e_st(const Field& f, std::uint32_t s, std::uint32_t t) {
  return eij_table(f, s, t).size();
}

std::vector<BasisPoly> build_basis(const Field& f, std::uint32_t s, std::uint32_t t) {
  if (s == 0 || t == 0 || (f.q() - 1) % s != 0 || (f.q() - 1) % t != 0)
    throw std::invalid_argument("class moduli must divide q - 1");
  const std::uint32_t q = f.q();
  std::vector<BasisPoly> basis;
  // Not-good monomials per class, in lexicographic (a, b) arrival order; the
  // ordered map fixes the emission order of the binomial block.
  std::map<std::uint64_t, std::vector<Monomial>> by_class;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      const Monomial m{a, b};
      if (is_good(f, m)) {
        basis.push_back({m, std::nullopt});
      } else {
        const ClassIndex c = class_index(a, b, s, t);
        by_class[class_key(c.i, c.j, t)].push_back(m);
      }
    }
  for (const auto& [key, members] : by_class)
    for (std::size_t k = 1; k < members.size(); ++k)
      basis.push_back({members[0], members[k]});
  return basis;
}

LiftCode build_code(const Field& f, std::uint32_t s, std::uint32_t t) {
  return {f, family(f, s, t), build_basis(f, s, t), e_st(f, s, t)};
}

std::uint32_t point_index(const Field& f, Elem x, Elem y) {
  if (x == 0 && y == 0) throw std::invalid_argument("the origin is punctured");
  return static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(x) * f.q() + y - 1);
}

std::pair<Elem, Elem> index_point(const Field& f, std::uint32_t index) {
  const std::uint64_t full = static_cast<std::uint64_t>(index) + 1;
  if (full >= static_cast<std::uint64_t>(f.q()) * f.q())
    throw std::out_of_range("point index out of range");
  return {static_cast<Elem>(full / f.q()), static_cast<Elem>(full % f.q())};
}

namespace {

// Adds one monomial term to a row of evaluations. Power tables per term make
// each entry a single table multiply.
void accumulate_term(const Field& f, Monomial term, bool include_origin, Elem* row) {
  const std::uint32_t q = f.q();
  std::vector<Elem> xa(q), yb(q);
  for (std::uint32_t v = 0; v < q; ++v) {
    xa[v] = f.pow(static_cast<Elem>(v), term.a);
    yb[v] = f.pow(static_cast<Elem>(v), term.b);
  }
  std::size_t col = 0;
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      if (!include_origin && x == 0 && y == 0) continue;
      row[col++] ^= f.mul(xa[x], yb[y]);
    }
}

}  // namespace

Matrix evaluation_matrix(const LiftCode& code, bool include_origin) {
  const Field& f = code.field;
  const std::uint64_t cols =
      include_origin ? static_cast<std::uint64_t>(f.q()) * f.q() : code.n();
  Matrix m;
  m.rows = static_cast<std::uint32_t>(code.basis.size());
  m.cols = static_cast<std::uint32_t>(cols);
  m.data.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
  for (std::uint32_t r = 0; r < m.rows; ++r) {
    Elem* row = &m.data[static_cast<std::size_t>(r) * m.cols];
    accumulate_term(f, code.basis[r].first, include_origin, row);
    if (code.basis[r].second)
      accumulate_term(f, *code.basis[r].second, include_origin, row);
  }
  return m;
}

Matrix generator_matrix(const LiftCode& code) { return evaluation_matrix(code, false); }

std::uint32_t matrix_rank(const Field& f, Matrix m) {
  std::uint32_t rank = 0;
  for (std::uint32_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::uint32_t p = rank;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != rank)
      std::swap_ranges(&m.at(p, c), &m.at(p, 0) + m.cols, &m.at(rank, c));
    const Elem piv_inv = f.inv(m.at(rank, c));
    const Elem* src = &m.at(rank, c);
    const std::uint32_t len = m.cols - c;
    for (std::uint32_t r = rank + 1; r < m.rows; ++r) {
      const Elem v = m.at(r, c);
      if (v == 0) continue;
      const Elem factor = f.mul(v, piv_inv);
      Elem* dst = &m.at(r, c);
      for (std::uint32_t k = 0; k < len; ++k) dst[k] = f.add(dst[k], f.mul(factor, src[k]));
    }
    ++rank;
  }
  return rank;
}

std::uint32_t exact_dimension(const LiftCode& code) {
  return matrix_rank(code.field, generator_matrix(code));
}

std::optional<RestrictionFailure> find_bad_restriction(const LiftCode& code) {
  for (std::size_t i = 0; i < code.basis.size(); ++i)
    for (const SimpleLine& line : code.fam.lines)
      if (line_sum(code.field, code.basis[i], line) != 0)
        return RestrictionFailure{i, line};
  return std::nullopt;
}

bool verify_basis(const LiftCode& code) { return !find_bad_restriction(code).has_value(); }

}  // namespace plift
