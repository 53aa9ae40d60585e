#include "plift/monomial.hpp"

#include <stdexcept>

#include "plift/parity.hpp"

namespace plift {

namespace {

void check_exponents(const Field& f, Monomial m) {
  if (m.a >= f.q() || m.b >= f.q())
    throw std::invalid_argument("monomial exponent out of range");
}

}  // namespace

bool is_good(const Field& f, Monomial m) {
  check_exponents(f, m);
  const std::uint32_t top = f.q() - 1;
  if (m.a == top && m.b == top) return true;
  return !shadow_leq(top - m.a, m.b);
}

std::uint64_t count_good(const Field& f) {
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < f.q(); ++a)
    for (std::uint32_t b = 0; b < f.q(); ++b)
      if (is_good(f, {a, b})) ++count;
  return count;
}

Elem eval_monomial(const Field& f, Monomial m, Elem x, Elem y) {
  check_exponents(f, m);
  return f.mul(f.pow(x, m.a), f.pow(y, m.b));
}

Elem eval_basis_poly(const Field& f, const BasisPoly& p, Elem x, Elem y) {
  Elem v = eval_monomial(f, p.first, x, y);
  if (p.second) v = f.add(v, eval_monomial(f, *p.second, x, y));
  return v;
}

Elem leading_coeff(const Field& f, Monomial m, SimpleLine line) {
  require_simple(line);
  check_exponents(f, m);
  const std::uint32_t top = f.q() - 1;
  if (m.a == top && m.b == top) return 0;
  if (binom_parity(m.b, top - m.a) == 0) return 0;
  return f.mul(f.pow(line.alpha, -static_cast<std::int64_t>(m.a)),
               f.pow(line.beta, static_cast<std::int64_t>(m.a) + m.b));
}

Elem line_sum(const Field& f, Monomial m, SimpleLine line) {
  require_simple(line);
  check_exponents(f, m);
  Elem acc = 0;
  for (std::uint32_t T = 0; T < f.q(); ++T) {
    const Elem x = static_cast<Elem>(T);
    const Elem y = f.add(f.mul(line.alpha, x), line.beta);
    acc = f.add(acc, eval_monomial(f, m, x, y));
  }
  return acc;
}

Elem line_sum(const Field& f, const BasisPoly& p, SimpleLine line) {
  Elem acc = line_sum(f, p.first, line);
  if (p.second) acc = f.add(acc, line_sum(f, *p.second, line));
  return acc;
}

std::vector<Elem> restrict_to_line(const Field& f, const BasisPoly& p, SimpleLine line) {
  require_simple(line);
  const std::uint32_t q = f.q();
  std::vector<Elem> vals(q);
  for (std::uint32_t T = 0; T < q; ++T) {
    const Elem x = static_cast<Elem>(T);
    vals[T] = eval_basis_poly(f, p, x, f.add(f.mul(line.alpha, x), line.beta));
  }
  // Interpolation through all q points: every Lagrange denominator is the
  // product of all nonzero elements, which is 1, and the quotient
  // (T^q - T)/(T - x) has coefficient x^{q-1-j} at T^j. Hence
  //   c_0 = value at 0,   c_j = sum_x vals[x] x^{q-1-j}   (j >= 1, 0^0 = 1).
  std::vector<Elem> coeffs(q, 0);
  coeffs[0] = vals[0];
  for (std::uint32_t j = 1; j < q; ++j) {
    Elem c = 0;
    for (std::uint32_t x = 0; x < q; ++x)
      c = f.add(c, f.mul(vals[x], f.pow(static_cast<Elem>(x), q - 1 - j)));
    coeffs[j] = c;
  }
  return coeffs;
}

}  // namespace plift
