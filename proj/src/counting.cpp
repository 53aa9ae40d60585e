#include "plift/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plift {

std::string u128_str(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

TripleCounts recurse_counts(unsigned r) {
  // Counts grow like (5 + sqrt 5)^r; r <= 40 keeps them inside 128 bits.
  if (r > 40) throw std::invalid_argument("recursion depth must be at most 40");
  u128 no = 1, yes = 0, maybe = 0;
  for (unsigned i = 0; i < r; ++i) {
    const u128 no2 = 3 * no;
    const u128 yes2 = 3 * no + 6 * yes + 4 * maybe;
    const u128 maybe2 = no + yes + 4 * maybe;
    no = no2;
    yes = yes2;
    maybe = maybe2;
  }
  return {r, no, yes, maybe};
}

TripleCounts brute_valid_triples(unsigned r) {
  if (r > 6) throw std::invalid_argument("exhaustive triple enumeration needs r <= 6");
  const std::uint32_t size = 1u << r;
  const std::uint32_t mask = size - 1;
  TripleCounts out;
  out.r = r;
  for (std::uint32_t y = 0; y < size; ++y)
    for (std::uint32_t c0 = 0; c0 < size; ++c0)
      for (std::uint32_t c1 = 0; c1 < size; ++c1) {
        bool below = false, above = false;
        for (std::uint32_t a0 = c0;; a0 = (a0 + 1) | c0) {
          for (std::uint32_t a1 = c1;; a1 = (a1 + 1) | c1) {
            if (((a0 + a1) & mask) == y) {
              if (a0 + a1 < size) below = true;
              else above = true;
            }
            if (a1 == mask) break;
          }
          if (a0 == mask) break;
        }
        if (below && above) ++out.maybe_carry;
        else if (below) ++out.no_carry;
        else if (above) ++out.yes_carry;
      }
  return out;
}

std::uint64_t brute_valid_pairs(unsigned ell) {
  if (ell == 0 || ell % 2 != 0 || ell > 20)
    throw std::invalid_argument("pair enumeration needs even ell in [2, 20]");
  const std::uint32_t q = 1u << ell;
  const std::uint32_t s = (1u << (ell / 2)) - 1;
  std::vector<bool> seen(static_cast<std::uint64_t>(s) * (q - 1), false);
  for (std::uint32_t a = 0; a < q; ++a) {
    const std::uint64_t row = static_cast<std::uint64_t>(a % s) * (q - 1);
    for (std::uint32_t c = a;; c = (c - 1) & a) {
      if (c != q - 1) seen[row + c] = true;
      if (c == 0) break;
    }
  }
  return static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), true));
}

u128 pairs_bound(unsigned ell) {
  if (ell == 0 || ell % 2 != 0) throw std::invalid_argument("ell must be even and positive");
  const TripleCounts c = recurse_counts(ell / 2);
  return c.no_carry + c.yes_carry + 2 * c.maybe_carry;
}

std::vector<GrowthRow> growth_check(unsigned ell_max) {
  const long double lambda = 5.0L + std::sqrt(5.0L);
  std::vector<GrowthRow> rows;
  for (unsigned ell = 2; ell <= ell_max; ell += 2) {
    const u128 bound = pairs_bound(ell);
    const long double ratio =
        static_cast<long double>(bound) / std::pow(lambda, static_cast<long double>(ell / 2));
    rows.push_back({ell, bound, static_cast<double>(ratio)});
  }
  return rows;
}

double growth_exponent() { return std::log2(5.0 + std::sqrt(5.0)) / 4.0; }

}  // namespace plift
