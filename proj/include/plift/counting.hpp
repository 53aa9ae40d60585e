#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plift {

using u128 = unsigned __int128;

std::string u128_str(u128 v);

// Valid triples (y, c0, c1) in [0,2^r)^3: those with at least one witness
// pair (a0, a1), a0 >=_2 c0, a1 >=_2 c1, a0 + a1 = y mod 2^r. A triple is
// noCarry when every witness sum stays below 2^r, yesCarry when every
// witness sum reaches 2^r, maybeCarry when both kinds of witness exist.
struct TripleCounts {
  unsigned r = 0;
  u128 no_carry = 0;
  u128 yes_carry = 0;
  u128 maybe_carry = 0;
  bool operator==(const TripleCounts&) const = default;
};

// Exact counts via the one-bit-at-a-time recursion with transfer matrix
//   [no']      [3 0 0] [no]
//   [yes']  =  [3 6 4] [yes]
//   [maybe']   [1 1 4] [maybe],   start (1, 0, 0) at r = 0.
TripleCounts recurse_counts(unsigned r);

// Exact counts by exhaustive enumeration of triples and witnesses; r <= 6.
TripleCounts brute_valid_triples(unsigned r);

// Number of valid pairs (i, c) in [0, 2^{ell/2}-1) x [0, 2^ell-1): those with
// a witness a in [0, 2^ell), a = i mod (2^{ell/2}-1), c <=_2 a. Exhaustive
// submask walk; even ell <= 20. Equals e(sqrt(q)-1, q-1) for q = 2^ell.
std::uint64_t brute_valid_pairs(unsigned ell);

// Upper bound no + yes + 2*maybe at r = ell/2: a noCarry or yesCarry triple
// supports at most one valid pair and a maybeCarry triple at most two.
u128 pairs_bound(unsigned ell);

struct GrowthRow {
  unsigned ell = 0;
  u128 bound = 0;
  double ratio = 0.0;  // bound / (5 + sqrt 5)^{ell/2}
};

// Rows for even ell in [2, ell_max]. The ratio stays below a constant close
// to 1.1708 because 5 + sqrt 5 is the dominant transfer-matrix eigenvalue.
std::vector<GrowthRow> growth_check(unsigned ell_max);

// log2(5 + sqrt 5) / 4 = 0.71381...; with N = q^2 - 1 the pair bound grows
// like N to this power.
double growth_exponent();

}  // namespace plift
