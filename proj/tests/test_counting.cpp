#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "plift/counting.hpp"
#include "plift/field.hpp"
#include "plift/lift.hpp"

using namespace plift;

TEST_CASE("decimal rendering of 128-bit values") {
  CHECK(u128_str(0) == "0");
  CHECK(u128_str(1) == "1");
  CHECK(u128_str(65536) == "65536");
  const u128 big = u128(1) << 100;
  CHECK(u128_str(big) == "1267650600228229401496703205376");
  CHECK(u128_str(u128(10'000'000'000'000'000'000ull) * 10) == "100000000000000000000");
}

TEST_CASE("frozen recursion values") {
  CHECK(recurse_counts(0) == TripleCounts{0, 1, 0, 0});
  CHECK(recurse_counts(1) == TripleCounts{1, 3, 3, 1});
  CHECK(recurse_counts(2) == TripleCounts{2, 9, 31, 10});
  CHECK(recurse_counts(3) == TripleCounts{3, 27, 253, 80});
}

TEST_CASE("recursion equals exhaustive witness enumeration") {
  for (unsigned r = 0; r <= 5; ++r) CHECK(brute_valid_triples(r) == recurse_counts(r));
}

TEST_CASE("recursion invariants") {
  u128 prev_no = 0;
  for (unsigned r = 0; r <= 40; ++r) {
    const TripleCounts c = recurse_counts(r);
    CHECK(c.r == r);
    // the no-carry family is exactly the 3^r sorted pairs
    u128 pow3 = 1;
    for (unsigned i = 0; i < r; ++i) pow3 *= 3;
    CHECK(c.no_carry == pow3);
    if (r > 0) CHECK(c.no_carry == 3 * prev_no);
    prev_no = c.no_carry;
    // every triple has at most one classification
    CHECK(c.no_carry + c.yes_carry + c.maybe_carry <= (u128(1) << (3 * std::min(r, 40u))));
  }
  CHECK_THROWS_AS(recurse_counts(41), std::invalid_argument);
  CHECK_THROWS_AS(brute_valid_triples(7), std::invalid_argument);
}

TEST_CASE("frozen pair counts and bounds") {
  CHECK(brute_valid_pairs(2) == 3);
  CHECK(brute_valid_pairs(4) == 41);
  CHECK(brute_valid_pairs(6) == 345);
  CHECK(brute_valid_pairs(8) == 2637);
  CHECK(pairs_bound(2) == 8);
  CHECK(pairs_bound(4) == 60);
  CHECK_THROWS_AS(brute_valid_pairs(3), std::invalid_argument);
  CHECK_THROWS_AS(brute_valid_pairs(0), std::invalid_argument);
  CHECK_THROWS_AS(brute_valid_pairs(22), std::invalid_argument);
  CHECK_THROWS_AS(pairs_bound(5), std::invalid_argument);
}

TEST_CASE("pair count equals the class count of the square-root family") {
  for (const unsigned ell : {2u, 4u, 6u, 8u}) {
    const Field f(ell);
    const std::uint32_t s = (1u << (ell / 2)) - 1;
    CHECK(brute_valid_pairs(ell) == e_st(f, s, f.q() - 1));
    CHECK(u128(brute_valid_pairs(ell)) <= pairs_bound(ell));
  }
}

TEST_CASE("bound growth tracks the dominant eigenvalue") {
  const auto rows = growth_check(40);
  REQUIRE(rows.size() == 20);
  const double lambda = 5.0 + std::sqrt(5.0);
  u128 prev = 0;
  for (const GrowthRow& row : rows) {
    CHECK(row.bound == pairs_bound(row.ell));
    CHECK(row.ratio > 0.0);
    CHECK(row.ratio < 1.18);
    if (row.ell >= 30) {
      // consecutive bounds multiply by almost exactly lambda
      const double step = double(row.bound) / double(prev);
      CHECK(std::abs(step / lambda - 1.0) < 0.01);
    }
    prev = row.bound;
  }
  CHECK(growth_exponent() == doctest::Approx(std::log2(5.0 + std::sqrt(5.0)) / 4.0));
  CHECK(std::llround(growth_exponent() * 10000.0) == 7138);
}
