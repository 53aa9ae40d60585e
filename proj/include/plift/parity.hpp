#pragma once

#include <cstdint>

namespace plift {

// The 2-shadow order: m <=_2 n iff every base-2 digit of m is at most the
// matching digit of n, i.e. the bit support of m is contained in that of n.
// The support of m is the mask m itself, so the test is one AND.
constexpr bool shadow_leq(std::uint64_t m, std::uint64_t n) { return (m & n) == m; }

// C(n, k) mod 2. By Lucas the binomial is odd exactly when k <=_2 n. This
// also covers k > n, where a submask relation is impossible and C(n, k) = 0.
constexpr unsigned binom_parity(std::uint64_t n, std::uint64_t k) {
  return shadow_leq(k, n) ? 1u : 0u;
}

}  // namespace plift
