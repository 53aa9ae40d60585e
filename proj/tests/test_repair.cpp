#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "plift/field.hpp"
#include "plift/lift.hpp"
#include "plift/repair.hpp"

using namespace plift;

namespace {

std::vector<Elem> basis_row(const Matrix& gen, std::uint32_t r) {
  return {gen.data.begin() + std::size_t(r) * gen.cols,
          gen.data.begin() + std::size_t(r + 1) * gen.cols};
}

}  // namespace

TEST_CASE("repair groups are the punctured line points minus the target") {
  const Field f(3);
  const LiftCode code = build_code(f, 7, 7);
  for (std::uint32_t idx = 0; idx < code.n(); idx += 5) {
    const auto [x, y] = index_point(f, idx);
    const auto lines = lines_through(f, code.fam, x, y);
    const auto groups = repair_groups(code, idx);
    REQUIRE(groups.size() == lines.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
      CHECK(groups[g].target == idx);
      CHECK(groups[g].line == lines[g]);
      REQUIRE(groups[g].members.size() == f.q() - 1);
      std::set<std::uint32_t> uniq(groups[g].members.begin(), groups[g].members.end());
      CHECK(uniq.size() == f.q() - 1);
      CHECK(uniq.count(idx) == 0);
      for (const std::uint32_t m : groups[g].members) {
        const auto [mx, my] = index_point(f, m);
        CHECK(my == f.add(f.mul(groups[g].line.alpha, mx), groups[g].line.beta));
      }
    }
    // disjointness across the groups of one point
    std::set<std::uint32_t> all;
    std::size_t total = 0;
    for (const auto& g : groups) {
      all.insert(g.members.begin(), g.members.end());
      total += g.members.size();
    }
    CHECK(all.size() == total);
  }
}

TEST_CASE("every group of every point repairs every basis codeword") {
  const Field f(3);
  const LiftCode code = build_code(f, 7, 7);
  const Matrix gen = generator_matrix(code);
  std::uint64_t bad = 0;
  for (std::uint32_t idx = 0; idx < code.n(); ++idx) {
    const auto groups = repair_groups(code, idx);
    for (std::uint32_t r = 0; r < gen.rows; ++r) {
      const auto word = basis_row(gen, r);
      for (const auto& g : groups)
        if (repair_value(f, word, g) != word[idx]) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("repair value checks codeword length") {
  const Field f(2);
  const LiftCode code = build_code(f, 3, 3);
  const auto groups = repair_groups(code, 0);
  REQUIRE(!groups.empty());
  const std::vector<Elem> short_word(2, 0);
  CHECK_THROWS_AS(repair_value(f, short_word, groups[0]), std::out_of_range);
}

TEST_CASE("disjoint-group minimum and histogram, frozen for GF(16)") {
  const Field f(4);
  {
    const DrgpReport rep = min_drgp(build_code(f, 3, 15));
    CHECK(rep.s_min == 2);
    const std::map<std::uint32_t, std::uint64_t> expect{{2, 45}, {3, 210}};
    CHECK(rep.histogram == expect);
  }
  {
    const DrgpReport rep = min_drgp(build_code(f, 15, 15));
    CHECK(rep.s_min == 14);
    const std::map<std::uint32_t, std::uint64_t> expect{{14, 225}, {15, 30}};
    CHECK(rep.histogram == expect);
  }
}

TEST_CASE("histogram agrees with per-point group counts") {
  const Field f(3);
  const LiftCode code = build_code(f, 7, 7);
  const DrgpReport rep = min_drgp(code);
  std::map<std::uint32_t, std::uint64_t> recount;
  std::uint32_t lo = f.q();
  for (std::uint32_t idx = 0; idx < code.n(); ++idx) {
    const auto k = std::uint32_t(repair_groups(code, idx).size());
    ++recount[k];
    lo = std::min(lo, k);
  }
  CHECK(rep.histogram == recount);
  CHECK(rep.s_min == lo);
}

TEST_CASE("pseudo-random codewords are deterministic and in the code") {
  const Field f(4);
  const LiftCode code = build_code(f, 3, 15);
  const auto w1 = random_codeword(code, 42);
  const auto w2 = random_codeword(code, 42);
  const auto w3 = random_codeword(code, 43);
  REQUIRE(w1.size() == code.n());
  CHECK(w1 == w2);
  CHECK(w1 != w3);
  // membership: the symbols on every family line XOR to zero
  std::uint64_t bad = 0;
  for (const SimpleLine line : code.fam.lines) {
    Elem acc = 0;
    for (const auto [x, y] : points_of(f, line))
      acc = f.add(acc, w1[point_index(f, x, y)]);
    if (acc != 0) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("erasure simulation picks the first clean group") {
  const Field f(4);
  const LiftCode code = build_code(f, 3, 15);
  const auto word = random_codeword(code, 7);

  const std::uint32_t target = 20;
  const auto groups = repair_groups(code, target);
  REQUIRE(groups.size() >= 2);

  // nothing erased: the first group is used
  RepairAttempt a = simulate_erasures(code, word, {}, target);
  CHECK(a.success);
  CHECK(a.value == word[target]);
  CHECK(a.line == groups[0].line);

  // block the first group: the second one is used
  a = simulate_erasures(code, word, {groups[0].members[3]}, target);
  CHECK(a.success);
  CHECK(a.value == word[target]);
  CHECK(a.line == groups[1].line);

  // erasing the target itself does not block anything
  a = simulate_erasures(code, word, {target}, target);
  CHECK(a.success);
  CHECK(a.value == word[target]);

  // block every group: no repair
  std::vector<std::uint32_t> erased;
  for (const auto& g : groups) erased.push_back(g.members[0]);
  a = simulate_erasures(code, word, erased, target);
  CHECK_FALSE(a.success);
}
