#include "plift/repair.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace plift {

std::vector<RepairGroup> repair_groups(const LiftCode& code, std::uint32_t index) {
  const Field& f = code.field;
  const auto [x, y] = index_point(f, index);
  std::vector<RepairGroup> groups;
  for (const SimpleLine& line : lines_through(f, code.fam, x, y)) {
    RepairGroup g;
    g.target = index;
    g.line = line;
    g.members.reserve(f.q() - 1);
    for (const auto& [px, py] : points_of(f, line)) {
      const std::uint32_t p = point_index(f, px, py);
      if (p != index) g.members.push_back(p);
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

Elem repair_value(const Field& f, const std::vector<Elem>& codeword, const RepairGroup& g) {
  Elem acc = 0;
  for (const std::uint32_t p : g.members) acc = f.add(acc, codeword.at(p));
  return acc;
}

DrgpReport min_drgp(const LiftCode& code) {
  const Field& f = code.field;
  DrgpReport report;
  report.s_min = 0xffffffffu;
  const std::uint64_t n = code.n();
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    const auto [x, y] = index_point(f, static_cast<std::uint32_t>(idx));
    std::uint32_t count = 0;
    for (const Elem a : code.fam.alphas)
      if (code.fam.beta_member[f.add(y, f.mul(a, x))]) ++count;
    ++report.histogram[count];
    report.s_min = std::min(report.s_min, count);
  }
  return report;
}

RepairAttempt simulate_erasures(const LiftCode& code, const std::vector<Elem>& codeword,
                                std::vector<std::uint32_t> erased, std::uint32_t target) {
  std::sort(erased.begin(), erased.end());
  for (const RepairGroup& g : repair_groups(code, target)) {
    bool clean = true;
    for (const std::uint32_t p : g.members)
      if (std::binary_search(erased.begin(), erased.end(), p)) {
        clean = false;
        break;
      }
    if (clean) return {true, repair_value(code.field, codeword, g), g.line};
  }
  return {false, 0, {}};
}

std::vector<Elem> random_codeword(const LiftCode& code, std::uint64_t seed) {
  const Field& f = code.field;
  const std::uint32_t q = f.q();
  std::mt19937_64 rng(seed);
  std::vector<Elem> cw(code.n(), 0);
  std::vector<Elem> xa(q), yb(q);
  for (const BasisPoly& p : code.basis) {
    // q is a power of two, so masking the draw is exactly uniform.
    const Elem coef = static_cast<Elem>(rng() & (q - 1));
    if (coef == 0) continue;
    const auto accumulate = [&](Monomial term) {
      for (std::uint32_t v = 0; v < q; ++v) {
        xa[v] = f.pow(static_cast<Elem>(v), term.a);
        yb[v] = f.pow(static_cast<Elem>(v), term.b);
      }
      std::size_t idx = 0;
      for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) {
          if (x == 0 && y == 0) continue;
          const Elem v = f.mul(xa[x], yb[y]);
          if (v != 0) cw[idx] = f.add(cw[idx], f.mul(coef, v));
          ++idx;
        }
    };
    accumulate(p.first);
    if (p.second) accumulate(*p.second);
  }
  return cw;
}

}  // namespace plift
