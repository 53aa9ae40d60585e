#include "plift/lines.hpp"

#include <stdexcept>

namespace plift {

void require_simple(SimpleLine line) {
  if (line.alpha == 0 || line.beta == 0)
    throw std::invalid_argument("line is not simple (alpha and beta must be nonzero)");
}

LineFamily family(const Field& f, std::uint32_t s, std::uint32_t t) {
  LineFamily fam;
  fam.s = s;
  fam.t = t;
  fam.alphas = f.subgroup(s);  // throws unless s | q-1
  fam.betas = f.subgroup(t);
  fam.beta_member.assign(f.q(), 0);
  for (Elem b : fam.betas) fam.beta_member[b] = 1;
  fam.lines.reserve(static_cast<std::size_t>(s) * t);
  for (Elem a : fam.alphas)
    for (Elem b : fam.betas) fam.lines.push_back({a, b});
  return fam;
}

std::vector<std::pair<Elem, Elem>> points_of(const Field& f, SimpleLine line) {
  require_simple(line);
  std::vector<std::pair<Elem, Elem>> pts;
  pts.reserve(f.q());
  for (std::uint32_t T = 0; T < f.q(); ++T) {
    const Elem x = static_cast<Elem>(T);
    pts.emplace_back(x, f.add(f.mul(line.alpha, x), line.beta));
  }
  return pts;
}

std::vector<SimpleLine> lines_through(const Field& f, const LineFamily& fam, Elem x, Elem y) {
  if (x == 0 && y == 0)
    throw std::invalid_argument("no family line passes through the origin");
  std::vector<SimpleLine> out;
  for (Elem a : fam.alphas) {
    const Elem b = f.add(y, f.mul(a, x));  // subtraction is addition here
    if (fam.beta_member[b]) out.push_back({a, b});
  }
  return out;
}

}  // namespace plift
