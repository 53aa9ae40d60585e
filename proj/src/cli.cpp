#include "plift/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <random>

#include "plift/counting.hpp"
#include "plift/descriptor.hpp"
#include "plift/lift.hpp"
#include "plift/repair.hpp"

namespace plift {

namespace {

// Deterministic sample of [0, total): everything when it fits the cap,
// otherwise a fixed stride.
std::vector<std::uint64_t> stride_sample(std::uint64_t total, std::uint64_t cap) {
  std::vector<std::uint64_t> idx;
  if (total <= cap) {
    for (std::uint64_t i = 0; i < total; ++i) idx.push_back(i);
  } else {
    const std::uint64_t step = (total + cap - 1) / cap;
    for (std::uint64_t i = 0; i < total; i += step) idx.push_back(i);
  }
  return idx;
}

std::string sample_note(std::size_t used, std::uint64_t total, const char* what) {
  std::ostringstream os;
  if (used == total) os << "all " << total << ' ' << what;
  else os << "sampled " << used << '/' << total << ' ' << what;
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open for writing: " + path);
  os << text;
  os.flush();
  if (!os) throw std::invalid_argument("failed to write: " + path);
}

}  // namespace

int cmd_build(const BuildOptions& opt, std::ostream& out) {
  if (opt.out_path.empty()) throw std::invalid_argument("build requires --out");
  const Field f(opt.ell);
  const LiftCode code = build_code(f, opt.s, opt.t);
  save_descriptor_file(descriptor_of(code), opt.out_path);
  out << "descriptor " << opt.out_path << "\n";
  out << "ell " << f.ell() << "  q " << f.q() << "\n";
  out << "family s " << opt.s << "  t " << opt.t << "  lines " << code.fam.lines.size() << "\n";
  out << "points " << code.n() << "\n";
  out << "basis " << code.basis.size() << "\n";
  out << "classes " << code.e << "\n";
  out << "dim-lower-bound " << (code.k_bound() - 1) << "\n";
  return 0;
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out) {
  std::ifstream is(opt.descriptor_path);
  if (!is) throw std::invalid_argument("cannot open: " + opt.descriptor_path);
  std::optional<LiftCode> code;
  try {
    code = code_from_descriptor(load_descriptor(is));
  } catch (const std::exception& e) {
    out << "invariant failure: " << e.what() << "\n";
    return 1;
  }
  Matrix mat = generator_matrix(*code);
  if (!opt.matrix_out_path.empty()) {
    std::ostringstream csv;
    write_matrix_csv(mat, csv);
    write_text_file(opt.matrix_out_path, csv.str());
  }
  const std::uint64_t n = code->n();
  const std::uint64_t bound = code->k_bound() - 1;  // after puncturing one point
  const std::uint32_t k = matrix_rank(code->field, std::move(mat));
  const DrgpReport drgp = min_drgp(*code);
  out << "descriptor " << opt.descriptor_path << "\n";
  out << "ell " << code->field.ell() << "  s " << code->fam.s << "  t " << code->fam.t << "\n";
  out << "points " << n << "\n";
  out << "basis " << code->basis.size() << "\n";
  out << "classes " << code->e << "\n";
  out << "dim-lower-bound " << bound << "\n";
  out << "rank " << k << "\n";
  out << "codimension " << (n - k) << "\n";
  out << "drgp-min " << drgp.s_min << "\n";
  out << "puncture-slack " << (k + 1 == code->basis.size() ? "consumed" : "none") << "\n";
  if (k < bound) {
    out << "invariant failure: rank " << k << " is below the bound " << bound << "\n";
    return 1;
  }
  if (k + 1 < code->basis.size()) {
    out << "invariant failure: rank " << k << " lost more than one dimension against "
        << code->basis.size() << " basis rows\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  std::ifstream is(opt.descriptor_path);
  if (!is) throw std::invalid_argument("cannot open: " + opt.descriptor_path);
  int failures = 0;
  const auto pass = [&](const char* name, const std::string& note = std::string()) {
    out << "ok " << name;
    if (!note.empty()) out << " (" << note << ")";
    out << "\n";
  };
  const auto fail = [&](const char* name, const std::string& why) {
    out << "FAIL " << name << ": " << why << "\n";
    ++failures;
  };
  const auto finish = [&]() {
    out << (failures ? "verify FAIL\n" : "verify PASS\n");
    return failures ? 1 : 0;
  };

  CodeDescriptor desc;
  try {
    desc = load_descriptor(is);
    pass("descriptor-structure");
  } catch (const std::exception& e) {
    fail("descriptor-structure", e.what());
    return finish();
  }

  std::optional<Field> field;
  try {
    field.emplace(desc.ell, desc.modulus);
    pass("field-self-check");
  } catch (const std::exception& e) {
    fail("field-self-check", e.what());
    return finish();
  }
  const Field& f = *field;

  if (desc.modulus == Field::canonical_modulus(desc.ell)) pass("modulus-canonical");
  else fail("modulus-canonical", "descriptor modulus differs from the canonical table");

  if (desc.point_order == kPointOrderTag) pass("point-order");
  else fail("point-order", "unsupported tag " + desc.point_order);

  std::optional<LiftCode> code;
  try {
    code = LiftCode{f, family(f, desc.s, desc.t), desc.basis, e_st(f, desc.s, desc.t)};
    pass("family-divisors");
  } catch (const std::exception& e) {
    fail("family-divisors", e.what());
    return finish();
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < code->basis.size() && ok; ++i) {
      const BasisPoly& p = code->basis[i];
      std::ostringstream why;
      if (p.first.a >= f.q() || p.first.b >= f.q() ||
          (p.second && (p.second->a >= f.q() || p.second->b >= f.q()))) {
        why << "poly " << i << " has an exponent out of range";
      } else if (p.second) {
        const ClassIndex c1 = class_index(p.first.a, p.first.b, desc.s, desc.t);
        const ClassIndex c2 = class_index(p.second->a, p.second->b, desc.s, desc.t);
        if (*p.second == p.first) why << "poly " << i << " is a degenerate binomial";
        else if (!(c1 == c2)) why << "poly " << i << " pairs terms from different classes";
        else if (is_good(f, p.first) || is_good(f, *p.second))
          why << "poly " << i << " pairs a good monomial into a binomial";
      }
      if (!why.str().empty()) {
        fail("basis-structure", why.str());
        ok = false;
      }
    }
    if (ok) pass("basis-structure");
  }

  {
    // Budgeted exhaustiveness: every (poly, line) pair costs q point sums.
    const std::uint64_t per_poly =
        static_cast<std::uint64_t>(code->fam.lines.size()) * f.q();
    const std::uint64_t cap = per_poly ? std::max<std::uint64_t>(1, 200000000 / per_poly)
                                       : code->basis.size();
    const auto rows = stride_sample(code->basis.size(), cap);
    bool ok = true;
    for (const std::uint64_t i : rows) {
      for (const SimpleLine& line : code->fam.lines) {
        if (line_sum(f, code->basis[i], line) != 0) {
          std::ostringstream why;
          why << "poly " << i << " has a nonzero sum on line alpha " << line.alpha
              << " beta " << line.beta;
          fail("basis-niceness", why.str());
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) pass("basis-niceness", sample_note(rows.size(), code->basis.size(), "polys"));
  }

  {
    const DrgpReport drgp = min_drgp(*code);
    std::ostringstream note;
    note << "min " << drgp.s_min;
    if (desc.t == f.q() - 1 && drgp.s_min + 1 < desc.s) {
      std::ostringstream why;
      why << "min group count " << drgp.s_min << " is below s-1 = " << (desc.s - 1);
      fail("drgp-count", why.str());
    } else {
      pass("drgp-count", note.str());
    }
  }

  {
    const auto points = stride_sample(code->n(), 256);
    bool ok = true;
    for (const std::uint64_t idx : points) {
      const auto groups = repair_groups(*code, static_cast<std::uint32_t>(idx));
      std::unordered_set<std::uint32_t> all;
      for (const RepairGroup& g : groups) {
        if (g.members.size() != f.q() - 1) {
          fail("drgp-disjoint", "group size mismatch at point " + std::to_string(idx));
          ok = false;
          break;
        }
        for (const std::uint32_t m : g.members) {
          if (m == idx || !all.insert(m).second) {
            fail("drgp-disjoint", "overlapping groups at point " + std::to_string(idx));
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (ok) pass("drgp-disjoint", sample_note(points.size(), code->n(), "points"));
  }

  {
    const auto rows = stride_sample(code->basis.size(), 64);
    const auto points = stride_sample(code->n(), 64);
    bool ok = true;
    for (const std::uint64_t r : rows) {
      const BasisPoly& p = code->basis[r];
      for (const std::uint64_t idx : points) {
        const auto [x, y] = index_point(f, static_cast<std::uint32_t>(idx));
        const Elem want = eval_basis_poly(f, p, x, y);
        for (const RepairGroup& g : repair_groups(*code, static_cast<std::uint32_t>(idx))) {
          Elem acc = 0;
          for (const std::uint32_t m : g.members) {
            const auto [mx, my] = index_point(f, m);
            acc = f.add(acc, eval_basis_poly(f, p, mx, my));
          }
          if (acc != want) {
            std::ostringstream why;
            why << "poly " << r << " point " << idx << " line alpha " << g.line.alpha
                << " beta " << g.line.beta;
            fail("repair-identity", why.str());
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (ok)
      pass("repair-identity", sample_note(rows.size(), code->basis.size(), "polys") + ", " +
                                  sample_note(points.size(), code->n(), "points"));
  }

  return finish();
}

int cmd_est_table(const EstTableOptions& opt, std::ostream& out) {
  if (opt.format != "csv") throw std::invalid_argument("unsupported format: " + opt.format);
  if (opt.ell_max < 2 || opt.ell_max > 80)
    throw std::invalid_argument("est-table needs ell in [2, 80]");
  std::ostringstream csv;
  csv << "ell,pairs_exact,pairs_bound,baseline,ratio_growth,ratio_baseline\n";
  csv << std::fixed << std::setprecision(6);
  for (const GrowthRow& row : growth_check(opt.ell_max)) {
    const u128 baseline = ((static_cast<u128>(1) << (row.ell / 2)) - 1) *
                          ((static_cast<u128>(1) << row.ell) - 1);
    csv << row.ell << ',';
    if (row.ell <= 12) csv << brute_valid_pairs(row.ell);
    csv << ',' << u128_str(row.bound) << ',' << u128_str(baseline) << ',' << row.ratio << ','
        << static_cast<double>(row.bound) / static_cast<double>(baseline) << "\n";
  }
  if (opt.out_path.empty()) out << csv.str();
  else write_text_file(opt.out_path, csv.str());
  return 0;
}

int cmd_repair_demo(const RepairDemoOptions& opt, std::ostream& out) {
  std::ifstream is(opt.descriptor_path);
  if (!is) throw std::invalid_argument("cannot open: " + opt.descriptor_path);
  std::optional<LiftCode> code;
  try {
    code = code_from_descriptor(load_descriptor(is));
  } catch (const std::exception& e) {
    out << "invariant failure: " << e.what() << "\n";
    return 1;
  }
  const std::uint64_t n = code->n();
  if (opt.erasures >= n) throw std::invalid_argument("erasures must be below the block length");
  const std::vector<Elem> cw = random_codeword(*code, opt.seed);
  std::mt19937_64 rng(opt.seed);
  out << "seed " << opt.seed << "  trials " << opt.trials << "  erasures " << opt.erasures
      << "\n";
  std::uint64_t repaired = 0, unrepaired = 0, mismatched = 0;
  for (std::uint32_t trial = 0; trial < opt.trials; ++trial) {
    const std::uint32_t target = static_cast<std::uint32_t>(rng() % n);
    std::vector<std::uint32_t> erased;
    std::unordered_set<std::uint32_t> seen;
    while (erased.size() < opt.erasures) {
      const std::uint32_t e = static_cast<std::uint32_t>(rng() % n);
      if (e == target || !seen.insert(e).second) continue;
      erased.push_back(e);
    }
    const RepairAttempt attempt = simulate_erasures(*code, cw, erased, target);
    out << "trial " << trial << " target " << target << " erased [";
    for (std::size_t i = 0; i < erased.size(); ++i) out << (i ? " " : "") << erased[i];
    out << "]";
    if (attempt.success) {
      ++repaired;
      const bool match = attempt.value == cw[target];
      if (!match) ++mismatched;
      out << " line alpha " << attempt.line.alpha << " beta " << attempt.line.beta << " value "
          << attempt.value << (match ? " ok" : " MISMATCH") << "\n";
    } else {
      ++unrepaired;
      out << " no clean group\n";
    }
  }
  out << "repaired " << repaired << "/" << opt.trials << "  unrepaired " << unrepaired
      << "  mismatched " << mismatched << "\n";
  return mismatched ? 1 : 0;
}

}  // namespace plift
