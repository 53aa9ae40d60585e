#include "plift/descriptor.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plift {

namespace {

std::string next_line(std::istream& is, const char* what) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error(std::string("descriptor truncated before ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// Reads "key value" where value fits an unsigned long (base 10 or 0x-hex).
std::uint64_t keyed_value(std::istream& is, const std::string& key) {
  std::istringstream ls(next_line(is, key.c_str()));
  std::string k, v, extra;
  if (!(ls >> k >> v) || k != key || (ls >> extra))
    throw std::runtime_error("descriptor expected '" + key + " <value>' line");
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(v, &used, 0);
  } catch (const std::exception&) {
    throw std::runtime_error("descriptor has a malformed " + key + " value");
  }
  if (used != v.size()) throw std::runtime_error("descriptor has a malformed " + key + " value");
  return value;
}

}  // namespace

CodeDescriptor descriptor_of(const LiftCode& code) {
  return {code.field.ell(), code.field.modulus(), code.fam.s, code.fam.t,
          kPointOrderTag, code.basis};
}

LiftCode code_from_descriptor(const CodeDescriptor& d) {
  if (d.point_order != kPointOrderTag)
    throw std::runtime_error("unsupported point order tag: " + d.point_order);
  const Field f(d.ell, d.modulus);
  for (const BasisPoly& p : d.basis) {
    if (p.first.a >= f.q() || p.first.b >= f.q() ||
        (p.second && (p.second->a >= f.q() || p.second->b >= f.q())))
      throw std::runtime_error("descriptor basis exponent out of range");
    if (p.second && *p.second == p.first)
      throw std::runtime_error("descriptor contains a degenerate binomial");
  }
  return {f, family(f, d.s, d.t), d.basis, e_st(f, d.s, d.t)};
}

void save_descriptor(const CodeDescriptor& d, std::ostream& os) {
  os << kDescriptorHeader << '\n';
  os << "ell " << d.ell << '\n';
  os << "modulus 0x" << std::hex << d.modulus << std::dec << '\n';
  os << "s " << d.s << '\n';
  os << "t " << d.t << '\n';
  os << "point-order " << d.point_order << '\n';
  os << "basis " << d.basis.size() << '\n';
  for (const BasisPoly& p : d.basis) {
    if (p.second)
      os << "bin " << p.first.a << ' ' << p.first.b << ' ' << p.second->a << ' '
         << p.second->b << '\n';
    else
      os << "mono " << p.first.a << ' ' << p.first.b << '\n';
  }
  os << "end\n";
}

CodeDescriptor load_descriptor(std::istream& is) {
  CodeDescriptor d;
  if (next_line(is, "header") != kDescriptorHeader)
    throw std::runtime_error("unrecognized descriptor header");
  const std::uint64_t ell = keyed_value(is, "ell");
  if (ell < 1 || ell > 16) throw std::runtime_error("descriptor field degree out of range");
  d.ell = static_cast<unsigned>(ell);
  const std::uint32_t q = 1u << d.ell;
  d.modulus = static_cast<std::uint32_t>(keyed_value(is, "modulus"));
  d.s = static_cast<std::uint32_t>(keyed_value(is, "s"));
  d.t = static_cast<std::uint32_t>(keyed_value(is, "t"));
  {
    std::istringstream ls(next_line(is, "point-order"));
    std::string k, extra;
    if (!(ls >> k >> d.point_order) || k != "point-order" || (ls >> extra))
      throw std::runtime_error("descriptor expected 'point-order <tag>' line");
  }
  const std::uint64_t count = keyed_value(is, "basis");
  d.basis.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::istringstream ls(next_line(is, "basis entry"));
    std::string kind;
    ls >> kind;
    BasisPoly p;
    if (kind == "mono") {
      if (!(ls >> p.first.a >> p.first.b))
        throw std::runtime_error("descriptor has a malformed mono entry");
    } else if (kind == "bin") {
      Monomial second;
      if (!(ls >> p.first.a >> p.first.b >> second.a >> second.b))
        throw std::runtime_error("descriptor has a malformed bin entry");
      p.second = second;
    } else {
      throw std::runtime_error("descriptor has an unknown basis entry kind");
    }
    std::string extra;
    if (ls >> extra) throw std::runtime_error("descriptor basis entry has trailing tokens");
    if (p.first.a >= q || p.first.b >= q ||
        (p.second && (p.second->a >= q || p.second->b >= q)))
      throw std::runtime_error("descriptor basis exponent out of range");
    if (p.second && *p.second == p.first)
      throw std::runtime_error("descriptor contains a degenerate binomial");
    d.basis.push_back(p);
  }
  if (next_line(is, "end marker") != "end")
    throw std::runtime_error("descriptor missing end marker");
  return d;
}

void save_descriptor_file(const CodeDescriptor& d, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open for writing: " + path);
  save_descriptor(d, os);
  os.flush();
  if (!os) throw std::invalid_argument("failed to write: " + path);
}

CodeDescriptor load_descriptor_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open: " + path);
  return load_descriptor(is);
}

void write_matrix_csv(const Matrix& m, std::ostream& os) {
  for (std::uint32_t r = 0; r < m.rows; ++r) {
    for (std::uint32_t c = 0; c < m.cols; ++c) {
      if (c != 0) os << ',';
      os << m.at(r, c);
    }
    os << '\n';
  }
}

}  // namespace plift
