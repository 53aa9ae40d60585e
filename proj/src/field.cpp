#include "plift/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace plift {

namespace {

// One primitive polynomial per degree. Degree 8 is the classic Reed-Solomon
// modulus x^8+x^4+x^3+x^2+1, not the AES polynomial 0x11b (irreducible but
// imprimitive).
constexpr std::uint32_t kModulus[17] = {
    0,
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xb,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x89,     // x^7 + x^3 + 1
    0x11d,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201b,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100b,  // x^16 + x^12 + x^3 + x + 1
};

constexpr std::uint32_t kNoLog = 0xffffffffu;

}  // namespace

std::uint32_t Field::canonical_modulus(unsigned ell) {
  if (ell < 1 || ell > 16) throw std::invalid_argument("field degree must be in [1, 16]");
  return kModulus[ell];
}

Field::Field(unsigned ell) : Field(ell, canonical_modulus(ell)) {}

Field::Field(unsigned ell, std::uint32_t modulus) : ell_(ell), q_(0), modulus_(modulus) {
  if (ell < 1 || ell > 16) throw std::invalid_argument("field degree must be in [1, 16]");
  if ((modulus >> ell) != 1u) throw std::invalid_argument("modulus must have degree exactly ell");
  q_ = 1u << ell;
  build_tables();
}

void Field::build_tables() {
  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * order, 0);
  log_.assign(q_, kNoLog);
  std::uint32_t b = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    // A repeated value (or zero) means x does not generate all of GF(q)*.
    if (b == 0 || log_[b] != kNoLog) throw std::invalid_argument("modulus is not primitive");
    exp_[i] = static_cast<Elem>(b);
    log_[b] = i;
    b <<= 1;
    if (b & q_) b ^= modulus_;
  }
  if (b != 1) throw std::invalid_argument("modulus is not primitive");
  std::copy(exp_.begin(), exp_.begin() + order, exp_.begin() + order);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("zero is not invertible");
  return exp_[(q_ - 1) - log_[a]];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  const std::int64_t order = q_ - 1;
  if (a == 0) {
    if (e == 0) return 1;  // empty product
    if (e < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  std::int64_t r = e % order;
  if (r < 0) r += order;
  const std::uint64_t idx =
      static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r) %
      static_cast<std::uint64_t>(order);
  return exp_[idx];
}

std::vector<Elem> Field::subgroup(std::uint32_t d) const {
  if (d == 0 || (q_ - 1) % d != 0)
    throw std::invalid_argument("subgroup order must divide q - 1");
  const std::uint32_t step = (q_ - 1) / d;
  std::vector<Elem> out(d);
  for (std::uint32_t k = 0; k < d; ++k) out[k] = exp_[k * step];
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t Field::dlog(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no discrete log");
  return log_[a];
}

}  // namespace plift
