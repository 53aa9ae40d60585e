#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plift/lift.hpp"

namespace plift {

inline constexpr const char* kDescriptorHeader = "plift-code-v1";
inline constexpr const char* kPointOrderTag = "row-major-xy-origin-punctured-v1";

// Plain-text, line-oriented, human-diffable code description. Fields appear
// in a fixed order; basis entries are "mono a b" or "bin a1 b1 a2 b2".
struct CodeDescriptor {
  unsigned ell = 0;
  std::uint32_t modulus = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::string point_order = kPointOrderTag;
  std::vector<BasisPoly> basis;
  bool operator==(const CodeDescriptor&) const = default;
};

CodeDescriptor descriptor_of(const LiftCode& code);

// Rebuilds the code. Field table construction doubles as the modulus
// self-check; the basis is taken verbatim so verification sees exactly what
// the file said.
LiftCode code_from_descriptor(const CodeDescriptor& d);

void save_descriptor(const CodeDescriptor& d, std::ostream& os);
// Throws std::runtime_error naming the first malformed line or field.
CodeDescriptor load_descriptor(std::istream& is);

void save_descriptor_file(const CodeDescriptor& d, const std::string& path);
CodeDescriptor load_descriptor_file(const std::string& path);

// One row per basis polynomial, entries as decimal integers in [0, q).
void write_matrix_csv(const Matrix& m, std::ostream& os);

}  // namespace plift
