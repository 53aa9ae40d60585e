#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "plift/lift.hpp"

namespace plift {

// One repair group for a punctured point: the other q-1 points of a family
// line through it. Groups from distinct lines through the same point are
// pairwise disjoint, because two distinct lines meet in at most one point.
struct RepairGroup {
  std::uint32_t target = 0;
  SimpleLine line;
  std::vector<std::uint32_t> members;  // punctured indices, line order
};

// Groups for every family line through the point, in family (alpha) order.
std::vector<RepairGroup> repair_groups(const LiftCode& code, std::uint32_t index);

// Field sum (XOR) of the member symbols; equals the erased symbol for every
// codeword. Throws std::out_of_range if the codeword is shorter than n.
Elem repair_value(const Field& f, const std::vector<Elem>& codeword, const RepairGroup& g);

struct DrgpReport {
  std::uint32_t s_min = 0;                          // fewest groups at any point
  std::map<std::uint32_t, std::uint64_t> histogram;  // group count -> #points
};

// Exact minimum over all n points of the number of disjoint repair groups.
DrgpReport min_drgp(const LiftCode& code);

struct RepairAttempt {
  bool success = false;
  Elem value = 0;
  SimpleLine line;  // group used, when successful
};

// Repairs the target from the first group (in family line order) that avoids
// every erased index. The target itself may appear in the erased set; member
// lists never contain it. Failure is reported, not thrown.
RepairAttempt simulate_erasures(const LiftCode& code, const std::vector<Elem>& codeword,
                                std::vector<std::uint32_t> erased, std::uint32_t target);

// Deterministic pseudo-random codeword: a seeded combination of basis rows.
std::vector<Elem> random_codeword(const LiftCode& code, std::uint64_t seed);

}  // namespace plift
