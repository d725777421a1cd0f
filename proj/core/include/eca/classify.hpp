#pragma once

#include <optional>
#include <string>

#include "eca/grid.hpp"

namespace eca {

struct PairClass {
  enum class Kind { A, B, C, U };
  Kind kind = Kind::U;
  int interval = -1;
  Index g1 = 0, g2 = 0;
  int ref_index = -1;  // grid index of the reference location (B, C)
  Index ref = -1;
  Side side = Side::Left;  // B: the flank of the interval
};

const char* kind_name(PairClass::Kind k);

// raw membership in the three defining predicates, before tie-breaking
struct Membership {
  bool a = false, b = false, c = false;
};

Membership membership(Index t, Index i, const GridIntervals& iv, const GridView& gv, const Params& params);
PairClass classify_pair(Index t, Index i, const GridIntervals& iv, const GridView& gv, const Params& params);

enum class Requirement { A1, A2, A3, B1, B2, C1, C2 };
const char* requirement_id(Requirement r);
const char* requirement_text(Requirement r);

// window_t and window_t2 are the (2k+1)-windows of i at times t and t2
std::optional<Requirement> violation_check(const RuleMeta& meta, const PairClass& cls, Index t, Index i,
                                           Pattern window_t, Pattern window_t2, const GridView& gv,
                                           const Params& params);

}  // namespace eca
