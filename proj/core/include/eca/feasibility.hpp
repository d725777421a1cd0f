#pragma once

#include <string>
#include <vector>

#include "eca/grid.hpp"

namespace eca {

struct Observation {
  Index pos = 0;
  bool bit = false;
};

struct FeasibilityResult {
  bool feasible = true;
  std::string reason;
};

FeasibilityResult check_feasible(const RuleMeta& meta, const GridView& gv, const Params& params);

// Is there a configuration c in the image of t steps of the rule that agrees
// with the observations? Linear mode treats everything outside the observed
// span as unconstrained. `skip_gaps` switches the fast-forward over long
// unobserved stretches (off only for cross-checking).
bool image_feasible(const ImageModel& model, Index n, Index t, std::vector<Observation> obs, bool cyclic,
                    bool skip_gaps = true);

// merges grid windows into sorted observations; false if two windows disagree
bool collect_observations(const GridView& gv, std::vector<Observation>& out);

}  // namespace eca
