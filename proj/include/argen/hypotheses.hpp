#pragma once

#include <vector>

#include "argen/algebra.hpp"

namespace argen {

// Standing-hypotheses report: rad^3 = 0 and selfinjectivity are checked,
// infinite representation type is assumed, never verified.
struct HypothesesReport {
  bool rad_cube_zero = false;
  bool selfinjective = false;
  bool weakly_symmetric = false;
  bool infinite_type_assumed = true;
  // injective_match[i] = j when P_i is isomorphic to I_j, else -1.
  std::vector<int> injective_match;

  bool fast_branch_ok() const { return rad_cube_zero && selfinjective; }
};

// Memoized per algebra instance.
const HypothesesReport& validate_hypotheses(const AlgebraPtr& alg);

}  // namespace argen
