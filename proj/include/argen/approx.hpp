#pragma once

#include <string>
#include <vector>

#include "argen/decompose.hpp"
#include "argen/rep.hpp"

namespace argen {

// A surjective right add(gens)-approximation f : X -> C: every map from a
// gens entry into C factors through f. gens entries must be indecomposable.
struct Approximation {
  Morphism map;
  std::vector<int> mult;  // multiplicity of each gens entry in the source
};

Approximation right_approximation(const std::vector<Rep>& gens, const Rep& c,
                                  const DecomposeOptions& opts = {});

// Right-minimal version: repeatedly splits off summands of the kernel that
// are direct summands of the source. The result is unique up to isomorphism.
Approximation minimize(const std::vector<Rep>& gens, const Approximation& a,
                       const DecomposeOptions& opts = {});

Approximation minimal_right_approximation(const std::vector<Rep>& gens,
                                          const Rep& c,
                                          const DecomposeOptions& opts = {});

// Kernel of the minimal right approximation, with its inclusion.
std::pair<Rep, Morphism> rel_syzygy(const std::vector<Rep>& gens, const Rep& c,
                                    const DecomposeOptions& opts = {});

// Smallest d <= cap with the d-th relative syzygy in add(gens); cap + 1
// stands for "greater than cap".
int rel_pd(const std::vector<Rep>& gens, const Rep& c, int cap = 3,
           const DecomposeOptions& opts = {});

bool rel_pd_at_most_one(const std::vector<Rep>& gens, const Rep& c,
                        const DecomposeOptions& opts = {});

// dim of Hom(X, N) modulo maps factoring through a projective.
int stable_hom_dim(const Rep& x, const Rep& n);

// Closure of gens under tau / tau-inverse up to `radius` steps plus one
// syzygy and cosyzygy layer, deduplicated up to isomorphism; every member
// must admit a length-one add(gens) resolution.
struct WindowReport {
  struct Entry {
    std::string name;
    std::vector<int> dims;
    int rel_pd = 0;
    bool ok = false;
  };
  std::vector<Entry> entries;
  bool all_ok = true;
};

WindowReport window_verify(const std::vector<Rep>& gens, int radius,
                           const DecomposeOptions& opts = {});

}  // namespace argen
