#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "argen/hypotheses.hpp"
#include "argen/mutation.hpp"

namespace argen {

// Scripted mutation runs over the bundled example algebras; shared by the
// CLI and the acceptance tests.

struct FlowStep {
  std::string position;  // name of the exchanged entry
  MutationCertificate cert;
};

struct FlowResult {
  AlgebraPtr alg;
  HypothesesReport hyp;
  std::vector<GeneratorSet> stages;  // stages[0] is the canonical set
  std::vector<FlowStep> steps;       // stages[k+1] results from steps[k]
  // Flow 1: the four exchanges close up with the translated canonical set.
  bool closure_matches_shift = false;
  // Flow 3: the scripted run ends in a rejected exchange.
  bool has_rejection = false;
  MutationCertificate rejection;
  GeneratorSet rejected_candidate;
  const GeneratorSet& final_set() const { return stages.back(); }
};

// Two-vertex example: exchange S1, S2, P1/soc, P2/soc in order and confirm
// the result is the tau-translate of the starting set.
FlowResult run_example1(std::uint32_t p, const DecomposeOptions& opts = {});
// Four-vertex example: exchange S1, S2, then the newly exposed P1/soc.
FlowResult run_example2(std::uint32_t p, const DecomposeOptions& opts = {});
// Five-vertex example: drive the canonical set to the target translation
// profile, then witness the rejected exchange at tau^-2(P3/soc).
FlowResult run_example3(std::uint32_t p, const DecomposeOptions& opts = {});

FlowResult run_example(int which, std::uint32_t p,
                       const DecomposeOptions& opts = {});

// Bundled fixture path ("example1" -> absolute path of its .alg file).
std::string fixture_path(const std::string& name);
AlgebraPtr load_fixture(const std::string& name, std::uint32_t p = 0);

}  // namespace argen
