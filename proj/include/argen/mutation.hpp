#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "argen/arseq.hpp"
#include "argen/decompose.hpp"
#include "argen/rep.hpp"

namespace argen {

// One indecomposable entry of a generator set, tracked together with a
// display name of the form tau^-k(base).
struct GenEntry {
  Rep rep;
  std::string base;
  int tau_offset = 0;  // rep is tau^{-offset} applied to the named module
  bool projective = false;
  std::string name() const;
};

// Additive generator M = direct sum of pairwise non-isomorphic
// indecomposables containing every projective and every injective.
struct GeneratorSet {
  AlgebraPtr alg;
  std::vector<GenEntry> entries;
  std::vector<Rep> reps() const;
  std::vector<Rep> nonprojective_reps() const;
  std::string describe() const;  // comma-separated entry names
  void check_generator_cogenerator(const DecomposeOptions& opts = {}) const;
};

// Lambda + Lambda/Soc + Lambda/Soc^2, split into indecomposables.
GeneratorSet canonical_m0(const AlgebraPtr& alg,
                          const DecomposeOptions& opts = {});
// Lambda + rad Lambda + rad^2 Lambda, split into indecomposables.
GeneratorSet canonical_l0(const AlgebraPtr& alg,
                          const DecomposeOptions& opts = {});

// Translate the non-projective part by tau^{-steps} (tau for negative
// steps); projective entries stay put.
GeneratorSet shift(const GeneratorSet& g, int steps,
                   const DecomposeOptions& opts = {});

struct MutationCertificate {
  bool accepted = false;
  // "general" (relative-syzygy test), optionally confirmed by the radical
  // cube zero shortcut "fast-a" / "fast-b".
  std::string branch = "general";
  std::string reason;
  bool middle_term_in_add = false;
  int stable_hom_dim = -1;            // fast branch data, -1 when unused
  bool plain_syzygy_in_add = false;   // fast branch (b) witness
  bool rel_syzygy_in_add = false;     // general branch witness
  std::vector<int> replaced_dims, replacement_dims;
};

struct MutationResult {
  GeneratorSet gens;  // mutated set when accepted, the input otherwise
  MutationCertificate cert;
};

// Exchange entry idx (indecomposable, neither projective nor injective) by
// tau^{-1} of it; accepted when the relative syzygy criterion holds.
MutationResult mutate(const GeneratorSet& g, std::size_t idx,
                      const DecomposeOptions& opts = {});

// Exchange entry idx by first translating the non-projective part with
// tau^{-1}, mutating there, and translating back. Extends mutate to sets
// (like the canonical one) whose non-projective part is not yet a slice.
MutationResult mutate_via_shift(const GeneratorSet& g, std::size_t idx,
                                const DecomposeOptions& opts = {});

struct FamilyNode {
  GeneratorSet gens;
  int parent = -1;          // index into Family::nodes, -1 for the root
  int mutated_pos = -1;     // entry exchanged in the parent
  bool via_shift = false;
};

struct Family {
  std::vector<FamilyNode> nodes;
  int attempted = 0;  // mutation attempts, accepted or not
};

// Breadth-first closure of the canonical set under accepted mutations, up
// to `budget` distinct generator sets. strategy: "all" tries every
// non-projective position, "simples-first" orders simple entries first.
// side 'M' starts from canonical_m0, side 'L' from canonical_l0 (handled
// through the opposite algebra).
Family enumerate_family(const AlgebraPtr& alg, int budget,
                        const std::string& strategy = "all", char side = 'M',
                        const DecomposeOptions& opts = {});

// Entrywise isomorphism of generator sets (order-insensitive).
bool same_generator_set(const GeneratorSet& a, const GeneratorSet& b,
                        const DecomposeOptions& opts = {});

// Best-effort display name: matches against simples, projectives,
// injectives, radical/socle quotients of projectives and their tau
// translates within the given radius.
std::string describe_module(const AlgebraPtr& alg, const Rep& x,
                            int tau_radius = 3,
                            const DecomposeOptions& opts = {});

}  // namespace argen
