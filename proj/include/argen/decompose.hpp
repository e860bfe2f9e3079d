#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "argen/rep.hpp"

namespace argen {

struct DecomposeOptions {
  // Default seed; override with --seed on the CLI.
  std::uint64_t seed = 0xA15D0;
  // Number of seeded random endomorphism combinations tried per split level.
  int random_candidates = 24;
  // Exhaustive no-nontrivial-idempotent certification runs only within these
  // limits; beyond them the randomized verdict stands and the decomposition
  // is flagged unconfirmed.
  int max_end_dim_exhaustive = 8;
  std::uint32_t max_prime_exhaustive = 5;
  // Cap on p^dim_hom for the exhaustive invertible-intertwiner search.
  std::uint64_t iso_search_budget = std::uint64_t(1) << 20;
};

struct Summand {
  Rep rep;  // representative indecomposable
  int multiplicity = 1;
  std::vector<Morphism> inc;   // one per copy: rep -> original
  std::vector<Morphism> proj;  // one per copy: original -> rep
};

struct Decomposition {
  std::vector<Summand> summands;  // pairwise non-isomorphic
  bool certified = true;
  int total_indecomposables() const;
};

// Recursive Fitting splitting along End(X); deterministic given the seed.
Decomposition decompose(const Rep& x, const DecomposeOptions& opts = {});

// Invertible intertwiner search; the exhaustive path makes negative answers
// certificates within the budget.
std::optional<Morphism> find_isomorphism(const Rep& x, const Rep& y,
                                         const DecomposeOptions& opts = {});
bool is_isomorphic(const Rep& x, const Rep& y,
                   const DecomposeOptions& opts = {});

Morphism inverse_iso(const Morphism& f);

// Multiplicity of each gens entry in X, or nullopt when some summand of X
// matches none of them. gens entries must be indecomposable.
std::optional<std::vector<int>> in_add(const Rep& x,
                                       const std::vector<Rep>& gens,
                                       const DecomposeOptions& opts = {});

// Basis of rad End(X) for X indecomposable: the subspace of non-invertible
// (equivalently nilpotent) endomorphisms of the local ring End(X).
std::vector<Morphism> radical_of_local_endo(const Rep& x,
                                            const DecomposeOptions& opts = {});

// Same scan without the indecomposability pre-check; the caller vouches for
// End(X) being local.
std::vector<Morphism> nilpotent_endo_span(const Rep& x,
                                          const DecomposeOptions& opts = {});

// Label ("P3" / "I2") of a projective (resp. injective) direct summand when
// one exists.
std::optional<std::string> find_projective_summand(
    const Rep& x, const DecomposeOptions& opts = {});
std::optional<std::string> find_injective_summand(
    const Rep& x, const DecomposeOptions& opts = {});
bool is_projective_rep(const Rep& x, const DecomposeOptions& opts = {});
bool is_injective_rep(const Rep& x, const DecomposeOptions& opts = {});

}  // namespace argen
