#pragma once

#include <cstdint>
#include <vector>

#include "argen/decompose.hpp"
#include "argen/rep.hpp"

namespace argen {

// Ext^1(C, A) presented on a fixed projective cover of C: classes are maps
// Omega C -> A modulo restrictions of maps P_0 -> A.
struct Ext1 {
  Rep c, a;
  SES cover;                   // 0 -> Omega C -> P_0 -> C -> 0
  std::vector<Morphism> reps;  // representatives of a basis
  int dim() const { return static_cast<int>(reps.size()); }

  // Internal reduction data (image rows in echelon form, representative
  // residues); used by ext_coords.
  Mat image_red;
  std::vector<std::size_t> image_piv;
  Mat rep_residues;
};

Ext1 ext1(const Rep& c, const Rep& a);

// Coordinates of the class of h : Omega C -> A in the chosen basis.
std::vector<std::uint32_t> ext_coords(const Ext1& e, const Morphism& h);

// Short exact sequence 0 -> A -> B -> C -> 0 realizing the class of h as a
// pushout of the cover sequence.
SES realize(const Ext1& e, const Morphism& h);

// Class of an arbitrary short exact sequence 0 -> A -> B -> C -> 0 in the
// coordinates of e (which must have matching end terms).
std::vector<std::uint32_t> ext_class_of(const Ext1& e, const SES& s);

// Omega(phi) : Omega C -> Omega C induced by phi in End(C); pulls Ext
// classes back via precomposition.
Morphism syzygy_of_endo(const Ext1& e, const Morphism& phi);

struct ARSequence {
  SES seq;  // 0 -> tau C -> E -> C -> 0, almost split
};

// Almost split sequence ending at an indecomposable non-projective C,
// obtained from a socle generator of Ext^1(C, tau C) over End(C). Verified
// non-split on construction.
ARSequence almost_split_ending_at(const Rep& c,
                                  const DecomposeOptions& opts = {});
// Almost split sequence starting at an indecomposable non-injective N.
ARSequence almost_split_starting_at(const Rep& n,
                                    const DecomposeOptions& opts = {});

// Checks the right-almost-split lifting property of s against maps from the
// given indecomposable test modules.
bool verify_right_almost_split(const ARSequence& s,
                               const std::vector<Rep>& testers,
                               const DecomposeOptions& opts = {});

// A generator position is mutable when the middle term of the almost split
// sequence starting at gens[idx] lies in add of the remaining entries.
bool is_mutable_position(const std::vector<Rep>& gens, std::size_t idx,
                         const DecomposeOptions& opts = {});

}  // namespace argen
