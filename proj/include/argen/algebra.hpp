#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "argen/matfp.hpp"

namespace argen {

struct Arrow {
  std::string label;
  int src = 0;  // 0-based vertex indices
  int tgt = 0;
};

struct Quiver {
  int num_vertices = 0;
  std::vector<Arrow> arrows;  // loops and multiple arrows allowed

  void validate() const;  // unique labels, endpoints in range
  int arrow_index(const std::string& label) const;  // -1 if absent
};

// A path is a word of arrow indices traversed left to right (diagrammatic
// composition: in the word "ab", arrow a comes first). The empty word is the
// trivial path e_v at a vertex.
using Word = std::vector<int>;

struct Path {
  int src = 0;
  int tgt = 0;
  Word word;
  std::size_t length() const { return word.size(); }
};

struct RelTerm {
  long long coef = 1;  // integer; reduced mod p at build time
  Word word;           // nonempty
};

// A signed combination of parallel paths, e.g. c*c - a*b.
struct Relation {
  std::vector<RelTerm> terms;
};

// Sparse combination of basis path classes.
using BasisCombo = std::vector<std::pair<int, std::uint32_t>>;

// A finite-dimensional algebra kQ/I defined by quiver, relations and a
// nilpotency bound L (all paths of length >= L lie in I). The constructor
// computes a path-class basis per vertex pair and a multiplication table by
// level-by-level linear algebra over F_p.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static std::shared_ptr<const Algebra> build(Quiver q,
                                              std::vector<Relation> rels,
                                              int bound, std::uint32_t p);

  const Quiver& quiver() const { return quiver_; }
  int num_vertices() const { return quiver_.num_vertices; }
  int num_arrows() const { return static_cast<int>(quiver_.arrows.size()); }
  const std::vector<Relation>& relations() const { return relations_; }
  int bound() const { return bound_; }
  std::uint32_t prime() const { return field_.prime(); }
  const PrimeField& field() const { return field_; }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int b) const { return basis_[b]; }
  // Index of the trivial path e_v in the basis.
  int idempotent_index(int v) const { return idem_[v]; }
  // Basis classes with the given source (resp. source and target).
  const std::vector<int>& basis_from(int i) const { return from_[i]; }
  const std::vector<int>& basis_from_to(int i, int j) const {
    return from_to_[i * quiver_.num_vertices + j];
  }

  // Product of two basis classes under diagrammatic composition
  // (first argument traversed first). Zero when not composable.
  const BasisCombo& mult(int bi, int bj) const {
    return table_[bi * basis_.size() + bj];
  }

  // Normal form of an arbitrary path word starting at src.
  BasisCombo reduce_word(int src, const Word& w) const;

  // Reverses every arrow and every relation word; cached, and
  // opposite()->opposite() returns this algebra.
  std::shared_ptr<const Algebra> opposite() const;

  std::string path_name(const Path& p) const;  // e.g. "e1", "a*b"

 private:
  Algebra() : field_(2) {}
  void compute_basis();

  Quiver quiver_;
  std::vector<Relation> relations_;
  int bound_ = 1;
  PrimeField field_;

  std::vector<Path> basis_;
  std::vector<int> idem_;
  std::vector<std::vector<int>> from_;
  std::vector<std::vector<int>> from_to_;
  std::vector<BasisCombo> table_;

  // All paths of length < L and the ideal in reduced row form: for each
  // pivot path index, a row expressing it as a combination of later paths.
  std::vector<Path> paths_;
  std::map<std::pair<int, Word>, int> path_index_;
  std::vector<int> path_to_basis_;  // basis position or -1 (pivot of ideal)
  std::map<int, std::vector<std::pair<int, std::uint32_t>>> ideal_rows_;

  mutable std::shared_ptr<const Algebra> opposite_;
  mutable std::weak_ptr<const Algebra> opposite_back_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace argen
