#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "argen/algebra.hpp"
#include "argen/matfp.hpp"

namespace argen {

// A finite-dimensional module presented as a quiver representation: one
// F_p-space per vertex and one matrix per arrow (d_tgt x d_src, acting on
// column vectors). Relations are checked at construction.
class Rep {
 public:
  Rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> arrow_mats);

  static Rep zero(AlgebraPtr alg);
  static Rep simple(AlgebraPtr alg, int v);
  static Rep projective(AlgebraPtr alg, int v);
  static Rep injective(AlgebraPtr alg, int v);
  static Rep regular(AlgebraPtr alg);  // direct sum of all projectives

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_[v]; }
  int total_dim() const;
  bool is_zero_rep() const { return total_dim() == 0; }
  const Mat& arrow(int a) const { return arrow_[a]; }

  // Composite matrix of a path word from `src` (identity for the empty word).
  Mat act(int src, const Word& w) const;

  // Throws unless every relation induces the zero matrix and all words of
  // length >= L act as zero.
  void check_relations() const;

  bool same_algebra(const Rep& o) const { return alg_.get() == o.alg_.get(); }

 private:
  AlgebraPtr alg_;
  std::vector<int> dims_;
  std::vector<Mat> arrow_;
};

// Per-vertex matrices intertwining the arrow actions.
class Morphism {
 public:
  Morphism(Rep src, Rep tgt, std::vector<Mat> f, bool checked = false);

  static Morphism zero(const Rep& src, const Rep& tgt);
  static Morphism identity(const Rep& x);

  const Rep& source() const { return src_; }
  const Rep& target() const { return tgt_; }
  const Mat& at(int v) const { return f_[v]; }
  const std::vector<Mat>& mats() const { return f_; }

  Morphism then(const Morphism& g) const;  // g after this
  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(std::uint32_t c) const;

  bool is_zero_map() const;
  bool is_injective() const;   // full column rank at every vertex
  bool is_surjective() const;  // full row rank at every vertex
  bool is_isomorphism() const;

  Mat flat() const;  // concatenation of vectorized per-vertex blocks

  void check_intertwining() const;  // throws on violation

 private:
  Rep src_, tgt_;
  std::vector<Mat> f_;
};

// Basis of Hom(X, Y), found by solving the intertwining system.
std::vector<Morphism> hom(const Rep& x, const Rep& y);
int hom_dim(const Rep& x, const Rep& y);

// Rebuild a morphism from the flat coordinates used by hom().
Morphism morphism_from_flat(const Rep& x, const Rep& y, const Mat& flat_row);

// Short exact sequence A -> B -> C.
struct SES {
  Morphism inc;   // A -> B, injective
  Morphism proj;  // B -> C, surjective
  const Rep& sub() const { return inc.source(); }
  const Rep& mid() const { return inc.target(); }
  const Rep& quot() const { return proj.target(); }
  void check() const;  // injectivity, surjectivity, composition, dim count
  // True iff the sequence splits (a retraction of inc exists).
  bool splits() const;
};

// Per-vertex column bases of a subspace closed under the arrow action.
using VertexBases = std::vector<Mat>;

// Subrepresentation spanned by the given (closed) subspaces, with inclusion.
std::pair<Rep, Morphism> sub_rep(const Rep& x, const VertexBases& bases);
// Quotient by the subrepresentation, with projection.
std::pair<Rep, Morphism> quotient_rep(const Rep& x, const VertexBases& bases);
// Quotient with an additional per-vertex lift L (proj * L = id on the
// quotient), giving coset representatives inside x.
std::tuple<Rep, Morphism, VertexBases> quotient_with_lift(
    const Rep& x, const VertexBases& bases);

// g with f = through o g (factorization through an epi or any morphism).
std::optional<Morphism> solve_right_factor(const Morphism& f,
                                           const Morphism& through);
// g with f = g o through (factorization past a mono or any morphism).
std::optional<Morphism> solve_left_factor(const Morphism& f,
                                          const Morphism& through);

std::pair<Rep, Morphism> kernel(const Morphism& f);    // inclusion into source
std::pair<Rep, Morphism> image(const Morphism& f);     // inclusion into target
std::pair<Rep, Morphism> cokernel(const Morphism& f);  // projection from target

struct DirectSum {
  Rep sum;
  std::vector<Morphism> inc;   // component -> sum
  std::vector<Morphism> proj;  // sum -> component
};
DirectSum direct_sum(const std::vector<Rep>& parts);

// Morphism out of a direct sum assembled from per-component morphisms.
Morphism assemble_from_sum(const DirectSum& ds,
                           const std::vector<Morphism>& components);

// rad^k X as subspaces of X (images of all words of length k).
VertexBases radical_power_sub(const Rep& x, int k);
// soc^k X as subspaces of X (joint kernel of all words of length k).
VertexBases socle_power_sub(const Rep& x, int k);

std::pair<Rep, Morphism> radical(const Rep& x);  // with inclusion
std::pair<Rep, Morphism> socle(const Rep& x);    // with inclusion
std::pair<Rep, Morphism> top(const Rep& x);      // with projection

// Standard duality D to the opposite algebra; contravariant, dim-preserving.
Rep dual(const Rep& x);
Morphism dual(const Morphism& f);  // D f : D(target) -> D(source)
SES dual(const SES& s);

// 0 -> Omega(X) -> P(X) -> X -> 0 with P minimal (kernel inside rad P).
SES projective_cover(const Rep& x);
Rep syzygy(const Rep& x);
Rep cosyzygy(const Rep& x);  // via duality over the opposite algebra

// Transpose of a minimal projective presentation; lands over the opposite
// algebra. tau = D Tr and tau_inverse = Tr D; both reject inputs carrying a
// projective (resp. injective) direct summand.
Rep transpose(const Rep& x);
Rep tau(const Rep& x);
Rep tau_inverse(const Rep& x);

// Nakayama functor for selfinjective algebras: nu X = coker(nu P1 -> nu P0).
Rep nakayama(const Rep& x);

}  // namespace argen
