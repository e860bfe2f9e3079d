#include <algorithm>
#include <stdexcept>

#include "argen/decompose.hpp"
#include "argen/hypotheses.hpp"
#include "argen/rep.hpp"

namespace argen {

namespace {

// Morphism P_v -> Y determined by the image of e_v (Yoneda).
Morphism morphism_from_projective(const Rep& pv, int v, const Rep& y,
                                  const Mat& gen) {
  const AlgebraPtr& alg = y.algebra();
  std::vector<Mat> mats;
  for (int w = 0; w < alg->num_vertices(); ++w) {
    const auto& cls = alg->basis_from_to(v, w);
    Mat m(y.dim(w), cls.size(), alg->prime());
    for (std::size_t c = 0; c < cls.size(); ++c) {
      Mat col = y.act(v, alg->basis_path(cls[c]).word) * gen;
      for (std::size_t i = 0; i < col.rows(); ++i) m(i, c) = col(i, 0);
    }
    mats.push_back(std::move(m));
  }
  return Morphism(pv, y, std::move(mats));
}

struct CoverData {
  bool trivial = false;  // x was zero
  std::optional<DirectSum> ds;  // of projectives, one per top basis element
  std::vector<int> copy_vertex;
  std::optional<Morphism> cover;  // ds.sum -> x, surjective
};

CoverData make_cover(const Rep& x) {
  const AlgebraPtr& alg = x.algebra();
  CoverData cd;
  auto [topx, projtop, lift] = quotient_with_lift(x, radical_power_sub(x, 1));
  std::vector<Rep> parts;
  std::vector<Morphism> comps;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    for (int c = 0; c < topx.dim(v); ++c) {
      Rep pv = Rep::projective(alg, v);
      comps.push_back(morphism_from_projective(pv, v, x, lift[v].col(c)));
      parts.push_back(std::move(pv));
      cd.copy_vertex.push_back(v);
    }
  }
  if (parts.empty()) {
    cd.trivial = true;
    return cd;
  }
  cd.ds = direct_sum(parts);
  cd.cover = assemble_from_sum(*cd.ds, comps);
  if (!cd.cover->is_surjective())
    throw std::logic_error("projective cover map not surjective");
  return cd;
}

}  // namespace

SES projective_cover(const Rep& x) {
  CoverData cd = make_cover(x);
  if (cd.trivial) {
    Rep z = Rep::zero(x.algebra());
    return SES{Morphism::zero(z, z), Morphism::zero(z, x)};
  }
  auto [omega, inc] = kernel(*cd.cover);
  // Minimality certificate: ker lies inside rad P.
  VertexBases radp = radical_power_sub(cd.ds->sum, 1);
  for (std::size_t v = 0; v < radp.size(); ++v) {
    if (!solve(radp[v], inc.at(v)))
      throw std::logic_error("projective cover not minimal: ker outside rad P");
  }
  SES s{std::move(inc), *cd.cover};
  s.check();
  return s;
}

Rep syzygy(const Rep& x) { return projective_cover(x).sub(); }

Rep cosyzygy(const Rep& x) { return dual(syzygy(dual(x))); }

namespace {

// Hom(-, Lambda) applied to a minimal projective presentation P1 -> P0 of x:
// the induced map  Hom(P0, Lambda) -> Hom(P1, Lambda)  as a morphism between
// sums of projectives over the opposite algebra. Tr x is its cokernel, nu x
// the cokernel of its dual. Returns nullopt when x is projective (P1 = 0);
// p0_sum_op then still carries Hom(P0, Lambda).
struct PresentationDual {
  bool zero = false;     // x was zero
  bool no_syzygy = false;  // x projective: Hom(P0,-) only
  std::optional<DirectSum> p0op;
  std::optional<DirectSum> p1op;
  std::optional<Morphism> g;  // p0op.sum -> p1op.sum
};

PresentationDual presentation_dual(const Rep& x) {
  const AlgebraPtr& alg = x.algebra();
  const AlgebraPtr op = alg->opposite();
  PresentationDual pd;
  if (x.is_zero_rep()) {
    pd.zero = true;
    return pd;
  }
  CoverData c0 = make_cover(x);
  auto [omega, iota] = kernel(*c0.cover);

  std::vector<Rep> opproj;
  for (int v = 0; v < op->num_vertices(); ++v)
    opproj.push_back(Rep::projective(op, v));

  std::vector<Rep> parts0;
  for (int v : c0.copy_vertex) parts0.push_back(opproj[v]);
  pd.p0op = direct_sum(parts0);

  if (omega.is_zero_rep()) {
    pd.no_syzygy = true;
    return pd;
  }
  CoverData c1 = make_cover(omega);
  Morphism f = c1.cover->then(iota);  // P1 -> P0

  std::vector<Rep> parts1;
  for (int v : c1.copy_vertex) parts1.push_back(opproj[v]);
  pd.p1op = direct_sum(parts1);

  // Position of each algebra basis class inside its (src,tgt) block, for
  // both algebras.
  auto block_pos = [](const AlgebraPtr& a) {
    std::vector<int> pos(a->dim(), -1);
    for (int i = 0; i < a->num_vertices(); ++i)
      for (int j = 0; j < a->num_vertices(); ++j) {
        const auto& cls = a->basis_from_to(i, j);
        for (std::size_t t = 0; t < cls.size(); ++t)
          pos[cls[t]] = static_cast<int>(t);
      }
    return pos;
  };
  std::vector<int> oppos = block_pos(op);

  const std::uint32_t p = alg->prime();
  const PrimeField& field = alg->field();
  std::vector<Morphism> g_comps;
  for (std::size_t l = 0; l < c0.copy_vertex.size(); ++l) {
    const int bl = c0.copy_vertex[l];
    std::optional<Morphism> comp;
    for (std::size_t k = 0; k < c1.copy_vertex.size(); ++k) {
      const int ak = c1.copy_vertex[k];
      // Generator e_{ak} of copy k inside (P1)_{ak}.
      const auto& cls = alg->basis_from_to(ak, ak);
      int epos = -1;
      for (std::size_t t = 0; t < cls.size(); ++t)
        if (cls[t] == alg->idempotent_index(ak)) epos = static_cast<int>(t);
      Mat e(c1.ds->inc[k].source().dim(ak), 1, p);
      e(epos, 0) = 1;
      Mat u = c1.ds->inc[k].at(ak) * e;
      // Its image under f, split into P0 components.
      Mat w = f.at(ak) * u;
      Mat y = c0.ds->proj[l].at(ak) * w;  // coords over paths bl -> ak
      // Reverse each contributing path into the opposite algebra.
      const auto& cls0 = alg->basis_from_to(bl, ak);
      Mat gen(opproj[ak].dim(bl), 1, p);
      bool nonzero = false;
      for (std::size_t t = 0; t < cls0.size(); ++t) {
        std::uint32_t coef = y(t, 0);
        if (coef == 0) continue;
        Word rev = alg->basis_path(cls0[t]).word;
        std::reverse(rev.begin(), rev.end());
        for (const auto& [ob, oc] : op->reduce_word(ak, rev)) {
          gen(oppos[ob], 0) = field.add(gen(oppos[ob], 0), field.mul(coef, oc));
          nonzero = true;
        }
      }
      Morphism m =
          nonzero ? morphism_from_projective(opproj[bl], bl, opproj[ak], gen)
                  : Morphism::zero(opproj[bl], opproj[ak]);
      Morphism into_sum = m.then(pd.p1op->inc[k]);
      comp = comp ? (*comp + into_sum) : into_sum;
    }
    g_comps.push_back(*comp);
  }
  pd.g = assemble_from_sum(*pd.p0op, g_comps);
  return pd;
}

}  // namespace

Rep transpose(const Rep& x) {
  const AlgebraPtr op = x.algebra()->opposite();
  PresentationDual pd = presentation_dual(x);
  if (pd.zero || pd.no_syzygy) return Rep::zero(op);
  return cokernel(*pd.g).first;
}

Rep tau(const Rep& x) {
  if (auto name = find_projective_summand(x))
    throw std::invalid_argument("tau: input has projective summand " + *name);
  if (x.is_zero_rep()) return x;
  return dual(transpose(x));
}

Rep tau_inverse(const Rep& x) {
  if (auto name = find_injective_summand(x))
    throw std::invalid_argument("tau_inverse: input has injective summand " +
                                *name);
  if (x.is_zero_rep()) return x;
  return transpose(dual(x));
}

Rep nakayama(const Rep& x) {
  if (!validate_hypotheses(x.algebra()).selfinjective)
    throw std::invalid_argument("nakayama: algebra is not selfinjective");
  PresentationDual pd = presentation_dual(x);
  if (pd.zero) return Rep::zero(x.algebra());
  if (pd.no_syzygy) return dual(pd.p0op->sum);
  return cokernel(dual(*pd.g)).first;
}

}  // namespace argen
