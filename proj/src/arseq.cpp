#include "argen/arseq.hpp"

#include <stdexcept>

namespace argen {

namespace {

// Reduce a 1xN row against rows in echelon form with the given pivots.
Mat reduce_row(Mat row, const Mat& red, const std::vector<std::size_t>& piv) {
  const PrimeField& f = row.field();
  for (std::size_t k = 0; k < piv.size(); ++k) {
    std::uint32_t c = row(0, piv[k]);
    if (c == 0) continue;
    for (std::size_t j = 0; j < row.cols(); ++j)
      row(0, j) = f.sub(row(0, j), f.mul(c, red(k, j)));
  }
  return row;
}

}  // namespace

Ext1 ext1(const Rep& c, const Rep& a) {
  Ext1 e{c, a, projective_cover(c), {}, Mat(), {}, Mat()};
  const Rep& omega = e.cover.sub();
  std::vector<Morphism> basis = hom(omega, a);
  if (basis.empty()) return e;
  const std::size_t n = basis[0].flat().cols();
  const std::uint32_t p = c.algebra()->prime();

  std::vector<Morphism> from_p0 = hom(e.cover.mid(), a);
  Mat img(from_p0.size(), n, p);
  for (std::size_t i = 0; i < from_p0.size(); ++i) {
    Mat fl = e.cover.inc.then(from_p0[i]).flat();
    for (std::size_t j = 0; j < n; ++j) img(i, j) = fl(0, j);
  }
  RrefResult r = rref(img);
  e.image_red = r.reduced.rows_slice(0, r.rank);
  e.image_piv = r.pivots;

  // Pick basis elements whose residues mod the image are independent.
  std::vector<Mat> residues;
  std::vector<std::size_t> res_piv;
  Mat res_red(0, n, p);
  for (Morphism& b : basis) {
    Mat res = reduce_row(b.flat(), e.image_red, e.image_piv);
    Mat probe = reduce_row(res, res_red, res_piv);
    std::size_t pc = n;
    for (std::size_t j = 0; j < n; ++j)
      if (probe(0, j) != 0) {
        pc = j;
        break;
      }
    if (pc == n) continue;
    std::uint32_t s = probe.field().inv(probe(0, pc));
    res_red = res_red.vstacked(probe.scaled(s));
    res_piv.push_back(pc);
    residues.push_back(res);
    e.reps.push_back(std::move(b));
  }
  e.rep_residues = Mat(residues.size(), n, p);
  for (std::size_t i = 0; i < residues.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) e.rep_residues(i, j) = residues[i](0, j);
  return e;
}

std::vector<std::uint32_t> ext_coords(const Ext1& e, const Morphism& h) {
  Mat res = reduce_row(h.flat(), e.image_red, e.image_piv);
  if (e.reps.empty()) {
    if (!res.is_zero())
      throw std::logic_error("ext_coords: nonzero class in trivial Ext group");
    return {};
  }
  auto x = solve(e.rep_residues.transposed(), res.transposed());
  if (!x) throw std::logic_error("ext_coords: class outside the basis span");
  std::vector<std::uint32_t> out(e.reps.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*x)(i, 0);
  return out;
}

SES realize(const Ext1& e, const Morphism& h) {
  const Rep& omega = e.cover.sub();
  const Rep& p0 = e.cover.mid();
  const std::uint32_t p = e.c.algebra()->prime();
  DirectSum ds = direct_sum({e.a, p0});
  // Pushout: B = coker( Omega C -> A + P_0, x |-> (-h x, iota x) ).
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < omega.dims().size(); ++v) {
    int vi = static_cast<int>(v);
    mats.push_back(h.at(vi).scaled(p - 1).vstacked(e.cover.inc.at(vi)));
  }
  Morphism glue(omega, ds.sum, std::move(mats), true);
  auto [b, q] = cokernel(glue);
  Morphism inc = ds.inc[0].then(q);
  if (!inc.is_injective()) throw std::logic_error("realize: pushout collapsed");
  Morphism onto_c =
      assemble_from_sum(ds, {Morphism::zero(e.a, e.c), e.cover.proj});
  auto proj = solve_left_factor(onto_c, q);
  if (!proj) throw std::logic_error("realize: projection did not descend");
  SES s{inc, *proj};
  s.check();
  return s;
}

std::vector<std::uint32_t> ext_class_of(const Ext1& e, const SES& s) {
  auto lam = solve_right_factor(e.cover.proj, s.proj);
  if (!lam) throw std::logic_error("ext_class_of: cover failed to lift");
  auto h = solve_right_factor(e.cover.inc.then(*lam), s.inc);
  if (!h) throw std::logic_error("ext_class_of: restriction missed the kernel");
  return ext_coords(e, *h);
}

Morphism syzygy_of_endo(const Ext1& e, const Morphism& phi) {
  auto phi0 = solve_right_factor(e.cover.proj.then(phi), e.cover.proj);
  if (!phi0)
    throw std::logic_error("syzygy_of_endo: no lift through the cover");
  auto res = solve_right_factor(e.cover.inc.then(*phi0), e.cover.inc);
  if (!res)
    throw std::logic_error("syzygy_of_endo: lift does not preserve the kernel");
  return *res;
}

ARSequence almost_split_ending_at(const Rep& c, const DecomposeOptions& opts) {
  if (find_projective_summand(c, opts))
    throw std::invalid_argument(
        "almost_split_ending_at: projective end term");
  Rep t = tau(c);
  Ext1 e = ext1(c, t);
  if (e.dim() == 0)
    throw std::logic_error("almost_split_ending_at: Ext^1(C, tau C) = 0");
  // The almost split class spans the socle of Ext^1(C, tau C) over End(C);
  // cut the socle out as the joint kernel of the radical action.
  std::vector<Morphism> rad = radical_of_local_endo(c, opts);
  const std::uint32_t p = c.algebra()->prime();
  const std::size_t d = static_cast<std::size_t>(e.dim());
  Mat action(rad.size() * d, d, p);
  for (std::size_t r = 0; r < rad.size(); ++r) {
    Morphism om = syzygy_of_endo(e, rad[r]);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<std::uint32_t> col = ext_coords(e, om.then(e.reps[j]));
      for (std::size_t i = 0; i < d; ++i) action(r * d + i, j) = col[i];
    }
  }
  Mat soc = rad.empty() ? Mat::identity(d, p) : nullspace(action);
  if (soc.cols() != 1)
    throw std::logic_error("almost_split_ending_at: socle is not simple");
  Morphism h = Morphism::zero(e.cover.sub(), t);
  for (std::size_t j = 0; j < d; ++j)
    if (soc(j, 0)) h = h + e.reps[j].scaled(soc(j, 0));
  ARSequence out{realize(e, h)};
  if (out.seq.splits())
    throw std::logic_error("almost_split_ending_at: sequence split");
  return out;
}

ARSequence almost_split_starting_at(const Rep& n, const DecomposeOptions& opts) {
  if (find_injective_summand(n, opts))
    throw std::invalid_argument(
        "almost_split_starting_at: injective start term");
  ARSequence s = almost_split_ending_at(tau_inverse(n), opts);
  auto j = find_isomorphism(n, s.seq.sub(), opts);
  if (!j)
    throw std::logic_error(
        "almost_split_starting_at: tau tau^{-1} N is not N");
  SES fixed{j->then(s.seq.inc), s.seq.proj};
  fixed.check();
  return ARSequence{fixed};
}

bool verify_right_almost_split(const ARSequence& s,
                               const std::vector<Rep>& testers,
                               const DecomposeOptions& opts) {
  const Rep& c = s.seq.quot();
  for (const Rep& x : testers) {
    std::vector<Morphism> maps;
    if (auto iso = find_isomorphism(x, c, opts)) {
      for (const Morphism& r : radical_of_local_endo(c, opts))
        maps.push_back(iso->then(r));
    } else {
      maps = hom(x, c);
    }
    for (const Morphism& f : maps)
      if (!solve_right_factor(f, s.seq.proj)) return false;
  }
  return true;
}

bool is_mutable_position(const std::vector<Rep>& gens, std::size_t idx,
                         const DecomposeOptions& opts) {
  if (is_injective_rep(gens[idx], opts)) return false;
  ARSequence ar = almost_split_starting_at(gens[idx], opts);
  std::vector<Rep> others;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (i != idx) others.push_back(gens[i]);
  if (ar.seq.mid().is_zero_rep()) return true;
  return in_add(ar.seq.mid(), others, opts).has_value();
}

}  // namespace argen
