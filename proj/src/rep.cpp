#include "argen/rep.hpp"

#include <stdexcept>

namespace argen {

namespace {

// All composable words of length k, with their source vertex.
void collect_words(const Quiver& q, int at, int remaining, Word& acc, int src,
                   std::vector<std::pair<int, Word>>& out) {
  if (remaining == 0) {
    out.emplace_back(src, acc);
    return;
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].src != at) continue;
    acc.push_back(static_cast<int>(a));
    collect_words(q, q.arrows[a].tgt, remaining - 1, acc, src, out);
    acc.pop_back();
  }
}

std::vector<std::pair<int, Word>> words_of_length(const Quiver& q, int k) {
  std::vector<std::pair<int, Word>> out;
  Word acc;
  for (int v = 0; v < q.num_vertices; ++v)
    collect_words(q, v, k, acc, v, out);
  return out;
}

int word_target(const Quiver& q, int src, const Word& w) {
  int at = src;
  for (int a : w) at = q.arrows[a].tgt;
  return at;
}

}  // namespace

Rep::Rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> arrow_mats)
    : alg_(std::move(alg)), dims_(std::move(dims)),
      arrow_(std::move(arrow_mats)) {
  if (static_cast<int>(dims_.size()) != alg_->num_vertices())
    throw std::invalid_argument("Rep: dimension vector length mismatch");
  if (static_cast<int>(arrow_.size()) != alg_->num_arrows())
    throw std::invalid_argument("Rep: arrow matrix count mismatch");
  for (int a = 0; a < alg_->num_arrows(); ++a) {
    const Arrow& ar = alg_->quiver().arrows[a];
    if (arrow_[a].rows() != static_cast<std::size_t>(dims_[ar.tgt]) ||
        arrow_[a].cols() != static_cast<std::size_t>(dims_[ar.src]) ||
        arrow_[a].prime() != alg_->prime())
      throw std::invalid_argument("Rep: arrow matrix '" + ar.label +
                                  "' has wrong shape or field");
  }
  check_relations();
}

Rep Rep::zero(AlgebraPtr alg) {
  std::vector<int> dims(alg->num_vertices(), 0);
  std::vector<Mat> mats;
  for (int a = 0; a < alg->num_arrows(); ++a)
    mats.emplace_back(0, 0, alg->prime());
  return Rep(std::move(alg), std::move(dims), std::move(mats));
}

Rep Rep::simple(AlgebraPtr alg, int v) {
  if (v < 0 || v >= alg->num_vertices())
    throw std::invalid_argument("simple: bad vertex");
  std::vector<int> dims(alg->num_vertices(), 0);
  dims[v] = 1;
  std::vector<Mat> mats;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrows[a];
    mats.emplace_back(dims[ar.tgt], dims[ar.src], alg->prime());
  }
  return Rep(std::move(alg), std::move(dims), std::move(mats));
}

Rep Rep::projective(AlgebraPtr alg, int v) {
  if (v < 0 || v >= alg->num_vertices())
    throw std::invalid_argument("projective: bad vertex");
  const int n = alg->num_vertices();
  // (P_v)_w = span of basis path classes v -> w; arrows append.
  std::vector<int> dims(n, 0);
  std::vector<std::vector<int>> pos(alg->dim(), std::vector<int>());
  std::vector<int> basis_pos(alg->dim(), -1);
  for (int w = 0; w < n; ++w) {
    const auto& cls = alg->basis_from_to(v, w);
    dims[w] = static_cast<int>(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i)
      basis_pos[cls[i]] = static_cast<int>(i);
  }
  std::vector<Mat> mats;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrows[a];
    Mat m(dims[ar.tgt], dims[ar.src], alg->prime());
    const auto& src_cls = alg->basis_from_to(v, ar.src);
    for (std::size_t c = 0; c < src_cls.size(); ++c) {
      Word w = alg->basis_path(src_cls[c]).word;
      w.push_back(a);
      for (const auto& [b, coef] : alg->reduce_word(v, w))
        m(basis_pos[b], c) = coef;
    }
    mats.push_back(std::move(m));
  }
  return Rep(std::move(alg), std::move(dims), std::move(mats));
}

Rep Rep::injective(AlgebraPtr alg, int v) {
  return dual(projective(alg->opposite(), v));
}

Rep Rep::regular(AlgebraPtr alg) {
  std::vector<Rep> parts;
  for (int v = 0; v < alg->num_vertices(); ++v)
    parts.push_back(projective(alg, v));
  return direct_sum(parts).sum;
}

int Rep::total_dim() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

Mat Rep::act(int src, const Word& w) const {
  Mat m = Mat::identity(dims_[src], alg_->prime());
  int at = src;
  for (int a : w) {
    if (alg_->quiver().arrows[a].src != at)
      throw std::invalid_argument("Rep::act: word not composable");
    m = arrow_[a] * m;
    at = alg_->quiver().arrows[a].tgt;
  }
  return m;
}

void Rep::check_relations() const {
  for (const Relation& r : alg_->relations()) {
    int src = alg_->quiver().arrows[r.terms[0].word[0]].src;
    int tgt = word_target(alg_->quiver(), src, r.terms[0].word);
    Mat sum(dims_[tgt], dims_[src], alg_->prime());
    for (const RelTerm& t : r.terms)
      sum = sum + act(src, t.word).scaled(alg_->field().residue(t.coef));
    if (!sum.is_zero())
      throw std::invalid_argument("Rep: relation not satisfied");
  }
  for (const auto& [src, w] : words_of_length(alg_->quiver(), alg_->bound())) {
    if (!act(src, w).is_zero())
      throw std::invalid_argument(
          "Rep: a word of maximal length acts nontrivially");
  }
}

Morphism::Morphism(Rep src, Rep tgt, std::vector<Mat> f, bool checked)
    : src_(std::move(src)), tgt_(std::move(tgt)), f_(std::move(f)) {
  if (!src_.same_algebra(tgt_))
    throw std::invalid_argument("Morphism: presentation mismatch");
  if (f_.size() != src_.dims().size())
    throw std::invalid_argument("Morphism: vertex matrix count mismatch");
  for (std::size_t v = 0; v < f_.size(); ++v) {
    if (f_[v].rows() != static_cast<std::size_t>(tgt_.dim(v)) ||
        f_[v].cols() != static_cast<std::size_t>(src_.dim(v)))
      throw std::invalid_argument("Morphism: matrix shape mismatch");
  }
  if (!checked) check_intertwining();
}

void Morphism::check_intertwining() const {
  const Quiver& q = src_.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    Mat lhs = f_[ar.tgt] * src_.arrow(a);
    Mat rhs = tgt_.arrow(a) * f_[ar.src];
    if (!(lhs == rhs))
      throw std::invalid_argument("Morphism: intertwining fails at arrow '" +
                                  ar.label + "'");
  }
}

Morphism Morphism::zero(const Rep& src, const Rep& tgt) {
  std::vector<Mat> f;
  for (std::size_t v = 0; v < src.dims().size(); ++v)
    f.emplace_back(tgt.dim(v), src.dim(v), src.algebra()->prime());
  return Morphism(src, tgt, std::move(f), true);
}

Morphism Morphism::identity(const Rep& x) {
  std::vector<Mat> f;
  for (std::size_t v = 0; v < x.dims().size(); ++v)
    f.push_back(Mat::identity(x.dim(v), x.algebra()->prime()));
  return Morphism(x, x, std::move(f), true);
}

Morphism Morphism::then(const Morphism& g) const {
  std::vector<Mat> f;
  for (std::size_t v = 0; v < f_.size(); ++v) f.push_back(g.f_[v] * f_[v]);
  return Morphism(src_, g.tgt_, std::move(f), true);
}

Morphism Morphism::operator+(const Morphism& o) const {
  std::vector<Mat> f;
  for (std::size_t v = 0; v < f_.size(); ++v) f.push_back(f_[v] + o.f_[v]);
  return Morphism(src_, tgt_, std::move(f), true);
}

Morphism Morphism::operator-(const Morphism& o) const {
  std::vector<Mat> f;
  for (std::size_t v = 0; v < f_.size(); ++v) f.push_back(f_[v] - o.f_[v]);
  return Morphism(src_, tgt_, std::move(f), true);
}

Morphism Morphism::scaled(std::uint32_t c) const {
  std::vector<Mat> f;
  for (std::size_t v = 0; v < f_.size(); ++v) f.push_back(f_[v].scaled(c));
  return Morphism(src_, tgt_, std::move(f), true);
}

bool Morphism::is_zero_map() const {
  for (const Mat& m : f_)
    if (!m.is_zero()) return false;
  return true;
}

bool Morphism::is_injective() const {
  for (const Mat& m : f_)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool Morphism::is_surjective() const {
  for (const Mat& m : f_)
    if (rank(m) != m.rows()) return false;
  return true;
}

bool Morphism::is_isomorphism() const {
  for (const Mat& m : f_)
    if (!is_invertible(m)) return false;
  return true;
}

Mat Morphism::flat() const {
  Mat out(1, 0, src_.algebra()->prime());
  for (const Mat& m : f_) out = out.hstacked(m.flattened());
  return out;
}

std::vector<Morphism> hom(const Rep& x, const Rep& y) {
  if (!x.same_algebra(y))
    throw std::invalid_argument("hom: presentation mismatch");
  const AlgebraPtr& alg = x.algebra();
  const int n = alg->num_vertices();
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v)
    offset[v + 1] = offset[v] + y.dim(v) * x.dim(v);
  const int total = offset[n];

  std::size_t neq = 0;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrows[a];
    neq += static_cast<std::size_t>(y.dim(ar.tgt)) * x.dim(ar.src);
  }
  Mat sys(neq, total, alg->prime());
  const PrimeField& f = alg->field();
  std::size_t eq = 0;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrows[a];
    const int u = ar.src, v = ar.tgt;
    const Mat& xa = x.arrow(a);
    const Mat& ya = y.arrow(a);
    // f_v X_a - Y_a f_u = 0, entry (r, c): r < dim y_v, c < dim x_u.
    for (int r = 0; r < y.dim(v); ++r) {
      for (int c = 0; c < x.dim(u); ++c) {
        for (int k = 0; k < x.dim(v); ++k) {
          std::size_t col = offset[v] + static_cast<std::size_t>(r) * x.dim(v) + k;
          sys(eq, col) = f.add(sys(eq, col), xa(k, c));
        }
        for (int k = 0; k < y.dim(u); ++k) {
          std::size_t col = offset[u] + static_cast<std::size_t>(k) * x.dim(u) + c;
          sys(eq, col) = f.sub(sys(eq, col), ya(r, k));
        }
        ++eq;
      }
    }
  }
  Mat ns = nullspace(sys);
  std::vector<Morphism> basis;
  for (std::size_t j = 0; j < ns.cols(); ++j) {
    basis.push_back(morphism_from_flat(x, y, ns.col(j).transposed()));
  }
  return basis;
}

int hom_dim(const Rep& x, const Rep& y) {
  return static_cast<int>(hom(x, y).size());
}

Morphism morphism_from_flat(const Rep& x, const Rep& y, const Mat& flat_row) {
  const int n = x.algebra()->num_vertices();
  std::vector<Mat> mats;
  std::size_t at = 0;
  for (int v = 0; v < n; ++v) {
    std::size_t sz = static_cast<std::size_t>(y.dim(v)) * x.dim(v);
    Mat block = flat_row.cols_slice(at, sz);
    mats.push_back(Mat::unflatten(block, y.dim(v), x.dim(v)));
    at += sz;
  }
  return Morphism(x, y, std::move(mats), true);
}

void SES::check() const {
  if (!inc.is_injective()) throw std::invalid_argument("SES: inc not mono");
  if (!proj.is_surjective()) throw std::invalid_argument("SES: proj not epi");
  if (!inc.then(proj).is_zero_map())
    throw std::invalid_argument("SES: composition nonzero");
  for (std::size_t v = 0; v < mid().dims().size(); ++v) {
    if (mid().dim(v) != sub().dim(v) + quot().dim(v))
      throw std::invalid_argument("SES: dimension count fails");
  }
}

bool SES::splits() const {
  return solve_left_factor(Morphism::identity(sub()), inc).has_value();
}

std::optional<Morphism> solve_right_factor(const Morphism& f,
                                           const Morphism& through) {
  // g : f.source -> through.source with through o g = f.
  std::vector<Morphism> basis = hom(f.source(), through.source());
  if (basis.empty()) {
    if (f.is_zero_map()) return Morphism::zero(f.source(), through.source());
    return std::nullopt;
  }
  std::vector<Mat> cols;
  for (const Morphism& h : basis) cols.push_back(h.then(through).flat());
  Mat a(cols[0].cols(), cols.size(), f.source().algebra()->prime());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].cols(); ++i) a(i, j) = cols[j](0, i);
  auto x = solve(a, f.flat().transposed());
  if (!x) return std::nullopt;
  Morphism g = Morphism::zero(f.source(), through.source());
  for (std::size_t j = 0; j < basis.size(); ++j)
    g = g + basis[j].scaled((*x)(j, 0));
  return g;
}

std::optional<Morphism> solve_left_factor(const Morphism& f,
                                          const Morphism& through) {
  // g : through.target -> f.target with g o through = f.
  std::vector<Morphism> basis = hom(through.target(), f.target());
  if (basis.empty()) {
    if (f.is_zero_map()) return Morphism::zero(through.target(), f.target());
    return std::nullopt;
  }
  std::vector<Mat> cols;
  for (const Morphism& h : basis) cols.push_back(through.then(h).flat());
  Mat a(cols[0].cols(), cols.size(), f.source().algebra()->prime());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].cols(); ++i) a(i, j) = cols[j](0, i);
  auto x = solve(a, f.flat().transposed());
  if (!x) return std::nullopt;
  Morphism g = Morphism::zero(through.target(), f.target());
  for (std::size_t j = 0; j < basis.size(); ++j)
    g = g + basis[j].scaled((*x)(j, 0));
  return g;
}

std::pair<Rep, Morphism> sub_rep(const Rep& x, const VertexBases& bases) {
  const AlgebraPtr& alg = x.algebra();
  std::vector<int> dims;
  for (const Mat& b : bases) dims.push_back(static_cast<int>(b.cols()));
  std::vector<Mat> mats;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrows[a];
    auto sol = solve(bases[ar.tgt], x.arrow(a) * bases[ar.src]);
    if (!sol)
      throw std::invalid_argument("sub_rep: subspaces not arrow-closed");
    mats.push_back(std::move(*sol));
  }
  Rep s(alg, std::move(dims), std::move(mats));
  Morphism inc(s, x, bases, false);
  return {std::move(s), std::move(inc)};
}

std::tuple<Rep, Morphism, VertexBases> quotient_with_lift(
    const Rep& x, const VertexBases& bases) {
  const AlgebraPtr& alg = x.algebra();
  const std::uint32_t p = alg->prime();
  std::vector<Mat> projs, lifts;
  std::vector<int> dims;
  for (std::size_t v = 0; v < bases.size(); ++v) {
    const Mat& b = bases[v];
    const std::size_t d = x.dim(v);
    RrefResult r = rref(b.transposed());
    std::vector<bool> piv(d, false);
    for (auto c : r.pivots) piv[c] = true;
    std::vector<std::size_t> rep_coords;
    for (std::size_t c = 0; c < d; ++c)
      if (!piv[c]) rep_coords.push_back(c);
    // T = [b | standard vectors at non-pivot coordinates] is invertible.
    Mat t(d, d, p);
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t i = 0; i < d; ++i) t(i, j) = b(i, j);
    for (std::size_t k = 0; k < rep_coords.size(); ++k)
      t(rep_coords[k], b.cols() + k) = 1;
    auto tinv = inverse(t);
    if (!tinv)
      throw std::logic_error("quotient_with_lift: complement not complementary");
    projs.push_back(tinv->rows_slice(b.cols(), d - b.cols()));
    Mat lift(d, d - b.cols(), p);
    for (std::size_t k = 0; k < rep_coords.size(); ++k)
      lift(rep_coords[k], k) = 1;
    lifts.push_back(std::move(lift));
    dims.push_back(static_cast<int>(d - b.cols()));
  }
  std::vector<Mat> mats;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrows[a];
    mats.push_back(projs[ar.tgt] * x.arrow(a) * lifts[ar.src]);
  }
  Rep q(alg, std::move(dims), std::move(mats));
  Morphism proj(x, q, std::move(projs), false);
  return {std::move(q), std::move(proj), std::move(lifts)};
}

std::pair<Rep, Morphism> quotient_rep(const Rep& x, const VertexBases& bases) {
  auto [q, proj, lift] = quotient_with_lift(x, bases);
  return {std::move(q), std::move(proj)};
}

std::pair<Rep, Morphism> kernel(const Morphism& f) {
  VertexBases bases;
  for (const Mat& m : f.mats()) bases.push_back(nullspace(m));
  return sub_rep(f.source(), bases);
}

std::pair<Rep, Morphism> image(const Morphism& f) {
  VertexBases bases;
  for (const Mat& m : f.mats()) bases.push_back(column_space(m));
  return sub_rep(f.target(), bases);
}

std::pair<Rep, Morphism> cokernel(const Morphism& f) {
  VertexBases bases;
  for (const Mat& m : f.mats()) bases.push_back(column_space(m));
  return quotient_rep(f.target(), bases);
}

DirectSum direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no parts");
  const AlgebraPtr& alg = parts[0].algebra();
  const int n = alg->num_vertices();
  std::vector<int> dims(n, 0);
  for (const Rep& r : parts) {
    if (r.algebra().get() != alg.get())
      throw std::invalid_argument("direct_sum: presentation mismatch");
    for (int v = 0; v < n; ++v) dims[v] += r.dim(v);
  }
  std::vector<Mat> mats;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const Arrow& ar = alg->quiver().arrows[a];
    Mat m(dims[ar.tgt], dims[ar.src], alg->prime());
    std::size_t ro = 0, co = 0;
    for (const Rep& r : parts) {
      const Mat& b = r.arrow(a);
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
      ro += b.rows();
      co += b.cols();
    }
    mats.push_back(std::move(m));
  }
  DirectSum ds{Rep(alg, std::move(dims), std::move(mats)), {}, {}};
  std::vector<int> at(n, 0);
  for (const Rep& r : parts) {
    std::vector<Mat> inc, proj;
    for (int v = 0; v < n; ++v) {
      Mat mi(ds.sum.dim(v), r.dim(v), alg->prime());
      Mat mp(r.dim(v), ds.sum.dim(v), alg->prime());
      for (int i = 0; i < r.dim(v); ++i) {
        mi(at[v] + i, i) = 1;
        mp(i, at[v] + i) = 1;
      }
      inc.push_back(std::move(mi));
      proj.push_back(std::move(mp));
    }
    ds.inc.emplace_back(r, ds.sum, std::move(inc), true);
    ds.proj.emplace_back(ds.sum, r, std::move(proj), true);
    for (int v = 0; v < n; ++v) at[v] += r.dim(v);
  }
  return ds;
}

Morphism assemble_from_sum(const DirectSum& ds,
                           const std::vector<Morphism>& components) {
  if (components.size() != ds.inc.size() || components.empty())
    throw std::invalid_argument("assemble_from_sum: component count mismatch");
  Morphism out = Morphism::zero(ds.sum, components[0].target());
  for (std::size_t i = 0; i < components.size(); ++i)
    out = out + ds.proj[i].then(components[i]);
  return out;
}

VertexBases radical_power_sub(const Rep& x, int k) {
  const AlgebraPtr& alg = x.algebra();
  const int n = alg->num_vertices();
  VertexBases bases;
  if (k == 0) {
    for (int v = 0; v < n; ++v)
      bases.push_back(Mat::identity(x.dim(v), alg->prime()));
    return bases;
  }
  auto words = words_of_length(alg->quiver(), k);
  for (int v = 0; v < n; ++v) {
    Mat acc(x.dim(v), 0, alg->prime());
    for (const auto& [src, w] : words) {
      if (word_target(alg->quiver(), src, w) != v) continue;
      acc = acc.hstacked(x.act(src, w));
    }
    bases.push_back(column_space(acc));
  }
  return bases;
}

VertexBases socle_power_sub(const Rep& x, int k) {
  const AlgebraPtr& alg = x.algebra();
  const int n = alg->num_vertices();
  auto words = words_of_length(alg->quiver(), k);
  VertexBases bases;
  for (int v = 0; v < n; ++v) {
    Mat acc(0, x.dim(v), alg->prime());
    for (const auto& [src, w] : words) {
      if (src != v) continue;
      acc = acc.vstacked(x.act(src, w));
    }
    bases.push_back(nullspace(acc));
  }
  return bases;
}

std::pair<Rep, Morphism> radical(const Rep& x) {
  return sub_rep(x, radical_power_sub(x, 1));
}

std::pair<Rep, Morphism> socle(const Rep& x) {
  return sub_rep(x, socle_power_sub(x, 1));
}

std::pair<Rep, Morphism> top(const Rep& x) {
  return quotient_rep(x, radical_power_sub(x, 1));
}

Rep dual(const Rep& x) {
  AlgebraPtr op = x.algebra()->opposite();
  std::vector<Mat> mats;
  for (int a = 0; a < op->num_arrows(); ++a)
    mats.push_back(x.arrow(a).transposed());
  return Rep(op, x.dims(), std::move(mats));
}

Morphism dual(const Morphism& f) {
  std::vector<Mat> mats;
  for (const Mat& m : f.mats()) mats.push_back(m.transposed());
  return Morphism(dual(f.target()), dual(f.source()), std::move(mats), true);
}

SES dual(const SES& s) {
  SES d{dual(s.proj), dual(s.inc)};
  d.check();
  return d;
}

}  // namespace argen
