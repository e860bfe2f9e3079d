#include "argen/decompose.hpp"

#include <random>
#include <stdexcept>

namespace argen {

int Decomposition::total_indecomposables() const {
  int t = 0;
  for (const Summand& s : summands) t += s.multiplicity;
  return t;
}

namespace {

struct Piece {
  Rep rep;
  Morphism inc;   // rep -> root
  Morphism proj;  // root -> rep
};

struct SplitResult {
  Piece a, b;
};

// X = ker(psi) + im(psi) with psi = phi^m; valid split when both parts are
// proper and the sum is direct.
std::optional<SplitResult> split_along(const Rep& x, const Morphism& phi,
                                       std::size_t m) {
  const AlgebraPtr& alg = x.algebra();
  Morphism psi = phi;
  {
    std::vector<Mat> mats;
    for (const Mat& f : phi.mats()) mats.push_back(f.pow(m));
    psi = Morphism(x, x, std::move(mats), true);
  }
  VertexBases kerb, imb;
  int kdim = 0, idim = 0;
  for (const Mat& f : psi.mats()) {
    kerb.push_back(nullspace(f));
    imb.push_back(column_space(f));
    kdim += static_cast<int>(kerb.back().cols());
    idim += static_cast<int>(imb.back().cols());
  }
  if (kdim == 0 || idim == 0) return std::nullopt;
  std::vector<Mat> projk, proji;
  for (std::size_t v = 0; v < kerb.size(); ++v) {
    Mat t = kerb[v].hstacked(imb[v]);
    auto tinv = inverse(t);
    if (!tinv) return std::nullopt;  // power not yet stabilized; caller's m
                                     // makes this unreachable
    projk.push_back(tinv->rows_slice(0, kerb[v].cols()));
    proji.push_back(tinv->rows_slice(kerb[v].cols(), imb[v].cols()));
  }
  auto [krep, kinc] = sub_rep(x, kerb);
  auto [irep, iinc] = sub_rep(x, imb);
  Morphism kproj(x, krep, std::move(projk));
  Morphism iproj(x, irep, std::move(proji));
  (void)alg;
  return SplitResult{Piece{krep, kinc, kproj}, Piece{irep, iinc, iproj}};
}

// Odometer over coefficient vectors in F_p^k, skipping the zero vector.
bool next_coeffs(std::vector<std::uint32_t>& c, std::uint32_t p) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

Morphism combine(const std::vector<Morphism>& basis,
                 const std::vector<std::uint32_t>& coeffs) {
  Morphism out = Morphism::zero(basis[0].source(), basis[0].target());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i]) out = out + basis[i].scaled(coeffs[i]);
  return out;
}

void decompose_rec(const Piece& piece, std::mt19937_64& rng,
                   const DecomposeOptions& opts, std::vector<Piece>& out,
                   bool& certified) {
  const Rep& x = piece.rep;
  if (x.is_zero_rep()) return;
  const std::size_t m = static_cast<std::size_t>(x.total_dim());
  std::vector<Morphism> endos = hom(x, x);
  const std::uint32_t p = x.algebra()->prime();

  auto recurse_split = [&](const SplitResult& sr) {
    Piece a{sr.a.rep, sr.a.inc.then(piece.inc), piece.proj.then(sr.a.proj)};
    Piece b{sr.b.rep, sr.b.inc.then(piece.inc), piece.proj.then(sr.b.proj)};
    decompose_rec(a, rng, opts, out, certified);
    decompose_rec(b, rng, opts, out, certified);
  };

  if (endos.size() > 1) {
    for (const Morphism& phi : endos) {
      if (auto sr = split_along(x, phi, m)) {
        recurse_split(*sr);
        return;
      }
    }
    for (std::size_t i = 0; i < endos.size(); ++i) {
      for (std::size_t j = i + 1; j < endos.size(); ++j) {
        if (auto sr = split_along(x, endos[i] + endos[j], m)) {
          recurse_split(*sr);
          return;
        }
      }
    }
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (int t = 0; t < opts.random_candidates; ++t) {
      std::vector<std::uint32_t> coeffs(endos.size());
      for (auto& c : coeffs) c = dist(rng);
      Morphism phi = combine(endos, coeffs);
      if (auto sr = split_along(x, phi, m)) {
        recurse_split(*sr);
        return;
      }
    }
    // No candidate split: certify by exhaustive idempotent search when small
    // enough.
    if (static_cast<int>(endos.size()) <= opts.max_end_dim_exhaustive &&
        p <= opts.max_prime_exhaustive) {
      Morphism id = Morphism::identity(x);
      std::vector<std::uint32_t> coeffs(endos.size(), 0);
      while (next_coeffs(coeffs, p)) {
        Morphism e = combine(endos, coeffs);
        if (e.is_zero_map()) continue;
        bool is_id = true;
        for (std::size_t v = 0; v < e.mats().size(); ++v)
          if (!(e.at(v) == id.at(v))) {
            is_id = false;
            break;
          }
        if (is_id) continue;
        if (!(e.then(e).flat() == e.flat())) continue;
        auto sr = split_along(x, e, 1);
        if (!sr)
          throw std::logic_error("decompose: idempotent failed to split");
        recurse_split(*sr);
        return;
      }
    } else {
      certified = false;
    }
  }
  out.push_back(piece);
}

}  // namespace

Decomposition decompose(const Rep& x, const DecomposeOptions& opts) {
  Decomposition d;
  std::mt19937_64 rng(opts.seed);
  std::vector<Piece> pieces;
  Piece root{x, Morphism::identity(x), Morphism::identity(x)};
  decompose_rec(root, rng, opts, pieces, d.certified);
  for (Piece& pc : pieces) {
    bool merged = false;
    for (Summand& s : d.summands) {
      if (auto iso = find_isomorphism(pc.rep, s.rep, opts)) {
        // Transport witnesses along the isomorphism so every copy refers to
        // the stored representative.
        Morphism inv = inverse_iso(*iso);
        s.inc.push_back(inv.then(pc.inc));
        s.proj.push_back(pc.proj.then(*iso));
        ++s.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) {
      d.summands.push_back(Summand{pc.rep, 1, {pc.inc}, {pc.proj}});
    }
  }
  return d;
}

Morphism inverse_iso(const Morphism& f) {
  std::vector<Mat> mats;
  for (const Mat& m : f.mats()) {
    auto inv = inverse(m);
    if (!inv) throw std::invalid_argument("inverse_iso: not invertible");
    mats.push_back(std::move(*inv));
  }
  return Morphism(f.target(), f.source(), std::move(mats), true);
}

std::optional<Morphism> find_isomorphism(const Rep& x, const Rep& y,
                                         const DecomposeOptions& opts) {
  if (!x.same_algebra(y)) return std::nullopt;
  if (x.dims() != y.dims()) return std::nullopt;
  if (x.total_dim() == 0) return Morphism::zero(x, y);
  std::vector<Morphism> basis = hom(x, y);
  if (basis.empty()) return std::nullopt;
  for (const Morphism& f : basis)
    if (f.is_isomorphism()) return f;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Morphism f = basis[i] + basis[j];
      if (f.is_isomorphism()) return f;
    }
  const std::uint32_t p = x.algebra()->prime();
  std::mt19937_64 rng(opts.seed ^ 0x150150);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (int t = 0; t < 40; ++t) {
    std::vector<std::uint32_t> coeffs(basis.size());
    for (auto& c : coeffs) c = dist(rng);
    Morphism f = combine(basis, coeffs);
    if (f.is_isomorphism()) return f;
  }
  // Cheap invariants that isomorphic modules must share; they almost always
  // separate non-isomorphic modules of equal dimension vector.
  auto layer_dims = [](const Rep& r, bool rad) {
    std::vector<std::size_t> d;
    for (int k = 1; k <= 2; ++k)
      for (const Mat& b :
           rad ? radical_power_sub(r, k) : socle_power_sub(r, k))
        d.push_back(b.cols());
    return d;
  };
  if (hom_dim(x, x) != hom_dim(y, y)) return std::nullopt;
  if (layer_dims(x, true) != layer_dims(y, true)) return std::nullopt;
  if (layer_dims(x, false) != layer_dims(y, false)) return std::nullopt;

  // Exhaustive pass within budget; makes a negative answer a certificate.
  std::uint64_t count = 1;
  bool small = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    count *= p;
    if (count > opts.iso_search_budget) {
      small = false;
      break;
    }
  }
  if (small) {
    // Incremental odometer: each digit bump adds one basis morphism, so a
    // digit wrapping after p bumps has already cancelled itself mod p.
    std::vector<std::uint32_t> coeffs(basis.size(), 0);
    std::vector<Mat> cur;
    for (std::size_t v = 0; v < x.dims().size(); ++v)
      cur.push_back(Mat(y.dims()[v], x.dims()[v], p));
    bool done = false;
    for (;;) {
      std::size_t i = 0;
      for (;;) {
        ++coeffs[i];
        for (std::size_t v = 0; v < cur.size(); ++v)
          cur[v] = cur[v] + basis[i].at(static_cast<int>(v));
        if (coeffs[i] < p) break;
        coeffs[i] = 0;  // p bumps of basis[i] cancel mod p, carry to next digit
        if (++i == coeffs.size()) {
          done = true;
          break;
        }
      }
      if (done) break;
      bool inv = true;
      for (const Mat& m : cur)
        if (!is_invertible(m)) {
          inv = false;
          break;
        }
      if (inv) return Morphism(x, y, cur, true);
    }
  }
  return std::nullopt;
}

bool is_isomorphic(const Rep& x, const Rep& y, const DecomposeOptions& opts) {
  return find_isomorphism(x, y, opts).has_value();
}

std::optional<std::vector<int>> in_add(const Rep& x,
                                       const std::vector<Rep>& gens,
                                       const DecomposeOptions& opts) {
  std::vector<int> mult(gens.size(), 0);
  Decomposition d = decompose(x, opts);
  for (const Summand& s : d.summands) {
    bool found = false;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (is_isomorphic(s.rep, gens[g], opts)) {
        mult[g] += s.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return mult;
}

std::vector<Morphism> radical_of_local_endo(const Rep& x,
                                            const DecomposeOptions& opts) {
  {
    Decomposition d = decompose(x, opts);
    if (d.summands.size() != 1 || d.summands[0].multiplicity != 1)
      throw std::invalid_argument("radical_of_local_endo: not indecomposable");
  }
  return nilpotent_endo_span(x, opts);
}

namespace {

bool is_nilpotent_endo(const Morphism& phi, std::size_t m) {
  for (const Mat& f : phi.mats())
    if (!f.pow(m).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<Morphism> nilpotent_endo_span(const Rep& x,
                                          const DecomposeOptions& opts) {
  std::vector<Morphism> endos = hom(x, x);
  const std::uint32_t pp = x.algebra()->prime();
  const std::size_t mm = static_cast<std::size_t>(x.total_dim());
  const PrimeField& ff = x.algebra()->field();
  // When End(X) is local with residue field F_p, every basis element e has a
  // unique scalar c with e - c*id nilpotent, and these differences span the
  // radical. Falls through to the exhaustive scan otherwise.
  {
    Morphism id = Morphism::identity(x);
    std::vector<Morphism> rad;
    std::vector<Mat> redrows;
    std::vector<std::size_t> pivots;
    bool local_split = true;
    for (const Morphism& e : endos) {
      std::optional<Morphism> nil;
      for (std::uint32_t c = 0; c < pp && !nil; ++c) {
        Morphism cand = c == 0 ? e : e - id.scaled(c);
        if (is_nilpotent_endo(cand, mm)) nil = std::move(cand);
      }
      if (!nil) {
        local_split = false;
        break;
      }
      Mat row = nil->flat();
      for (std::size_t k = 0; k < redrows.size(); ++k) {
        std::uint32_t cf = row(0, pivots[k]);
        if (cf == 0) continue;
        for (std::size_t j = 0; j < row.cols(); ++j)
          row(0, j) = ff.sub(row(0, j), ff.mul(cf, redrows[k](0, j)));
      }
      std::size_t pc = row.cols();
      for (std::size_t j = 0; j < row.cols(); ++j)
        if (row(0, j) != 0) {
          pc = j;
          break;
        }
      if (pc == row.cols()) continue;
      std::uint32_t s = ff.inv(row(0, pc));
      for (std::size_t j = 0; j < row.cols(); ++j)
        row(0, j) = ff.mul(row(0, j), s);
      redrows.push_back(std::move(row));
      pivots.push_back(pc);
      rad.push_back(std::move(*nil));
    }
    if (local_split) return rad;
  }
  (void)opts;
  const std::uint32_t p = x.algebra()->prime();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < endos.size(); ++i) {
    count *= p;
    if (count > (std::uint64_t(1) << 22))
      throw std::runtime_error(
          "radical_of_local_endo: End too large for the exhaustive scan");
  }
  const std::size_t m = static_cast<std::size_t>(x.total_dim());
  // All non-invertible elements of the local ring End(X) are nilpotent; scan
  // and keep a linearly independent spanning subset.
  std::vector<Morphism> rad;
  std::vector<Mat> redrows;  // reduced flat coordinates of rad so far
  std::vector<std::size_t> pivots;
  const PrimeField& field = x.algebra()->field();
  std::vector<std::uint32_t> coeffs(endos.size(), 0);
  while (next_coeffs(coeffs, p)) {
    Morphism phi = combine(endos, coeffs);
    bool nilpotent = true;
    for (const Mat& f : phi.mats())
      if (!f.pow(m).is_zero()) {
        nilpotent = false;
        break;
      }
    if (!nilpotent) continue;
    Mat row = phi.flat();
    for (std::size_t k = 0; k < redrows.size(); ++k) {
      std::uint32_t c = row(0, pivots[k]);
      if (c == 0) continue;
      for (std::size_t j = 0; j < row.cols(); ++j)
        row(0, j) = field.sub(row(0, j), field.mul(c, redrows[k](0, j)));
    }
    std::size_t pc = row.cols();
    for (std::size_t j = 0; j < row.cols(); ++j)
      if (row(0, j) != 0) {
        pc = j;
        break;
      }
    if (pc == row.cols()) continue;  // dependent
    std::uint32_t s = field.inv(row(0, pc));
    for (std::size_t j = 0; j < row.cols(); ++j)
      row(0, j) = field.mul(row(0, j), s);
    redrows.push_back(std::move(row));
    pivots.push_back(pc);
    rad.push_back(std::move(phi));
  }
  return rad;
}

namespace {

std::optional<std::string> find_special_summand(const Rep& x, bool injective,
                                                const DecomposeOptions& opts) {
  const AlgebraPtr& alg = x.algebra();
  Decomposition d = decompose(x, opts);
  for (const Summand& s : d.summands) {
    for (int v = 0; v < alg->num_vertices(); ++v) {
      Rep special =
          injective ? Rep::injective(alg, v) : Rep::projective(alg, v);
      if (is_isomorphic(s.rep, special, opts))
        return (injective ? "I" : "P") + std::to_string(v + 1);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> find_projective_summand(
    const Rep& x, const DecomposeOptions& opts) {
  return find_special_summand(x, false, opts);
}

std::optional<std::string> find_injective_summand(
    const Rep& x, const DecomposeOptions& opts) {
  return find_special_summand(x, true, opts);
}

bool is_projective_rep(const Rep& x, const DecomposeOptions& opts) {
  const AlgebraPtr& alg = x.algebra();
  Decomposition d = decompose(x, opts);
  for (const Summand& s : d.summands) {
    bool match = false;
    for (int v = 0; v < alg->num_vertices() && !match; ++v)
      match = is_isomorphic(s.rep, Rep::projective(alg, v), opts);
    if (!match) return false;
  }
  return true;
}

bool is_injective_rep(const Rep& x, const DecomposeOptions& opts) {
  const AlgebraPtr& alg = x.algebra();
  Decomposition d = decompose(x, opts);
  for (const Summand& s : d.summands) {
    bool match = false;
    for (int v = 0; v < alg->num_vertices() && !match; ++v)
      match = is_isomorphic(s.rep, Rep::injective(alg, v), opts);
    if (!match) return false;
  }
  return true;
}

}  // namespace argen
