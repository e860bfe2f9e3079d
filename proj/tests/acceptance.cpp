// End-to-end acceptance checks: one verdict line per criterion.
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "argen/approx.hpp"
#include "argen/arseq.hpp"
#include "argen/decompose.hpp"
#include "argen/examples.hpp"
#include "argen/mutation.hpp"

using namespace argen;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok) {
  std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", idx, what);
  std::fflush(stdout);
  if (!ok) ++failures;
}

Rep soc_quotient(const Rep& p) {
  return quotient_rep(p, socle_power_sub(p, 1)).first;
}

// Entrywise match of a generator set against an explicit module list.
bool matches_list(const GeneratorSet& g, const std::vector<Rep>& expected) {
  if (g.entries.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const auto& e : g.entries) {
    bool hit = false;
    for (std::size_t j = 0; j < expected.size() && !hit; ++j)
      if (!used[j] && is_isomorphic(e.rep, expected[j]))
        used[j] = hit = true;
    if (!hit) return false;
  }
  return true;
}

// --- criterion 1 -----------------------------------------------------------

bool criterion1(const FlowResult& f) {
  if (!f.hyp.selfinjective || !f.hyp.rad_cube_zero) return false;
  auto alg = f.alg;
  Rep p1 = Rep::projective(alg, 0), p2 = Rep::projective(alg, 1);
  std::vector<Rep> expected = {p1,
                               p2,
                               soc_quotient(p1),
                               soc_quotient(p2),
                               Rep::simple(alg, 0),
                               Rep::simple(alg, 1)};
  if (!matches_list(f.stages[0], expected)) return false;
  if (f.steps.size() != 4) return false;
  const char* order[] = {"S1", "S2", "P1/soc", "P2/soc"};
  for (std::size_t k = 0; k < 4; ++k)
    if (!f.steps[k].cert.accepted || f.steps[k].position != order[k])
      return false;
  // the fourth set equals the translated starting set entrywise
  return f.closure_matches_shift &&
         same_generator_set(f.final_set(), shift(f.stages[0], 1));
}

// --- criterion 2 -----------------------------------------------------------

bool criterion2(const FlowResult& f) {
  if (f.steps.size() != 3) return false;
  if (f.steps[0].position != "S1" || f.steps[1].position != "S2") return false;
  for (const auto& s : f.steps)
    if (!s.cert.accepted) return false;
  // the third exchange happens at the translated P1/soc and uses the
  // nonzero-stable-hom branch
  GeneratorSet conj = shift(f.stages[2], 1);
  std::size_t idx = conj.entries.size();
  for (std::size_t i = 0; i < conj.entries.size(); ++i)
    if (conj.entries[i].base == "P1/soc") idx = i;
  if (idx == conj.entries.size()) return false;
  if (!is_mutable_position(conj.reps(), idx)) return false;
  if (f.steps[2].cert.branch != "fast-a" || f.steps[2].cert.stable_hom_dim <= 0)
    return false;

  // the produced generator is new: no set reachable by the simples-first
  // strategy at the same budget contains it
  Rep produced = f.final_set().entries[0].rep;
  bool found_entry = false;
  for (const auto& e : f.final_set().entries)
    if (e.base == "P1/soc" && e.tau_offset == 1) {
      produced = e.rep;
      found_entry = true;
    }
  if (!found_entry) return false;
  Family fam = enumerate_family(f.alg, static_cast<int>(f.stages.size()),
                                "simples-first");
  for (const auto& node : fam.nodes)
    for (const auto& e : node.gens.entries)
      if (is_isomorphic(e.rep, produced)) return false;
  return true;
}

// --- criterion 3 -----------------------------------------------------------

bool criterion3(const FlowResult& f) {
  for (const auto& s : f.steps)
    if (!s.cert.accepted) return false;
  if (!f.has_rejection) return false;
  const MutationCertificate& c = f.rejection;
  // the candidate N is tau^-2(P3/soc)
  Rep n = soc_quotient(Rep::projective(f.alg, 2));
  n = tau_inverse(tau_inverse(n));
  if (c.replaced_dims != n.dims()) return false;
  // zero stable hom, plain syzygy outside add, and the general criterion
  // (computed independently inside mutate) fails as well
  return !c.accepted && c.branch == "fast-b" && c.stable_hom_dim == 0 &&
         c.middle_term_in_add && !c.plain_syzygy_in_add &&
         !c.rel_syzygy_in_add;
}

// --- criterion 4 -----------------------------------------------------------

bool criterion4(const FlowResult& f1, const FlowResult& f3) {
  // the four distinct generator sets of the first flow verify at radius 3
  for (std::size_t k = 0; k < 4; ++k) {
    WindowReport w = window_verify(f1.stages[k].reps(), 3);
    if (!w.all_ok) return false;
  }
  // the rejected candidate of the third flow fails at radius 1: some window
  // module needs more than one resolution step
  WindowReport bad = window_verify(f3.rejected_candidate.reps(), 1);
  if (bad.all_ok) return false;
  for (const auto& e : bad.entries)
    if (!e.ok && e.rel_pd > 1) return true;
  return false;
}

// --- criterion 5 -----------------------------------------------------------

std::vector<Rep> random_modules(const AlgebraPtr& alg, int count,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Rep p1 = Rep::projective(alg, 0), p2 = Rep::projective(alg, 1);
  std::vector<Rep> base = {p1,
                           p2,
                           Rep::simple(alg, 0),
                           Rep::simple(alg, 1),
                           soc_quotient(p1),
                           soc_quotient(p2),
                           radical(p1).first,
                           radical(p2).first};
  std::vector<Rep> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Rep> parts;
    int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) parts.push_back(base[rng() % base.size()]);
    Rep x = direct_sum(parts).sum;
    switch (rng() % 5) {
      case 0:
        x = syzygy(x);
        break;
      case 1:
        x = cosyzygy(x);
        break;
      case 2:
        if (!find_projective_summand(x)) x = tau_inverse(x);
        break;
      case 3:
        x = soc_quotient(x);
        break;
      default:
        break;
    }
    if (x.is_zero_rep() || x.total_dim() > 12) continue;
    out.push_back(std::move(x));
  }
  return out;
}

bool same_multiset(const Decomposition& a, const Decomposition& b) {
  if (a.summands.size() != b.summands.size()) return false;
  std::vector<bool> used(b.summands.size(), false);
  for (const auto& s : a.summands) {
    bool hit = false;
    for (std::size_t j = 0; j < b.summands.size() && !hit; ++j)
      if (!used[j] && b.summands[j].multiplicity == s.multiplicity &&
          is_isomorphic(b.summands[j].rep, s.rep))
        used[j] = hit = true;
    if (!hit) return false;
  }
  return true;
}

// Exchange identity: extending the minimal add(M/N)-approximation of C by l
// stably independent maps out of the exchanged translate gives an
// add(M*)-approximation whose kernel replaces every copy of N by the middle
// term of the almost split sequence at N; l is read off the decomposition.
bool exchange_identity(const GeneratorSet& g, std::size_t idx) {
  Rep n = g.entries[idx].rep;
  MutationResult r = mutate(g, idx);
  if (!r.cert.accepted) return false;
  std::vector<Rep> others;
  for (std::size_t i = 0; i < g.entries.size(); ++i)
    if (i != idx) others.push_back(g.entries[i].rep);
  std::vector<Rep> star = r.gens.reps();
  Rep e_mid = almost_split_starting_at(n).seq.mid();
  Rep tinv_n = r.gens.entries[idx].rep;

  // window of test modules around both sets
  std::vector<Rep> window;
  auto add = [&](const Rep& c) {
    if (c.is_zero_rep() || is_isomorphic(c, tinv_n)) return;
    for (const Rep& w : window)
      if (is_isomorphic(w, c)) return;
    window.push_back(c);
  };
  for (const auto& e : g.entries) add(e.rep);
  for (const auto& e : r.gens.entries) {
    add(e.rep);
    if (!e.projective) add(tau_inverse(e.rep));
  }

  for (const Rep& c : window) {
    Approximation old_a = minimal_right_approximation(others, c);
    Rep old_syz = kernel(old_a.map).first;
    int l = 0;
    std::vector<Rep> residual;
    for (const auto& s : decompose(old_syz).summands) {
      if (is_isomorphic(s.rep, n)) {
        l = s.multiplicity;
        continue;
      }
      for (int k = 0; k < s.multiplicity; ++k) residual.push_back(s.rep);
    }
    // the minimal syzygy over the exchanged set must be N-free
    for (const auto& s : decompose(rel_syzygy(star, c).first).summands)
      if (is_isomorphic(s.rep, n)) return false;

    std::vector<Rep> parts{old_a.map.source()};
    for (int k = 0; k < l; ++k) parts.push_back(tinv_n);
    DirectSum xs = direct_sum(parts);
    std::vector<Morphism> comps{old_a.map};
    auto assemble = [&] {
      std::vector<Morphism> cur = comps;
      while (cur.size() < parts.size())
        cur.push_back(Morphism::zero(tinv_n, c));
      return assemble_from_sum(xs, cur);
    };
    for (const Morphism& h : hom(tinv_n, c)) {
      if (static_cast<int>(comps.size()) > l) break;
      if (!solve_right_factor(h, assemble())) comps.push_back(h);
    }
    if (static_cast<int>(comps.size()) != l + 1) return false;
    Morphism beta = assemble();
    if (!beta.is_surjective()) return false;
    for (const Rep& gen : star)
      for (const Morphism& h : hom(gen, c))
        if (!solve_right_factor(h, beta)) return false;
    Rep k2 = kernel(beta).first;
    std::vector<Rep> expect = residual;
    for (int k = 0; k < l; ++k) expect.push_back(e_mid);
    if (expect.empty() ? !k2.is_zero_rep()
                       : !is_isomorphic(k2, direct_sum(expect).sum))
      return false;
  }
  return true;
}

// Every simple appears in the top of the retained non-projective part.
bool top_coverage(const GeneratorSet& shifted, std::size_t idx) {
  std::vector<bool> covered(shifted.alg->num_vertices(), false);
  for (std::size_t i = 0; i < shifted.entries.size(); ++i) {
    if (i == idx || shifted.entries[i].projective) continue;
    Rep t = top(shifted.entries[i].rep).first;
    for (int v = 0; v < shifted.alg->num_vertices(); ++v)
      if (t.dims()[v] > 0) covered[v] = true;
  }
  for (bool c : covered)
    if (!c) return false;
  return true;
}

bool flow_top_coverage(const FlowResult& f) {
  for (std::size_t k = 0; k < f.steps.size(); ++k) {
    GeneratorSet shifted = shift(f.stages[k], 1);
    std::size_t idx = f.stages[k].entries.size();
    for (std::size_t i = 0; i < f.stages[k].entries.size(); ++i)
      if (f.stages[k].entries[i].name() == f.steps[k].position) idx = i;
    if (idx == f.stages[k].entries.size()) return false;
    if (!top_coverage(shifted, idx)) return false;
  }
  return true;
}

bool criterion5(const FlowResult& f1, const FlowResult& f2,
                const FlowResult& f3) {
  auto alg = f1.alg;
  std::vector<Rep> pool = f1.stages[0].reps();
  for (const Rep& r : random_modules(alg, 200, 0xC0FFEE)) pool.push_back(r);

  DecomposeOptions sa, sb;
  sa.seed = 0x5EED1;
  sb.seed = 0x5EED2;
  std::vector<Rep> indec_nonproj;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Rep& x = pool[i];
    // projectives see the dimension vector through hom
    for (int v = 0; v < alg->num_vertices(); ++v)
      if (hom_dim(Rep::projective(alg, v), x) != x.dims()[v]) return false;
    // duality is an involution
    if (!is_isomorphic(dual(dual(x)), x)) return false;
    // unique decomposition across seeds
    Decomposition da = decompose(x, sa), db = decompose(x, sb);
    if (!da.certified || !db.certified || !same_multiset(da, db)) return false;
    if (i % 10 == 0)
      for (const auto& s : da.summands)
        if (!is_projective_rep(s.rep) &&
            static_cast<int>(indec_nonproj.size()) < 24) {
          bool seen = false;
          for (const Rep& y : indec_nonproj)
            if (is_isomorphic(y, s.rep)) seen = true;
          if (!seen) indec_nonproj.push_back(s.rep);
        }
  }

  for (const Rep& x : indec_nonproj) {
    // the translate pairs with its inverse
    if (!is_isomorphic(tau_inverse(tau(x)), x)) return false;
    // stable description of the translate
    if (!is_isomorphic(tau(x), syzygy(syzygy(nakayama(x))))) return false;
    // almost split sequence: non-split with additive dimensions, and the
    // class dies under the radical of End
    ARSequence ar = almost_split_ending_at(x);
    if (ar.seq.splits()) return false;
    for (int v = 0; v < alg->num_vertices(); ++v)
      if (ar.seq.mid().dims()[v] !=
          ar.seq.sub().dims()[v] + ar.seq.quot().dims()[v])
        return false;
    Ext1 e = ext1(x, ar.seq.sub());
    auto coords = ext_class_of(e, ar.seq);
    Morphism h = Morphism::zero(e.cover.sub(), e.a);
    for (int i = 0; i < e.dim(); ++i)
      if (coords[i]) h = h + e.reps[i].scaled(coords[i]);
    for (const Morphism& r : radical_of_local_endo(x))
      for (std::uint32_t c : ext_coords(e, syzygy_of_endo(e, r).then(h)))
        if (c != 0) return false;
  }

  // exchange identity across the first two mutations of the first flow
  GeneratorSet g = shift(f1.stages[0], 1);
  for (const char* basename : {"S1", "S2"}) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < g.entries.size(); ++i)
      if (g.entries[i].base == basename) idx = i;
    if (!exchange_identity(g, idx)) return false;
  }

  // slice tops cover every simple before each accepted exchange; branch
  // agreement is enforced inside mutate() itself (it throws on mismatch),
  // so completing the three flows certifies it
  return flow_top_coverage(f1) && flow_top_coverage(f2) &&
         flow_top_coverage(f3);
}

// --- criterion 6 -----------------------------------------------------------

std::string verdicts(const FlowResult& f) {
  std::string out;
  for (const auto& s : f.steps)
    out += s.position + ":" + (s.cert.accepted ? "+" : "-") + s.cert.branch +
           ";";
  if (f.has_rejection)
    out += "reject:" + f.rejection.branch +
           (f.rejection.stable_hom_dim == 0 ? ":s0" : ":s+") +
           (f.rejection.plain_syzygy_in_add ? ":o1" : ":o0") +
           (f.rejection.rel_syzygy_in_add ? ":r1" : ":r0");
  return out;
}

}  // namespace

int main() {
  try {
    FlowResult f1 = run_example1(2);
    FlowResult f2 = run_example2(2);
    FlowResult f3 = run_example3(2);

    report(1, "two-vertex flow closes up after the four scripted exchanges",
           criterion1(f1));
    report(2, "four-vertex exchange yields a generator off the simples-first "
              "family",
           criterion2(f2));
    report(3, "five-vertex candidate exchange is rejected on both criteria",
           criterion3(f3));
    report(4, "window verification certifies the accepted sets and flags the "
              "rejected one",
           criterion4(f1, f3));
    report(5, "property suites hold on fixtures and 200 random modules",
           criterion5(f1, f2, f3));

    bool stable = true;
    for (std::uint32_t p : {3u, 5u}) {
      FlowResult g1 = run_example1(p);
      FlowResult g2 = run_example2(p);
      FlowResult g3 = run_example3(p);
      stable = stable && verdicts(g1) == verdicts(f1) && criterion1(g1);
      stable = stable && verdicts(g2) == verdicts(f2);
      stable = stable && verdicts(g3) == verdicts(f3) && criterion3(g3);
    }
    report(6, "verdicts agree in characteristics 2, 3 and 5", stable);
  } catch (const std::exception& e) {
    std::printf("FAIL  unexpected error: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
