#include "argen/mutation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "argen/approx.hpp"
#include "argen/hypotheses.hpp"

namespace argen {

std::string GenEntry::name() const {
  if (tau_offset == 0) return base;
  std::ostringstream os;
  os << "tau^" << -tau_offset << "(" << base << ")";
  return os.str();
}

std::vector<Rep> GeneratorSet::reps() const {
  std::vector<Rep> out;
  for (const GenEntry& e : entries) out.push_back(e.rep);
  return out;
}

std::vector<Rep> GeneratorSet::nonprojective_reps() const {
  std::vector<Rep> out;
  for (const GenEntry& e : entries)
    if (!e.projective) out.push_back(e.rep);
  return out;
}

std::string GeneratorSet::describe() const {
  std::string out;
  for (const GenEntry& e : entries) {
    if (!out.empty()) out += ", ";
    out += e.name();
  }
  return out;
}

void GeneratorSet::check_generator_cogenerator(
    const DecomposeOptions& opts) const {
  for (int v = 0; v < alg->num_vertices(); ++v) {
    bool has_p = false, has_i = false;
    for (const GenEntry& e : entries) {
      if (!has_p && is_isomorphic(e.rep, Rep::projective(alg, v), opts))
        has_p = true;
      if (!has_i && is_isomorphic(e.rep, Rep::injective(alg, v), opts))
        has_i = true;
    }
    if (!has_p || !has_i)
      throw std::logic_error("generator set misses P" + std::to_string(v + 1) +
                             " or I" + std::to_string(v + 1));
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (is_isomorphic(entries[i].rep, entries[j].rep, opts))
        throw std::logic_error("generator set has isomorphic entries");
}

namespace {

void push_unless_seen(GeneratorSet& g, GenEntry e,
                      const DecomposeOptions& opts) {
  if (e.rep.is_zero_rep()) return;
  for (const GenEntry& prev : g.entries)
    if (is_isomorphic(prev.rep, e.rep, opts)) return;
  g.entries.push_back(std::move(e));
}

}  // namespace

GeneratorSet canonical_m0(const AlgebraPtr& alg, const DecomposeOptions& opts) {
  GeneratorSet g{alg, {}};
  for (int v = 0; v < alg->num_vertices(); ++v) {
    std::string pv = "P" + std::to_string(v + 1);
    g.entries.push_back({Rep::projective(alg, v), pv, 0, true});
  }
  for (int v = 0; v < alg->num_vertices(); ++v) {
    Rep p = Rep::projective(alg, v);
    std::string pv = "P" + std::to_string(v + 1);
    Rep by_soc = quotient_rep(p, socle_power_sub(p, 1)).first;
    push_unless_seen(g, {by_soc, pv + "/soc", 0, false}, opts);
    Rep by_soc2 = quotient_rep(p, socle_power_sub(p, 2)).first;
    std::string base = pv + "/soc^2";
    for (int w = 0; w < alg->num_vertices(); ++w)
      if (is_isomorphic(by_soc2, Rep::simple(alg, w), opts)) {
        base = "S" + std::to_string(w + 1);
        break;
      }
    push_unless_seen(g, {by_soc2, base, 0, false}, opts);
  }
  return g;
}

GeneratorSet canonical_l0(const AlgebraPtr& alg, const DecomposeOptions& opts) {
  GeneratorSet g{alg, {}};
  for (int v = 0; v < alg->num_vertices(); ++v) {
    std::string pv = "P" + std::to_string(v + 1);
    g.entries.push_back({Rep::projective(alg, v), pv, 0, true});
  }
  for (int v = 0; v < alg->num_vertices(); ++v) {
    Rep p = Rep::projective(alg, v);
    std::string pv = "P" + std::to_string(v + 1);
    Rep r1 = sub_rep(p, radical_power_sub(p, 1)).first;
    push_unless_seen(g, {r1, "r(" + pv + ")", 0, false}, opts);
    Rep r2 = sub_rep(p, radical_power_sub(p, 2)).first;
    std::string base = "r^2(" + pv + ")";
    for (int w = 0; w < alg->num_vertices(); ++w)
      if (is_isomorphic(r2, Rep::simple(alg, w), opts)) {
        base = "S" + std::to_string(w + 1);
        break;
      }
    push_unless_seen(g, {r2, base, 0, false}, opts);
  }
  return g;
}

GeneratorSet shift(const GeneratorSet& g, int steps,
                   const DecomposeOptions& opts) {
  (void)opts;
  GeneratorSet out{g.alg, {}};
  for (const GenEntry& e : g.entries) {
    if (e.projective || steps == 0) {
      out.entries.push_back(e);
      continue;
    }
    Rep r = e.rep;
    for (int s = 0; s < (steps > 0 ? steps : -steps); ++s)
      r = steps > 0 ? tau_inverse(r) : tau(r);
    out.entries.push_back({r, e.base, e.tau_offset + steps, e.projective});
  }
  return out;
}

MutationResult mutate(const GeneratorSet& g, std::size_t idx,
                      const DecomposeOptions& opts) {
  if (idx >= g.entries.size())
    throw std::invalid_argument("mutate: entry index out of range");
  const GenEntry& entry = g.entries[idx];
  if (entry.projective || is_projective_rep(entry.rep, opts))
    throw std::invalid_argument("mutate: cannot exchange a projective entry");
  if (is_injective_rep(entry.rep, opts))
    throw std::invalid_argument("mutate: cannot exchange an injective entry");
  const Rep& n = entry.rep;

  MutationCertificate cert;
  cert.replaced_dims = n.dims();

  ARSequence ar = almost_split_starting_at(n, opts);
  const Rep& e_mid = ar.seq.mid();
  Rep tinv_n = ar.seq.quot();
  cert.replacement_dims = tinv_n.dims();

  std::vector<Rep> others;
  for (std::size_t i = 0; i < g.entries.size(); ++i)
    if (i != idx) others.push_back(g.entries[i].rep);

  cert.middle_term_in_add =
      e_mid.is_zero_rep() || in_add(e_mid, others, opts).has_value();
  if (!cert.middle_term_in_add) {
    cert.reason = "middle term of the almost split sequence at " +
                  entry.name() + " leaves add(M/N)";
    return {g, cert};
  }

  // General criterion: the relative syzygy of N over add(M/N) must lie in
  // add(M + M*).
  Rep omega_rel = rel_syzygy(others, n, opts).first;
  std::vector<Rep> pool = g.reps();
  pool.push_back(tinv_n);
  cert.rel_syzygy_in_add =
      omega_rel.is_zero_rep() || in_add(omega_rel, pool, opts).has_value();
  cert.accepted = cert.rel_syzygy_in_add;

  // Radical cube zero selfinjective shortcut; recorded alongside and checked
  // for agreement.
  const HypothesesReport& hyp = validate_hypotheses(g.alg);
  if (hyp.fast_branch_ok()) {
    std::vector<Rep> mp = g.nonprojective_reps();
    int s = 0;
    for (std::size_t i = 0; i < mp.size(); ++i)
      if (!is_isomorphic(mp[i], n, opts)) s += stable_hom_dim(mp[i], n);
    cert.stable_hom_dim = s;
    bool fast;
    if (s > 0) {
      cert.branch = "fast-a";
      fast = true;
    } else {
      cert.branch = "fast-b";
      Rep om = syzygy(n);
      cert.plain_syzygy_in_add =
          om.is_zero_rep() || in_add(om, mp, opts).has_value();
      fast = cert.plain_syzygy_in_add;
    }
    if (fast != cert.accepted)
      throw std::logic_error(
          "mutate: shortcut and relative-syzygy criteria disagree");
  }

  if (!cert.accepted) {
    cert.reason = "relative syzygy of " + entry.name() + " leaves add(M + M*)";
    return {g, cert};
  }
  cert.reason = "accepted at " + entry.name();
  GeneratorSet out = g;
  out.entries[idx] = {tinv_n, entry.base, entry.tau_offset + 1, false};
  return {std::move(out), cert};
}

MutationResult mutate_via_shift(const GeneratorSet& g, std::size_t idx,
                                const DecomposeOptions& opts) {
  GeneratorSet shifted = shift(g, 1, opts);
  MutationResult r = mutate(shifted, idx, opts);
  if (!r.cert.accepted) return {g, r.cert};
  return {shift(r.gens, -1, opts), r.cert};
}

namespace {

std::string dims_key(const GeneratorSet& g) {
  std::vector<std::string> parts;
  for (const GenEntry& e : g.entries) {
    std::string p;
    for (int d : e.rep.dims()) p += std::to_string(d) + ".";
    parts.push_back(p);
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const std::string& p : parts) key += p + "|";
  return key;
}

}  // namespace

bool same_generator_set(const GeneratorSet& a, const GeneratorSet& b,
                        const DecomposeOptions& opts) {
  if (a.entries.size() != b.entries.size()) return false;
  std::vector<bool> used(b.entries.size(), false);
  for (const GenEntry& ea : a.entries) {
    bool matched = false;
    for (std::size_t j = 0; j < b.entries.size(); ++j) {
      if (used[j]) continue;
      if (is_isomorphic(ea.rep, b.entries[j].rep, opts)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

Family enumerate_family(const AlgebraPtr& alg, int budget,
                        const std::string& strategy, char side,
                        const DecomposeOptions& opts) {
  if (side == 'L') {
    // The co-generator family is the generator family of the opposite
    // algebra carried across the duality.
    Family op = enumerate_family(alg->opposite(), budget, strategy, 'M', opts);
    Family out;
    out.attempted = op.attempted;
    for (const FamilyNode& node : op.nodes) {
      FamilyNode mine;
      mine.parent = node.parent;
      mine.mutated_pos = node.mutated_pos;
      mine.via_shift = node.via_shift;
      mine.gens.alg = alg;
      for (const GenEntry& e : node.gens.entries) {
        Rep d = dual(e.rep);
        mine.gens.entries.push_back({d, describe_module(alg, d, 3, opts), 0,
                                     is_projective_rep(d, opts)});
      }
      out.nodes.push_back(std::move(mine));
    }
    return out;
  }
  if (side != 'M') throw std::invalid_argument("enumerate_family: bad side");

  Family fam;
  fam.nodes.push_back({canonical_m0(alg, opts), -1, -1, false});
  std::multimap<std::string, int> seen;
  seen.insert({dims_key(fam.nodes[0].gens), 0});
  std::deque<int> queue{0};
  while (!queue.empty() && static_cast<int>(fam.nodes.size()) < budget) {
    int cur = queue.front();
    queue.pop_front();
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < fam.nodes[cur].gens.entries.size(); ++i)
      if (!fam.nodes[cur].gens.entries[i].projective) positions.push_back(i);
    if (strategy == "simples-first") {
      std::stable_sort(positions.begin(), positions.end(),
                       [&](std::size_t a, std::size_t b) {
                         const auto& es = fam.nodes[cur].gens.entries;
                         return (es[a].base[0] == 'S') >
                                (es[b].base[0] == 'S');
                       });
    } else if (strategy != "all") {
      throw std::invalid_argument("enumerate_family: unknown strategy");
    }
    for (std::size_t pos : positions) {
      if (static_cast<int>(fam.nodes.size()) >= budget) break;
      ++fam.attempted;
      MutationResult r;
      try {
        r = mutate_via_shift(fam.nodes[cur].gens, pos, opts);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (!r.cert.accepted) continue;
      std::string key = dims_key(r.gens);
      bool dup = false;
      auto range = seen.equal_range(key);
      for (auto it = range.first; it != range.second && !dup; ++it)
        dup = same_generator_set(r.gens, fam.nodes[it->second].gens, opts);
      if (dup) continue;
      fam.nodes.push_back(
          {r.gens, cur, static_cast<int>(pos), true});
      seen.insert({key, static_cast<int>(fam.nodes.size()) - 1});
      queue.push_back(static_cast<int>(fam.nodes.size()) - 1);
    }
  }
  return fam;
}

namespace {
struct Candidate {
  std::string name;
  Rep rep;
};
}  // namespace

std::string describe_module(const AlgebraPtr& alg, const Rep& x,
                            int tau_radius, const DecomposeOptions& opts) {
  static std::map<std::pair<const Algebra*, int>, std::vector<Candidate>>
      cache;
  auto key = std::make_pair(alg.get(), tau_radius);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<Candidate> base, all;
    for (int v = 0; v < alg->num_vertices(); ++v) {
      std::string sv = std::to_string(v + 1);
      all.push_back({"P" + sv, Rep::projective(alg, v)});
      Rep p = Rep::projective(alg, v);
      base.push_back({"S" + sv, Rep::simple(alg, v)});
      base.push_back(
          {"P" + sv + "/soc", quotient_rep(p, socle_power_sub(p, 1)).first});
      base.push_back({"r(P" + sv + ")",
                      sub_rep(p, radical_power_sub(p, 1)).first});
    }
    for (const Candidate& c : base) all.push_back(c);
    for (const Candidate& c : base) {
      Rep fwd = c.rep, bwd = c.rep;
      for (int k = 1; k <= tau_radius; ++k) {
        try {
          fwd = tau_inverse(fwd);
          all.push_back({"tau^-" + std::to_string(k) + "(" + c.name + ")",
                         fwd});
        } catch (const std::invalid_argument&) {
          break;
        }
      }
      for (int k = 1; k <= tau_radius; ++k) {
        try {
          bwd = tau(bwd);
          all.push_back({"tau^" + std::to_string(k) + "(" + c.name + ")",
                         bwd});
        } catch (const std::invalid_argument&) {
          break;
        }
      }
    }
    it = cache.emplace(key, std::move(all)).first;
  }
  for (const auto& c : it->second)
    if (c.rep.dims() == x.dims() && is_isomorphic(c.rep, x, opts))
      return c.name;
  std::string fallback = "[";
  for (std::size_t v = 0; v < x.dims().size(); ++v)
    fallback += (v ? "," : "") + std::to_string(x.dims()[v]);
  return fallback + "]";
}

}  // namespace argen
