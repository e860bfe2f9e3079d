#include "argen/hypotheses.hpp"

#include <map>

#include "argen/decompose.hpp"
#include "argen/rep.hpp"

namespace argen {

const HypothesesReport& validate_hypotheses(const AlgebraPtr& alg) {
  static std::map<const Algebra*, HypothesesReport> cache;
  auto it = cache.find(alg.get());
  if (it != cache.end()) return it->second;

  HypothesesReport rep;
  rep.rad_cube_zero = true;
  for (const Path& p : alg->basis())
    if (p.length() >= 3) rep.rad_cube_zero = false;

  const int n = alg->num_vertices();
  std::vector<Rep> proj, inj;
  for (int v = 0; v < n; ++v) {
    proj.push_back(Rep::projective(alg, v));
    inj.push_back(Rep::injective(alg, v));
  }
  rep.selfinjective = true;
  rep.injective_match.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (is_isomorphic(proj[i], inj[j])) {
        rep.injective_match[i] = j;
        break;
      }
    }
    if (rep.injective_match[i] < 0) rep.selfinjective = false;
  }

  rep.weakly_symmetric = rep.selfinjective;
  if (rep.selfinjective) {
    for (int i = 0; i < n; ++i) {
      Rep soc = socle(proj[i]).first;
      if (!is_isomorphic(soc, Rep::simple(alg, i))) {
        rep.weakly_symmetric = false;
        break;
      }
    }
  }

  return cache.emplace(alg.get(), std::move(rep)).first->second;
}

}  // namespace argen
