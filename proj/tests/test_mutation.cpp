#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "argen/examples.hpp"
#include "argen/mutation.hpp"

using namespace argen;

static AlgebraPtr alg1() {
  static AlgebraPtr a = load_fixture("example1");
  return a;
}

TEST_CASE("canonical generator sets") {
  auto alg = alg1();
  GeneratorSet m0 = canonical_m0(alg);
  std::set<std::string> names;
  for (const auto& e : m0.entries) names.insert(e.name());
  CHECK(names ==
        std::set<std::string>{"P1", "P2", "P1/soc", "P2/soc", "S1", "S2"});
  m0.check_generator_cogenerator();
  int total = 0;
  for (const Rep& r : m0.reps()) total += r.total_dim();
  CHECK(total == 8 + 6 + 2);  // Lambda, Lambda/soc, Lambda/soc^2

  GeneratorSet l0 = canonical_l0(alg);
  CHECK(l0.entries.size() == 6);
  l0.check_generator_cogenerator();
  bool has_rad = false;
  for (const auto& e : l0.entries)
    if (e.name() == "r(P1)") has_rad = true;
  CHECK(has_rad);
}

TEST_CASE("shift translates the non-projective part") {
  auto alg = alg1();
  GeneratorSet m0 = canonical_m0(alg);
  GeneratorSet s = shift(m0, 1);
  for (const auto& e : s.entries)
    CHECK(e.tau_offset == (e.projective ? 0 : 1));
  // shifting is invertible and keeps the generator-cogenerator property
  s.check_generator_cogenerator();
  CHECK(same_generator_set(shift(s, -1), m0));
  CHECK(same_generator_set(shift(m0, 2), shift(shift(m0, 1), 1)));
}

TEST_CASE("mutate validates its position") {
  auto alg = alg1();
  GeneratorSet g = shift(canonical_m0(alg), 1);
  std::size_t proj = 0;
  for (std::size_t i = 0; i < g.entries.size(); ++i)
    if (g.entries[i].projective) proj = i;
  CHECK_THROWS_AS((void)mutate(g, proj), std::invalid_argument);
  CHECK_THROWS_AS((void)mutate(g, g.entries.size()), std::invalid_argument);
}

TEST_CASE("an accepted exchange replaces the entry by its translate") {
  auto alg = alg1();
  GeneratorSet g = shift(canonical_m0(alg), 1);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.entries.size(); ++i)
    if (g.entries[i].base == "S1") idx = i;
  Rep n = g.entries[idx].rep;
  MutationResult r = mutate(g, idx);
  CHECK(r.cert.accepted);
  CHECK(r.cert.branch == "fast-a");
  CHECK(r.cert.middle_term_in_add);
  CHECK(r.cert.stable_hom_dim > 0);
  CHECK(r.cert.replaced_dims == n.dims());
  CHECK(r.gens.entries[idx].name() == "tau^-2(S1)");
  CHECK(is_isomorphic(r.gens.entries[idx].rep, tau_inverse(n)));
  CHECK_FALSE(same_generator_set(r.gens, g));
  r.gens.check_generator_cogenerator();
}

TEST_CASE("mutate_via_shift works on the canonical set") {
  auto alg = alg1();
  GeneratorSet m0 = canonical_m0(alg);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m0.entries.size(); ++i)
    if (m0.entries[i].base == "S1") idx = i;
  MutationResult r = mutate_via_shift(m0, idx);
  CHECK(r.cert.accepted);
  CHECK(r.gens.entries[idx].name() == "tau^-1(S1)");
  // other non-projective entries come back untranslated
  for (std::size_t i = 0; i < r.gens.entries.size(); ++i)
    if (i != idx) CHECK(r.gens.entries[i].tau_offset == 0);
}

TEST_CASE("set comparison ignores order") {
  auto alg = alg1();
  GeneratorSet a = canonical_m0(alg);
  GeneratorSet b = a;
  std::reverse(b.entries.begin(), b.entries.end());
  CHECK(same_generator_set(a, b));
  b.entries.pop_back();
  CHECK_FALSE(same_generator_set(a, b));
}

TEST_CASE("family enumeration") {
  auto alg = alg1();
  Family f = enumerate_family(alg, 4, "all");
  CHECK(f.nodes.size() == 4);
  CHECK(f.attempted >= 3);
  CHECK(f.nodes[0].parent == -1);
  for (std::size_t i = 1; i < f.nodes.size(); ++i) {
    const FamilyNode& n = f.nodes[i];
    REQUIRE(n.parent >= 0);
    CHECK(n.mutated_pos >= 0);
    // nodes are pairwise distinct
    for (std::size_t j = 0; j < i; ++j)
      CHECK_FALSE(same_generator_set(n.gens, f.nodes[j].gens));
  }
  // simples-first explores simple entries before the radical quotients
  Family sf = enumerate_family(alg, 2, "simples-first");
  REQUIRE(sf.nodes.size() == 2);
  const GeneratorSet& child = sf.nodes[1].gens;
  bool advanced_simple = false;
  for (const auto& e : child.entries)
    if (e.base[0] == 'S' && e.tau_offset == 1) advanced_simple = true;
  CHECK(advanced_simple);
}

TEST_CASE("family enumeration on the dual side") {
  auto alg = alg1();
  Family f = enumerate_family(alg, 2, "all", 'L');
  REQUIRE(f.nodes.size() == 2);
  for (const FamilyNode& n : f.nodes) {
    CHECK(n.gens.entries.size() == 6);
    n.gens.check_generator_cogenerator();
  }
}

TEST_CASE("module descriptions") {
  auto alg = alg1();
  CHECK(describe_module(alg, Rep::projective(alg, 0)) == "P1");
  CHECK(describe_module(alg, Rep::simple(alg, 1)) == "S2");
  Rep t = tau_inverse(Rep::simple(alg, 0));
  CHECK(describe_module(alg, t) == "tau^-1(S1)");
}
