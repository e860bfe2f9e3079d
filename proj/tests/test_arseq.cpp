#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "argen/arseq.hpp"
#include "argen/examples.hpp"
#include "argen/mutation.hpp"

using namespace argen;

static AlgebraPtr alg1() {
  static AlgebraPtr a = load_fixture("example1");
  return a;
}

TEST_CASE("ext groups on the fixed cover") {
  auto alg = alg1();
  Rep s1 = Rep::simple(alg, 0);
  // Ext^1(P, -) vanishes
  CHECK(ext1(Rep::projective(alg, 0), s1).dim() == 0);
  Ext1 e = ext1(s1, tau(s1));
  CHECK(e.dim() >= 1);
  e.cover.check();

  // realize / ext_class_of round-trip on every basis class
  for (int i = 0; i < e.dim(); ++i) {
    SES s = realize(e, e.reps[i]);
    s.check();
    CHECK(s.quot().dims() == s1.dims());
    std::vector<std::uint32_t> coords = ext_class_of(e, s);
    for (int j = 0; j < e.dim(); ++j)
      CHECK(coords[j] == (i == j ? 1u : 0u));
  }

  // the zero class realizes to a split sequence
  SES z = realize(e, Morphism::zero(e.cover.sub(), e.a));
  CHECK(z.splits());
  for (std::uint32_t c : ext_class_of(e, z)) CHECK(c == 0);
}

TEST_CASE("syzygy action pulls classes back") {
  auto alg = alg1();
  Rep s1 = Rep::simple(alg, 0);
  Ext1 e = ext1(s1, tau(s1));
  Morphism om_id = syzygy_of_endo(e, Morphism::identity(s1));
  for (int i = 0; i < e.dim(); ++i) {
    auto c0 = ext_coords(e, e.reps[i]);
    auto c1 = ext_coords(e, om_id.then(e.reps[i]));
    CHECK(c0 == c1);
  }
}

TEST_CASE("almost split sequence ending at tau^-1 S1") {
  auto alg = alg1();
  Rep s1 = Rep::simple(alg, 0);
  Rep c = tau_inverse(s1);
  ARSequence ar = almost_split_ending_at(c);
  ar.seq.check();
  CHECK_FALSE(ar.seq.splits());
  // ends: sub is tau C, dimensions add up
  CHECK(is_isomorphic(ar.seq.sub(), s1));
  for (std::size_t v = 0; v < 2; ++v)
    CHECK(ar.seq.mid().dims()[v] ==
          ar.seq.sub().dims()[v] + ar.seq.quot().dims()[v]);
  // the middle term is P1/soc + P2/soc
  Rep p1q = quotient_rep(Rep::projective(alg, 0),
                         socle_power_sub(Rep::projective(alg, 0), 1))
                .first;
  Rep p2q = quotient_rep(Rep::projective(alg, 1),
                         socle_power_sub(Rep::projective(alg, 1), 1))
                .first;
  CHECK(is_isomorphic(ar.seq.mid(), direct_sum({p1q, p2q}).sum));
}

TEST_CASE("the class is annihilated by the radical") {
  auto alg = alg1();
  Rep c = tau_inverse(Rep::simple(alg, 0));
  ARSequence ar = almost_split_ending_at(c);
  Ext1 e = ext1(c, ar.seq.sub());
  auto v = ext_class_of(e, ar.seq);
  Morphism h = Morphism::zero(e.cover.sub(), e.a);
  for (int i = 0; i < e.dim(); ++i)
    if (v[i]) h = h + e.reps[i].scaled(v[i]);
  for (const Morphism& r : radical_of_local_endo(c)) {
    auto pulled = ext_coords(e, syzygy_of_endo(e, r).then(h));
    for (std::uint32_t coef : pulled) CHECK(coef == 0);
  }
}

TEST_CASE("lifting property against test modules") {
  auto alg = alg1();
  ARSequence ar = almost_split_ending_at(tau_inverse(Rep::simple(alg, 0)));
  std::vector<Rep> testers = canonical_m0(alg).reps();
  testers.push_back(ar.seq.quot());
  CHECK(verify_right_almost_split(ar, testers));
}

TEST_CASE("sequences starting at a module") {
  auto alg = alg1();
  Rep s1 = Rep::simple(alg, 0);
  ARSequence ar = almost_split_starting_at(s1);
  ar.seq.check();
  CHECK_FALSE(ar.seq.splits());
  CHECK(ar.seq.sub().dims() == s1.dims());
  CHECK(is_isomorphic(ar.seq.quot(), tau_inverse(s1)));
  CHECK_THROWS(almost_split_starting_at(Rep::injective(alg, 0)));
  CHECK_THROWS(almost_split_ending_at(Rep::projective(alg, 0)));
}

TEST_CASE("mutable positions") {
  auto alg = alg1();
  GeneratorSet g = shift(canonical_m0(alg), 1);
  auto reps = g.reps();
  // right after the shift only the simples are exchangeable; the radical
  // quotients become exchangeable once the simples have been advanced
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    if (g.entries[i].projective) continue;
    CHECK(is_mutable_position(reps, i) == (g.entries[i].base[0] == 'S'));
  }
  // removing a middle-term summand destroys mutability of tau^-1 S1
  std::size_t s1_pos = 0, drop = 0;
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    if (g.entries[i].base == "S1") s1_pos = i;
    if (g.entries[i].base == "P1/soc") drop = i;
  }
  std::vector<Rep> fewer;
  std::size_t s1_new = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (i == drop) continue;
    if (i == s1_pos) s1_new = fewer.size();
    fewer.push_back(reps[i]);
  }
  CHECK_FALSE(is_mutable_position(fewer, s1_new));
}
