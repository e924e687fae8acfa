#include <random>

#include "doctest.h"
#include "stz/builtins.hpp"
#include "stz/homology.hpp"
#include "stz/regular.hpp"

using namespace stz;

namespace {

RegularOrigamiSpec q8_spec() {
  NamedGroup q8 = quaternion_group();
  return make_regular_spec(q8.group, q8.named("i"), q8.named("j"));
}

}  // namespace

TEST_CASE("regular origami of the quaternion group") {
  RegularOrigamiSpec spec = q8_spec();
  CHECK(spec.commutator_order == 2);

  Origami o = regular_origami(spec);
  CHECK(o.squares() == 8);
  StratumSignature sig = stratum(o);
  CHECK(sig.genus == 3);
  CHECK(sig.orders == std::vector<int>({1, 1, 1, 1}));
  CHECK(genus_regular(spec) == 3);

  // the deck group accounts for all automorphisms
  std::vector<Permutation> auts = automorphisms(o);
  CHECK(auts.size() == 8);
  int involutions = 0;
  for (const Permutation& a : auts)
    if (!a.is_identity() && a.order() == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("degenerate and larger genus computations") {
  // commutator trivial: a two-square torus cover of genus 1
  NamedGroup z2 = cyclic_group(2);
  RegularOrigamiSpec flat = make_regular_spec(z2.group, z2.named("g"), z2.named("g"));
  CHECK(flat.commutator_order == 1);
  CHECK(genus_regular(flat) == 1);
  CHECK(stratum(regular_origami(flat)).genus == 1);

  // order 16 with a commutator of order 4
  NamedGroup q16 = quaternion_group_16();
  RegularOrigamiSpec spec16 = make_regular_spec(q16.group, q16.named("a"), q16.named("b"));
  CHECK(spec16.commutator_order == 4);
  CHECK(genus_regular(spec16) == 7);
  CHECK(stratum(regular_origami(spec16)).genus == 7);

  // the closed form itself at (8, 4)
  CHECK(genus_from_order_and_commutator(8, 4) == 4);

  NamedGroup heis = heisenberg_group_27();
  RegularOrigamiSpec hspec = make_regular_spec(heis.group, heis.named("x"), heis.named("y"));
  CHECK(genus_regular(hspec) == 10);
  CHECK(stratum(regular_origami(hspec)).genus == 10);

  CHECK_THROWS_AS(make_regular_spec(quaternion_group().group, 0, 2), NotGenerating);
}

TEST_CASE("fixed points of deck translations") {
  NamedGroup q8 = quaternion_group();
  RegularOrigamiSpec spec = q8_spec();
  CHECK(fixed_point_count(spec, q8.named("-1")) == 4);
  CHECK(fixed_point_count(spec, q8.named("i")) == 0);
  CHECK(fixed_point_count(spec, q8.named("k")) == 0);
  CHECK_THROWS_AS(fixed_point_count(spec, 0), IdentityElement);

  // agreement with the induced trivial character at every nonidentity element
  CharacterTable t = character_table(q8.group);
  ClassFunction ind = induce(cyclic_subgroup(q8.group, spec.c), 0, t.field);
  for (int g = 1; g < q8.group.order(); ++g)
    CHECK(Rat(fixed_point_count(spec, g)) == ind.at_element(g).rational_value());
}

TEST_CASE("Lefschetz cross-check against homology traces") {
  RegularOrigamiSpec spec = q8_spec();
  HomologySpace space = absolute_h1(regular_origami(spec));
  for (int g = 1; g < spec.group.order(); ++g) {
    IntMat deck = deck_action(space, deck_translation(spec, g));
    CHECK(Int(2 - fixed_point_count(spec, g)) == deck.trace());
  }
}

TEST_CASE("multiplicities for the quaternion group") {
  RegularOrigamiSpec spec = q8_spec();
  CharacterTable t = character_table(spec.group);
  int triv = t.trivial_row();

  Int top_sum = 0;
  for (int r = 0; r < t.class_count(); ++r) {
    Int top = mult_top(spec, t, r);
    top_sum += top * t.rows[r].dim;
    if (r == triv) {
      CHECK(top == 2);
      CHECK(mult_holom(spec, t, r) == 1);
    } else if (t.rows[r].dim == 1) {
      CHECK(top == 0);
      CHECK(mult_holom(spec, t, r) == 0);
    } else {
      CHECK(top == 2);
      CHECK(mult_holom(spec, t, r) == 1);
    }
    CHECK(delta_pi(spec, t, r) == 0);  // all rows of Q8 are real-valued
  }
  CHECK(top_sum == 2 * genus_regular(spec));

  // oracle: brute-force <chi_H1, chi> from homology traces of the deck action
  HomologySpace space = absolute_h1(regular_origami(spec));
  for (int r = 0; r < t.class_count(); ++r) {
    Cyclo acc = Cyclo::zero(t.field);
    for (int g = 0; g < spec.group.order(); ++g) {
      Int trace = deck_action(space, deck_translation(spec, g)).trace();
      acc = acc + t.value_at_element(r, g).conj() * Rat(trace);
    }
    Rat mult = acc.rational_value() / spec.group.order();
    CHECK(mult == Rat(mult_top(spec, t, r)));
  }
}

TEST_CASE("holomorphic multiplicities of the Heisenberg group rows") {
  NamedGroup heis = heisenberg_group_27();
  RegularOrigamiSpec spec = make_regular_spec(heis.group, heis.named("x"), heis.named("y"));
  CharacterTable t = character_table(heis.group);

  std::vector<Rat> deltas;
  for (int r = 0; r < t.class_count(); ++r) {
    if (t.rows[r].dim != 3) continue;
    Int holom = mult_holom(spec, t, r);
    Int holom_conj = mult_holom(spec, t, t.conjugate_row(r));
    CHECK(holom + holom_conj == mult_top(spec, t, r));
    CHECK(mult_top(spec, t, r) == 3);
    CHECK((holom == 1 || holom == 2));
    Rat d = delta_pi(spec, t, r);
    CHECK((d == rat(-3, 2) || d == rat(3, 2)));
    CHECK(delta_pi(spec, t, t.conjugate_row(r)) == -d);
    deltas.push_back(d);
  }
  CHECK(deltas.size() == 2);
  CHECK(deltas[0] + deltas[1] == 0);
}

TEST_CASE("multiplicity identities over random regular specs") {
  std::mt19937_64 rng(307);
  int accepted = 0;
  while (accepted < 12) {
    int deg = 2 + static_cast<int>(rng() % 4);
    std::vector<int> img1(deg), img2(deg);
    for (int i = 0; i < deg; ++i) img1[i] = img2[i] = i;
    std::shuffle(img1.begin(), img1.end(), rng);
    std::shuffle(img2.begin(), img2.end(), rng);
    FiniteGroup g;
    try {
      g = FiniteGroup::from_generators({Permutation(img1), Permutation(img2)}, 16);
    } catch (const GroupBudgetExceeded&) {
      continue;
    }
    int h = g.index_of(Permutation(img1)), v = g.index_of(Permutation(img2));
    if (!g.generated_by(h, v)) continue;
    ++accepted;
    RegularOrigamiSpec spec = make_regular_spec(g, h, v);
    CharacterTable t = character_table(g);
    Int top_sum = 0, holom_sum = 0;
    for (int r = 0; r < t.class_count(); ++r) {
      Int top = mult_top(spec, t, r);
      top_sum += top * t.rows[r].dim;
      Int holom = mult_holom(spec, t, r);
      holom_sum += holom * t.rows[r].dim;
      CHECK(holom + mult_holom(spec, t, t.conjugate_row(r)) == top);
      if (t.conjugate_row(r) == r) CHECK(delta_pi(spec, t, r) == 0);
    }
    CHECK(top_sum == 2 * genus_regular(spec));
    CHECK(holom_sum == genus_regular(spec));
  }
}

TEST_CASE("multiplicity report rows are consistent") {
  RegularOrigamiSpec spec = q8_spec();
  CharacterTable t = character_table(spec.group);
  std::vector<MultiplicityRow> report = multiplicity_report(spec, t);
  REQUIRE(report.size() == 5);
  for (const MultiplicityRow& row : report) {
    Int msum = 0;
    for (const Int& m : row.m) msum += m;
    CHECK(msum == row.dim);
  }
}
