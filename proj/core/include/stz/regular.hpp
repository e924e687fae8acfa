#pragma once

#include <vector>

#include "stz/chartable.hpp"
#include "stz/group.hpp"
#include "stz/origami.hpp"

namespace stz {

// Origami whose squares are the elements of a two-generated group: the right
// neighbor of square g is g*h and the top neighbor g*v. The deck group is the
// left translations.
struct RegularOrigamiSpec {
  FiniteGroup group;
  int h = 0, v = 0;
  int c = 0;                 // [h, v]
  int commutator_order = 1;  // N
};

// Errors: NotGenerating.
RegularOrigamiSpec make_regular_spec(const FiniteGroup& g, int h, int v);

Origami regular_origami(const RegularOrigamiSpec& spec);

// Left translation by a as a permutation of the squares of regular_origami.
Permutation deck_translation(const RegularOrigamiSpec& spec, int a);

// genus = (|G| - |G|/N) / 2 + 1; must match the stratum computation.
int genus_regular(const RegularOrigamiSpec& spec);
int genus_from_order_and_commutator(long order, long n);

// Number of cosets x<c> fixed by left multiplication with g; equals the value
// of the induced trivial character at g. Errors: IdentityElement.
int fixed_point_count(const RegularOrigamiSpec& spec, int g);

// Multiplicity of the row's representation in H^1: 2 delta_triv + dim - m_0.
Int mult_top(const RegularOrigamiSpec& spec, const CharacterTable& t, int row);

// Multiplicity in H^{0,1}:
// delta_triv + (dim - m_0)/2 + (1/N) sum_{i=1..N-1} (i - N/2) m_i.
// Errors: NonIntegerMultiplicity when the exact value is not an integer.
Int mult_holom(const RegularOrigamiSpec& spec, const CharacterTable& t, int row);
Rat mult_holom_exact(const RegularOrigamiSpec& spec, const CharacterTable& t, int row);

// Delta = sum_{i=1..N-1} (i - N/2) m_i: antisymmetric under conjugation of
// the row, zero for real-valued rows, and N times the tail term of the
// holomorphic multiplicity.
Rat delta_pi(const RegularOrigamiSpec& spec, const CharacterTable& t, int row);

struct MultiplicityRow {
  int row = 0;
  int dim = 0;
  Int top;
  Int holom;
  Rat delta;
  std::vector<Int> m;
};
std::vector<MultiplicityRow> multiplicity_report(const RegularOrigamiSpec& spec,
                                                 const CharacterTable& t);

}  // namespace stz
