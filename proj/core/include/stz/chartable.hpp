#pragma once

#include <string>
#include <vector>

#include "stz/cyclotomic.hpp"
#include "stz/group.hpp"

namespace stz {

// Function on a group that is constant on conjugacy classes; one exact
// cyclotomic value per class, in class order.
struct ClassFunction {
  FiniteGroup group;
  std::vector<Cyclo> values;

  const Cyclo& at_class(int c) const { return values[c]; }
  const Cyclo& at_element(int g) const { return values[group.classes().class_of[g]]; }
};

// Complete table of exact complex irreducible characters, computed by Dixon's
// modular method. Rows are sorted by (dimension, values lexicographic) and
// satisfy both orthogonality relations exactly.
struct CharacterTable {
  FiniteGroup group;
  CycloFieldPtr field;  // order = exponent of the group

  struct Row {
    int dim = 0;
    std::vector<Cyclo> values;  // per class, values[0] = dim at the identity class
  };
  std::vector<Row> rows;

  int class_count() const { return static_cast<int>(rows.size()); }
  const Cyclo& value(int row, int cls) const { return rows[row].values[cls]; }
  Cyclo value_at_element(int row, int g) const {
    return rows[row].values[group.classes().class_of[g]];
  }
  // Row whose values are the complex conjugates of the given row.
  int conjugate_row(int row) const;
  // Index of the trivial character.
  int trivial_row() const;
};

// Errors: GroupBudgetExceeded when |G| exceeds the budget, NoSuitablePrime when
// the modular prime search bound is exhausted.
CharacterTable character_table(const FiniteGroup& g, long order_budget = 2000);

// Frobenius-Schur indicator (1/|G|) sum chi(g^2): 1 real, 0 complex,
// -1 quaternionic.
int fs_indicator(const CharacterTable& t, int row);

// (1/|G|) sum_g phi(g) conj(psi(g)), exact. Errors: GroupMismatch.
Cyclo inner_product(const ClassFunction& phi, const ClassFunction& psi);

ClassFunction class_function_from_row(const CharacterTable& t, int row);
ClassFunction delta_identity(const FiniteGroup& g, CycloFieldPtr field);

// Cyclic subgroup generated by one element, with its characters
// chi_j(c^t) = zeta_N^(j t).
struct CyclicSubgroup {
  FiniteGroup group;
  int generator = 0;
  std::vector<int> elements;  // c^0, c^1, ..., c^(N-1)
  int order() const { return static_cast<int>(elements.size()); }
};
CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, int generator);

// Induction of chi_j from <c> to the full group:
// Ind chi_j(g) = (1/N) sum over s with s g s^-1 in <c> of chi_j(s g s^-1).
// Errors: NotSubgroup when sub was built over a different group.
ClassFunction induce(const CyclicSubgroup& sub, long j, CycloFieldPtr field);

// Eigenvalue multiplicities of the commutator c = [h, v] in the row's
// representation: m[i] counts eigenvalues exp(2 pi sqrt(-1) i / N).
// Each m[i] is a nonnegative integer and they sum to dim.
// Errors: NotGenerating, NonIntegerMultiplicity.
struct CommutatorSpectrum {
  int order = 1;       // N = order of [h, v]
  std::vector<Int> m;  // m[0..N-1]
};
CommutatorSpectrum commutator_spectrum(const FiniteGroup& g, int h, int v,
                                       const CharacterTable& t, int row);

// Orbits of rows under all field automorphisms zeta -> zeta^a (these include
// complex conjugation); orbit sums have rational values.
std::vector<std::vector<int>> galois_orbits(const CharacterTable& t);

}  // namespace stz
