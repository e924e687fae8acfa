#pragma once

#include <vector>

#include "stz/chartable.hpp"
#include "stz/linalg.hpp"
#include "stz/origami.hpp"

namespace stz {

// Cellular chain complex of an origami: one square per 2-cell, edge chains
// sigma_s (bottom side) and zeta_s (left side), and one 0-cell per cycle of
// the vertex permutation (all corners are marked, singular or not).
//
// Edge chains live in Z^(2n) with sigma_s at index s and zeta_s at index n+s.
struct ChainComplex {
  int squares = 0;
  std::vector<int> vertex_of;  // square -> vertex class of its bottom-left corner
  int vertex_count = 0;
  IntMat boundary;   // vertex_count x 2n
  IntMat relations;  // 2n x n, column s = sigma_s + zeta_h(s) - sigma_v(s) - zeta_s
};

ChainComplex chain_complex(const Origami& o);

// Absolute H_1 over Z: kernel of the boundary modulo the square relations,
// with the tautological/zero splitting and the intersection form.
struct HomologySpace {
  Origami origami;
  ChainComplex complex;

  IntMat kernel;     // 2n x z, primitive basis of ker(boundary)
  IntMat reduce;     // 2g x z, quotient projection in kernel coordinates
  IntMat h1_basis;   // 2n x 2g, columns are cycle representatives
  IntMat st_basis;   // 2g x 2  (H1 coordinates), symplectic complement of the zero part
  IntMat zero_basis; // 2g x (2g-2), kernel of the projection to the torus
  IntMat form;       // 2g x 2g intersection Gram matrix J on the h1 basis
  int genus = 1;

  int rank() const { return h1_basis.cols(); }

  // H1 coordinates of integer edge cycles (one per column).
  // Errors: NotACycle.
  IntMat h1_coords(const IntMat& chains) const;

  HomologySpace(const HomologySpace&) = default;
  HomologySpace(HomologySpace&&) = default;
  HomologySpace& operator=(const HomologySpace&) = default;
  HomologySpace& operator=(HomologySpace&&) = default;
  HomologySpace() : origami(Permutation(1), Permutation(1)) {}
};

HomologySpace absolute_h1(const Origami& o);

// A rational cycle of the dual center-path graph whose edge image is
// homologous to the integer edge cycle y. Errors: NotACycle, LiftFailed.
RatMat gamma_cycle_lift(const HomologySpace& space, const IntMat& y);

// Signed crossing count of an edge chain with a center-path chain:
// <sigma_s, zeta*_t> = +[s = v(t)], <zeta_s, sigma*_t> = -[s = h(t)].
Rat crossing_number(const HomologySpace& space, const IntMat& x, const RatMat& ystar);

// Algebraic intersection number of two integer edge cycles.
Int intersection_number(const HomologySpace& space, const IntMat& x, const IntMat& y);

// Action of an origami automorphism on H1 (edge relabeling descended to the
// quotient); preserves the form and fixes the tautological part pointwise.
// Errors: NotAutomorphism.
IntMat deck_action(const HomologySpace& space, const Permutation& phi);

struct IsotypicPiece {
  enum class Tag { Real, Complex, Quaternionic };

  std::vector<int> rows;  // character-table rows of the Galois orbit
  Tag tag = Tag::Real;
  int multiplicity = 0;
  IntMat basis;  // 2g x dim, primitive, inside the zero part

  int dim() const { return basis.cols(); }
};

std::string to_string(IsotypicPiece::Tag tag);

struct IsotypicDecomposition {
  FiniteGroup aut;       // automorphism group as a permutation group on squares
  CharacterTable table;  // its character table
  std::vector<IntMat> deck;  // H1 matrix per group element
  std::vector<IsotypicPiece> pieces;

  // Index of the piece of largest dimension with quaternionic tag, or -1.
  int quaternionic_piece() const;
};

// Rational isotypic projectors per Galois/conjugation orbit applied to the
// zero part. Errors: ProjectorNotIdempotent.
IsotypicDecomposition isotypic_decomposition(const HomologySpace& space);

}  // namespace stz
