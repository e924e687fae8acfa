#include "stz/homology.hpp"

#include <algorithm>

namespace stz {

ChainComplex chain_complex(const Origami& o) {
  ChainComplex cc;
  int n = o.squares();
  cc.squares = n;
  cc.vertex_of.assign(n, -1);
  for (const auto& cycle : o.vertex_permutation().cycles()) {
    for (int s : cycle) cc.vertex_of[s] = cc.vertex_count;
    ++cc.vertex_count;
  }
  cc.boundary = IntMat(cc.vertex_count, 2 * n);
  for (int s = 0; s < n; ++s) {
    cc.boundary(cc.vertex_of[o.h()(s)], s) += 1;
    cc.boundary(cc.vertex_of[s], s) -= 1;
    cc.boundary(cc.vertex_of[o.v()(s)], n + s) += 1;
    cc.boundary(cc.vertex_of[s], n + s) -= 1;
  }
  cc.relations = IntMat(2 * n, n);
  for (int s = 0; s < n; ++s) {
    cc.relations(s, s) += 1;               // sigma_s
    cc.relations(n + o.h()(s), s) += 1;    // zeta_h(s)
    cc.relations(o.v()(s), s) -= 1;        // sigma_v(s)
    cc.relations(n + s, s) -= 1;           // zeta_s
  }
  return cc;
}

HomologySpace absolute_h1(const Origami& o) {
  HomologySpace space;
  space.origami = o;
  space.complex = chain_complex(o);
  int n = o.squares();

  space.kernel = int_kernel(space.complex.boundary);
  int z = space.kernel.cols();

  // relations in kernel coordinates; integral because the kernel basis is
  // primitive and every relation is a cycle
  auto rel_coords = solve(to_rat(space.kernel), to_rat(space.complex.relations));
  if (!rel_coords) throw Error("absolute_h1: relations are not cycles");
  IntMat rel = to_int(*rel_coords);

  SmithForm snf = smith_form(rel);
  std::vector<int> free_idx;
  for (int i = 0; i < z; ++i) {
    Int d = i < rel.cols() ? snf.s(i, i) : Int(0);
    if (d == 0)
      free_idx.push_back(i);
    else if (d != 1)
      throw Error("absolute_h1: torsion in the homology quotient");
  }
  int rank = static_cast<int>(free_idx.size());
  space.reduce = IntMat(rank, z);
  for (int r = 0; r < rank; ++r)
    for (int j = 0; j < z; ++j) space.reduce(r, j) = snf.u(free_idx[r], j);
  IntMat uinv = unimodular_inverse(snf.u);
  space.h1_basis = IntMat(2 * n, 0);
  {
    IntMat cols(z, rank);
    for (int r = 0; r < rank; ++r)
      for (int i = 0; i < z; ++i) cols(i, r) = uinv(i, free_idx[r]);
    space.h1_basis = space.kernel * cols;
  }
  space.genus = rank / 2;

  // intersection form, one center-path lift per basis cycle
  space.form = IntMat(rank, rank);
  for (int b = 0; b < rank; ++b) {
    RatMat ystar = gamma_cycle_lift(space, space.h1_basis.column(b));
    for (int a = 0; a < rank; ++a) {
      Rat value = crossing_number(space, space.h1_basis.column(a), ystar);
      if (!is_integral(value)) throw Error("absolute_h1: non-integral intersection");
      space.form(a, b) = value.get_num();
    }
  }

  // zero part: kernel of the projection to the torus, sigma_s -> (1,0)
  IntMat pi(2, 2 * n);
  for (int s = 0; s < n; ++s) {
    pi(0, s) = 1;
    pi(1, n + s) = 1;
  }
  space.zero_basis = int_kernel(pi * space.h1_basis);
  // tautological part: symplectic orthogonal of the zero part
  space.st_basis = int_kernel(space.zero_basis.transposed() * space.form);
  if (space.st_basis.cols() != 2 || space.zero_basis.cols() != rank - 2)
    throw Error("absolute_h1: tautological/zero split has wrong ranks");
  return space;
}

IntMat HomologySpace::h1_coords(const IntMat& chains) const {
  if (!(complex.boundary * chains).is_zero()) throw NotACycle("chain has nonzero boundary");
  auto coords = solve(to_rat(kernel), to_rat(chains));
  if (!coords) throw NotACycle("cycle outside the kernel lattice");
  return reduce * to_int(*coords);
}

RatMat gamma_cycle_lift(const HomologySpace& space, const IntMat& y) {
  const ChainComplex& cc = space.complex;
  if (!(cc.boundary * y).is_zero()) throw NotACycle("lift input has nonzero boundary");
  int n = cc.squares;
  // boundary map of the center-path graph: sigma*_s runs center(s) ->
  // center(h(s)), zeta*_s runs center(s) -> center(v(s))
  IntMat dstar(n, 2 * n);
  for (int s = 0; s < n; ++s) {
    dstar(space.origami.h()(s), s) += 1;
    dstar(s, s) -= 1;
    dstar(space.origami.v()(s), n + s) += 1;
    dstar(s, n + s) -= 1;
  }
  // y + relations * r must close up in the center-path graph
  auto r = solve(to_rat(dstar * cc.relations), to_rat(-(dstar * y)));
  if (!r) throw LiftFailed("center-path lift system is inconsistent");
  return to_rat(y) + to_rat(cc.relations) * (*r);
}

Rat crossing_number(const HomologySpace& space, const IntMat& x, const RatMat& ystar) {
  int n = space.complex.squares;
  Rat total = 0;
  for (int t = 0; t < n; ++t) {
    // zeta*_t crosses the top side of t, which is sigma_{v(t)}
    total += Rat(x(space.origami.v()(t), 0)) * ystar(n + t, 0);
    // sigma*_t crosses the right side of t, which is zeta_{h(t)}
    total -= Rat(x(n + space.origami.h()(t), 0)) * ystar(t, 0);
  }
  total.canonicalize();
  return total;
}

Int intersection_number(const HomologySpace& space, const IntMat& x, const IntMat& y) {
  if (!(space.complex.boundary * x).is_zero()) throw NotACycle("x has nonzero boundary");
  Rat value = crossing_number(space, x, gamma_cycle_lift(space, y));
  if (!is_integral(value)) throw Error("intersection_number: non-integral pairing");
  return value.get_num();
}

IntMat deck_action(const HomologySpace& space, const Permutation& phi) {
  const Origami& o = space.origami;
  int n = o.squares();
  if (phi.degree() != n || compose(phi, o.h()) != compose(o.h(), phi) ||
      compose(phi, o.v()) != compose(o.v(), phi))
    throw NotAutomorphism("permutation does not commute with h and v");
  IntMat edge_map(2 * n, 2 * n);
  for (int s = 0; s < n; ++s) {
    edge_map(phi(s), s) = 1;
    edge_map(n + phi(s), n + s) = 1;
  }
  return space.h1_coords(edge_map * space.h1_basis);
}

std::string to_string(IsotypicPiece::Tag tag) {
  switch (tag) {
    case IsotypicPiece::Tag::Real: return "real";
    case IsotypicPiece::Tag::Complex: return "complex";
    case IsotypicPiece::Tag::Quaternionic: return "quaternionic";
  }
  return "?";
}

int IsotypicDecomposition::quaternionic_piece() const {
  int best = -1;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].tag != IsotypicPiece::Tag::Quaternionic) continue;
    if (best < 0 || pieces[i].dim() > pieces[best].dim()) best = static_cast<int>(i);
  }
  return best;
}

IsotypicDecomposition isotypic_decomposition(const HomologySpace& space) {
  IsotypicDecomposition dec;
  std::vector<Permutation> auts = automorphisms(space.origami);
  dec.aut = FiniteGroup::from_generators(auts);
  dec.table = character_table(dec.aut);
  int order = dec.aut.order();
  int rank = space.rank();

  dec.deck.reserve(order);
  for (int g = 0; g < order; ++g) dec.deck.push_back(deck_action(space, dec.aut.element(g)));

  RatMat zero = to_rat(space.zero_basis);
  int zero_rank = space.zero_basis.cols();
  int covered = 0;
  for (const std::vector<int>& orbit : galois_orbits(dec.table)) {
    int dim = dec.table.rows[orbit[0]].dim;
    // orbit-summed character has rational values; conjugation is in the orbit
    std::vector<Rat> sum_char(order);
    for (int g = 0; g < order; ++g) {
      Cyclo acc = Cyclo::zero(dec.table.field);
      for (int r : orbit) acc = acc + dec.table.value_at_element(r, g);
      sum_char[g] = acc.rational_value();
    }
    RatMat projector(rank, rank);
    for (int g = 0; g < order; ++g) {
      Rat weight = sum_char[dec.aut.inverse(g)] * rat(dim, order);
      if (weight == 0) continue;
      projector = projector + to_rat(dec.deck[g]) * weight;
    }
    if (!(projector * projector == projector))
      throw ProjectorNotIdempotent("isotypic projector fails P^2 = P");

    RatMat image = projector * zero;
    // clear denominators columnwise, then saturate inside the H1 lattice
    IntMat scaled(rank, zero_rank);
    for (int j = 0; j < zero_rank; ++j) {
      Int denom = 1;
      for (int i = 0; i < rank; ++i) denom = lcm(denom, image(i, j).get_den());
      for (int i = 0; i < rank; ++i) {
        Rat v = image(i, j) * Rat(denom);
        scaled(i, j) = v.get_num();
      }
    }
    IsotypicPiece piece;
    piece.rows = orbit;
    piece.basis = saturate(scaled);
    int fs = fs_indicator(dec.table, orbit[0]);
    piece.tag = fs == 1 ? IsotypicPiece::Tag::Real
                        : fs == 0 ? IsotypicPiece::Tag::Complex : IsotypicPiece::Tag::Quaternionic;
    int denom = static_cast<int>(orbit.size()) * dim * (fs == -1 ? 2 : 1);
    if (piece.dim() % denom != 0)
      throw Error("isotypic piece dimension incompatible with its character orbit");
    piece.multiplicity = piece.dim() / denom;
    covered += piece.dim();
    dec.pieces.push_back(std::move(piece));
  }
  if (covered != zero_rank) throw Error("isotypic pieces do not fill the zero part");
  return dec;
}

}  // namespace stz
