#pragma once

#include <string>
#include <vector>

#include "stz/group.hpp"
#include "stz/perm.hpp"
#include "stz/sl2z.hpp"

namespace stz {

// Square-tiled surface given by a transitive pair (h, v): square s has its
// right neighbor at h(s) and its top neighbor at v(s).
class Origami {
 public:
  // Errors: NotTransitive.
  explicit Origami(PermPair pair);
  Origami(Permutation h, Permutation v);

  int squares() const { return pair_.degree(); }
  const Permutation& h() const { return pair_.h; }
  const Permutation& v() const { return pair_.v; }
  const PermPair& pair() const { return pair_; }

  // Vertex permutation: bottom-left corners of squares s, c(s) lie at the same
  // conical point, where c = h v h^-1 v^-1.
  Permutation vertex_permutation() const;

  bool operator==(const Origami& o) const { return pair_ == o.pair_; }

 private:
  PermPair pair_;
};

struct StratumSignature {
  std::vector<int> orders;  // zero orders, descending; empty for the torus
  int genus = 1;

  std::string to_string() const;  // "H(5,5,5,5)"
  bool operator==(const StratumSignature&) const = default;
};

// Each vertex-permutation cycle of length l > 1 contributes a zero of order
// l - 1; genus = 1 + sum(orders) / 2.
StratumSignature stratum(const Origami& o);

// T: (h, v h^-1),  S: (h v^-1, v); inverse letters invert these. The result is
// not canonicalized.
Origami apply_generator(const Origami& o, Sl2Letter g);
Origami apply_word(const Origami& o, const std::vector<Sl2Letter>& letters);

struct OrbitGraph {
  std::vector<Origami> nodes;  // canonical forms in discovery order
  std::vector<int> t_edges;    // node -> node under T (canonicalized)
  std::vector<int> s_edges;
  int base_index = 0;

  std::size_t size() const { return nodes.size(); }
  std::vector<int> t_cycle_sizes() const;  // descending
  std::vector<int> s_cycle_sizes() const;
};

// BFS closure of the canonical form under T and S, in deterministic discovery
// order. The raw orbit size equals the index of the Veech group in SL(2,Z)
// only when the origami is reduced (the cover does not factor through a
// larger torus); no reducedness check is performed here.
// Errors: OrbitBudgetExceeded.
OrbitGraph orbit(const Origami& o, std::size_t node_cap = 100000);

// All square relabelings commuting with both h and v (the centralizer of
// <h, v>); forms a group of order at most n for transitive pairs.
std::vector<Permutation> automorphisms(const Origami& o);

// Cover with squares (s, g): crossing the right edge of (s, g) lands in
// (h(s), g * hcoc[s]), and the top edge in (v(s), g * vcoc[s]).
// hcoc/vcoc hold group element indices per base square.
// Errors: NotTransitive when the cover is disconnected.
Origami cover_from_cocycle(const Origami& base, const FiniteGroup& group,
                           const std::vector<int>& hcoc, const std::vector<int>& vcoc);

// True iff m lies in the Veech group of o, i.e. the T/S word of m maps o to a
// simultaneously conjugate pair. Errors: NotUnimodular.
bool veech_contains(const Origami& o, const Sl2Mat& m);

}  // namespace stz
