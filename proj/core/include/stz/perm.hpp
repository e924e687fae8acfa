#pragma once

#include <compare>
#include <string>
#include <vector>

#include "stz/errors.hpp"

namespace stz {

// Permutation of {1..n}. External notation is 1-based cycle notation; the
// image table is 0-based internally and conversion happens only at the
// parse/format boundary.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity of degree n
  explicit Permutation(std::vector<int> images);

  // Disjoint 1-based cycles, e.g. "(1,2)(3,4)"; omitted points are fixed and
  // whitespace is ignored. Errors: RepeatedPoint, PointOutOfRange,
  // MalformedSyntax.
  static Permutation parse_cycles(const std::string& text, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  long order() const;

  // Cycles in increasing order of least point, fixed points included.
  std::vector<std::vector<int>> cycles() const;
  // Multiset of cycle lengths (descending), fixed points included.
  std::vector<int> cycle_type() const;
  // 1-based cycle notation; fixed points omitted; identity prints "()".
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Composition convention everywhere: (p*q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
// h v h^-1 v^-1 under the composition convention above.
Permutation commutator(const Permutation& h, const Permutation& v);
// by p by^-1
Permutation conjugate(const Permutation& by, const Permutation& p);

struct PermPair {
  Permutation h, v;

  PermPair() = default;
  PermPair(Permutation h_, Permutation v_);

  int degree() const { return h.degree(); }
  auto operator<=>(const PermPair&) const = default;
};

bool is_transitive(const PermPair& p);

struct CanonicalPair {
  PermPair pair;
  Permutation relabeling;  // canonical = (relabeling h relabeling^-1, ...)
};

// Canonical form under simultaneous conjugation: BFS relabeling (letters
// tried in order h, v) from every start square, lexicographic minimum of the
// resulting image tables. Deterministic, O(n^2), and two pairs are
// simultaneously conjugate iff their canonical pairs are equal.
// Errors: NotTransitive.
CanonicalPair canonical_pair(const PermPair& p);

}  // namespace stz
