#pragma once

#include <memory>
#include <vector>

#include "stz/perm.hpp"

namespace stz {

// A finite permutation group enumerated by BFS closure of its generators,
// identity first. Immutable after construction; copies share state and are
// cheap, so values can be passed around and between threads freely.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Errors: DegreeMismatch, GroupBudgetExceeded.
  static FiniteGroup from_generators(const std::vector<Permutation>& gens,
                                     std::size_t order_cap = 20000);

  int order() const;
  int degree() const;
  const Permutation& element(int i) const;
  const std::vector<int>& generators() const;  // indices into the element list

  int mult(int i, int j) const;  // index of element(i) composed with element(j)
  int inverse(int i) const;
  int power(int i, long e) const;
  int element_order(int i) const;
  long exponent() const;
  // -1 when the permutation is not in the group
  int index_of(const Permutation& p) const;

  // Closure of the given element indices as a sorted index list.
  std::vector<int> subgroup_closure(const std::vector<int>& seed) const;
  bool generated_by(int a, int b) const;

  struct Classes {
    std::vector<int> class_of;                // element index -> class index
    std::vector<std::vector<int>> members;    // per class, sorted
    std::vector<int> representative;          // least element index per class
    int count() const { return static_cast<int>(members.size()); }
    int size(int c) const { return static_cast<int>(members[c].size()); }
  };
  // Conjugacy classes sorted by (size, least member index).
  const Classes& classes() const;

  bool same_group(const FiniteGroup& o) const { return impl_ == o.impl_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

inline const FiniteGroup::Classes& conjugacy_classes(const FiniteGroup& g) {
  return g.classes();
}

}  // namespace stz
