#include "stz/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace stz {

struct FiniteGroup::Impl {
  std::vector<Permutation> elements;
  std::map<std::vector<int>, int> index;
  std::vector<int> generator_indices;
  std::vector<std::vector<int>> table;  // [i][j] = index of elements[i] * elements[j]
  std::vector<int> inverse;
  std::vector<int> orders;
  long exponent = 1;

  mutable std::once_flag classes_once;
  mutable Classes classes;

  int lookup(const Permutation& p) const {
    auto it = index.find(p.images());
    return it == index.end() ? -1 : it->second;
  }
};

FiniteGroup FiniteGroup::from_generators(const std::vector<Permutation>& gens,
                                         std::size_t order_cap) {
  if (gens.empty()) throw Error("from_generators: no generators");
  int degree = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw DegreeMismatch("generator degrees differ");

  auto impl = std::make_shared<Impl>();
  Permutation id(degree);
  impl->elements.push_back(id);
  impl->index[id.images()] = 0;
  for (size_t head = 0; head < impl->elements.size(); ++head) {
    Permutation x = impl->elements[head];  // copy: elements may reallocate
    for (const auto& g : gens) {
      Permutation y = compose(x, g);
      if (impl->index.count(y.images())) continue;
      if (impl->elements.size() >= order_cap)
        throw GroupBudgetExceeded("group closure exceeds order cap");
      impl->index[y.images()] = static_cast<int>(impl->elements.size());
      impl->elements.push_back(std::move(y));
    }
  }
  int n = static_cast<int>(impl->elements.size());
  for (const auto& g : gens) impl->generator_indices.push_back(impl->lookup(g));

  // The dense multiplication table is skipped for very large closures; mult()
  // then falls back to composing permutations.
  if (n <= 2048) {
    impl->table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        impl->table[i][j] = impl->lookup(compose(impl->elements[i], impl->elements[j]));
  }

  impl->inverse.resize(n);
  impl->orders.resize(n);
  for (int i = 0; i < n; ++i) {
    impl->inverse[i] = impl->lookup(impl->elements[i].inverse());
    impl->orders[i] = static_cast<int>(impl->elements[i].order());
    impl->exponent = std::lcm(impl->exponent, static_cast<long>(impl->orders[i]));
  }

  FiniteGroup g;
  g.impl_ = std::move(impl);
  return g;
}

int FiniteGroup::order() const { return static_cast<int>(impl_->elements.size()); }
int FiniteGroup::degree() const { return impl_->elements[0].degree(); }
const Permutation& FiniteGroup::element(int i) const { return impl_->elements[i]; }
const std::vector<int>& FiniteGroup::generators() const { return impl_->generator_indices; }
int FiniteGroup::mult(int i, int j) const {
  if (!impl_->table.empty()) return impl_->table[i][j];
  return impl_->lookup(compose(impl_->elements[i], impl_->elements[j]));
}
int FiniteGroup::inverse(int i) const { return impl_->inverse[i]; }
int FiniteGroup::element_order(int i) const { return impl_->orders[i]; }
long FiniteGroup::exponent() const { return impl_->exponent; }
int FiniteGroup::index_of(const Permutation& p) const { return impl_->lookup(p); }

int FiniteGroup::power(int i, long e) const {
  long n = element_order(i);
  e %= n;
  if (e < 0) e += n;
  int r = 0;
  for (long k = 0; k < e; ++k) r = mult(r, i);
  return r;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& seed) const {
  std::vector<bool> in(order(), false);
  std::vector<int> queue = {0};
  in[0] = true;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int g : seed) {
      int y = mult(queue[head], g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool FiniteGroup::generated_by(int a, int b) const {
  return static_cast<int>(subgroup_closure({a, b}).size()) == order();
}

const FiniteGroup::Classes& FiniteGroup::classes() const {
  std::call_once(impl_->classes_once, [this] {
    int n = order();
    Classes cl;
    cl.class_of.assign(n, -1);
    std::vector<std::vector<int>> raw;
    for (int x = 0; x < n; ++x) {
      if (cl.class_of[x] >= 0) continue;
      std::vector<int> members;
      for (int g = 0; g < n; ++g) {
        int y = mult(mult(g, x), inverse(g));
        if (cl.class_of[y] < 0) {
          cl.class_of[y] = static_cast<int>(raw.size());
          members.push_back(y);
        }
      }
      std::sort(members.begin(), members.end());
      raw.push_back(std::move(members));
    }
    std::vector<int> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
      return raw[a][0] < raw[b][0];
    });
    for (size_t c = 0; c < perm.size(); ++c) {
      cl.members.push_back(raw[perm[c]]);
      cl.representative.push_back(raw[perm[c]][0]);
      for (int x : raw[perm[c]]) cl.class_of[x] = static_cast<int>(c);
    }
    impl_->classes = std::move(cl);
  });
  return impl_->classes;
}

}  // namespace stz
