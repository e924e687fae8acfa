#include "stz/origami.hpp"

#include <algorithm>
#include <map>

namespace stz {

Origami::Origami(PermPair pair) : pair_(std::move(pair)) {
  if (!is_transitive(pair_)) throw NotTransitive("origami squares are not connected");
}

Origami::Origami(Permutation h, Permutation v) : Origami(PermPair(std::move(h), std::move(v))) {}

Permutation Origami::vertex_permutation() const { return commutator(pair_.h, pair_.v); }

std::string StratumSignature::to_string() const {
  std::string s = "H(";
  for (size_t i = 0; i < orders.size(); ++i) {
    s += std::to_string(orders[i]);
    if (i + 1 < orders.size()) s += ",";
  }
  return s + ")";
}

StratumSignature stratum(const Origami& o) {
  StratumSignature sig;
  int total = 0;
  for (int len : o.vertex_permutation().cycle_type()) {
    if (len > 1) {
      sig.orders.push_back(len - 1);
      total += len - 1;
    }
  }
  std::sort(sig.orders.rbegin(), sig.orders.rend());
  sig.genus = 1 + total / 2;
  return sig;
}

Origami apply_generator(const Origami& o, Sl2Letter g) {
  const Permutation& h = o.h();
  const Permutation& v = o.v();
  switch (g) {
    case Sl2Letter::T: return Origami(h, compose(v, h.inverse()));
    case Sl2Letter::Tinv: return Origami(h, compose(v, h));
    case Sl2Letter::S: return Origami(compose(h, v.inverse()), v);
    case Sl2Letter::Sinv: return Origami(compose(h, v), v);
  }
  return o;
}

Origami apply_word(const Origami& o, const std::vector<Sl2Letter>& letters) {
  Origami cur = o;
  // group action: the rightmost letter acts first
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    cur = apply_generator(cur, *it);
  return cur;
}

namespace {

std::vector<int> perm_cycle_sizes(const std::vector<int>& next) {
  std::vector<int> sizes;
  std::vector<bool> seen(next.size(), false);
  for (size_t x = 0; x < next.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    size_t y = x;
    while (!seen[y]) {
      seen[y] = true;
      ++len;
      y = static_cast<size_t>(next[y]);
    }
    sizes.push_back(len);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace

std::vector<int> OrbitGraph::t_cycle_sizes() const { return perm_cycle_sizes(t_edges); }
std::vector<int> OrbitGraph::s_cycle_sizes() const { return perm_cycle_sizes(s_edges); }

OrbitGraph orbit(const Origami& o, std::size_t node_cap) {
  OrbitGraph g;
  std::map<PermPair, int> index;
  auto add = [&](const PermPair& canon) {
    auto it = index.find(canon);
    if (it != index.end()) return it->second;
    if (g.nodes.size() >= node_cap)
      throw OrbitBudgetExceeded("orbit exceeds node cap of " + std::to_string(node_cap));
    int id = static_cast<int>(g.nodes.size());
    index.emplace(canon, id);
    g.nodes.emplace_back(canon.h, canon.v);
    return id;
  };
  g.base_index = add(canonical_pair(o.pair()).pair);
  for (size_t head = 0; head < g.nodes.size(); ++head) {
    Origami cur = g.nodes[head];  // copy: nodes may reallocate
    int t = add(canonical_pair(apply_generator(cur, Sl2Letter::T).pair()).pair);
    int s = add(canonical_pair(apply_generator(cur, Sl2Letter::S).pair()).pair);
    g.t_edges.push_back(t);
    g.s_edges.push_back(s);
  }
  return g;
}

std::vector<Permutation> automorphisms(const Origami& o) {
  int n = o.squares();
  const Permutation& h = o.h();
  const Permutation& v = o.v();
  std::vector<Permutation> out;
  // an automorphism of a transitive pair is determined by the image of square
  // 0; propagate via phi(h(x)) = h(phi(x)), phi(v(x)) = v(phi(x))
  for (int target = 0; target < n; ++target) {
    std::vector<int> phi(n, -1);
    phi[0] = target;
    std::vector<int> queue = {0};
    bool ok = true;
    for (size_t head = 0; head < queue.size() && ok; ++head) {
      int x = queue[head];
      for (const Permutation* p : {&h, &v}) {
        int y = (*p)(x);
        int img = (*p)(phi[x]);
        if (phi[y] < 0) {
          phi[y] = img;
          queue.push_back(y);
        } else if (phi[y] != img) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<bool> hit(n, false);
    for (int x : phi) {
      if (x < 0 || hit[x]) {
        ok = false;
        break;
      }
      hit[x] = true;
    }
    if (ok) out.emplace_back(phi);
  }
  return out;
}

Origami cover_from_cocycle(const Origami& base, const FiniteGroup& group,
                           const std::vector<int>& hcoc, const std::vector<int>& vcoc) {
  int n = base.squares();
  int k = group.order();
  if (static_cast<int>(hcoc.size()) != n || static_cast<int>(vcoc.size()) != n)
    throw Error("cover_from_cocycle: cocycle length must equal the square count");
  auto idx = [&](int s, int g) { return s * k + g; };
  std::vector<int> himg(n * k), vimg(n * k);
  for (int s = 0; s < n; ++s)
    for (int g = 0; g < k; ++g) {
      himg[idx(s, g)] = idx(base.h()(s), group.mult(g, hcoc[s]));
      vimg[idx(s, g)] = idx(base.v()(s), group.mult(g, vcoc[s]));
    }
  return Origami(Permutation(std::move(himg)), Permutation(std::move(vimg)));
}

bool veech_contains(const Origami& o, const Sl2Mat& m) {
  if (m.det() != 1) throw NotUnimodular("veech_contains: determinant must be 1");
  Sl2zWord word = sl2z_word(m);
  Origami image = apply_word(o, word.letters);
  return canonical_pair(image.pair()).pair == canonical_pair(o.pair()).pair;
}

}  // namespace stz
