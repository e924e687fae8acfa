#include "stz/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace stz {

Permutation::Permutation(int n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree()) throw PointOutOfRange("image table entry out of range");
    if (seen[x]) throw RepeatedPoint("image table is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::parse_cycles(const std::string& text, int n) {
  if (n < 0) throw PointOutOfRange("negative degree");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> seen(n, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw MalformedSyntax("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',') throw MalformedSyntax("expected ',' between cycle points");
        ++i;
        skip_ws();
      }
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw MalformedSyntax("expected a point in cycle");
      long pt = std::stol(text.substr(start, i - start));
      if (pt < 1 || pt > n) throw PointOutOfRange("cycle point outside {1..n}");
      if (seen[pt - 1]) throw RepeatedPoint("point appears twice");
      seen[pt - 1] = true;
      cycle.push_back(static_cast<int>(pt) - 1);
      skip_ws();
    }
    if (i >= text.size()) throw MalformedSyntax("unterminated cycle");
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

long Permutation::order() const {
  long ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<long>(c.size()));
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::vector<int> c;
    int y = x;
    do {
      seen[y] = true;
      c.push_back(y);
      y = images_[y];
    } while (y != x);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Permutation::cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    s += "(";
    for (size_t k = 0; k < c.size(); ++k) {
      s += std::to_string(c[k] + 1);
      if (k + 1 < c.size()) s += ",";
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch("compose: degrees differ");
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[x] = p(q(x));
  return Permutation(std::move(images));
}

Permutation commutator(const Permutation& h, const Permutation& v) {
  if (h.degree() != v.degree()) throw DegreeMismatch("commutator: degrees differ");
  return compose(h, compose(v, compose(h.inverse(), v.inverse())));
}

Permutation conjugate(const Permutation& by, const Permutation& p) {
  return compose(by, compose(p, by.inverse()));
}

PermPair::PermPair(Permutation h_, Permutation v_) : h(std::move(h_)), v(std::move(v_)) {
  if (h.degree() != v.degree()) throw DegreeMismatch("pair degrees differ");
}

bool is_transitive(const PermPair& p) {
  int n = p.degree();
  if (n == 0) return false;
  // forward closure under h and v reaches the full group orbit on a finite set
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {p.h(x), p.v(x)}) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

namespace {

// BFS relabeling starting at `start`, trying h then v from each square; the
// returned map sends old labels to new ones.
std::vector<int> bfs_relabeling(const PermPair& p, int start) {
  int n = p.degree();
  std::vector<int> label(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  label[start] = 0;
  queue.push_back(start);
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : {p.h(x), p.v(x)}) {
      if (label[y] < 0) {
        label[y] = static_cast<int>(queue.size());
        queue.push_back(y);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) throw NotTransitive("pair does not act transitively");
  return label;
}

}  // namespace

CanonicalPair canonical_pair(const PermPair& p) {
  int n = p.degree();
  if (n == 0) throw NotTransitive("empty pair");
  bool have = false;
  CanonicalPair best;
  for (int start = 0; start < n; ++start) {
    Permutation phi(bfs_relabeling(p, start));
    PermPair cand(conjugate(phi, p.h), conjugate(phi, p.v));
    if (!have || cand < best.pair) {
      best = {std::move(cand), std::move(phi)};
      have = true;
    }
  }
  return best;
}

}  // namespace stz
