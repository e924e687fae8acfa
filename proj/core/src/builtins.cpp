#include "stz/builtins.hpp"

#include <algorithm>

#include "stz/regular.hpp"

namespace stz {

int NamedGroup::named(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error("no element named '" + name + "'");
  return static_cast<int>(it - names.begin());
}

namespace {

// Builds the group of left translations of an abstract group given by its
// multiplication map, keeping element names attached. The left-translation map
// is a homomorphism, so FiniteGroup::mult agrees with the abstract product.
template <typename MultFn>
NamedGroup from_abstract(int order, MultFn mult, const std::vector<int>& generator_elements,
                         const std::vector<std::string>& abstract_names) {
  std::vector<Permutation> gens;
  for (int g : generator_elements) {
    std::vector<int> img(order);
    for (int x = 0; x < order; ++x) img[x] = mult(g, x);
    gens.emplace_back(img);
  }
  NamedGroup out;
  out.group = FiniteGroup::from_generators(gens);
  out.names.resize(out.group.order());
  for (int t = 0; t < out.group.order(); ++t)
    out.names[t] = abstract_names[out.group.element(t)(0)];  // image of the identity
  return out;
}

}  // namespace

NamedGroup quaternion_group() {
  // elements 2*axis + (sign < 0) with axes 1, i, j, k
  auto mul = [](int a, int b) {
    static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    // sign of the axis product: i*j = +k, j*i = -k, i*i = -1, ...
    static const int sign_mul[4][4] = {{+1, +1, +1, +1},
                                       {+1, -1, +1, -1},
                                       {+1, -1, -1, +1},
                                       {+1, +1, -1, -1}};
    int ax = a / 2, bx = b / 2;
    int sign = ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1) * sign_mul[ax][bx];
    return 2 * axis_mul[ax][bx] + (sign < 0 ? 1 : 0);
  };
  return from_abstract(8, mul, {2, 4}, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

NamedGroup heisenberg_group_27() {
  auto pack = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };
  auto mul = [pack](int x, int y) {
    int a1 = x / 9, b1 = (x / 3) % 3, c1 = x % 3;
    int a2 = y / 9, b2 = (y / 3) % 3, c2 = y % 3;
    return pack((a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2 + a1 * b2) % 3);
  };
  std::vector<std::string> names(27);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        names[pack(a, b, c)] =
            "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  names[pack(0, 0, 0)] = "1";
  names[pack(1, 0, 0)] = "x";
  names[pack(0, 1, 0)] = "y";
  names[pack(0, 0, 1)] = "z";
  return from_abstract(27, mul, {pack(1, 0, 0), pack(0, 1, 0)}, names);
}

NamedGroup cyclic_group(int n) {
  auto mul = [n](int a, int b) { return (a + b) % n; };
  std::vector<std::string> names(n);
  for (int k = 0; k < n; ++k) names[k] = "g^" + std::to_string(k);
  names[0] = "1";
  if (n > 1) names[1] = "g";
  return from_abstract(n, mul, {n > 1 ? 1 : 0}, names);
}

NamedGroup quaternion_group_16() {
  // a^k b^e, k mod 8, e mod 2, with b a b^-1 = a^-1 and b^2 = a^4
  auto pack = [](int k, int e) { return 2 * k + e; };
  auto mul = [pack](int x, int y) {
    int k1 = x / 2, e1 = x % 2, k2 = y / 2, e2 = y % 2;
    int k = e1 == 0 ? (k1 + k2) % 8 : (k1 - k2 + 8) % 8;
    int e = (e1 + e2) % 2;
    if (e1 == 1 && e2 == 1) k = (k + 4) % 8;
    return pack(k, e);
  };
  std::vector<std::string> names(16);
  for (int k = 0; k < 8; ++k)
    for (int e = 0; e < 2; ++e) {
      std::string n = e ? (k ? "a^" + std::to_string(k) + "*b" : "b") : "a^" + std::to_string(k);
      names[pack(k, e)] = n;
    }
  names[pack(0, 0)] = "1";
  names[pack(1, 0)] = "a";
  return from_abstract(16, mul, {pack(1, 0), pack(0, 1)}, names);
}

NamedGroup builtin_group(const std::string& name) {
  if (name == "q8") return quaternion_group();
  if (name == "heis27") return heisenberg_group_27();
  if (name == "q16") return quaternion_group_16();
  if (name.size() > 1 && name[0] == 'z') return cyclic_group(std::stoi(name.substr(1)));
  throw Error("unknown builtin group '" + name + "' (try q8, heis27, q16, z<N>)");
}

Origami builtin_l0() {
  return Origami(Permutation::parse_cycles("(1,2)", 3), Permutation::parse_cycles("(1,3)", 3));
}

Origami builtin_ltilde() {
  return Origami(
      Permutation::parse_cycles(
          "(1,2,13,14,7,8,19,20)(3,15,9,21)(4,5,22,23,10,11,16,17)(6,24,12,18)", 24),
      Permutation::parse_cycles(
          "(1,3,4,6,7,9,10,12)(2,5,8,11)(13,15,16,18,19,21,22,24)(14,17,20,23)", 24));
}

Origami builtin_ltilde_from_cocycle() {
  NamedGroup q8 = quaternion_group();
  int one = q8.named("1"), i = q8.named("i"), j = q8.named("j");
  // rightmost square of each row carries j, topmost square of each column i
  std::vector<int> hcoc = {one, j, j};
  std::vector<int> vcoc = {one, i, i};
  return cover_from_cocycle(builtin_l0(), q8.group, hcoc, vcoc);
}

Origami builtin_q8_regular() {
  NamedGroup q8 = quaternion_group();
  RegularOrigamiSpec spec = make_regular_spec(q8.group, q8.named("i"), q8.named("j"));
  return regular_origami(spec);
}

Origami builtin_origami(const std::string& name) {
  if (name == "L0") return builtin_l0();
  if (name == "Ltilde") return builtin_ltilde();
  if (name == "q8regular") return builtin_q8_regular();
  if (name == "torus") return Origami(Permutation(1), Permutation(1));
  throw Error("unknown builtin origami '" + name + "'");
}

std::vector<std::string> builtin_origami_names() { return {"L0", "Ltilde", "q8regular", "torus"}; }

}  // namespace stz
