#pragma once

#include <string>
#include <vector>

#include "stz/group.hpp"
#include "stz/origami.hpp"

namespace stz {

// A finite group together with printable element names, for CLI recipes and
// cocycle constructions.
struct NamedGroup {
  FiniteGroup group;
  std::vector<std::string> names;  // per element index

  // Errors: Error when the name is unknown.
  int named(const std::string& name) const;
};

// Quaternion group {1, -1, i, -i, j, -j, k, -k} acting on itself by left
// translation, so that group.mult matches the quaternion product.
NamedGroup quaternion_group();

// Heisenberg group of order 27 (exponent 3), generators named x and y with
// central commutator z.
NamedGroup heisenberg_group_27();

NamedGroup cyclic_group(int n);

// Generalized quaternion group of order 16; its commutator subgroup is cyclic
// of order 4.
NamedGroup quaternion_group_16();

// Named builtin by string: "q8", "heis27", "q16", "z<N>". Errors: Error.
NamedGroup builtin_group(const std::string& name);

// Three-square L-shaped origami h = (1,2), v = (1,3): genus 2, stratum H(2).
Origami builtin_l0();

// 24-square quaternionic cover of the L origami, by the explicit pair of
// permutations.
Origami builtin_ltilde();

// The same cover rebuilt from its defining cocycle: one copy of the L origami
// per element of the quaternion group, right edges glued through j and top
// edges through i.
Origami builtin_ltilde_from_cocycle();

// Regular origami of the quaternion group with generators (i, j): 8 squares,
// genus 3.
Origami builtin_q8_regular();

// Named builtin origami: "L0", "Ltilde", "q8regular", "torus". Errors: Error.
Origami builtin_origami(const std::string& name);
std::vector<std::string> builtin_origami_names();

}  // namespace stz
