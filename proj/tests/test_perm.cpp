#include <algorithm>
#include <random>

#include "doctest.h"
#include "stz/perm.hpp"

using namespace stz;

namespace {

Permutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// all permutations of degree n, for brute-force oracles
std::vector<Permutation> all_perms(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("parse_cycles basics") {
  Permutation p = Permutation::parse_cycles("(1,2)(3)", 3);
  CHECK(p.images() == std::vector<int>({1, 0, 2}));
  CHECK(Permutation::parse_cycles("", 4) == Permutation(4));
  CHECK(Permutation::parse_cycles(" ( 1 , 2 ) ", 2).cycle_string() == "(1,2)");

  CHECK_THROWS_AS(Permutation::parse_cycles("(1,1)", 2), RepeatedPoint);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1)(2,1)", 3), RepeatedPoint);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,5)", 3), PointOutOfRange);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,2", 3), MalformedSyntax);
  CHECK_THROWS_AS(Permutation::parse_cycles("1,2)", 3), MalformedSyntax);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,,2)", 3), MalformedSyntax);
}

TEST_CASE("parse of the 24-square horizontal permutation") {
  Permutation h = Permutation::parse_cycles(
      "(1,2,13,14,7,8,19,20)(3,15,9,21)(4,5,22,23,10,11,16,17)(6,24,12,18)", 24);
  CHECK(h.cycle_type() == std::vector<int>({8, 8, 4, 4}));
  CHECK(h(0) == 1);   // 1 -> 2
  CHECK(h(19) == 0);  // 20 -> 1
}

TEST_CASE("parse/format round trip for random permutations") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Permutation p = random_perm(rng, n);
    CHECK(Permutation::parse_cycles(p.cycle_string(), n) == p);
  }
}

TEST_CASE("compose follows (p*q)(x) = p(q(x))") {
  Permutation t12 = Permutation::parse_cycles("(1,2)", 3);
  CHECK(compose(t12, Permutation(3)) == t12);
  CHECK(compose(t12, t12) == Permutation(3));
  CHECK_THROWS_AS(compose(t12, Permutation(4)), DegreeMismatch);
}

TEST_CASE("commutator of (1,2) and (1,3) is the 3-cycle (1,2,3)") {
  Permutation h = Permutation::parse_cycles("(1,2)", 3);
  Permutation v = Permutation::parse_cycles("(1,3)", 3);
  Permutation c = commutator(h, v);
  // brute force h v h^-1 v^-1 through the image tables
  Permutation expected = compose(h, compose(v, compose(h.inverse(), v.inverse())));
  CHECK(c == expected);
  CHECK(c == Permutation::parse_cycles("(1,2,3)", 3));
  CHECK(commutator(v, v) == Permutation(3));
}

TEST_CASE("commutator of the 24-square pair has four 6-cycles") {
  Permutation h = Permutation::parse_cycles(
      "(1,2,13,14,7,8,19,20)(3,15,9,21)(4,5,22,23,10,11,16,17)(6,24,12,18)", 24);
  Permutation v = Permutation::parse_cycles(
      "(1,3,4,6,7,9,10,12)(2,5,8,11)(13,15,16,18,19,21,22,24)(14,17,20,23)", 24);
  CHECK(commutator(h, v).cycle_type() == std::vector<int>({6, 6, 6, 6}));
}

TEST_CASE("commutator cycle type is conjugation invariant") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Permutation h = random_perm(rng, n), v = random_perm(rng, n), phi = random_perm(rng, n);
    CHECK(commutator(h, v).cycle_type() ==
          commutator(conjugate(phi, h), conjugate(phi, v)).cycle_type());
  }
}

TEST_CASE("cycle types") {
  CHECK(Permutation(3).cycle_type() == std::vector<int>({1, 1, 1}));
  Permutation m10 = Permutation::parse_cycles(
      "(1,24,11)(2,4,21)(3,14,16)(5,7,18)(6,23,13)(8,10,15)(12,17,19)(20,22,9)", 24);
  CHECK(m10.cycle_type() == std::vector<int>(8, 3));
}

TEST_CASE("canonical_pair: identity pair and error cases") {
  PermPair one(Permutation(1), Permutation(1));
  CHECK(canonical_pair(one).pair == one);
  PermPair split(Permutation::parse_cycles("(1,2)", 4), Permutation::parse_cycles("(3,4)", 4));
  CHECK_THROWS_AS(canonical_pair(split), NotTransitive);
}

TEST_CASE("canonical_pair is constant on conjugacy classes (brute force oracle)") {
  Permutation h0 = Permutation::parse_cycles("(1,2)", 3);
  Permutation v0 = Permutation::parse_cycles("(1,3)", 3);
  PermPair base(h0, v0);
  PermPair canon = canonical_pair(base).pair;
  for (const Permutation& phi : all_perms(3)) {
    PermPair conj(conjugate(phi, h0), conjugate(phi, v0));
    CHECK(canonical_pair(conj).pair == canon);
  }
}

TEST_CASE("canonical_pair is idempotent and separates conjugacy classes") {
  std::mt19937_64 rng(47);
  int done = 0;
  while (done < 40) {
    int n = 2 + static_cast<int>(rng() % 5);  // degree <= 6 keeps the oracle cheap
    PermPair p(random_perm(rng, n), random_perm(rng, n));
    if (!is_transitive(p)) continue;
    ++done;
    CanonicalPair c = canonical_pair(p);
    CHECK(canonical_pair(c.pair).pair == c.pair);
    CHECK(PermPair(conjugate(c.relabeling, p.h), conjugate(c.relabeling, p.v)) == c.pair);

    // oracle: every simultaneous conjugate canonicalizes to the same pair
    for (const Permutation& phi : all_perms(n)) {
      PermPair conj(conjugate(phi, p.h), conjugate(phi, p.v));
      CHECK(canonical_pair(conj).pair == c.pair);
    }

    // a second random pair is conjugate iff the canonical forms agree
    PermPair q(random_perm(rng, n), random_perm(rng, n));
    if (!is_transitive(q)) continue;
    bool conjugate_pairs = false;
    for (const Permutation& phi : all_perms(n))
      conjugate_pairs =
          conjugate_pairs || PermPair(conjugate(phi, q.h), conjugate(phi, q.v)) == p;
    CHECK(conjugate_pairs == (canonical_pair(q).pair == c.pair));
  }
}
