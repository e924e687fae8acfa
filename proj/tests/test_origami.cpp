#include <random>
#include <set>

#include "doctest.h"
#include "stz/builtins.hpp"
#include "stz/io.hpp"
#include "stz/origami.hpp"

using namespace stz;

namespace {

Origami torus() { return Origami(Permutation(1), Permutation(1)); }

Origami random_origami(std::mt19937_64& rng, int max_degree) {
  for (;;) {
    int n = 2 + static_cast<int>(rng() % (max_degree - 1));
    std::vector<int> himg(n), vimg(n);
    for (int i = 0; i < n; ++i) himg[i] = vimg[i] = i;
    std::shuffle(himg.begin(), himg.end(), rng);
    std::shuffle(vimg.begin(), vimg.end(), rng);
    PermPair pair((Permutation(himg)), Permutation(vimg));
    if (is_transitive(pair)) return Origami(pair);
  }
}

}  // namespace

TEST_CASE("origami validation") {
  CHECK_NOTHROW(builtin_l0());
  CHECK_NOTHROW(torus());
  CHECK_THROWS_AS(Origami(Permutation::parse_cycles("(1,2)", 4),
                          Permutation::parse_cycles("(3,4)", 4)),
                  NotTransitive);
}

TEST_CASE("strata of the named examples") {
  StratumSignature l0 = stratum(builtin_l0());
  CHECK(l0.orders == std::vector<int>({2}));
  CHECK(l0.genus == 2);
  CHECK(l0.to_string() == "H(2)");

  StratumSignature lt = stratum(builtin_ltilde());
  CHECK(lt.orders == std::vector<int>({5, 5, 5, 5}));
  CHECK(lt.genus == 11);

  StratumSignature t = stratum(torus());
  CHECK(t.orders.empty());
  CHECK(t.genus == 1);
}

TEST_CASE("sum of zero orders is 2g - 2") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    StratumSignature sig = stratum(random_origami(rng, 10));
    int total = 0;
    for (int k : sig.orders) total += k;
    CHECK(total == 2 * sig.genus - 2);
  }
}

TEST_CASE("generator action on the base L origami") {
  Origami l0 = builtin_l0();
  Origami t = apply_generator(l0, Sl2Letter::T);
  CHECK(t.h() == l0.h());
  CHECK(t.v() == Permutation::parse_cycles("(1,2,3)", 3));

  CHECK(apply_generator(t, Sl2Letter::Tinv).pair() == l0.pair());
  CHECK(apply_generator(apply_generator(l0, Sl2Letter::S), Sl2Letter::Sinv).pair() == l0.pair());

  // T^2 returns to the same origami class (h0 is an involution)
  Origami t2 = apply_generator(t, Sl2Letter::T);
  CHECK(canonical_pair(t2.pair()).pair == canonical_pair(l0.pair()).pair);
}

TEST_CASE("orbit sizes") {
  CHECK(orbit(torus()).size() == 1);
  CHECK(orbit(builtin_l0()).size() == 3);

  OrbitGraph lt = orbit(builtin_ltilde());
  CHECK(lt.size() == 12);
  CHECK(lt.t_cycle_sizes() == std::vector<int>({4, 4, 2, 1, 1}));
  CHECK(lt.s_cycle_sizes() == std::vector<int>({4, 4, 2, 1, 1}));

  // T and S act invertibly on the finite orbit
  for (const std::vector<int>* edges : {&lt.t_edges, &lt.s_edges}) {
    std::vector<bool> hit(lt.size(), false);
    for (int target : *edges) {
      CHECK(!hit[target]);
      hit[target] = true;
    }
  }
}

TEST_CASE("orbit of the L origami matches a brute-force conjugacy enumeration") {
  // independent oracle: BFS over raw pairs, deduplicating by testing all 3!
  // simultaneous conjugations instead of canonical forms
  std::vector<Permutation> phis;
  {
    std::vector<int> img = {0, 1, 2};
    do {
      phis.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  auto same_origami = [&](const PermPair& a, const PermPair& b) {
    for (const Permutation& phi : phis)
      if (PermPair(conjugate(phi, a.h), conjugate(phi, a.v)) == b) return true;
    return false;
  };
  std::vector<PermPair> seen = {builtin_l0().pair()};
  for (size_t head = 0; head < seen.size(); ++head) {
    for (Sl2Letter l : {Sl2Letter::T, Sl2Letter::S}) {
      PermPair next = apply_generator(Origami(seen[head]), l).pair();
      bool known = false;
      for (const PermPair& p : seen) known = known || same_origami(next, p);
      if (!known) seen.push_back(next);
    }
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("orbit budget") {
  CHECK_THROWS_AS(orbit(builtin_ltilde(), 5), OrbitBudgetExceeded);
}

TEST_CASE("stratum is constant along the orbit") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    Origami o = random_origami(rng, 6);
    StratumSignature sig = stratum(o);
    OrbitGraph g = orbit(o, 50000);
    for (const Origami& node : g.nodes) CHECK(stratum(node) == sig);
  }
}

TEST_CASE("automorphism groups of the named examples") {
  CHECK(automorphisms(builtin_l0()).size() == 1);
  CHECK(automorphisms(torus()).size() == 1);

  std::vector<Permutation> auts = automorphisms(builtin_ltilde());
  CHECK(auts.size() == 8);
  int involutions = 0;
  for (const Permutation& a : auts)
    if (!a.is_identity() && a.order() == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("automorphisms of the L origami: brute force over S_3") {
  Origami l0 = builtin_l0();
  std::vector<int> img = {0, 1, 2};
  int count = 0;
  do {
    Permutation phi(img);
    if (compose(phi, l0.h()) == compose(l0.h(), phi) &&
        compose(phi, l0.v()) == compose(l0.v(), phi))
      ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  CHECK(count == 1);
}

TEST_CASE("automorphisms form a group") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    Origami o = random_origami(rng, 8);
    std::vector<Permutation> auts = automorphisms(o);
    std::set<Permutation> set(auts.begin(), auts.end());
    for (const Permutation& a : auts) {
      CHECK(set.count(a.inverse()) == 1);
      for (const Permutation& b : auts) CHECK(set.count(compose(a, b)) == 1);
    }
  }
}

TEST_CASE("cocycle covers") {
  NamedGroup q8 = quaternion_group();

  SUBCASE("the quaternionic cover agrees with the explicit 24-square pair") {
    Origami cover = builtin_ltilde_from_cocycle();
    CHECK(cover.squares() == 24);
    CHECK(canonical_pair(cover.pair()).pair == canonical_pair(builtin_ltilde().pair()).pair);
  }

  SUBCASE("constant generator cocycles over the torus give the regular origami") {
    std::vector<int> hcoc = {q8.named("i")};
    std::vector<int> vcoc = {q8.named("j")};
    Origami cover = cover_from_cocycle(torus(), q8.group, hcoc, vcoc);
    CHECK(cover.squares() == 8);
    CHECK(canonical_pair(cover.pair()).pair ==
          canonical_pair(builtin_q8_regular().pair()).pair);
  }

  SUBCASE("the trivial group returns the base itself") {
    NamedGroup triv = cyclic_group(1);
    Origami base = builtin_l0();
    Origami cover = cover_from_cocycle(base, triv.group, {0, 0, 0}, {0, 0, 0});
    CHECK(cover.pair() == base.pair());
  }

  SUBCASE("trivial cocycles of a nontrivial group disconnect the cover") {
    int one = q8.named("1");
    CHECK_THROWS_AS(
        cover_from_cocycle(builtin_l0(), q8.group, {one, one, one}, {one, one, one}),
        NotTransitive);
  }
}

TEST_CASE("veech group membership") {
  Origami lt = builtin_ltilde();
  CHECK(veech_contains(lt, Sl2Mat{4, -3, 3, -2}));
  CHECK(veech_contains(lt, Sl2Mat{10, 27, -3, -8}));
  CHECK(veech_contains(lt, Sl2Mat{-8, -3, 27, 10}));
  CHECK(veech_contains(lt, Sl2Mat{}));

  Origami l0 = builtin_l0();
  CHECK(!veech_contains(l0, Sl2Mat::letter(Sl2Letter::T)));
  CHECK(veech_contains(l0, Sl2Mat{}));
  CHECK_THROWS_AS(veech_contains(l0, Sl2Mat{1, 0, 0, -1}), NotUnimodular);
}

TEST_CASE("origami file round trip and orbit exports") {
  Origami lt = builtin_ltilde();
  CHECK(parse_origami(format_origami(lt)).pair() == lt.pair());
  CHECK_THROWS_AS(parse_origami("squares: 2\nh: (1,2)\n"), MalformedSyntax);

  OrbitGraph g = orbit(builtin_l0());
  std::string dot = orbit_to_dot(g);
  CHECK(dot.find("style=solid") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  std::string json = orbit_to_json(g);
  CHECK(json.find("\"schema_version\"") != std::string::npos);
  CHECK(json.find("\"t_edges\"") != std::string::npos);
}
