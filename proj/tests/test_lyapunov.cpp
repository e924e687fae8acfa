#include <random>

#include "doctest.h"
#include "stz/builtins.hpp"
#include "stz/lyapunov.hpp"

using namespace stz;

TEST_CASE("exponent sum of the one-square torus") {
  EkzReport r = ekz_sum(Origami(Permutation(1), Permutation(1)));
  CHECK(r.orbit_size == 1);
  CHECK(r.stratum_term == 0);
  CHECK(r.cycle_term == 1);
  CHECK(r.total == 1);
}

TEST_CASE("exponent sum of the L origami is 4/3") {
  EkzReport r = ekz_sum(builtin_l0());
  CHECK(r.orbit_size == 3);
  CHECK(r.stratum_term == rat(2, 9));
  CHECK(r.cycle_term == rat(10, 9));
  CHECK(r.total == rat(4, 3));
}

TEST_CASE("exponent sum of the quaternionic cover is 3") {
  EkzReport r = ekz_sum(builtin_ltilde());
  CHECK(r.orbit_size == 12);
  CHECK(r.stratum_term == rat(35, 18));
  CHECK(r.cycle_term == rat(19, 18));
  CHECK(r.total == 3);
}

TEST_CASE("the report is the same from every orbit node") {
  OrbitGraph g = orbit(builtin_l0());
  EkzReport base = ekz_sum(g);
  for (const Origami& node : g.nodes) {
    EkzReport r = ekz_sum(node);
    CHECK(r.stratum_term == base.stratum_term);
    CHECK(r.cycle_term == base.cycle_term);
    CHECK(r.total == base.total);
  }
}

TEST_CASE("total is at least 1 for random origamis") {
  std::mt19937_64 rng(211);
  int done = 0;
  while (done < 15) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> himg(n), vimg(n);
    for (int i = 0; i < n; ++i) himg[i] = vimg[i] = i;
    std::shuffle(himg.begin(), himg.end(), rng);
    std::shuffle(vimg.begin(), vimg.end(), rng);
    PermPair pair((Permutation(himg)), Permutation(vimg));
    if (!is_transitive(pair)) continue;
    ++done;
    EkzReport r = ekz_sum(Origami(pair), 50000);
    CHECK(r.total >= 1);
    CHECK(r.cycle_term > 0);
    CHECK(r.stratum_term >= 0);
    CHECK(r.total == r.stratum_term + r.cycle_term);
  }
}

TEST_CASE("residual exponent bookkeeping") {
  // the quaternionic cover's ledger: 3 = 1 + 4*(1/3) + 4*lambda + 2*0
  Rat lambda = residual_exponent(
      rat(3), {{rat(1), 1, "tautological"}, {rat(1, 3), 4, "cited"}, {rat(0), 2, "forced zeros"}},
      4);
  CHECK(lambda == rat(1, 6));

  CHECK(residual_exponent(rat(1), {{rat(1), 1, ""}}, 1) == 0);
  CHECK(residual_exponent(rat(4, 3), {{rat(1), 1, ""}}, 1) == rat(1, 3));
  CHECK_THROWS_AS(residual_exponent(rat(1), {}, 0), ZeroMultiplicity);

  SpectrumLedger ledger = solve_ledger(rat(3), {{rat(1), 1, "tautological"}}, 8);
  CHECK(ledger.residual == rat(1, 4));
  Rat reconstructed = ledger.residual * ledger.residual_multiplicity;
  for (const ExponentEntry& e : ledger.known) reconstructed += e.exponent * e.multiplicity;
  CHECK(reconstructed == ledger.total);
}
