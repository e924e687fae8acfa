#pragma once

#include <string>
#include <vector>

#include "stz/numeric.hpp"
#include "stz/origami.hpp"

namespace stz {

// Exact value of the sum of nonnegative Lyapunov exponents of an origami:
// (1/12) sum k(k+2)/(k+1) over zero orders, plus the average over the
// SL(2,Z)-orbit of the sum of reciprocal cycle lengths of the horizontal
// permutations.
struct EkzReport {
  Rat stratum_term;
  Rat cycle_term;
  Rat total;
  std::size_t orbit_size = 0;
};

EkzReport ekz_sum(const Origami& o, std::size_t orbit_cap = 100000);
EkzReport ekz_sum(const OrbitGraph& orbit_graph);

struct ExponentEntry {
  Rat exponent;
  int multiplicity = 1;
  std::string label;  // provenance of the contributed value
};

// Solves total = sum(e_i m_i) + lambda * residual_multiplicity for lambda.
// Errors: ZeroMultiplicity.
Rat residual_exponent(const Rat& total, const std::vector<ExponentEntry>& known,
                      int residual_multiplicity);

struct SpectrumLedger {
  Rat total;
  std::vector<ExponentEntry> known;
  int residual_multiplicity = 0;
  Rat residual;
};

SpectrumLedger solve_ledger(const Rat& total, std::vector<ExponentEntry> known,
                            int residual_multiplicity);

}  // namespace stz
