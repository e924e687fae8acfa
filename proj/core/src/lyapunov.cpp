#include "stz/lyapunov.hpp"

namespace stz {

EkzReport ekz_sum(const Origami& o, std::size_t orbit_cap) {
  return ekz_sum(orbit(o, orbit_cap));
}

EkzReport ekz_sum(const OrbitGraph& orbit_graph) {
  EkzReport report;
  report.orbit_size = orbit_graph.size();
  report.stratum_term = 0;
  for (int k : stratum(orbit_graph.nodes[0]).orders)
    report.stratum_term += rat(static_cast<long>(k) * (k + 2), 12L * (k + 1));
  report.cycle_term = 0;
  for (const Origami& node : orbit_graph.nodes)
    for (int len : node.h().cycle_type()) report.cycle_term += rat(1, len);
  report.cycle_term /= rat(static_cast<long>(report.orbit_size));
  report.total = report.stratum_term + report.cycle_term;
  return report;
}

Rat residual_exponent(const Rat& total, const std::vector<ExponentEntry>& known,
                      int residual_multiplicity) {
  if (residual_multiplicity <= 0) throw ZeroMultiplicity("residual multiplicity must be positive");
  Rat rest = total;
  for (const ExponentEntry& entry : known) rest -= entry.exponent * entry.multiplicity;
  Rat lambda = rest / residual_multiplicity;
  lambda.canonicalize();
  return lambda;
}

SpectrumLedger solve_ledger(const Rat& total, std::vector<ExponentEntry> known,
                            int residual_multiplicity) {
  SpectrumLedger ledger;
  ledger.total = total;
  ledger.known = std::move(known);
  ledger.residual_multiplicity = residual_multiplicity;
  ledger.residual = residual_exponent(total, ledger.known, residual_multiplicity);
  return ledger;
}

}  // namespace stz
