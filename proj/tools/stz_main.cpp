// Command line surface: origami invariants, orbits, exact Lyapunov sums,
// character tables, multiplicity reports, homology decompositions, affine
// monodromy, and the end-to-end SO*(6) verification recipe.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stz/builtins.hpp"
#include "stz/chartable.hpp"
#include "stz/homology.hpp"
#include "stz/io.hpp"
#include "stz/lyapunov.hpp"
#include "stz/monodromy.hpp"
#include "stz/origami.hpp"
#include "stz/regular.hpp"
#include "stz/sostar.hpp"

namespace {

constexpr int kSchemaVersion = 1;

stz::Origami load_origami(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) return stz::builtin_origami(arg.substr(8));
  std::ifstream probe(arg);
  if (!probe) {
    // fall back to builtin names so `stz info Ltilde` works
    try {
      return stz::builtin_origami(arg);
    } catch (const stz::Error&) {
    }
    throw stz::Error("cannot open '" + arg + "'");
  }
  return stz::read_origami_file(arg);
}

stz::NamedGroup load_group(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return stz::builtin_group(arg);
  // group file: "degree: N" then one "gen: <cycles>" line per generator
  std::string line;
  int degree = -1;
  std::vector<stz::Permutation> gens;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "degree:") {
      ls >> degree;
    } else if (key == "gen:") {
      std::string rest;
      std::getline(ls, rest);
      if (degree < 1) throw stz::Error("group file: degree must come first");
      gens.push_back(stz::Permutation::parse_cycles(rest, degree));
    } else {
      throw stz::MalformedSyntax("group file: unknown key '" + key + "'");
    }
  }
  if (gens.empty()) throw stz::Error("group file contains no generators");
  stz::NamedGroup named;
  named.group = stz::FiniteGroup::from_generators(gens);
  for (int t = 0; t < named.group.order(); ++t)
    named.names.push_back("e" + std::to_string(t));
  for (size_t g = 0; g < named.group.generators().size(); ++g)
    named.names[named.group.generators()[g]] = "g" + std::to_string(g);
  return named;
}

// word syntax: name[^exp] joined by '*', e.g. "i", "x*y^2", "a^-1*b"
int parse_word(const stz::NamedGroup& g, const std::string& word) {
  int acc = 0;
  std::stringstream ss(word);
  std::string token;
  while (std::getline(ss, token, '*')) {
    long exp = 1;
    std::string name = token;
    auto caret = token.find('^');
    if (caret != std::string::npos) {
      name = token.substr(0, caret);
      exp = std::stol(token.substr(caret + 1));
    }
    int base = g.named(name);
    if (exp < 0) {
      base = g.group.inverse(base);
      exp = -exp;
    }
    for (long k = 0; k < exp; ++k) acc = g.group.mult(acc, base);
  }
  return acc;
}

std::string rat_line(const stz::Rat& r) {
  return stz::to_string(r) + " (" + stz::to_decimal(r) + ")";
}

int cmd_info(const std::string& path) {
  stz::Origami o = load_origami(path);
  stz::StratumSignature sig = stz::stratum(o);
  std::cout << "squares: " << o.squares() << "\n";
  std::cout << "stratum " << sig.to_string() << ", genus " << sig.genus << "\n";
  std::cout << "automorphisms: " << stz::automorphisms(o).size() << "\n";
  return 0;
}

int cmd_orbit(const std::string& path, const std::string& format, std::size_t cap) {
  stz::Origami o = load_origami(path);
  stz::OrbitGraph g = stz::orbit(o, cap);
  if (format == "dot") {
    std::cout << stz::orbit_to_dot(g);
    return 0;
  }
  if (format == "json") {
    std::cout << stz::orbit_to_json(g) << "\n";
    return 0;
  }
  std::cout << "orbit size: " << g.size() << "\n";
  auto print_sizes = [](const char* name, const std::vector<int>& sizes) {
    std::cout << name << "-cycle sizes:";
    for (int s : sizes) std::cout << " " << s;
    std::cout << "\n";
  };
  print_sizes("T", g.t_cycle_sizes());
  print_sizes("S", g.s_cycle_sizes());
  return 0;
}

int cmd_ekz(const std::string& path, std::size_t cap) {
  stz::Origami o = load_origami(path);
  stz::EkzReport r = stz::ekz_sum(o, cap);
  std::cout << "orbit size: " << r.orbit_size << "\n";
  std::cout << "stratum term: " << rat_line(r.stratum_term) << "\n";
  std::cout << "cycle term:   " << rat_line(r.cycle_term) << "\n";
  std::cout << "total:        " << rat_line(r.total) << "\n";
  return 0;
}

int cmd_chartable(const std::string& group_arg, const std::string& format, long cap) {
  stz::NamedGroup named = load_group(group_arg);
  stz::CharacterTable table = stz::character_table(named.group, cap);
  const auto& classes = named.group.classes();
  if (format == "json") {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["order"] = named.group.order();
    j["exponent"] = named.group.exponent();
    nlohmann::json cls = nlohmann::json::array();
    for (int c = 0; c < classes.count(); ++c)
      cls.push_back({{"size", classes.size(c)},
                     {"representative", named.names[classes.representative[c]]}});
    j["classes"] = std::move(cls);
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < table.class_count(); ++r) {
      nlohmann::json row;
      row["dim"] = table.rows[r].dim;
      row["fs_indicator"] = stz::fs_indicator(table, r);
      nlohmann::json values = nlohmann::json::array();
      for (const stz::Cyclo& v : table.rows[r].values) values.push_back(v.to_string());
      row["values"] = std::move(values);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group order " << named.group.order() << ", exponent " << named.group.exponent()
            << ", " << classes.count() << " classes\n";
  std::cout << "classes:";
  for (int c = 0; c < classes.count(); ++c)
    std::cout << " [" << named.names[classes.representative[c]] << "|" << classes.size(c) << "]";
  std::cout << "\n";
  for (int r = 0; r < table.class_count(); ++r) {
    std::cout << "chi_" << r << " (dim " << table.rows[r].dim
              << ", fs " << stz::fs_indicator(table, r) << "):";
    for (const stz::Cyclo& v : table.rows[r].values) std::cout << " " << v.to_string();
    std::cout << "\n";
  }
  return 0;
}

int cmd_mult(const std::string& group_arg, const std::string& hw, const std::string& vw) {
  stz::NamedGroup named = load_group(group_arg);
  int h = parse_word(named, hw), v = parse_word(named, vw);
  stz::RegularOrigamiSpec spec = stz::make_regular_spec(named.group, h, v);
  stz::CharacterTable table = stz::character_table(named.group);
  std::cout << "group order " << named.group.order() << ", commutator order "
            << spec.commutator_order << ", genus " << stz::genus_regular(spec) << "\n";
  std::cout << "row  dim  top  holom  delta  m\n";
  for (const stz::MultiplicityRow& row : stz::multiplicity_report(spec, table)) {
    std::cout << "chi_" << row.row << "  " << row.dim << "    " << row.top.get_str() << "    "
              << row.holom.get_str() << "      " << stz::to_string(row.delta) << "    (";
    for (size_t i = 0; i < row.m.size(); ++i)
      std::cout << row.m[i].get_str() << (i + 1 < row.m.size() ? "," : "");
    std::cout << ")\n";
  }
  return 0;
}

int cmd_homology(const std::string& path, const std::string& format) {
  stz::Origami o = load_origami(path);
  stz::HomologySpace space = stz::absolute_h1(o);
  stz::IsotypicDecomposition dec = stz::isotypic_decomposition(space);
  if (format == "json") {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["rank"] = space.rank();
    j["genus"] = space.genus;
    j["stratum"] = stz::stratum(o).to_string();
    j["zero_rank"] = space.zero_basis.cols();
    j["intersection"] = nlohmann::json::parse(stz::matrix_to_json(space.form));
    nlohmann::json pieces = nlohmann::json::array();
    for (const stz::IsotypicPiece& p : dec.pieces)
      pieces.push_back({{"rows", p.rows},
                        {"tag", stz::to_string(p.tag)},
                        {"dim", p.dim()},
                        {"multiplicity", p.multiplicity}});
    j["pieces"] = std::move(pieces);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "stratum " << stz::stratum(o).to_string() << ", genus " << space.genus << "\n";
  std::cout << "H1 rank " << space.rank() << " = 2 (tautological) + " << space.zero_basis.cols()
            << " (zero part)\n";
  std::cout << "deck group order " << dec.aut.order() << "\n";
  for (size_t i = 0; i < dec.pieces.size(); ++i) {
    const stz::IsotypicPiece& p = dec.pieces[i];
    std::cout << "piece " << i << ": rows {";
    for (size_t r = 0; r < p.rows.size(); ++r)
      std::cout << p.rows[r] << (r + 1 < p.rows.size() ? "," : "");
    std::cout << "} tag " << stz::to_string(p.tag) << " dim " << p.dim() << " multiplicity "
              << p.multiplicity << "\n";
  }
  return 0;
}

int cmd_monodromy(const std::string& path, const std::string& matrix_arg) {
  stz::Origami o = load_origami(path);
  stz::Sl2Mat m = stz::Sl2Mat::parse(matrix_arg);
  stz::Sl2zWord word = stz::sl2z_word(m);
  std::cout << "word:";
  for (stz::Sl2Letter l : word.letters) std::cout << " " << stz::to_string(l);
  std::cout << "\n";
  stz::HomologySpace space = stz::absolute_h1(o);
  std::vector<stz::MonodromyMatrix> lifts = stz::affine_lifts(space, m);
  if (lifts.empty()) {
    std::cout << "not in the Veech group: the word image is not simultaneously conjugate back\n";
    return 0;
  }
  stz::IsotypicDecomposition dec = stz::isotypic_decomposition(space);
  int qp = dec.quaternionic_piece();
  std::cout << "lifts: " << lifts.size() << "\n";
  for (const stz::MonodromyMatrix& lift : lifts) {
    std::cout << "lift " << lift.lift_index << ": char poly "
              << stz::poly_to_string(stz::char_poly(lift.matrix));
    if (qp >= 0) {
      stz::IntMat w = stz::restrict_to(lift.matrix, dec.pieces[qp].basis);
      std::cout << " | quaternionic piece: " << stz::poly_to_string(stz::char_poly(w));
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_sostar(int n, int samples, double tol, unsigned long seed) {
  std::cout << "lie_algebra_dim(" << n << ") = " << stz::lie_algebra_dim(n) << "\n";
  // h is a traceless hermitian involution, so its signature is balanced;
  // reported, not asserted against any normalization
  stz::CMat h = stz::form_h(n);
  bool involution = (h * h - stz::CMat::identity(2 * n)).max_abs() < 1e-12;
  double trace = 0;
  for (int k = 0; k < 2 * n; ++k) trace += h(k, k).real();
  if (involution && std::abs(trace) < 1e-12)
    std::cout << "h signature: (" << n << ", " << n << ")\n";
  std::mt19937_64 rng(seed);
  const stz::TwoConditionSampler samplers[3] = {{n, stz::TwoOfThree::GH},
                                                {n, stz::TwoOfThree::GRj},
                                                {n, stz::TwoOfThree::HRj}};
  int pass = 0;
  for (int s = 0; s < samples; ++s) {
    stz::CMat a = samplers[s % 3].sample(rng);
    stz::MembershipFlags f = stz::membership_flags(a, tol);
    if (f.preserves_g && f.preserves_h && f.commutes_rj) ++pass;
  }
  std::cout << "two-of-three samples: " << pass << "/" << samples << " within " << tol << "\n";
  return pass == samples ? 0 : 1;
}

int cmd_verify_ffm(std::ostream& out) {
  int failures = 0;
  auto step = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };

  stz::Origami cover = stz::builtin_ltilde_from_cocycle();
  stz::Origami explicit_pair = stz::builtin_ltilde();
  step("cocycle cover matches the explicit 24-square pair",
       stz::canonical_pair(cover.pair()).pair == stz::canonical_pair(explicit_pair.pair()).pair);

  stz::StratumSignature sig = stz::stratum(explicit_pair);
  step("stratum H(5,5,5,5) and genus 11",
       sig.orders == std::vector<int>({5, 5, 5, 5}) && sig.genus == 11);

  std::vector<stz::Permutation> auts = stz::automorphisms(explicit_pair);
  int involutions = 0;
  for (const stz::Permutation& a : auts)
    if (!a.is_identity() && a.order() == 2) ++involutions;
  step("automorphism group of order 8 with a unique involution",
       auts.size() == 8 && involutions == 1);

  stz::OrbitGraph graph = stz::orbit(explicit_pair);
  std::vector<int> expected_cycles = {4, 4, 2, 1, 1};
  step("orbit of size 12 with T/S cycle sizes {4,4,2,1,1}",
       graph.size() == 12 && graph.t_cycle_sizes() == expected_cycles &&
           graph.s_cycle_sizes() == expected_cycles);

  stz::EkzReport ekz = stz::ekz_sum(graph);
  step("exponent sum 35/18 + 19/18 = 3",
       ekz.stratum_term == stz::rat(35, 18) && ekz.cycle_term == stz::rat(19, 18) &&
           ekz.total == stz::rat(3));

  stz::SpectrumLedger ledger = stz::solve_ledger(
      ekz.total,
      {{stz::rat(1), 1, "tautological"}, {stz::rat(1, 3), 4, "cited H(2)/H(2,2)^odd exponents"},
       {stz::rat(0), 2, "quaternionic zero block"}},
      4);
  step("residual exponent 1/6", ledger.residual == stz::rat(1, 6));

  stz::HomologySpace space = stz::absolute_h1(explicit_pair);
  stz::IsotypicDecomposition dec = stz::isotypic_decomposition(space);
  int real2 = 0, quat12 = 0;
  for (const stz::IsotypicPiece& p : dec.pieces) {
    if (p.tag == stz::IsotypicPiece::Tag::Real && p.dim() == 2) ++real2;
    if (p.tag == stz::IsotypicPiece::Tag::Quaternionic && p.dim() == 12 && p.multiplicity == 3)
      ++quat12;
  }
  step("zero part splits as four 2-dim real pieces plus one 12-dim quaternionic piece",
       real2 == 4 && quat12 == 1 && dec.pieces.size() == 5);

  bool so6 = false;
  std::string detail;
  try {
    stz::DichotomyReport report = stz::verify_dichotomy(explicit_pair);
    so6 = report.concluded && report.branch == "SO*(6)" && report.span_dim == 8;
    detail = report.branch;
  } catch (const stz::DichotomyInconclusive& e) {
    detail = std::string("inconclusive: ") + e.what();
  }
  step("irreducibility: simple-spectrum products with an 8-dimensional central span", so6);

  out << (failures == 0 ? "branch: SO*(6)" : "branch: (verification failed)") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"square-tiled surface invariants and Kontsevich-Zorich monodromy toolkit"};
  app.require_subcommand(1);

  std::string origami_arg, format = "text", group_arg, matrix_arg, hw, vw;
  std::size_t orbit_cap = 100000;
  long group_cap = 2000;
  int n = 3, samples = 1000;
  double tol = 1e-8;
  unsigned long seed = 12345;

  auto* info = app.add_subcommand("info", "stratum, genus and symmetry of an origami");
  info->add_option("origami", origami_arg, "origami file or builtin:<name>")->required();

  auto* orb = app.add_subcommand("orbit", "SL(2,Z) orbit of an origami");
  orb->add_option("origami", origami_arg)->required();
  orb->add_option("--format", format, "text|json|dot");
  orb->add_flag_callback("--dot", [&format] { format = "dot"; }, "shortcut for --format dot");
  orb->add_option("--orbit-cap", orbit_cap, "node budget");

  auto* ekz = app.add_subcommand("ekz", "exact sum of nonnegative Lyapunov exponents");
  ekz->add_option("origami", origami_arg)->required();
  ekz->add_option("--orbit-cap", orbit_cap);

  auto* chart = app.add_subcommand("chartable", "exact character table of a finite group");
  chart->add_option("--group", group_arg, "builtin (q8, heis27, q16, z<N>) or group file")
      ->required();
  chart->add_option("--format", format, "text|json");
  chart->add_option("--group-cap", group_cap, "order budget");

  auto* mult = app.add_subcommand("mult", "multiplicity report for a regular origami");
  mult->set_help_flag("--help", "print help");  // frees -h for the generator option
  mult->add_option("--group", group_arg)->required();
  mult->add_option("--h", hw, "word for the horizontal generator")->required();
  mult->add_option("--v", vw, "word for the vertical generator")->required();

  auto* hom = app.add_subcommand("homology", "H1, the splitting and isotypic pieces");
  hom->add_option("origami", origami_arg)->required();
  hom->add_option("--format", format, "text|json");

  auto* mono = app.add_subcommand("monodromy", "affine lifts of a Veech-group matrix");
  mono->add_option("origami", origami_arg)->required();
  mono->add_option("--matrix", matrix_arg, "2x2 integer matrix a,b;c,d (or a,b:c,d)")->required();

  auto* sostar = app.add_subcommand("sostar", "SO*(2n) membership and dimension checks");
  sostar->add_option("--n", n);
  sostar->add_option("--samples", samples);
  sostar->add_option("--tol", tol);
  sostar->add_option("--seed", seed);

  app.add_subcommand("verify-ffm", "end-to-end SO*(6) monodromy verification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    if (info->parsed()) return cmd_info(origami_arg);
    if (orb->parsed()) return cmd_orbit(origami_arg, format, orbit_cap);
    if (ekz->parsed()) return cmd_ekz(origami_arg, orbit_cap);
    if (chart->parsed()) return cmd_chartable(group_arg, format, group_cap);
    if (mult->parsed()) return cmd_mult(group_arg, hw, vw);
    if (hom->parsed()) return cmd_homology(origami_arg, format);
    if (mono->parsed()) return cmd_monodromy(origami_arg, matrix_arg);
    if (sostar->parsed()) return cmd_sostar(n, samples, tol, seed);
    return cmd_verify_ffm(std::cout);
  } catch (const stz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
