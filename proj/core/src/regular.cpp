#include "stz/regular.hpp"

namespace stz {

RegularOrigamiSpec make_regular_spec(const FiniteGroup& g, int h, int v) {
  if (!g.generated_by(h, v)) throw NotGenerating("h and v do not generate the group");
  RegularOrigamiSpec spec;
  spec.group = g;
  spec.h = h;
  spec.v = v;
  spec.c = g.mult(g.mult(g.mult(h, v), g.inverse(h)), g.inverse(v));
  spec.commutator_order = g.element_order(spec.c);
  return spec;
}

Origami regular_origami(const RegularOrigamiSpec& spec) {
  int n = spec.group.order();
  std::vector<int> himg(n), vimg(n);
  for (int x = 0; x < n; ++x) {
    himg[x] = spec.group.mult(x, spec.h);
    vimg[x] = spec.group.mult(x, spec.v);
  }
  return Origami(Permutation(std::move(himg)), Permutation(std::move(vimg)));
}

Permutation deck_translation(const RegularOrigamiSpec& spec, int a) {
  int n = spec.group.order();
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = spec.group.mult(a, x);
  return Permutation(std::move(img));
}

int genus_from_order_and_commutator(long order, long n) {
  return static_cast<int>((order - order / n) / 2 + 1);
}

int genus_regular(const RegularOrigamiSpec& spec) {
  return genus_from_order_and_commutator(spec.group.order(), spec.commutator_order);
}

int fixed_point_count(const RegularOrigamiSpec& spec, int g) {
  if (g == 0) throw IdentityElement("fixed points are counted for nonidentity elements");
  const FiniteGroup& grp = spec.group;
  std::vector<bool> in_c(grp.order(), false);
  int cur = 0;
  do {
    in_c[cur] = true;
    cur = grp.mult(cur, spec.c);
  } while (cur != 0);

  std::vector<bool> seen(grp.order(), false);
  int fixed = 0;
  for (int x = 0; x < grp.order(); ++x) {
    if (seen[x]) continue;
    // left coset x<c>
    int y = x;
    do {
      seen[y] = true;
      y = grp.mult(y, spec.c);
    } while (y != x);
    // fixed iff x^-1 g x lies in <c>
    if (in_c[grp.mult(grp.mult(grp.inverse(x), g), x)]) ++fixed;
  }
  return fixed;
}

Int mult_top(const RegularOrigamiSpec& spec, const CharacterTable& t, int row) {
  CommutatorSpectrum spec_m = commutator_spectrum(spec.group, spec.h, spec.v, t, row);
  Int delta_triv = row == t.trivial_row() ? 1 : 0;
  return 2 * delta_triv + t.rows[row].dim - spec_m.m[0];
}

Rat mult_holom_exact(const RegularOrigamiSpec& spec, const CharacterTable& t, int row) {
  CommutatorSpectrum sp = commutator_spectrum(spec.group, spec.h, spec.v, t, row);
  int n = sp.order;
  Rat value = row == t.trivial_row() ? 1 : 0;
  value += rat(t.rows[row].dim - sp.m[0].get_si(), 2);
  Rat tail = 0;
  for (int i = 1; i < n; ++i) tail += (rat(i) - rat(n, 2)) * Rat(sp.m[i]);
  value += tail / n;
  value.canonicalize();
  return value;
}

Int mult_holom(const RegularOrigamiSpec& spec, const CharacterTable& t, int row) {
  Rat value = mult_holom_exact(spec, t, row);
  if (!is_integral(value))
    throw NonIntegerMultiplicity("holomorphic multiplicity " + to_string(value));
  return value.get_num();
}

Rat delta_pi(const RegularOrigamiSpec& spec, const CharacterTable& t, int row) {
  // The i = 0 term is dropped: with it the sum would not be antisymmetric
  // under conjugation of the row (and would not vanish on real rows) whenever
  // m_0 > 0. The i >= 1 tail is the quantity entering the holomorphic
  // multiplicity.
  CommutatorSpectrum sp = commutator_spectrum(spec.group, spec.h, spec.v, t, row);
  Rat delta = 0;
  for (int i = 1; i < sp.order; ++i) delta += (rat(i) - rat(sp.order, 2)) * Rat(sp.m[i]);
  delta.canonicalize();
  return delta;
}

std::vector<MultiplicityRow> multiplicity_report(const RegularOrigamiSpec& spec,
                                                 const CharacterTable& t) {
  std::vector<MultiplicityRow> rows;
  for (int r = 0; r < t.class_count(); ++r) {
    MultiplicityRow out;
    out.row = r;
    out.dim = t.rows[r].dim;
    out.top = mult_top(spec, t, r);
    out.holom = mult_holom(spec, t, r);
    out.delta = delta_pi(spec, t, r);
    out.m = commutator_spectrum(spec.group, spec.h, spec.v, t, r).m;
    rows.push_back(std::move(out));
  }
  return rows;
}

}  // namespace stz
