#include "stz/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stz {

namespace {

// ---- arithmetic mod a word-sized prime -------------------------------------

using u64 = unsigned long long;

u64 mulm(u64 a, u64 b, u64 p) { return (__uint128_t)a * b % p; }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> f;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    f.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) f.push_back(n);
  return f;
}

// Smallest prime p = 1 (mod e) with p > 2 sqrt(order) and p not dividing order.
long dixon_prime(long order, long e) {
  long lower = static_cast<long>(2.0 * std::sqrt(static_cast<double>(order))) + 1;
  constexpr long kBound = 10'000'000;
  for (long p = e + 1;; p += e) {
    if (p > kBound) throw NoSuitablePrime("no usable prime below search bound");
    if (p <= lower) continue;
    if (order % p == 0) continue;
    if (is_prime(p)) return p;
  }
}

u64 primitive_root(long p) {
  std::vector<long> fs = prime_factors(p - 1);
  for (u64 w = 2; w < static_cast<u64>(p); ++w) {
    bool ok = true;
    for (long q : fs)
      if (powm(w, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return w;
  }
  throw NoSuitablePrime("no primitive root found");
}

// ---- small dense matrices over F_p ------------------------------------------

struct FpMat {
  int rows = 0, cols = 0;
  u64 p = 0;
  std::vector<u64> a;

  FpMat() = default;
  FpMat(int r, int c, u64 mod) : rows(r), cols(c), p(mod), a(static_cast<size_t>(r) * c, 0) {}
  u64& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  u64 operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static FpMat identity(int n, u64 mod) {
    FpMat m(n, n, mod);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  FpMat operator*(const FpMat& o) const {
    FpMat r(rows, o.cols, p);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        u64 v = (*this)(i, k);
        if (!v) continue;
        for (int j = 0; j < o.cols; ++j) r(i, j) = (r(i, j) + mulm(v, o(k, j), p)) % p;
      }
    return r;
  }
};

std::vector<int> fp_rref(FpMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(row, j));
    u64 inv = invm(m(row, col), m.p);
    for (int j = col; j < m.cols; ++j) m(row, j) = mulm(m(row, j), inv, m.p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || !m(i, col)) continue;
      u64 f = m(i, col);
      for (int j = col; j < m.cols; ++j)
        m(i, j) = (m(i, j) + m.p - mulm(f, m(row, j), m.p)) % m.p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Solve a x = b over F_p; the system is assumed consistent with unique-enough
// solutions for our use (expressing invariant-subspace images in a basis).
FpMat fp_solve(const FpMat& a, const FpMat& b) {
  FpMat aug(a.rows, a.cols + b.cols, a.p);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols; ++j) aug(i, a.cols + j) = b(i, j);
  }
  std::vector<int> pivots = fp_rref(aug);
  FpMat x(a.cols, b.cols, a.p);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols) throw Error("fp_solve: inconsistent system");
    for (int j = 0; j < b.cols; ++j) x(pivots[r], j) = aug(static_cast<int>(r), a.cols + j);
  }
  return x;
}

FpMat fp_kernel(const FpMat& a) {
  FpMat w = a;
  std::vector<int> pivots = fp_rref(w);
  std::vector<bool> is_piv(a.cols, false);
  for (int c : pivots) is_piv[c] = true;
  FpMat k(a.cols, a.cols - static_cast<int>(pivots.size()), a.p);
  int idx = 0;
  for (int col = 0; col < a.cols; ++col) {
    if (is_piv[col]) continue;
    k(col, idx) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      k(pivots[r], idx) = (a.p - w(static_cast<int>(r), col)) % a.p;
    ++idx;
  }
  return k;
}

// Characteristic polynomial over F_p (Berkowitz), ascending coefficients.
std::vector<u64> fp_char_poly(const FpMat& m) {
  int n = m.rows;
  u64 p = m.p;
  if (n == 0) return {1};
  std::vector<u64> cp = {1, (p - m(0, 0)) % p};
  for (int r = 2; r <= n; ++r) {
    std::vector<u64> t(r + 1);
    t[0] = 1;
    t[1] = (p - m(r - 1, r - 1)) % p;
    std::vector<u64> w(r - 1);
    for (int i = 0; i < r - 1; ++i) w[i] = m(i, r - 1);
    for (int k = 2; k <= r; ++k) {
      u64 dot = 0;
      for (int i = 0; i < r - 1; ++i) dot = (dot + mulm(m(r - 1, i), w[i], p)) % p;
      t[k] = (p - dot) % p;
      if (k == r) break;
      std::vector<u64> w2(r - 1, 0);
      for (int i = 0; i < r - 1; ++i) {
        u64 acc = 0;
        for (int j = 0; j < r - 1; ++j) acc = (acc + mulm(m(i, j), w[j], p)) % p;
        w2[i] = acc;
      }
      w.swap(w2);
    }
    std::vector<u64> q(r + 1, 0);
    for (int i = 0; i <= r; ++i) {
      u64 acc = 0;
      for (int j = 0; j <= i && j < static_cast<int>(cp.size()); ++j)
        acc = (acc + mulm(t[i - j], cp[j], p)) % p;
      q[i] = acc;
    }
    cp.swap(q);
  }
  std::reverse(cp.begin(), cp.end());
  return cp;
}

u64 fp_poly_eval(const std::vector<u64>& poly, u64 x, u64 p) {
  u64 acc = 0;
  for (int k = static_cast<int>(poly.size()) - 1; k >= 0; --k)
    acc = (mulm(acc, x, p) + poly[k]) % p;
  return acc;
}

}  // namespace

// ---- Dixon's method ----------------------------------------------------------

CharacterTable character_table(const FiniteGroup& g, long order_budget) {
  long n = g.order();
  if (n > order_budget)
    throw GroupBudgetExceeded("character table budget is " + std::to_string(order_budget));
  const FiniteGroup::Classes& cls = g.classes();
  int k = cls.count();
  long e = g.exponent();
  long p = dixon_prime(n, e);

  // class data: sizes, representative powers, inverse classes
  std::vector<long> size(k);
  std::vector<int> inv_class(k);
  std::vector<std::vector<int>> pow_class(k);  // pow_class[l][t] = class of rep_l^t
  for (int l = 0; l < k; ++l) {
    size[l] = cls.size(l);
    int rep = cls.representative[l];
    int m = g.element_order(rep);
    pow_class[l].resize(m);
    int cur = 0;
    for (int t = 0; t < m; ++t) {
      pow_class[l][t] = cls.class_of[cur];
      cur = g.mult(cur, rep);
    }
    inv_class[l] = cls.class_of[g.inverse(rep)];
  }

  // class matrices: (M_i)[j][l] = #{(x, y) in C_i x C_j : x y = rep_l}
  std::vector<FpMat> class_mats(k);
  for (int i = 0; i < k; ++i) {
    FpMat m(k, k, static_cast<u64>(p));
    for (int x : cls.members[i])
      for (int l = 0; l < k; ++l) {
        int y = g.mult(g.inverse(x), cls.representative[l]);
        int j = cls.class_of[y];
        m(j, l) = (m(j, l) + 1) % p;
      }
    class_mats[i] = std::move(m);
  }

  // split the common eigenspaces until every subspace is one dimensional
  std::vector<FpMat> spaces = {FpMat::identity(k, static_cast<u64>(p))};
  for (int i = 1; i < k; ++i) {
    std::vector<FpMat> next;
    for (FpMat& b : spaces) {
      if (b.cols <= 1) {
        next.push_back(std::move(b));
        continue;
      }
      FpMat restriction = fp_solve(b, class_mats[i] * b);
      std::vector<u64> cp = fp_char_poly(restriction);
      for (u64 lam = 0; lam < static_cast<u64>(p); ++lam) {
        if (fp_poly_eval(cp, lam, p) != 0) continue;
        FpMat shifted = restriction;
        for (int d = 0; d < shifted.rows; ++d)
          shifted(d, d) = (shifted(d, d) + p - lam) % p;
        FpMat kern = fp_kernel(shifted);
        if (kern.cols > 0) next.push_back(b * kern);
      }
    }
    spaces.swap(next);
    bool done = true;
    for (const FpMat& b : spaces) done = done && b.cols == 1;
    if (done) break;
  }
  if (static_cast<int>(spaces.size()) != k)
    throw Error("character table: eigenspace splitting incomplete");

  // normalize to omega vectors (value 1 on the identity class) and recover
  // degrees from the second orthogonality of central characters
  u64 up = static_cast<u64>(p);
  u64 z = powm(primitive_root(p), (p - 1) / e, up);  // fixed root of unity of order e
  CharacterTable table;
  table.group = g;
  table.field = make_cyclo_field(e);
  for (FpMat& sp : spaces) {
    std::vector<u64> omega(k);
    u64 norm = invm(sp(0, 0) % up, up);
    if (sp(0, 0) == 0) throw Error("character table: eigenvector vanishes at identity");
    for (int l = 0; l < k; ++l) omega[l] = mulm(sp(l, 0), norm, up);
    u64 s = 0;
    for (int l = 0; l < k; ++l)
      s = (s + mulm(mulm(omega[l], omega[inv_class[l]], up), invm(size[l] % up, up), up)) % up;
    u64 dsq = mulm(n % up, invm(s, up), up);
    long dim = 0;
    for (long d = 1; d * d <= n; ++d)
      if (mulm(d, d, up) == dsq) {
        dim = d;
        break;
      }
    if (dim == 0) throw Error("character table: no dimension matches");

    // chi(rep_l) mod p, then lift through eigenvalue multiplicities of rep_l
    std::vector<u64> chi(k);
    for (int l = 0; l < k; ++l)
      chi[l] = mulm(mulm(static_cast<u64>(dim), omega[l], up), invm(size[l] % up, up), up);
    CharacterTable::Row row;
    row.dim = static_cast<int>(dim);
    for (int l = 0; l < k; ++l) {
      long m = static_cast<long>(pow_class[l].size());
      u64 zm = powm(z, e / m, up);  // order-m root
      Cyclo value = Cyclo::zero(table.field);
      for (long u = 0; u < m; ++u) {
        u64 acc = 0;
        for (long t = 0; t < m; ++t) {
          u64 term = mulm(chi[pow_class[l][static_cast<size_t>(t)]],
                          powm(zm, static_cast<u64>((m - u % m) % m * t % m), up), up);
          acc = (acc + term) % p;
        }
        u64 mult = mulm(acc, invm(static_cast<u64>(m) % up, up), up);
        if (mult == 0) continue;
        if (mult > static_cast<u64>(dim))
          throw Error("character table: eigenvalue multiplicity out of range");
        value = value + Cyclo::root_of_unity(table.field, (e / m) * u) * Rat(static_cast<long>(mult));
      }
      row.values.push_back(value);
    }
    table.rows.push_back(std::move(row));
  }

  std::sort(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(),
                                        b.values.end());
  });

  // exact verification of the first orthogonality relation
  long dimsq = 0;
  for (const auto& row : table.rows) dimsq += static_cast<long>(row.dim) * row.dim;
  if (dimsq != n) throw Error("character table: dimension sum check failed");
  for (int r1 = 0; r1 < k; ++r1)
    for (int r2 = r1; r2 < k; ++r2) {
      Cyclo acc = Cyclo::zero(table.field);
      for (int l = 0; l < k; ++l)
        acc = acc + table.rows[r1].values[l] * table.rows[r2].values[l].conj() * Rat(size[l]);
      Rat expected = r1 == r2 ? Rat(n) : Rat(0);
      if (!(acc.is_rational() && acc.rational_value() == expected))
        throw Error("character table: orthogonality check failed");
    }
  return table;
}

int CharacterTable::conjugate_row(int row) const {
  std::vector<Cyclo> conj_values;
  for (const Cyclo& v : rows[row].values) conj_values.push_back(v.conj());
  for (int r = 0; r < class_count(); ++r)
    if (rows[r].values == conj_values) return r;
  throw Error("conjugate row not found");
}

int CharacterTable::trivial_row() const {
  for (int r = 0; r < class_count(); ++r) {
    bool triv = true;
    for (const Cyclo& v : rows[r].values)
      triv = triv && v.is_rational() && v.rational_value() == 1;
    if (triv) return r;
  }
  throw Error("trivial row not found");
}

int fs_indicator(const CharacterTable& t, int row) {
  const FiniteGroup& g = t.group;
  Cyclo acc = Cyclo::zero(t.field);
  for (int x = 0; x < g.order(); ++x) acc = acc + t.value_at_element(row, g.mult(x, x));
  Rat value = acc.rational_value() / g.order();
  if (value != -1 && value != 0 && value != 1)
    throw Error("Frobenius-Schur indicator out of range");
  return static_cast<int>(value.get_num().get_si());
}

Cyclo inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  if (!phi.group.same_group(psi.group)) throw GroupMismatch("inner product across groups");
  const FiniteGroup::Classes& cls = phi.group.classes();
  Cyclo acc;
  for (int c = 0; c < cls.count(); ++c)
    acc = acc + phi.values[c] * psi.values[c].conj() * Rat(cls.size(c));
  return acc * Rat(1, phi.group.order());
}

ClassFunction class_function_from_row(const CharacterTable& t, int row) {
  return ClassFunction{t.group, t.rows[row].values};
}

ClassFunction delta_identity(const FiniteGroup& g, CycloFieldPtr field) {
  ClassFunction f{g, {}};
  for (int c = 0; c < g.classes().count(); ++c)
    f.values.push_back(Cyclo::from_rat(field, c == 0 ? Rat(1) : Rat(0)));
  return f;
}

CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, int generator) {
  CyclicSubgroup sub{g, generator, {}};
  int cur = 0;
  do {
    sub.elements.push_back(cur);
    cur = g.mult(cur, generator);
  } while (cur != 0);
  return sub;
}

ClassFunction induce(const CyclicSubgroup& sub, long j, CycloFieldPtr field) {
  const FiniteGroup& g = sub.group;
  long nsub = sub.order();
  if (field->order() % nsub != 0)
    throw NotSubgroup("cyclic subgroup order does not divide the field order");
  std::vector<long> power_of(g.order(), -1);  // element -> t with c^t, or -1
  for (long t = 0; t < nsub; ++t) power_of[sub.elements[t]] = t;

  const FiniteGroup::Classes& cls = g.classes();
  ClassFunction out{g, {}};
  long step = field->order() / nsub;  // zeta_N = zeta_e^step
  for (int c = 0; c < cls.count(); ++c) {
    int rep = cls.representative[c];
    Cyclo acc = Cyclo::zero(field);
    for (int s = 0; s < g.order(); ++s) {
      int conj = g.mult(g.mult(s, rep), g.inverse(s));
      if (power_of[conj] < 0) continue;
      acc = acc + Cyclo::root_of_unity(field, step * j * power_of[conj]);
    }
    out.values.push_back(acc * Rat(1, nsub));
  }
  return out;
}

CommutatorSpectrum commutator_spectrum(const FiniteGroup& g, int h, int v,
                                       const CharacterTable& t, int row) {
  if (!g.same_group(t.group)) throw GroupMismatch("table belongs to another group");
  if (!g.generated_by(h, v)) throw NotGenerating("h and v do not generate the group");
  int c = g.mult(g.mult(g.mult(h, v), g.inverse(h)), g.inverse(v));
  int n = g.element_order(c);
  long e = t.field->order();

  CommutatorSpectrum spec;
  spec.order = n;
  std::vector<Cyclo> chi_powers;  // chi(c^t)
  int cur = 0;
  for (int tt = 0; tt < n; ++tt) {
    chi_powers.push_back(t.value_at_element(row, cur));
    cur = g.mult(cur, c);
  }
  Int total = 0;
  for (int i = 0; i < n; ++i) {
    Cyclo acc = Cyclo::zero(t.field);
    for (int tt = 0; tt < n; ++tt)
      acc = acc + chi_powers[tt] * Cyclo::root_of_unity(t.field, -(e / n) * i * tt);
    Cyclo m = acc * Rat(1, n);
    if (!m.is_rational() || !is_integral(m.rational_value()) || m.rational_value() < 0)
      throw NonIntegerMultiplicity("m_" + std::to_string(i) + " = " + m.to_string());
    spec.m.push_back(m.rational_value().get_num());
    total += spec.m.back();
  }
  if (total != t.rows[row].dim)
    throw NonIntegerMultiplicity("multiplicities do not sum to the dimension");
  return spec;
}

std::vector<std::vector<int>> galois_orbits(const CharacterTable& t) {
  int k = t.class_count();
  long e = t.field->order();
  const FiniteGroup::Classes& cls = t.group.classes();

  auto row_after_powering = [&](int row, long a) {
    // sigma_a(chi)(g) = chi(g^a)
    std::vector<Cyclo> values;
    for (int c = 0; c < k; ++c) {
      int rep = cls.representative[c];
      values.push_back(t.value_at_element(row, t.group.power(rep, a)));
    }
    for (int r = 0; r < k; ++r)
      if (t.rows[r].values == values) return r;
    throw Error("galois image of a character is not in the table");
  };

  std::vector<long> residues;  // units mod e; just the identity when e = 1
  for (long a = 1; a < e; ++a)
    if (std::gcd(a, e) == 1) residues.push_back(a);
  if (residues.empty()) residues.push_back(1);

  std::vector<int> orbit_of(k, -1);
  std::vector<std::vector<int>> orbits;
  for (int r = 0; r < k; ++r) {
    if (orbit_of[r] >= 0) continue;
    std::vector<int> orbit;
    for (long a : residues) {
      int img = row_after_powering(r, a);
      if (orbit_of[img] < 0) {
        orbit_of[img] = static_cast<int>(orbits.size());
        orbit.push_back(img);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace stz
