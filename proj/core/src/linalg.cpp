#include "stz/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace stz {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw std::logic_error("to_int: non-integral entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rat inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const RatMat& m) {
  RatMat w = m;
  return static_cast<int>(rref(w).size());
}

int rank(const IntMat& m) { return rank(to_rat(m)); }

std::optional<RatMat> solve(const RatMat& a, const RatMat& b) {
  assert(a.rows() == b.rows());
  RatMat aug = a.hcat(b);
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;
  RatMat x(a.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(static_cast<int>(r), a.cols() + j);
  return x;
}

std::optional<RatMat> solve(const IntMat& a, const IntMat& b) {
  return solve(to_rat(a), to_rat(b));
}

RatMat rat_kernel(const RatMat& a) {
  RatMat w = a;
  std::vector<int> pivots = rref(w);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  int nfree = a.cols() - static_cast<int>(pivots.size());
  RatMat k(a.cols(), nfree);
  int idx = 0;
  for (int col = 0; col < a.cols(); ++col) {
    if (is_pivot[col]) continue;
    k(col, idx) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k(pivots[r], idx) = -w(static_cast<int>(r), col);
    ++idx;
  }
  return k;
}

namespace {

// Unimodular column operation mixing columns j1, j2 of both m and u so that
// m(row, j2) becomes 0 and m(row, j1) the gcd of the two entries.
void gcd_col_op(IntMat& m, IntMat& u, int row, int j1, int j2) {
  Int a = m(row, j1), b = m(row, j2);
  if (b == 0) return;
  if (a == 0) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, j1), m(i, j2));
    for (int i = 0; i < u.rows(); ++i) std::swap(u(i, j1), u(i, j2));
    a = m(row, j1);
    b = m(row, j2);
    if (b == 0) return;
  }
  Int g, p, q;
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int ag = a / g, bg = b / g;
  for (int i = 0; i < m.rows(); ++i) {
    Int c1 = m(i, j1), c2 = m(i, j2);
    m(i, j1) = p * c1 + q * c2;
    m(i, j2) = ag * c2 - bg * c1;
  }
  for (int i = 0; i < u.rows(); ++i) {
    Int c1 = u(i, j1), c2 = u(i, j2);
    u(i, j1) = p * c1 + q * c2;
    u(i, j2) = ag * c2 - bg * c1;
  }
}

}  // namespace

IntMat int_kernel(const IntMat& a) {
  int n = a.cols();
  IntMat h = a;
  IntMat u = IntMat::identity(n);
  int npiv = 0;
  for (int row = 0; row < a.rows() && npiv < n; ++row) {
    for (int j = npiv + 1; j < n; ++j) gcd_col_op(h, u, row, npiv, j);
    if (h(row, npiv) != 0) ++npiv;
  }
  std::vector<int> zero_cols;
  for (int j = 0; j < n; ++j) {
    bool zero = true;
    for (int i = 0; i < a.rows() && zero; ++i) zero = h(i, j) == 0;
    if (zero) zero_cols.push_back(j);
  }
  IntMat k(n, static_cast<int>(zero_cols.size()));
  for (size_t c = 0; c < zero_cols.size(); ++c)
    for (int i = 0; i < n; ++i) k(i, static_cast<int>(c)) = u(i, zero_cols[c]);
  return k;
}

SmithForm smith_form(const IntMat& a) {
  int m = a.rows(), n = a.cols();
  SmithForm f{IntMat::identity(m), a, IntMat::identity(n)};
  IntMat& s = f.s;
  auto row_op = [&](int i, int j, const Int& q) {  // row_i -= q * row_j
    for (int k = 0; k < n; ++k) s(i, k) -= q * s(j, k);
    for (int k = 0; k < m; ++k) f.u(i, k) -= q * f.u(j, k);
  };
  auto col_op = [&](int i, int j, const Int& q) {  // col_i -= q * col_j
    for (int k = 0; k < m; ++k) s(k, i) -= q * s(k, j);
    for (int k = 0; k < n; ++k) f.v(k, i) -= q * f.v(k, j);
  };
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(s(i, k), s(j, k));
    for (int k = 0; k < m; ++k) std::swap(f.u(i, k), f.u(j, k));
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m; ++k) std::swap(s(k, i), s(k, j));
    for (int k = 0; k < n; ++k) std::swap(f.v(k, i), f.v(k, j));
  };

  int t = 0;
  while (t < m && t < n) {
    // pick the entry of least magnitude in the remaining block as pivot
    int bi = -1, bj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (s(i, j) == 0) continue;
        if (bi < 0 || abs(s(i, j)) < abs(s(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    row_swap(t, bi);
    col_swap(t, bj);
    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      if (s(i, t) == 0) continue;
      Int q = s(i, t) / s(t, t);
      row_op(i, t, q);
      if (s(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < n; ++j) {
      if (s(t, j) == 0) continue;
      Int q = s(t, j) / s(t, t);
      col_op(j, t, q);
      if (s(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; redo this pivot
    if (s(t, t) < 0) {
      for (int k = 0; k < n; ++k) s(t, k) = -s(t, k);
      for (int k = 0; k < m; ++k) f.u(t, k) = -f.u(t, k);
    }
    ++t;
  }
  return f;
}

IntMat unimodular_inverse(const IntMat& u) {
  assert(u.rows() == u.cols());
  auto x = solve(to_rat(u), to_rat(IntMat::identity(u.rows())));
  if (!x) throw std::logic_error("unimodular_inverse: singular matrix");
  return to_int(*x);
}

Int det(const IntMat& a) {
  assert(a.rows() == a.cols());
  int n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMat w = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        w(i, j) = num / prev;  // exact by Bareiss
      }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

IntMat saturate(const IntMat& a) {
  if (a.cols() == 0) return a;
  IntMat ann = int_kernel(a.transposed());
  if (ann.cols() == 0) return IntMat::identity(a.rows());
  return int_kernel(ann.transposed());
}

std::vector<Int> char_poly(const IntMat& a) {
  assert(a.rows() == a.cols());
  int n = a.rows();
  if (n == 0) return {Int(1)};
  // Berkowitz iteration over leading principal submatrices; p holds the
  // characteristic polynomial in descending degree, monic.
  std::vector<Int> p = {Int(1), -a(0, 0)};
  for (int r = 2; r <= n; ++r) {
    // Toeplitz column: 1, -d, -R C, -R M C, -R M^2 C, ...
    std::vector<Int> t(r + 1);
    t[0] = 1;
    t[1] = -a(r - 1, r - 1);
    std::vector<Int> w(r - 1);
    for (int i = 0; i < r - 1; ++i) w[i] = a(i, r - 1);
    for (int k = 2; k <= r; ++k) {
      Int dot = 0;
      for (int i = 0; i < r - 1; ++i) dot += a(r - 1, i) * w[i];
      t[k] = -dot;
      if (k == r) break;
      std::vector<Int> w2(r - 1);
      for (int i = 0; i < r - 1; ++i) {
        Int acc = 0;
        for (int j = 0; j < r - 1; ++j) acc += a(i, j) * w[j];
        w2[i] = acc;
      }
      w.swap(w2);
    }
    std::vector<Int> q(r + 1);
    for (int i = 0; i <= r; ++i) {
      Int acc = 0;
      for (int j = 0; j <= i && j < static_cast<int>(p.size()); ++j) acc += t[i - j] * p[j];
      q[i] = acc;
    }
    p.swap(q);
  }
  std::vector<Int> asc(n + 1);
  for (int k = 0; k <= n; ++k) asc[k] = p[n - k];
  return asc;
}

std::vector<Int> poly_mul(const std::vector<Int>& p, const std::vector<Int>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<Int> r(p.size() + q.size() - 1);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

std::vector<Int> poly_pow(const std::vector<Int>& p, int e) {
  std::vector<Int> r = {Int(1)};
  for (int i = 0; i < e; ++i) r = poly_mul(r, p);
  return r;
}

std::string poly_to_string(const std::vector<Int>& p) {
  if (p.empty()) return "0";
  std::string s;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    const Int& c = p[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1 || k == 0) s += mag.get_str();
    if (k > 0) s += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace stz
