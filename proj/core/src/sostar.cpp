#include "stz/sostar.hpp"

#include <cmath>

namespace stz {

double Quat::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::operator*(const CMat& o) const {
  CMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      Cplx v = (*this)(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < o.cols; ++j) r(i, j) += v * o(k, j);
    }
  return r;
}

CMat CMat::operator+(const CMat& o) const {
  CMat r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

CMat CMat::operator-(const CMat& o) const {
  CMat r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

CMat CMat::operator*(Cplx s) const {
  CMat r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
  return r;
}

CMat CMat::adjoint() const {
  CMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMat CMat::transpose() const {
  CMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMat CMat::conjugated() const {
  CMat r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = std::conj(a[i]);
  return r;
}

double CMat::max_abs() const {
  double m = 0;
  for (const Cplx& v : a) m = std::max(m, std::abs(v));
  return m;
}

CMat quat_to_complex(const QuatMat& q) {
  int n = q.n;
  CMat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Quat& e = q(i, j);
      Cplx p(e.w, e.x);   // a-part: w + x i
      Cplx qq(e.y, -e.z); // b-part: e = p + j qq
      m(i, j) = p;
      m(i, n + j) = -std::conj(qq);
      m(n + i, j) = qq;
      m(n + i, n + j) = std::conj(p);
    }
  return m;
}

bool complex_to_quat(const CMat& a, double tol, QuatMat* out) {
  int n2 = a.rows;
  if (n2 % 2 != 0) return false;
  int n = n2 / 2;
  QuatMat q(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cplx p = a(i, j);
      Cplx qq = a(n + i, j);
      if (std::abs(a(n + i, n + j) - std::conj(p)) > tol) return false;
      if (std::abs(a(i, n + j) + std::conj(qq)) > tol) return false;
      q(i, j) = Quat{p.real(), p.imag(), qq.real(), -qq.imag()};
    }
  if (out) *out = std::move(q);
  return true;
}

CMat form_g(int n) { return CMat::identity(2 * n); }

CMat form_h(int n) {
  // h = i [[0, I], [-I, 0]]
  CMat m(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    m(k, n + k) = Cplx(0, 1);
    m(n + k, k) = Cplx(0, -1);
  }
  return m;
}

namespace {

// R_j [a; b] = [-conj(b); conj(a)]: the linear part applied after conjugation.
CMat rj_linear_part(int n) {
  CMat m(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    m(k, n + k) = -1.0;
    m(n + k, k) = 1.0;
  }
  return m;
}

}  // namespace

MembershipFlags membership_flags(const CMat& a, double tol) {
  int n = a.rows / 2;
  MembershipFlags f;
  CMat g = form_g(n);
  CMat h = form_h(n);
  CMat jr = rj_linear_part(n);
  f.res_g = (a.transpose() * g * a - g).max_abs();
  f.res_h = (a.adjoint() * h * a - h).max_abs();
  // A R_j = R_j A as antilinear maps: A J v-bar = J A-bar v-bar
  f.res_rj = (a * jr - jr * a.conjugated()).max_abs();
  f.preserves_g = f.res_g < tol;
  f.preserves_h = f.res_h < tol;
  f.commutes_rj = f.res_rj < tol;
  return f;
}

namespace {

// Exact real-linear constraint system for X = U + iV in C^(2n x 2n).
// Unknown layout: first the entries of U row-major, then those of V.
//
// Condition selection:
//   want_g:  X^t G + G X = 0 with G = I
//   want_h:  X^dag H + H X = 0 with H = i K, K = [[0, I], [-I, 0]]
//   want_rj: X Jr = Jr conj(X) with Jr = [[0, -I], [I, 0]]
IntMat constraint_system(int n, bool want_g, bool want_h, bool want_rj) {
  int d = 2 * n;
  int vars = 2 * d * d;
  auto u_at = [&](int i, int j) { return i * d + j; };
  auto v_at = [&](int i, int j) { return d * d + i * d + j; };
  auto k_sign = [&](int i, int j) -> int {  // K = [[0, I], [-I, 0]]
    if (i < n && j == i + n) return 1;
    if (i >= n && j == i - n) return -1;
    return 0;
  };
  auto jr_sign = [&](int i, int j) -> int {  // Jr = [[0, -I], [I, 0]]
    if (i < n && j == i + n) return -1;
    if (i >= n && j == i - n) return 1;
    return 0;
  };

  std::vector<std::vector<long>> rows;
  auto add_row = [&](const std::vector<std::pair<int, long>>& terms) {
    std::vector<long> row(vars, 0);
    bool nonzero = false;
    for (auto [idx, coef] : terms) {
      row[idx] += coef;
      nonzero = nonzero || coef != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  };

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (want_g) {
        // (X^t + X)(i, j) = 0: real and imaginary parts
        add_row({{u_at(j, i), 1}, {u_at(i, j), 1}});
        add_row({{v_at(j, i), 1}, {v_at(i, j), 1}});
      }
      if (want_h) {
        // (X^dag K + K X)(i, j) = 0 (the common factor i of H divides out):
        // sum_k conj(X)(k, i) K(k, j) + K(i, k) X(k, j)
        std::vector<std::pair<int, long>> re, im;
        for (int k = 0; k < d; ++k) {
          int s1 = k_sign(k, j);
          if (s1 != 0) {
            re.push_back({u_at(k, i), s1});
            im.push_back({v_at(k, i), -s1});
          }
          int s2 = k_sign(i, k);
          if (s2 != 0) {
            re.push_back({u_at(k, j), s2});
            im.push_back({v_at(k, j), s2});
          }
        }
        add_row(re);
        add_row(im);
      }
      if (want_rj) {
        // (X Jr - Jr conj(X))(i, j) = 0
        std::vector<std::pair<int, long>> re, im;
        for (int k = 0; k < d; ++k) {
          int s1 = jr_sign(k, j);
          if (s1 != 0) {
            re.push_back({u_at(i, k), s1});
            im.push_back({v_at(i, k), s1});
          }
          int s2 = jr_sign(i, k);
          if (s2 != 0) {
            re.push_back({u_at(k, j), -s2});
            im.push_back({v_at(k, j), s2});
          }
        }
        add_row(re);
        add_row(im);
      }
    }

  IntMat m(static_cast<int>(rows.size()), vars);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < vars; ++c) m(static_cast<int>(r), c) = rows[r][c];
  return m;
}

}  // namespace

int lie_algebra_dim(int n) {
  IntMat sys = constraint_system(n, true, true, false);
  return 2 * (2 * n) * (2 * n) - rank(sys);
}

TwoConditionSampler::TwoConditionSampler(int n, TwoOfThree pair) : n_(n) {
  bool want_g = pair != TwoOfThree::HRj;
  bool want_h = pair != TwoOfThree::GRj;
  bool want_rj = pair != TwoOfThree::GH;
  IntMat sys = constraint_system(n, want_g, want_h, want_rj);
  RatMat null_basis = rat_kernel(to_rat(sys));
  int d = 2 * n;
  for (int b = 0; b < null_basis.cols(); ++b) {
    CMat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        m(i, j) = Cplx(null_basis(i * d + j, b).get_d(),
                       null_basis(d * d + i * d + j, b).get_d());
    basis_.push_back(std::move(m));
  }
}

CMat TwoConditionSampler::sample(std::mt19937_64& rng) const {
  int d = 2 * n_;
  std::uniform_real_distribution<double> coef(-0.25, 0.25);
  CMat x(d, d);
  for (const CMat& b : basis_) {
    double w = coef(rng);
    for (size_t k = 0; k < x.a.size(); ++k) x.a[k] += b.a[k] * w;
  }
  return expm(x);
}

CMat expm(const CMat& x) {
  // scaling and squaring with a Taylor tail at machine precision
  double norm = x.max_abs() * x.rows;
  int squarings = 0;
  CMat scaled = x;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  double factor = std::ldexp(1.0, -squarings);
  scaled = x * Cplx(factor, 0);

  CMat sum = CMat::identity(x.rows);
  CMat term = CMat::identity(x.rows);
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled * Cplx(1.0 / k, 0);
    sum = sum + term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Quat form_c(const std::vector<Quat>& x, const std::vector<Quat>& y) {
  Quat j{0, 0, 1, 0};
  Quat acc{};
  for (size_t k = 0; k < x.size(); ++k) acc = acc + x[k].conj() * j * y[k];
  return acc;
}

}  // namespace stz
