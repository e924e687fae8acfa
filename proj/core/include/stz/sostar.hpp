#pragma once

#include <complex>
#include <random>
#include <vector>

#include "stz/linalg.hpp"

namespace stz {

// Verification toolkit for the two descriptions of SO*(2n): quaternionic
// matrices preserving C(x, y) = x^dag j y, and complex 2n x 2n matrices
// preserving simultaneously the symmetric form g and the hermitian form h.
// The only floating-point module in the library; dimension counts stay exact.

struct Quat {
  double w = 0, x = 0, y = 0, z = 0;  // w + x i + y j + z k

  Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
  Quat conj() const { return {w, -x, -y, -z}; }
  double norm() const;
};

using Cplx = std::complex<double>;

struct CMat {
  int rows = 0, cols = 0;
  std::vector<Cplx> a;

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static CMat identity(int n);
  Cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Cplx operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  CMat operator*(const CMat& o) const;
  CMat operator+(const CMat& o) const;
  CMat operator-(const CMat& o) const;
  CMat operator*(Cplx s) const;
  CMat adjoint() const;
  CMat transpose() const;
  CMat conjugated() const;
  double max_abs() const;
};

struct QuatMat {
  int n = 0;
  std::vector<Quat> a;

  QuatMat() = default;
  explicit QuatMat(int size) : n(size), a(static_cast<size_t>(size) * size) {}
  Quat& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Quat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Block embedding from the identification x = a + j b: M = P + jQ maps to
// [[P, -conj(Q)], [Q, conj(P)]].
CMat quat_to_complex(const QuatMat& q);
// Inverse of the embedding; requires commutation with R_j up to tol.
bool complex_to_quat(const CMat& a, double tol, QuatMat* out);

// The forms on C^(2n): g = identity (symmetric), h = i [[0, I], [-I, 0]]
// (hermitian), and the antilinear R_j [a; b] = [-conj(b); conj(a)].
CMat form_g(int n);
CMat form_h(int n);

struct MembershipFlags {
  bool preserves_g = false, preserves_h = false, commutes_rj = false;
  double res_g = 0, res_h = 0, res_rj = 0;
};
MembershipFlags membership_flags(const CMat& a, double tol);

// Real dimension of {X : X^t g + g X = 0 and X^dag h + h X = 0}, via the
// exact rational null space of the combined real-linear system.
int lie_algebra_dim(int n);

// Which two of the three membership conditions a Lie-algebra sample satisfies
// by construction.
enum class TwoOfThree { GH, GRj, HRj };

// Samples exp of random elements of the Lie algebra cut out by the chosen
// pair of conditions; the third condition is then a theorem to be checked.
// The exact rational null space is computed once at construction.
class TwoConditionSampler {
 public:
  TwoConditionSampler(int n, TwoOfThree pair);
  CMat sample(std::mt19937_64& rng) const;
  int lie_dim() const { return static_cast<int>(basis_.size()); }

 private:
  int n_;
  std::vector<CMat> basis_;
};

CMat expm(const CMat& x);

// Quaternionic skew-hermitian form C(x, y) = x^dag j y on H^n.
Quat form_c(const std::vector<Quat>& x, const std::vector<Quat>& y);

}  // namespace stz
