#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "stz/numeric.hpp"

namespace stz {

// Dense matrix over an exact scalar type. Vectors are columns throughout the
// library: a basis of a subspace is a matrix whose columns are the basis
// vectors, and linear maps act by left multiplication.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat&) const = default;

  // Lexicographic order by shape then entries, for deterministic containers.
  bool operator<(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < a_.size(); ++i)
      if (a_[i] != o.a_[i]) return a_[i] < o.a_[i];
    return false;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  Mat operator*(const T& s) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }

  bool is_zero() const {
    for (const T& v : a_)
      if (v != 0) return false;
    return true;
  }

  Mat column(int j) const {
    Mat c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  void set_column(int j, const Mat& c) {
    assert(c.rows() == rows_ && c.cols() == 1);
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
  }

  // Horizontal concatenation [this | o].
  Mat hcat(const Mat& o) const {
    assert(rows_ == o.rows_);
    Mat r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
  }

  T trace() const {
    assert(rows_ == cols_);
    T t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " ";
      for (int j = 0; j < cols_; ++j) {
        s += stz::to_string((*this)(i, j));
        if (j + 1 < cols_) s += " ";
      }
      s += i + 1 < rows_ ? "\n" : "]";
    }
    return s;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

RatMat to_rat(const IntMat& m);
// Requires every entry to be integral.
IntMat to_int(const RatMat& m);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(RatMat& m);

int rank(const RatMat& m);
int rank(const IntMat& m);

// Solves a x = b column by column over Q; nullopt when inconsistent.
std::optional<RatMat> solve(const RatMat& a, const RatMat& b);
std::optional<RatMat> solve(const IntMat& a, const IntMat& b);

// Columns form a basis of the rational kernel of a.
RatMat rat_kernel(const RatMat& a);

// Columns form a primitive basis of {x in Z^n : a x = 0}; any integer kernel
// vector is an integer combination of them.
IntMat int_kernel(const IntMat& a);

// u * a * v = s with u, v unimodular and s diagonal (nonnegative entries).
struct SmithForm {
  IntMat u, s, v;
};
SmithForm smith_form(const IntMat& a);

// Inverse of a matrix with determinant +-1.
IntMat unimodular_inverse(const IntMat& u);

Int det(const IntMat& a);

// Primitive basis of span_Q(columns of a) intersected with Z^n.
IntMat saturate(const IntMat& a);

// Characteristic polynomial det(x I - a) by the Berkowitz (division-free)
// method; coefficients in ascending degree, c[k] multiplies x^k.
std::vector<Int> char_poly(const IntMat& a);

std::vector<Int> poly_mul(const std::vector<Int>& p, const std::vector<Int>& q);
std::vector<Int> poly_pow(const std::vector<Int>& p, int e);
// Human form, highest degree first: "x^4 - 6x^3 + 1".
std::string poly_to_string(const std::vector<Int>& p);

}  // namespace stz
