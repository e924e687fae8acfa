#include "stz/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "stz/errors.hpp"

namespace stz {

namespace {

// Exact division of integer polynomials (ascending coefficients).
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> q(num.size() - den.size() + 1);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Int c = num[k + den.size() - 1] / den.back();
    q[k] = c;
    for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

// Cyclotomic polynomial Phi_e, ascending integer coefficients, monic.
// Built bottom-up over divisors: Phi_d = (x^d - 1) / prod of smaller Phi.
std::vector<Int> cyclotomic_poly(long e) {
  std::map<long, std::vector<Int>> phi;
  for (long d = 1; d <= e; ++d) {
    if (e % d != 0) continue;
    std::vector<Int> p(d + 1);
    p[0] = -1;
    p[d] = 1;
    for (long dd = 1; dd < d; ++dd)
      if (d % dd == 0) p = poly_div_exact(std::move(p), phi[dd]);
    phi[d] = std::move(p);
  }
  return phi[e];
}

long euler_phi(long e) {
  long result = e, n = e;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

CycloField::CycloField(long order) : e_(order), phi_(euler_phi(order)) {
  std::vector<Int> cyc = cyclotomic_poly(e_);
  // x^phi = -(cyc[0] + cyc[1] x + ... ) since cyc is monic of degree phi
  std::vector<Rat> top(phi_);
  for (long k = 0; k < phi_; ++k) top[k] = -Rat(cyc[k]);
  powers_.resize(2 * e_);
  for (long t = 0; t < 2 * e_; ++t) {
    std::vector<Rat>& row = powers_[t];
    row.assign(phi_, Rat(0));
    if (t < phi_) {
      row[t] = 1;
      continue;
    }
    // zeta^t = zeta * zeta^(t-1)
    const std::vector<Rat>& prev = powers_[t - 1];
    for (long k = phi_ - 1; k >= 0; --k) {
      if (prev[k] == 0) continue;
      if (k + 1 < phi_) {
        row[k + 1] += prev[k];
      } else {
        for (long j = 0; j < phi_; ++j) row[j] += prev[k] * top[j];
      }
    }
  }
}

const std::vector<Rat>& CycloField::power(long t) const {
  t %= e_;
  if (t < 0) t += e_;
  return powers_[t];
}

CycloFieldPtr make_cyclo_field(long order) { return std::make_shared<CycloField>(order); }

Cyclo Cyclo::zero(CycloFieldPtr f) { return Cyclo(std::move(f), {}); }

Cyclo Cyclo::from_rat(CycloFieldPtr f, const Rat& r) {
  std::vector<Rat> c(f->dim());
  c[0] = r;
  return Cyclo(std::move(f), std::move(c));
}

Cyclo Cyclo::root_of_unity(CycloFieldPtr f, long t) {
  std::vector<Rat> c = f->power(t);
  return Cyclo(std::move(f), std::move(c));
}

bool Cyclo::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw Error("cyclotomic value is not rational: " + to_string());
  return c_.empty() ? Rat(0) : c_[0];
}

namespace {
void check_fields(const Cyclo& a, const Cyclo& b) {
  if (a.field() && b.field() && a.field()->order() != b.field()->order())
    throw Error("cyclotomic values from different fields");
}
}  // namespace

Cyclo Cyclo::operator+(const Cyclo& o) const {
  check_fields(*this, o);
  if (c_.empty()) return o;
  if (o.c_.empty()) return *this;
  std::vector<Rat> c(c_);
  for (size_t k = 0; k < c.size(); ++k) c[k] += o.c_[k];
  return Cyclo(field_, std::move(c));
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
  std::vector<Rat> c(c_);
  for (Rat& x : c) x = -x;
  return Cyclo(field_, std::move(c));
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  check_fields(*this, o);
  if (c_.empty() || o.c_.empty()) return Cyclo(field_ ? field_ : o.field_, {});
  int d = field_->dim();
  // convolution, then reduction of powers >= phi(e)
  std::vector<Rat> conv(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rat> c(d);
  for (int t = 0; t < 2 * d - 1; ++t) {
    if (conv[t] == 0) continue;
    if (t < d) {
      c[t] += conv[t];
    } else {
      const std::vector<Rat>& row = field_->power(t);
      for (int k = 0; k < d; ++k) c[k] += conv[t] * row[k];
    }
  }
  return Cyclo(field_, std::move(c));
}

Cyclo Cyclo::operator*(const Rat& s) const {
  std::vector<Rat> c(c_);
  for (Rat& x : c) x *= s;
  return Cyclo(field_, std::move(c));
}

Cyclo Cyclo::conj() const {
  if (c_.empty()) return *this;
  int d = field_->dim();
  std::vector<Rat> c(d);
  for (int k = 0; k < d; ++k) {
    if (c_[k] == 0) continue;
    const std::vector<Rat>& row = field_->power(-k);
    for (int j = 0; j < d; ++j) c[j] += c_[k] * row[j];
  }
  return Cyclo(field_, std::move(c));
}

bool Cyclo::operator==(const Cyclo& o) const { return (*this <=> o) == std::strong_ordering::equal; }

std::strong_ordering Cyclo::operator<=>(const Cyclo& o) const {
  size_t n = std::max(c_.size(), o.c_.size());
  for (size_t k = 0; k < n; ++k) {
    Rat a = k < c_.size() ? c_[k] : Rat(0);
    Rat b = k < o.c_.size() ? o.c_[k] : Rat(0);
    int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclo::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  long e = field_ ? field_->order() : 1;
  for (size_t k = 0; k < c_.size(); ++k) {
    const Rat& x = c_[k];
    if (x == 0) continue;
    Rat mag = abs(x);
    if (s.empty())
      s += x < 0 ? "-" : "";
    else
      s += x < 0 ? "-" : "+";
    bool unit_coeff = mag == 1 && k > 0;
    if (!unit_coeff) s += stz::to_string(mag);
    if (k > 0) {
      if (!unit_coeff) s += "*";
      s += "z" + std::to_string(e);
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace stz
