#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "stz/numeric.hpp"

namespace stz {

// Q(zeta_e) on the power basis {zeta_e^k : 0 <= k < phi(e)} modulo the e-th
// cyclotomic polynomial.
class CycloField {
 public:
  explicit CycloField(long order);

  long order() const { return e_; }
  int dim() const { return static_cast<int>(phi_); }
  // Coefficients of zeta_e^t on the power basis (t arbitrary, reduced mod e).
  const std::vector<Rat>& power(long t) const;

 private:
  long e_;
  long phi_;
  std::vector<std::vector<Rat>> powers_;  // reductions of zeta^t for t in [0, 2e)
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

CycloFieldPtr make_cyclo_field(long order);

// An element of Q(zeta_e) with rational coefficients; values produced by
// character tables always have integer coefficients.
class Cyclo {
 public:
  Cyclo() = default;  // rational zero in no particular field

  static Cyclo zero(CycloFieldPtr f);
  static Cyclo from_rat(CycloFieldPtr f, const Rat& r);
  static Cyclo root_of_unity(CycloFieldPtr f, long t);  // zeta_e^t

  const CycloFieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Errors: Error when not rational.
  Rat rational_value() const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator*(const Rat& s) const;
  Cyclo operator-() const;
  Cyclo conj() const;  // zeta -> zeta^-1

  bool operator==(const Cyclo& o) const;
  // Total order by coefficient vectors, for deterministic sorting.
  std::strong_ordering operator<=>(const Cyclo& o) const;

  // "2", "-1/2", "z8 - z8^3"
  std::string to_string() const;

 private:
  Cyclo(CycloFieldPtr f, std::vector<Rat> c) : field_(std::move(f)), c_(std::move(c)) {}
  CycloFieldPtr field_;
  std::vector<Rat> c_;
};

}  // namespace stz
