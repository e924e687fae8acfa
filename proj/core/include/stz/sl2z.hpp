#pragma once

#include <string>
#include <vector>

#include "stz/errors.hpp"
#include "stz/numeric.hpp"

namespace stz {

// Generators of SL(2,Z): T = [[1,1],[0,1]], S = [[1,0],[1,1]].
enum class Sl2Letter { T, S, Tinv, Sinv };

Sl2Letter inverse_letter(Sl2Letter l);
std::string to_string(Sl2Letter l);

struct Sl2Mat {
  Int a{1}, b{0}, c{0}, d{1};

  static Sl2Mat letter(Sl2Letter l);
  // "a,b;c,d" with optional whitespace
  static Sl2Mat parse(const std::string& text);

  Int det() const { return a * d - b * c; }
  Sl2Mat operator*(const Sl2Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  bool operator==(const Sl2Mat&) const = default;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  std::string to_string() const;
};

// Word in the generators whose left-to-right matrix product equals `matrix`.
// As a group action on origamis the rightmost letter acts first.
struct Sl2zWord {
  std::vector<Sl2Letter> letters;
  Sl2Mat matrix;
};

// Euclidean decomposition of a determinant-1 integer matrix into T/S letters;
// the product is verified before returning. Errors: NotUnimodular.
Sl2zWord sl2z_word(const Sl2Mat& m);

}  // namespace stz
