#include "stz/sl2z.hpp"

#include <sstream>

namespace stz {

Sl2Letter inverse_letter(Sl2Letter l) {
  switch (l) {
    case Sl2Letter::T: return Sl2Letter::Tinv;
    case Sl2Letter::Tinv: return Sl2Letter::T;
    case Sl2Letter::S: return Sl2Letter::Sinv;
    case Sl2Letter::Sinv: return Sl2Letter::S;
  }
  return Sl2Letter::T;
}

std::string to_string(Sl2Letter l) {
  switch (l) {
    case Sl2Letter::T: return "T";
    case Sl2Letter::S: return "S";
    case Sl2Letter::Tinv: return "T^-1";
    case Sl2Letter::Sinv: return "S^-1";
  }
  return "?";
}

Sl2Mat Sl2Mat::letter(Sl2Letter l) {
  switch (l) {
    case Sl2Letter::T: return {1, 1, 0, 1};
    case Sl2Letter::Tinv: return {1, -1, 0, 1};
    case Sl2Letter::S: return {1, 0, 1, 1};
    case Sl2Letter::Sinv: return {1, 0, -1, 1};
  }
  return {};
}

Sl2Mat Sl2Mat::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  auto semi = t.find_first_of(";:");  // ':' is an alternate row separator
  if (semi == std::string::npos) throw MalformedSyntax("expected 'a,b;c,d'");
  auto parse_row = [](const std::string& row) {
    auto comma = row.find(',');
    if (comma == std::string::npos) throw MalformedSyntax("expected 'a,b;c,d'");
    try {
      return std::pair<Int, Int>(Int(row.substr(0, comma)), Int(row.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
      throw MalformedSyntax("bad integer in matrix");
    }
  };
  auto [a, b] = parse_row(t.substr(0, semi));
  auto [c, d] = parse_row(t.substr(semi + 1));
  return {a, b, c, d};
}

std::string Sl2Mat::to_string() const {
  return "[" + a.get_str() + " " + b.get_str() + "; " + c.get_str() + " " + d.get_str() + "]";
}

Sl2zWord sl2z_word(const Sl2Mat& m) {
  if (m.det() != 1) throw NotUnimodular("sl2z_word: determinant must be 1");
  Sl2Mat w = m;
  std::vector<Sl2Letter> applied;  // left multiplications, in application order
  auto apply = [&](Sl2Letter l, const Int& times) {
    for (Int k = 0; k < times; ++k) {
      switch (l) {
        case Sl2Letter::T:  // row1 += row2
          w.a += w.c;
          w.b += w.d;
          break;
        case Sl2Letter::Tinv:
          w.a -= w.c;
          w.b -= w.d;
          break;
        case Sl2Letter::S:  // row2 += row1
          w.c += w.a;
          w.d += w.b;
          break;
        case Sl2Letter::Sinv:
          w.c -= w.a;
          w.d -= w.b;
          break;
      }
      applied.push_back(l);
    }
  };

  while (w.c != 0) {
    if (w.a == 0) {
      apply(Sl2Letter::T, 1);
      continue;
    }
    if (abs(w.a) > abs(w.c)) {
      Int q = w.a / w.c;  // truncated: |a - q c| < |c|
      apply(q > 0 ? Sl2Letter::Tinv : Sl2Letter::T, abs(q));
    } else {
      Int q = w.c / w.a;  // |c| >= |a| > 0, so q != 0 and |c - q a| < |a|
      apply(q > 0 ? Sl2Letter::Sinv : Sl2Letter::S, abs(q));
    }
  }
  // w = [[a, b], [0, a]] with a = +-1
  if (w.a == -1) {
    // -I = (T^-1 S T^-1)^2; applying it on the left flips the sign
    for (Sl2Letter l : {Sl2Letter::Tinv, Sl2Letter::S, Sl2Letter::Tinv, Sl2Letter::Tinv,
                        Sl2Letter::S, Sl2Letter::Tinv})
      apply(l, 1);
  }
  if (w.b != 0) apply(w.b > 0 ? Sl2Letter::Tinv : Sl2Letter::T, abs(w.b));

  Sl2zWord out;
  out.matrix = Sl2Mat{};
  for (Sl2Letter l : applied) out.letters.push_back(inverse_letter(l));
  Sl2Mat prod;
  for (Sl2Letter l : out.letters) prod = prod * Sl2Mat::letter(l);
  out.matrix = prod;
  if (!(prod == m)) throw Error("sl2z_word: internal decomposition mismatch");
  return out;
}

}  // namespace stz
