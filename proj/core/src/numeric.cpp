#include "stz/numeric.hpp"

namespace stz {

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_decimal(const Rat& v, int digits) {
  Int num = v.get_num();
  Int den = v.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  Int scaled = (num * scale * 2 + den) / (den * 2);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string out = (neg && (whole != 0 || frac != 0)) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

}  // namespace stz
