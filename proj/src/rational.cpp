#include "arrhom/rational.hpp"

#include <stdexcept>

namespace arrhom {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(num) / Rational(den);  // division canonicalises
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  return r.str();
}

}  // namespace arrhom
