#pragma once

#include <string>
#include <vector>

#include "arrhom/rational.hpp"

namespace arrhom {

// Dense rational-coefficient polynomial, coeffs[k] = coefficient of t^k.
class CharPoly {
 public:
  CharPoly() = default;
  explicit CharPoly(std::vector<Rational> coeffs);

  static CharPoly zero() { return CharPoly(); }
  static CharPoly monomial(int degree, const Rational& c);

  int degree() const;  // -1 for the zero polynomial
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  CharPoly derivative() const;
  Rational eval(const Rational& t) const;

  // The polynomial q -> p(1+q); its q^j coefficient is p^{(j)}(1)/j!.
  CharPoly shift_by_one() const;

  CharPoly operator+(const CharPoly& o) const;
  CharPoly operator-(const CharPoly& o) const;
  CharPoly operator*(const CharPoly& o) const;
  bool operator==(const CharPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const CharPoly& o) const { return !(*this == o); }

  void add_term(int degree, const Rational& c);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Exact k-th formal derivative evaluated at t = 1.
Rational derivative_at_one(const CharPoly& p, int k);

}  // namespace arrhom
