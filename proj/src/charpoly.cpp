#include "arrhom/charpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace arrhom {

CharPoly::CharPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

CharPoly CharPoly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return CharPoly(std::move(v));
}

void CharPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int CharPoly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Rational CharPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

CharPoly CharPoly::derivative() const {
  std::vector<Rational> v;
  for (int k = 1; k < static_cast<int>(coeffs_.size()); ++k)
    v.push_back(Rational(k) * coeffs_[k]);
  return CharPoly(std::move(v));
}

Rational CharPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (int k = degree(); k >= 0; --k) acc = acc * t + coeffs_[k];
  return acc;
}

CharPoly CharPoly::shift_by_one() const {
  // Horner in the ring Q[q]: p(1+q) = sum_k c_k (1+q)^k.
  CharPoly acc;
  const CharPoly one_plus_q(std::vector<Rational>{Rational(1), Rational(1)});
  for (int k = degree(); k >= 0; --k) {
    acc = acc * one_plus_q + monomial(0, coeffs_[k]);
  }
  return acc;
}

CharPoly CharPoly::operator+(const CharPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()),
                          Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k) v[k] += o.coeffs_[k];
  return CharPoly(std::move(v));
}

CharPoly CharPoly::operator-(const CharPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()),
                          Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k) v[k] -= o.coeffs_[k];
  return CharPoly(std::move(v));
}

CharPoly CharPoly::operator*(const CharPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return CharPoly();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return CharPoly(std::move(v));
}

void CharPoly::add_term(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("add_term: negative degree");
  if (degree >= static_cast<int>(coeffs_.size()))
    coeffs_.resize(degree + 1, Rational(0));
  coeffs_[degree] += c;
  trim();
}

std::string CharPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = (a == 1);
    if (k == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Rational derivative_at_one(const CharPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("derivative_at_one: k < 0");
  CharPoly d = p;
  for (int i = 0; i < k; ++i) d = d.derivative();
  return d.eval(Rational(1));
}

}  // namespace arrhom
