#include "hyplat/polynomial.hpp"

#include <sstream>

namespace hyplat {

RationalPoly::RationalPoly(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly({c});
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw InternalError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = coeffs_[i] * Rational(long(i));
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> c = coeffs_;
  Rational l = leading();
  for (auto& x : c) x /= l;
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(
    const RationalPoly& d) const {
  if (d.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quo;
  int dd = d.degree();
  while (int(rem.size()) - 1 >= dd) {
    Rational factor = rem.back() / d.leading();
    std::size_t shift = rem.size() - 1 - dd;
    if (quo.size() < shift + 1) quo.resize(shift + 1, Rational(0));
    quo[shift] = factor;
    for (int i = 0; i <= dd; ++i)
      rem[shift + i] -= factor * d.coeffs()[i];
    while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
    if (rem.empty()) break;
  }
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

FieldElement RationalPoly::eval(const FieldElement& x) const {
  FieldElement acc = x.field()->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + FieldElement(x.field(), *it);
  return acc;
}

bool RationalPoly::integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (!is_integral(c)) return false;
  return true;
}

std::string RationalPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[i];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) { os << "-"; c = -c; }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    if (i == 0 || c != 1) os << c.get_str();
    if (i > 0) {
      if (c != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPoly minimal_polynomial(const FieldElement& x) {
  const auto& field = x.field();
  // prod over all embeddings of (t - e(x)), computed with FieldElement
  // coefficients, then checked to be rational.
  std::vector<FieldElement> coeffs = {field->one()};  // the polynomial "1"
  for (const Embedding& e : Embedding::all(field)) {
    FieldElement root = x.apply(e);
    std::vector<FieldElement> next(coeffs.size() + 1, field->zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];          // t * c_i
      next[i] -= coeffs[i] * root;       // -root * c_i
    }
    coeffs = std::move(next);
  }
  std::vector<Rational> rat(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_rational())
      throw InternalError("Galois-stable product has irrational coefficient");
    rat[i] = coeffs[i].rational_value();
  }
  RationalPoly full{std::move(rat)};
  RationalPoly sqfree = full.divmod(poly_gcd(full, full.derivative())).first;
  return sqfree.monic();
}

bool is_algebraic_integer(const FieldElement& x) {
  return minimal_polynomial(x).integer_coefficients();
}

}  // namespace hyplat
