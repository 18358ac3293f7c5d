#pragma once

#include <string>
#include <vector>

#include "hyplat/mqfield.hpp"
#include "hyplat/rational.hpp"

namespace hyplat {

/// A polynomial over Q, coefficients low degree first, no trailing zeros.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return int(coeffs_.size()) - 1; }  // -1 for zero
  const Rational& leading() const;

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }

  RationalPoly derivative() const;
  RationalPoly monic() const;
  /// Polynomial division: *this = q * d + r with deg r < deg d.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;

  Rational eval(const Rational& x) const;
  FieldElement eval(const FieldElement& x) const;

  bool integer_coefficients() const;
  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

RationalPoly poly_gcd(RationalPoly a, RationalPoly b);  // monic gcd

/// Monic minimal polynomial of x over Q: the squarefree part of
/// prod over all embeddings e of (t - e(x)).
RationalPoly minimal_polynomial(const FieldElement& x);

/// True iff the minimal polynomial has integer coefficients.
bool is_algebraic_integer(const FieldElement& x);

}  // namespace hyplat
