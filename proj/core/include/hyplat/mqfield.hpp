#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyplat/interval.hpp"
#include "hyplat/rational.hpp"

namespace hyplat {

class FieldElement;

/// A totally real multiquadratic field Q(sqrt(d_1), ..., sqrt(d_r)).
///
/// Generators are pairwise distinct squarefree integers > 1 that are
/// multiplicatively independent modulo squares; the degree over Q is then
/// exactly 2^r. The basis consists of the squarefree kernels of all subset
/// products of the generators (with 1 for the rational component); each basis
/// radicand remembers which generator subset produced it, so the 2^r real
/// embeddings act by sign flips.
class MQField : public std::enable_shared_from_this<MQField> {
 public:
  using Ptr = std::shared_ptr<const MQField>;

  /// The rationals (no generators). Shared singleton.
  static Ptr rationals();

  /// Construct from explicit generators. Throws InputError if a generator is
  /// not a squarefree integer > 1, is repeated, or is multiplicatively
  /// dependent on earlier ones.
  static Ptr make(const std::vector<Integer>& generators);

  /// Smallest multiquadratic field whose basis contains every given radicand
  /// (inputs need not be squarefree; kernels are taken, 1s are dropped).
  /// Dependent inputs are absorbed rather than rejected.
  static Ptr span(const std::vector<Integer>& radicands);

  const std::vector<Integer>& generators() const { return generators_; }
  const std::vector<Integer>& basis() const { return basis_; }
  std::size_t degree() const { return basis_.size(); }
  std::size_t rank() const { return generators_.size(); }

  std::optional<std::size_t> basis_index(const Integer& radicand) const;
  bool contains_radicand(const Integer& radicand) const {
    return basis_index(radicand).has_value();
  }

  /// Bitmask over generators whose product has squarefree kernel basis_[i].
  unsigned generator_subset(std::size_t i) const { return subset_[i]; }

  /// sqrt(basis_[i]) * sqrt(basis_[j]) == mul_coeff(i,j) * sqrt(basis_[mul_index(i,j)])
  std::size_t mul_index(std::size_t i, std::size_t j) const {
    return mul_index_[i * basis_.size() + j];
  }
  const Integer& mul_coeff(std::size_t i, std::size_t j) const {
    return mul_coeff_[i * basis_.size() + j];
  }

  /// Structural equality (same generator list).
  bool same_as(const MQField& other) const {
    return generators_ == other.generators_;
  }
  /// Does this field contain `sub` (every basis radicand of sub in our basis)?
  bool contains(const MQField& sub) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement constant(const Rational& q) const;
  /// c * sqrt(radicand); the kernel of radicand must lie in the basis.
  FieldElement radical(const Integer& radicand,
                       const Rational& c = Rational(1)) const;

  std::string describe() const;  // "Q" or "Q(sqrt(2), sqrt(5))"

 private:
  MQField() = default;
  static Ptr build(const std::vector<Integer>& gens);

  std::vector<Integer> generators_;
  std::vector<Integer> basis_;          // sorted ascending, basis_[0] == 1
  std::vector<unsigned> subset_;        // per basis entry
  std::vector<std::size_t> mul_index_;  // degree x degree tables
  std::vector<Integer> mul_coeff_;
};

/// One of the 2^r real embeddings of an MQField: a sign per generator.
class Embedding {
 public:
  Embedding(MQField::Ptr field, unsigned flip_mask)
      : field_(std::move(field)), flips_(flip_mask) {}

  static Embedding identity(MQField::Ptr field) { return {std::move(field), 0}; }
  static std::vector<Embedding> all(const MQField::Ptr& field);

  bool is_identity() const { return flips_ == 0; }
  unsigned flip_mask() const { return flips_; }
  const MQField::Ptr& field() const { return field_; }

  /// Sign (+1/-1) applied to sqrt of the i-th basis radicand.
  int sign_of_basis(std::size_t basis_idx) const;
  /// Sign applied to sqrt(radicand) for a radicand in the basis.
  int sign_of_radicand(const Integer& radicand) const;
  /// +1/-1 per generator, as a vector (for reports).
  std::vector<int> generator_signs() const;

 private:
  MQField::Ptr field_;
  unsigned flips_;
};

/// An exact element of an MQField: a rational linear combination of the
/// basis radicals, kept in canonical form (no zero coefficients).
class FieldElement {
 public:
  /// Zero over the rationals.
  FieldElement();
  FieldElement(MQField::Ptr field);                    // zero of a field
  FieldElement(MQField::Ptr field, const Rational& q); // rational constant

  static FieldElement from_terms(
      MQField::Ptr field, std::vector<std::pair<std::size_t, Rational>> terms);

  const MQField::Ptr& field() const { return field_; }
  const std::vector<std::pair<std::size_t, Rational>>& terms() const {
    return terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  FieldElement zero_like() const { return FieldElement(field_); }
  FieldElement one_like() const { return FieldElement(field_, Rational(1)); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  /// Rational value; throws InternalError unless is_rational().
  Rational rational_value() const;

  /// Coefficient of sqrt(radicand) (0 if absent / not in basis).
  Rational coefficient(const Integer& radicand) const;
  /// Radicands with nonzero coefficient, excluding 1.
  std::vector<Integer> support_radicands() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;  // throws on /0
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement operator*(const Rational& c) const;
  FieldElement operator+(const Rational& c) const;
  FieldElement operator-(const Rational& c) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  /// Total order for containers (field-structural, then term-wise).
  std::strong_ordering operator<=>(const FieldElement& o) const;

  /// Multiplicative inverse; throws InputError on zero.
  FieldElement inverse() const;

  /// Apply an embedding coefficient-wise (exact; a field automorphism).
  FieldElement apply(const Embedding& e) const;

  /// Exact sign at the identity embedding: -1, 0, +1. Zero only for the
  /// canonical zero; otherwise adaptive-precision interval evaluation, with
  /// precision doubling until 0 is excluded (terminates for nonzero input).
  int sign() const;

  /// Rational enclosure at the given dyadic precision.
  RatInterval enclosure(unsigned bits) const;
  double to_double() const;

  /// Same element viewed in a larger field (throws unless target contains
  /// every support radicand).
  FieldElement lift_to(const MQField::Ptr& target) const;

  std::string str() const;  // e.g. "1/4 + 1/4*sqrt(5)"

 private:
  MQField::Ptr field_;
  std::vector<std::pair<std::size_t, Rational>> terms_;  // sorted by index
  void normalize();
};

FieldElement operator*(const Rational& c, const FieldElement& x);

/// Exact sign of sigma_e(x); 0 iff x == 0.
int embed_sign(const FieldElement& x, const Embedding& e);

/// Smallest multiquadratic subfield containing all inputs (all inputs must
/// live in one common field).
MQField::Ptr subfield_generated(const std::vector<FieldElement>& elems);

}  // namespace hyplat
