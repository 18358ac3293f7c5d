#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hyplat/matrix.hpp"
#include "hyplat/mqfield.hpp"

namespace hyplat {

/// The quaternion algebra D(a,b) over a multiquadratic field:
/// i^2 = a, j^2 = b, ij = -ji = k (hence k^2 = -ab).
class QuaternionAlgebra
    : public std::enable_shared_from_this<QuaternionAlgebra> {
 public:
  using Ptr = std::shared_ptr<const QuaternionAlgebra>;

  static Ptr make(FieldElement a, FieldElement b);  // a, b nonzero

  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const MQField::Ptr& field() const { return field_; }
  bool same_as(const QuaternionAlgebra& o) const {
    return a_ == o.a_ && b_ == o.b_;
  }
  std::string describe() const;  // "D(a, b) over Q(...)"

 private:
  QuaternionAlgebra(FieldElement a, FieldElement b, MQField::Ptr f)
      : a_(std::move(a)), b_(std::move(b)), field_(std::move(f)) {}
  FieldElement a_, b_;
  MQField::Ptr field_;
};

/// An element w + x i + y j + z k of a quaternion algebra.
class Quaternion {
 public:
  Quaternion() = default;  // null element; unusable until assigned
  Quaternion(QuaternionAlgebra::Ptr alg, FieldElement w, FieldElement x,
             FieldElement y, FieldElement z);

  static Quaternion scalar(const QuaternionAlgebra::Ptr& alg,
                           const Rational& c);
  static Quaternion unit_i(const QuaternionAlgebra::Ptr& alg);
  static Quaternion unit_j(const QuaternionAlgebra::Ptr& alg);
  static Quaternion unit_k(const QuaternionAlgebra::Ptr& alg);

  const QuaternionAlgebra::Ptr& algebra() const { return alg_; }
  const FieldElement& w() const { return w_; }
  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  const FieldElement& z() const { return z_; }

  bool is_zero() const;
  bool is_scalar() const;
  Quaternion zero_like() const;
  Quaternion one_like() const;

  Quaternion operator-() const;
  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator*(const Quaternion& o) const;
  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  Quaternion operator*(const FieldElement& c) const;  // central scalar

  bool operator==(const Quaternion& o) const;
  bool operator!=(const Quaternion& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const Quaternion& o) const;

  /// Standard involution: negate i, j, k.
  Quaternion conjugate() const;
  /// N(q) = q q* = w^2 - a x^2 - b y^2 + ab z^2, a field element.
  FieldElement norm() const;
  /// Tr(q) = q + q* = 2w, a field element.
  FieldElement trace() const;
  /// q^{-1} = q* / N(q); throws DomainError when N(q) == 0 (zero divisor or
  /// zero).
  Quaternion inverse() const;

  std::string str() const;

 private:
  QuaternionAlgebra::Ptr alg_;
  FieldElement w_, x_, y_, z_;
};

Quaternion operator*(const FieldElement& c, const Quaternion& q);

/// norm and trace in one call.
std::pair<FieldElement, FieldElement> norm_trace(const Quaternion& q);

/// 2x2 matrix image of q under an exact splitting D(a,b) -> M_2(K). Exposed
/// when a is a nonzero square in the field (in particular for D(1,1), where
/// the map sends i -> diag(1,-1), j -> antidiag(1,1), k -> [[0,1],[-1,0]]).
/// Throws DomainError otherwise.
Matrix<FieldElement> matrix_rep_split(const Quaternion& q);

/// Is sqrt(x) an element of x's field? Returns it if so.
std::optional<FieldElement> field_sqrt(const FieldElement& x);

/// A real quaternion algebra is split iff at least one parameter is
/// positive; per-embedding version.
bool is_split_at(const QuaternionAlgebra& alg, const Embedding& e);

/// A place of Q: a prime p or the archimedean place.
struct Place {
  bool infinite = false;
  Integer p = 0;

  static Place infinity() { return {true, 0}; }
  static Place prime(Integer q) { return {false, std::move(q)}; }
  std::string str() const { return infinite ? "inf" : p.get_str(); }
  bool operator==(const Place&) const = default;
};

/// Local Hilbert symbol (a,b)_v over Q by the classical closed forms
/// (Legendre symbols at odd p, the epsilon/omega characters at 2, the sign
/// rule at infinity). a, b nonzero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// The places where (a,b) can ramify: infinity, 2, and odd primes dividing
/// the squarefree parts of a and b.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

struct SplitReport {
  enum class Verdict { Division, Split, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::vector<std::pair<std::vector<int>, bool>> real_places;  // signs, split?
  std::vector<std::pair<Place, int>> symbols;                  // rational case
  std::optional<Quaternion> zero_divisor;  // certificate when found by search
  std::string note;
  std::string verdict_str() const;
};

/// Division-algebra test. For rational parameters the Hilbert symbols decide
/// exactly; otherwise a bounded search for a zero divisor may certify that
/// the algebra splits, and "unknown" is a legitimate outcome.
SplitReport is_division(const QuaternionAlgebra& alg);

/// Traceless with nonzero norm: q^2 is a nonzero scalar, so q has order 2 in
/// the projective group PSL_1.
bool is_psl_involution(const Quaternion& q);

}  // namespace hyplat
