#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyplat/matrix.hpp"
#include "hyplat/mqfield.hpp"
#include "hyplat/signature.hpp"

namespace hyplat {

/// A nondegenerate symmetric bilinear form over a multiquadratic field.
class QuadraticSpace {
 public:
  /// Validates symmetry and nondegeneracy at the identity embedding.
  static QuadraticSpace make(FMatrix form, MQField::Ptr field);

  std::size_t dim() const { return form_.rows(); }
  const FMatrix& form() const { return form_; }
  const MQField::Ptr& field() const { return field_; }

  /// Parse {"field":[2,5], "matrix":[["1","0"],["0","-(1+sqrt(5))/4"]]}.
  static QuadraticSpace from_json(const std::string& json_text);

 private:
  QuadraticSpace(FMatrix form, MQField::Ptr field)
      : form_(std::move(form)), field_(std::move(field)) {}
  FMatrix form_;
  MQField::Ptr field_;
};

/// A subspace given by a basis of linearly independent column vectors.
class Subspace {
 public:
  /// Columns of `basis` are the spanning vectors; exact rank must equal the
  /// column count.
  static Subspace make(FMatrix basis_columns);
  /// The zero subspace of the given ambient dimension.
  static Subspace zero(std::size_t ambient_dim, const MQField::Ptr& field);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const FMatrix& basis() const { return basis_; }

  /// Same column span (mutual containment, exact).
  bool same_span(const Subspace& o) const;
  bool contains_vector(const FMatrix& column) const;

 private:
  explicit Subspace(FMatrix b) : basis_(std::move(b)) {}
  FMatrix basis_;
};

/// An exact isometry of a quadratic space: M^T Q M == Q.
struct Isometry {
  FMatrix matrix;

  static Isometry make(const QuadraticSpace& q, FMatrix m);  // validates
};

struct AdmissibilityReport {
  std::vector<std::pair<std::vector<int>, SignatureTriple>> per_embedding;
  bool admissible = false;  // (n,1,0) at identity, (n+1,0,0) elsewhere
  SignatureTriple identity_signature;
};

/// Admissible Lorentzian form: signature (n,1) at the identity embedding and
/// positive definite under every non-identity embedding of the field.
AdmissibilityReport check_admissible(const QuadraticSpace& q);

struct TypeIInvolution {
  Isometry m;
  SignatureTriple restricted_signature;  // of the form restricted to V1
  /// True when the restriction has signature (dim V1 - 1, 1): the +1
  /// eigenspace meets the upper hyperboloid sheet and M represents an
  /// isometry of hyperbolic space.
  bool acts_on_hyperbolic_space = false;
};

/// The involution acting as +1 on v1 and -1 on its Q-orthogonal complement.
/// Throws DomainError when the restriction of the form to v1 is degenerate.
TypeIInvolution involution_from_subspace(const QuadraticSpace& q,
                                         const Subspace& v1);

/// Exact common fixed space: kernel of the stacked system (M_i - I) x = 0.
Subspace fixed_subspace(std::size_t ambient_dim, const MQField::Ptr& field,
                        std::span<const Isometry> isoms);

struct RestrictedForm {
  FMatrix gram;  // B^T Q B for the subspace basis B
  SignatureTriple sig;
  bool meets_hyperbolic_space = false;  // negative inertia index exactly 1
};

RestrictedForm restricted_form(const QuadraticSpace& q, const Subspace& s);

struct IsotropyResult {
  enum class Kind { Isotropic, AnisotropicCertified, Unknown };
  enum class Uniformity { Uniform, NonUniform, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<Integer> witness;  // nonzero w with w^T Q w == 0, if found
  Uniformity uniformity = Uniformity::Unknown;
  long height_used = 0;
  std::string note;
};

/// Search for a rational isotropic vector of max-norm <= height_bound.
/// Over Q with dim >= 5 the bound is doubled (up to a cap) until Meyer's
/// guaranteed witness appears. For admissible forms over a genuine extension
/// of Q the form is certified anisotropic. Uniformity follows Godement:
/// uniform iff anisotropic.
IsotropyResult rational_isotropy(const QuadraticSpace& q, long height_bound);

}  // namespace hyplat
