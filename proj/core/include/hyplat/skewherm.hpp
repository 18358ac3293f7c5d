#pragma once

#include <optional>
#include <vector>

#include "hyplat/quaternion.hpp"
#include "hyplat/signature.hpp"

namespace hyplat {

/// A vector in the right D-module D^m (scalars act on the right; matrices
/// act on the left).
using DVector = std::vector<Quaternion>;

using QMatrix = Matrix<Quaternion>;

/// Conjugate transpose: (M*)_ij = (M_ji)*.
QMatrix conjugate_transpose(const QMatrix& m);

/// Quaternionic rank over a division algebra, by row reduction with
/// invertible pivots. Throws DomainError when a nonzero zero-norm pivot
/// blocks the reduction (possible only in split algebras).
std::size_t quat_rank(QMatrix m);

/// Inverse of a square quaternion matrix (division-algebra pivoting).
QMatrix quat_inverse(const QMatrix& m);

struct FormValidation {
  bool skew_hermitian = false;
  std::vector<std::pair<std::size_t, std::size_t>> symmetry_offenders;
  enum class Rank { Full, Degenerate, Undecided } rank_state = Rank::Undecided;
  std::string note;
  bool valid() const {
    return skew_hermitian && rank_state == Rank::Full;
  }
};

/// A skew-Hermitian form F(x,y) = sum x_i* a_ij y_j on D^m, with Gram
/// matrix satisfying A* = -A. Construction enforces the symmetry; rank is
/// recorded and enforced by the operations that need nondegeneracy.
class SkewHermitianForm {
 public:
  /// Throws InputError on a symmetry violation; degenerate forms construct
  /// (the validation report records their rank state).
  static SkewHermitianForm make(QuaternionAlgebra::Ptr alg, QMatrix gram);
  /// Non-throwing validation report for diagnostics.
  static FormValidation validate(const QuaternionAlgebra::Ptr& alg,
                                 const QMatrix& gram);

  /// {"algebra":{"a":"-1","b":"-1"},
  ///  "gram":[[{"w":"0","x":"0","y":"1","z":"0"}, ...], ...]}
  static SkewHermitianForm from_json(const std::string& json_text);

  std::size_t dim() const { return gram_.rows(); }
  const QMatrix& gram() const { return gram_; }
  const QuaternionAlgebra::Ptr& algebra() const { return alg_; }
  FormValidation::Rank rank_state() const { return rank_state_; }
  /// Throws InputError unless the form is verified nondegenerate.
  void require_nondegenerate() const;

  DVector basis_vector(std::size_t t) const;

 private:
  SkewHermitianForm(QuaternionAlgebra::Ptr alg, QMatrix gram,
                    FormValidation::Rank rank_state)
      : alg_(std::move(alg)),
        gram_(std::move(gram)),
        rank_state_(rank_state) {}
  QuaternionAlgebra::Ptr alg_;
  QMatrix gram_;
  FormValidation::Rank rank_state_;
};

/// F(x, y) = sum_{i,j} x_i* a_ij y_j. Right-linear in y, conjugate-linear
/// in x: F(x, y q) = F(x,y) q and F(x q, y) = q* F(x,y).
Quaternion evaluate(const SkewHermitianForm& f, const DVector& x,
                    const DVector& y);

/// Thrown by Gram-Schmidt when F(y,y) = 0 for a nonzero y: a certified
/// isotropic vector, contradicting the division hypothesis or the
/// admissible-signature hypothesis.
class IsotropicVectorError : public DomainError {
 public:
  IsotropicVectorError(DVector v, std::string msg)
      : DomainError(std::move(msg)), witness(std::move(v)) {}
  DVector witness;
};

/// The paper's quaternionic Gram-Schmidt: proj_y(x) = y F(y,y)^{-1} F(y,x),
/// y_i = x_i - sum_{j<i} proj_{y_j}(x_i). Requires a division algebra and
/// independent input vectors.
std::vector<DVector> gram_schmidt(const SkewHermitianForm& f,
                                  const std::vector<DVector>& vectors);

struct OrthogonalDecomposition {
  std::vector<DVector> basis1;      // the submodule D_1
  std::vector<DVector> basis_perp;  // D_1^perp
};

/// D_1^perp = {x : F(x,y) = 0 for all y in D_1}, computed by completing d1
/// to a basis and orthogonalizing. Requires nondegenerate restriction.
OrthogonalDecomposition orthogonal_complement(const SkewHermitianForm& f,
                                              const std::vector<DVector>& d1);

struct TypeIIInvolution {
  QMatrix theta;  // acts as +1 on D_1, -1 on D_1^perp
  /// Signature of F restricted to D_1 in the split-at-identity sense;
  /// absent when neither algebra parameter is a positive rational.
  std::optional<SignatureTriple> restricted_signature;
  /// True when the restricted signature is (2l-1, 1): theta then acts on
  /// hyperbolic space with fixed set of dimension 2l-1.
  bool hyperbolic = false;
};

TypeIIInvolution involution_from_submodule(const SkewHermitianForm& f,
                                           const std::vector<DVector>& d1);

struct AssociatedForm {
  FMatrix sym;              // 2m x 2m symmetric matrix
  MQField::Ptr field;       // base field extended by sqrt(a)
  FieldElement sqrt_a;
};

/// The symmetric bilinear form f with F(x,y) = f(x,y) (i - sqrt(a)) j on the
/// +sqrt(a) eigenspace of right multiplication by i, spanned by
/// e_t (i + sqrt(a)) and e_t (i - sqrt(a)) j. Requires the parameter a to be
/// a positive rational; the a = 1 case is the classical D(1,1) identity.
/// Internal consistency (the 1- and i-components vanish and the j-component
/// is -sqrt(a) times the k-component) is asserted.
AssociatedForm associated_symmetric_form(const SkewHermitianForm& f);

/// Signature of F^sigma for an embedding of the base field, through the
/// associated symmetric form; parameters are embedded first and swapped via
/// D(a,b) ~ D(b,a) when only sigma(b) > 0. Returns nullopt when the algebra
/// is ramified at a non-identity embedding; throws DomainError when both
/// parameters are negative at the identity.
std::optional<SignatureTriple> signature_of_form(const SkewHermitianForm& f,
                                                 const Embedding& e);

struct FormAdmissibility {
  std::vector<std::pair<std::vector<int>, std::optional<SignatureTriple>>>
      per_embedding;  // nullopt = ramified there
  bool admissible = false;  // (2m-1,1) at identity, (2m,0) split elsewhere
  SignatureTriple identity_signature;
};

FormAdmissibility form_admissibility(const SkewHermitianForm& f);

}  // namespace hyplat
