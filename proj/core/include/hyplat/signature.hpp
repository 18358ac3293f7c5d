#pragma once

#include "hyplat/matrix.hpp"
#include "hyplat/mqfield.hpp"

namespace hyplat {

struct SignatureTriple {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  bool operator==(const SignatureTriple&) const = default;
  int total() const { return positive + negative + zero; }
  bool positive_definite() const { return negative == 0 && zero == 0; }
  bool positive_semidefinite() const { return negative == 0; }
  std::string str() const {
    return "(" + std::to_string(positive) + "," + std::to_string(negative) +
           "," + std::to_string(zero) + ")";
  }
};

using FMatrix = Matrix<FieldElement>;

/// Exact signature of a symmetric matrix by simultaneous row/column
/// elimination (congruence diagonalization); pivot signs decided exactly.
/// Well-defined by Sylvester's law of inertia.
SignatureTriple signature(const FMatrix& sym);

/// Signature of the matrix obtained by applying the embedding entry-wise.
SignatureTriple signature_at(const FMatrix& sym, const Embedding& e);

/// Entry-wise embedding application.
FMatrix apply_embedding(const FMatrix& m, const Embedding& e);

}  // namespace hyplat
