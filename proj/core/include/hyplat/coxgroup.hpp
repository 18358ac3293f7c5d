#pragma once

#include <string>
#include <vector>

#include "hyplat/coxeter.hpp"
#include "hyplat/lorentz.hpp"

namespace hyplat {

/// A word in the generators, as node indices into the diagram/Gram order.
using Word = std::vector<std::size_t>;

/// Parse "abab" (single-character node names) or "a b a b" / "a,b,a,b".
Word parse_word(const std::vector<std::string>& nodes, const std::string& text);
std::string word_str(const std::vector<std::string>& nodes, const Word& w);

/// The exact geometric (Tits) representation of the Coxeter system: the
/// generator for node i acts by e_j -> e_j - 2 g_ij e_i. Construction
/// verifies rho_i^2 = I and rho_i^T G rho_i = G for every generator.
struct GeometricRep {
  GramMatrix gram;
  std::vector<FMatrix> generators;

  std::size_t size() const { return gram.size(); }
};

GeometricRep geometric_rep(const GramMatrix& g);

/// Product of generator matrices left-to-right; the empty word is the
/// identity.
FMatrix evaluate_word(const GeometricRep& rep, const Word& w);

struct OrderResult {
  enum class Kind { Finite, ExceedsCap, InfiniteHeuristic };
  Kind kind = Kind::ExceedsCap;
  int order = 0;  // for Finite
  int cap = 0;
  std::string evidence;  // growth note for InfiniteHeuristic

  bool finite() const { return kind == Kind::Finite; }
  std::string str() const;
};

/// Exact order by iterating powers up to `cap`. If the maximal coefficient
/// bit-size grows strictly for 16 consecutive powers the element is reported
/// as infinite-order (loxodromic entries blow up); otherwise ExceedsCap.
OrderResult element_order(const FMatrix& g, int cap = 512);

/// Permutation of node indices; perm[i] is the image of node i.
using NodePermutation = std::vector<std::size_t>;

/// Parse cycle notation "(a b)(c d)(e f)" over the given node names.
NodePermutation parse_permutation(const std::vector<std::string>& nodes,
                                  const std::string& text);

/// The permutation matrix P with P e_i = e_{perm(i)}. Throws InputError
/// naming an offending pair unless the permutation preserves all edge
/// labels (equivalently the Gram matrix), in which case P is an isometry.
FMatrix diagram_automorphism(const CoxeterDiagram& d, const GramMatrix& g,
                             const NodePermutation& perm);

/// All label-preserving permutations of the diagram (identity included).
std::vector<NodePermutation> diagram_automorphism_group(
    const CoxeterDiagram& d);

struct CentralizerHit {
  Word word;  // a shortest word for the element
  FMatrix matrix;
};

/// Breadth-first enumeration of group elements by words of length <= maxlen
/// with exact matrix deduplication; returns the elements commuting with g,
/// ordered by (word length, lexicographic word).
std::vector<CentralizerHit> centralizer_search(const GeometricRep& rep,
                                               const FMatrix& g,
                                               int maxlen = 6);

/// The matrix A with g B = B A, where B is the basis matrix of h. Throws
/// DomainError when g does not map h onto itself (checked exactly).
FMatrix induced_action(const FMatrix& g, const Subspace& h);

/// Orders of a1*a2, a2*a3, a1*a3 (the triangle-group signature of three
/// involutions).
std::array<OrderResult, 3> triangle_signature(const FMatrix& a1,
                                              const FMatrix& a2,
                                              const FMatrix& a3, int cap = 512);

}  // namespace hyplat
