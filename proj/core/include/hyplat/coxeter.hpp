#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyplat/matrix.hpp"
#include "hyplat/mqfield.hpp"
#include "hyplat/signature.hpp"

namespace hyplat {

/// Edge label of a Coxeter diagram: a finite order m >= 3, infinity
/// (parallel hyperplanes, Gram entry -1), or a dotted edge carrying an exact
/// weight < -1 (diverging hyperplanes). An absent edge means label 2.
struct EdgeLabel {
  enum class Kind { Finite, Infinity, Dotted };
  Kind kind = Kind::Finite;
  int m = 2;                           // for Finite
  std::optional<FieldElement> weight;  // for Dotted

  static EdgeLabel finite(int m) { return {Kind::Finite, m, std::nullopt}; }
  static EdgeLabel infinity() { return {Kind::Infinity, 0, std::nullopt}; }
  static EdgeLabel dotted(FieldElement w) {
    return {Kind::Dotted, 0, std::move(w)};
  }
  bool operator==(const EdgeLabel& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Finite) return m == o.m;
    if (kind == Kind::Dotted) return *weight == *o.weight;
    return true;
  }
  std::string str() const;
};

class CoxeterDiagram {
 public:
  CoxeterDiagram(std::vector<std::string> nodes);

  void add_edge(std::size_t u, std::size_t v, EdgeLabel label);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  std::size_t node_index(const std::string& name) const;  // throws InputError
  /// Label between two distinct nodes (Finite m=2 when no edge present).
  const EdgeLabel& label(std::size_t u, std::size_t v) const;
  const std::map<std::pair<std::size_t, std::size_t>, EdgeLabel>& edges()
      const {
    return edges_;
  }

 private:
  std::vector<std::string> nodes_;
  std::map<std::pair<std::size_t, std::size_t>, EdgeLabel> edges_;  // u < v
};

/// Parse the JSON diagram document:
///   {"nodes": ["a","b",...],
///    "edges": [{"u":"a","v":"b","label":4},
///              {"u":...,"v":...,"label":"inf"},
///              {"u":...,"v":...,"dotted":"-3/2"}]}
/// Dotted weights use the field-expression grammar; weight < -1 is enforced.
CoxeterDiagram parse_diagram(const std::string& json_text);
std::string diagram_to_json(const CoxeterDiagram& d);

/// Gram matrix of the diagram plus its coefficient field and node names.
struct GramMatrix {
  std::vector<std::string> nodes;
  FMatrix entries;
  MQField::Ptr field;

  std::size_t size() const { return entries.rows(); }
};

/// g_ii = 1, g_ij = -cos(pi/m) for finite labels, -1 for infinity, the given
/// weight for dotted edges. Finite labels outside {2,...,6} are rejected:
/// their cosines leave the multiquadratic universe. (DomainError)
GramMatrix gram_from_diagram(const CoxeterDiagram& d);

/// All cyclic products of matrix entries over simple cycles (no repeated
/// index) of length >= 1, deduplicated. Length-1 terms are the diagonal
/// entries; length-2 terms are a_ij * a_ji for every pair. Products over
/// arbitrary closed walks factor into simple-cycle products, so this set
/// generates the same field and yields the same integrality verdicts.
std::vector<FieldElement> cyc_products(const FMatrix& a);

/// k(P): field generated by the cyclic products of the Gram matrix.
MQField::Ptr ground_field(const GramMatrix& g);
/// K(P): field generated by all entries.
MQField::Ptr entries_field(const GramMatrix& g);

struct EmbeddingVerdict {
  std::vector<int> signs;  // over K(P) generators
  SignatureTriple sig;
  bool psd = false;
};

struct VinbergReport {
  MQField::Ptr big_field;     // K(P)
  MQField::Ptr ground;        // k(P)
  SignatureTriple identity_signature;
  bool v1 = true;             // multiquadratic fields are totally real
  std::vector<EmbeddingVerdict> v2;  // embeddings with sigma|k != id
  bool v2_ok = true;
  std::vector<FieldElement> cyc2;         // Cyc(2G)
  std::vector<FieldElement> v3_failures;  // non-integral members of Cyc(2G)

  enum class Verdict { Arithmetic, ProperlyQuasiArithmetic, Neither };
  Verdict verdict = Verdict::Neither;
  std::string verdict_str() const;
};

/// Vinberg's arithmeticity criterion. Requires the Gram matrix to have
/// exactly one negative inertia index at the identity embedding (a
/// hyperbolic polytope datum); throws DomainError otherwise.
VinbergReport vinberg_check(const CoxeterDiagram& d);
VinbergReport vinberg_check(const GramMatrix& g);

struct OddCycleResult {
  bool acyclic = true;
  std::vector<std::size_t> witness;  // a cycle of odd-labeled edges if not
};

/// True iff the subgraph of edges with odd finite labels (3, 5) is acyclic.
OddCycleResult odd_cycle_check(const CoxeterDiagram& d);

enum class VertexKind { Elliptic, Ideal, HyperbolicExcess };

/// For an (n+1)-facet simplex datum: classify the vertex opposite each node
/// by the signature of the principal submatrix on the other n nodes.
/// Requires signature (n,1,0); throws DomainError otherwise.
std::vector<VertexKind> classify_simplex_vertices(const CoxeterDiagram& d);
std::vector<VertexKind> classify_simplex_vertices(const GramMatrix& g);

std::string vertex_kind_str(VertexKind k);

}  // namespace hyplat
