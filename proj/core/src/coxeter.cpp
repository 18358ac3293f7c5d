#include "hyplat/coxeter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hyplat/expr.hpp"
#include "hyplat/polynomial.hpp"

namespace hyplat {

using nlohmann::json;

std::string EdgeLabel::str() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(m);
    case Kind::Infinity:
      return "inf";
    case Kind::Dotted:
      return "dotted(" + weight->str() + ")";
  }
  return "?";
}

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> nodes)
    : nodes_(std::move(nodes)) {
  std::set<std::string> seen;
  for (const auto& n : nodes_) {
    if (n.empty()) throw InputError("empty node name");
    if (!seen.insert(n).second)
      throw InputError("duplicate node name '" + n + "'");
  }
}

std::size_t CoxeterDiagram::node_index(const std::string& name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i] == name) return i;
  throw InputError("unknown node reference '" + name + "'");
}

void CoxeterDiagram::add_edge(std::size_t u, std::size_t v, EdgeLabel label) {
  if (u == v) throw InputError("self-loop on node '" + nodes_[u] + "'");
  if (u > v) std::swap(u, v);
  if (edges_.count({u, v}))
    throw InputError("duplicate edge between '" + nodes_[u] + "' and '" +
                     nodes_[v] + "'");
  if (label.kind == EdgeLabel::Kind::Finite && label.m < 3)
    throw InputError("explicit edge label must be >= 3 (label 2 is implicit)");
  if (label.kind == EdgeLabel::Kind::Dotted) {
    // weight < -1 at the identity embedding: diverging hyperplanes
    FieldElement shifted = *label.weight + Rational(1);
    if (shifted.sign() >= 0)
      throw InputError("dotted weight " + label.weight->str() +
                       " must be < -1");
  }
  edges_.insert({{u, v}, std::move(label)});
}

const EdgeLabel& CoxeterDiagram::label(std::size_t u, std::size_t v) const {
  static const EdgeLabel kTwo = EdgeLabel::finite(2);
  if (u > v) std::swap(u, v);
  auto it = edges_.find({u, v});
  return it == edges_.end() ? kTwo : it->second;
}

CoxeterDiagram parse_diagram(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
    throw InputError("diagram document must contain a \"nodes\" array");
  std::vector<std::string> nodes;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_string()) throw InputError("node names must be strings");
    nodes.push_back(n.get<std::string>());
  }
  CoxeterDiagram d(std::move(nodes));
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v"))
        throw InputError("edge entries need \"u\" and \"v\"");
      std::size_t u = d.node_index(e["u"].get<std::string>());
      std::size_t v = d.node_index(e["v"].get<std::string>());
      if (e.contains("dotted")) {
        FieldExtender ext;
        FieldElement w = ext.parse(e["dotted"].get<std::string>());
        d.add_edge(u, v, EdgeLabel::dotted(std::move(w)));
      } else if (e.contains("label")) {
        const auto& l = e["label"];
        if (l.is_string()) {
          std::string s = l.get<std::string>();
          if (s == "inf" || s == "infinity")
            d.add_edge(u, v, EdgeLabel::infinity());
          else
            throw InputError("unsupported label \"" + s + "\"");
        } else if (l.is_number_integer()) {
          int m = l.get<int>();
          if (m < 2)
            throw InputError("edge label must be >= 2");
          if (m > 6)
            throw DomainError("unsupported label " + std::to_string(m) +
                              ": cos(pi/" + std::to_string(m) +
                              ") is not multiquadratic (supported: 2..6, "
                              "inf, dotted)");
          if (m == 2) continue;  // explicit right angle: same as no edge
          d.add_edge(u, v, EdgeLabel::finite(m));
        } else {
          throw InputError("edge label must be an integer or \"inf\"");
        }
      } else {
        throw InputError("edge entries need \"label\" or \"dotted\"");
      }
    }
  }
  return d;
}

std::string diagram_to_json(const CoxeterDiagram& d) {
  json doc;
  doc["nodes"] = d.nodes();
  doc["edges"] = json::array();
  for (const auto& [uv, label] : d.edges()) {
    json e;
    e["u"] = d.nodes()[uv.first];
    e["v"] = d.nodes()[uv.second];
    switch (label.kind) {
      case EdgeLabel::Kind::Finite:
        e["label"] = label.m;
        break;
      case EdgeLabel::Kind::Infinity:
        e["label"] = "inf";
        break;
      case EdgeLabel::Kind::Dotted:
        e["dotted"] = label.weight->str();
        break;
    }
    doc["edges"].push_back(e);
  }
  return doc.dump(2);
}

namespace {

// -cos(pi/m) for the supported labels, over the given field.
FieldElement gram_entry(const EdgeLabel& label, const MQField::Ptr& field) {
  switch (label.kind) {
    case EdgeLabel::Kind::Infinity:
      return field->constant(Rational(-1));
    case EdgeLabel::Kind::Dotted:
      return label.weight->lift_to(field);
    case EdgeLabel::Kind::Finite:
      switch (label.m) {
        case 2:
          return field->zero();
        case 3:
          return field->constant(Rational(-1, 2));
        case 4:
          return field->radical(2, Rational(-1, 2));
        case 5:
          // -cos(pi/5) = -(1+sqrt 5)/4
          return field->constant(Rational(-1, 4)) +
                 field->radical(5, Rational(-1, 4));
        case 6:
          return field->radical(3, Rational(-1, 2));
        default:
          throw DomainError(
              "unsupported label " + std::to_string(label.m) +
              ": cos(pi/" + std::to_string(label.m) +
              ") is not multiquadratic (supported: 2..6, inf, dotted)");
      }
  }
  throw InternalError("unhandled label kind");
}

}  // namespace

GramMatrix gram_from_diagram(const CoxeterDiagram& d) {
  // Assemble the field first: radicands from labels and dotted weights.
  std::vector<Integer> rads;
  for (const auto& [uv, label] : d.edges()) {
    if (label.kind == EdgeLabel::Kind::Finite) {
      if (label.m == 4) rads.push_back(2);
      if (label.m == 5) rads.push_back(5);
      if (label.m == 6) rads.push_back(3);
      if (label.m < 2 || label.m > 6)
        throw DomainError("unsupported label " + std::to_string(label.m) +
                          ": cos(pi/" + std::to_string(label.m) +
                          ") is not multiquadratic (supported: 2..6, inf, dotted)");
    } else if (label.kind == EdgeLabel::Kind::Dotted) {
      for (const Integer& r : label.weight->support_radicands())
        rads.push_back(r);
    }
  }
  std::sort(rads.begin(), rads.end());
  MQField::Ptr field = MQField::span(rads);

  std::size_t n = d.size();
  FMatrix g(n, n, field->zero());
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = field->one();
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = gram_entry(d.label(i, j), field);
      g(j, i) = g(i, j);
    }
  }
  return {d.nodes(), std::move(g), field};
}

std::vector<FieldElement> cyc_products(const FMatrix& a) {
  std::size_t n = a.rows();
  if (n != a.cols()) throw InternalError("cyc_products: non-square matrix");
  std::set<FieldElement> seen;
  std::vector<FieldElement> out;
  auto emit = [&](const FieldElement& x) {
    if (seen.insert(x).second) out.push_back(x);
  };
  for (std::size_t i = 0; i < n; ++i) emit(a(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) emit(a(i, j) * a(j, i));
  // Simple cycles of length >= 3: smallest index first, then permutations of
  // the rest; each undirected cycle is visited twice, which dedup absorbs.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t k = 3; k <= n; ++k) {
    std::vector<std::size_t> comb(k);
    // iterate over k-subsets
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
      // permutations of c[1..] with c[0] fixed
      std::vector<std::size_t> perm(c.begin() + 1, c.end());
      std::sort(perm.begin(), perm.end());
      do {
        FieldElement p = a(c[0], perm[0]);
        for (std::size_t t = 0; t + 1 < perm.size(); ++t)
          p = p * a(perm[t], perm[t + 1]);
        p = p * a(perm.back(), c[0]);
        emit(p);
      } while (std::next_permutation(perm.begin(), perm.end()));
      // next k-subset of {0..n-1}
      std::size_t i = k;
      while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

MQField::Ptr ground_field(const GramMatrix& g) {
  return subfield_generated(cyc_products(g.entries));
}

MQField::Ptr entries_field(const GramMatrix& g) {
  std::vector<FieldElement> entries;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      entries.push_back(g.entries(i, j));
  return subfield_generated(entries);
}

std::string VinbergReport::verdict_str() const {
  switch (verdict) {
    case Verdict::Arithmetic:
      return "arithmetic";
    case Verdict::ProperlyQuasiArithmetic:
      return "properly-quasi-arithmetic";
    case Verdict::Neither:
      return "neither";
  }
  return "?";
}

VinbergReport vinberg_check(const GramMatrix& g) {
  VinbergReport rep;
  rep.identity_signature = signature(g.entries);
  if (rep.identity_signature.negative != 1)
    throw DomainError("Gram matrix has signature " +
                      rep.identity_signature.str() +
                      " at the identity embedding; not a hyperbolic polytope");
  rep.big_field = entries_field(g);
  rep.ground = ground_field(g);
  rep.v1 = true;  // multiquadratic fields are totally real by construction

  // (V2): embeddings of K(P) restricting non-trivially to k(P) must make the
  // Gram form positive semidefinite. The Gram matrix lives in a field that
  // may be larger than K(P) only through unused generators, so embeddings of
  // the ambient field that fix K(P) pointwise are redundant; we enumerate
  // embeddings of the ambient field and key them by their action on K(P).
  const MQField::Ptr ambient = g.field;
  std::set<std::vector<int>> seen_actions;
  for (const Embedding& e : Embedding::all(ambient)) {
    std::vector<int> k_signs, big_signs;
    for (const Integer& gen : rep.ground->generators())
      k_signs.push_back(e.sign_of_radicand(gen));
    for (const Integer& gen : rep.big_field->generators())
      big_signs.push_back(e.sign_of_radicand(gen));
    bool k_moved = std::any_of(k_signs.begin(), k_signs.end(),
                               [](int s) { return s < 0; });
    if (!k_moved) continue;
    if (!seen_actions.insert(big_signs).second) continue;
    EmbeddingVerdict v;
    v.signs = big_signs;
    v.sig = signature_at(g.entries, e);
    v.psd = v.sig.positive_semidefinite();
    rep.v2.push_back(std::move(v));
  }
  rep.v2_ok = std::all_of(rep.v2.begin(), rep.v2.end(),
                          [](const EmbeddingVerdict& v) { return v.psd; });

  // (V3): Cyc(2G) must consist of algebraic integers.
  FMatrix doubled = g.entries.map(
      [](const FieldElement& x) { return x * Rational(2); });
  rep.cyc2 = cyc_products(doubled);
  for (const FieldElement& c : rep.cyc2)
    if (!is_algebraic_integer(c)) rep.v3_failures.push_back(c);

  if (rep.v1 && rep.v2_ok)
    rep.verdict = rep.v3_failures.empty()
                      ? VinbergReport::Verdict::Arithmetic
                      : VinbergReport::Verdict::ProperlyQuasiArithmetic;
  else
    rep.verdict = VinbergReport::Verdict::Neither;
  return rep;
}

VinbergReport vinberg_check(const CoxeterDiagram& d) {
  return vinberg_check(gram_from_diagram(d));
}

OddCycleResult odd_cycle_check(const CoxeterDiagram& d) {
  std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [uv, label] : d.edges()) {
    if (label.kind == EdgeLabel::Kind::Finite && label.m % 2 == 1) {
      adj[uv.first].push_back(uv.second);
      adj[uv.second].push_back(uv.first);
    }
  }
  // DFS over the odd-label subgraph; in an undirected DFS every non-tree
  // edge is a back edge, so a visited non-parent neighbor closes a cycle.
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> parent(n, SIZE_MAX);
  std::function<std::optional<std::vector<std::size_t>>(std::size_t,
                                                        std::size_t)>
      dfs = [&](std::size_t u,
                std::size_t from) -> std::optional<std::vector<std::size_t>> {
    visited[u] = true;
    for (std::size_t v : adj[u]) {
      if (v == from) continue;
      if (visited[v]) {
        std::vector<std::size_t> cycle{u};
        for (std::size_t w = u; w != v;) {
          w = parent[w];
          cycle.push_back(w);
        }
        return cycle;
      }
      parent[v] = u;
      if (auto c = dfs(v, u)) return c;
    }
    return std::nullopt;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    if (auto c = dfs(root, SIZE_MAX)) {
      OddCycleResult r;
      r.acyclic = false;
      r.witness = *c;
      return r;
    }
  }
  return {};
}

std::vector<VertexKind> classify_simplex_vertices(const GramMatrix& g) {
  std::size_t n = g.size();
  SignatureTriple full = signature(g.entries);
  if (full.negative != 1 || full.zero != 0)
    throw DomainError("simplex vertex classification needs signature (n,1), got " +
                      full.str());
  std::vector<VertexKind> out;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (i != v) keep.push_back(i);
    SignatureTriple s = signature(g.entries.submatrix(keep, keep));
    if (s.positive_definite())
      out.push_back(VertexKind::Elliptic);
    else if (s.positive_semidefinite())
      out.push_back(VertexKind::Ideal);
    else
      out.push_back(VertexKind::HyperbolicExcess);
  }
  return out;
}

std::vector<VertexKind> classify_simplex_vertices(const CoxeterDiagram& d) {
  return classify_simplex_vertices(gram_from_diagram(d));
}

std::string vertex_kind_str(VertexKind k) {
  switch (k) {
    case VertexKind::Elliptic:
      return "elliptic";
    case VertexKind::Ideal:
      return "ideal";
    case VertexKind::HyperbolicExcess:
      return "hyperbolic-excess";
  }
  return "?";
}

}  // namespace hyplat
