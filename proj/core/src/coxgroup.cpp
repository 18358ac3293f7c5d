#include "hyplat/coxgroup.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace hyplat {

Word parse_word(const std::vector<std::string>& nodes,
                const std::string& text) {
  auto index_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == name) return i;
    throw InputError("unknown node name '" + name + "' in word");
  };
  Word w;
  if (text.find(' ') != std::string::npos ||
      text.find(',') != std::string::npos) {
    std::string token;
    for (char c : text + " ") {
      if (c == ' ' || c == ',') {
        if (!token.empty()) w.push_back(index_of(token));
        token.clear();
      } else {
        token += c;
      }
    }
    return w;
  }
  bool single_chars = std::all_of(nodes.begin(), nodes.end(),
                                  [](const std::string& n) { return n.size() == 1; });
  if (!single_chars)
    throw InputError("node names are not single characters; separate word letters with spaces or commas");
  for (char c : text) w.push_back(index_of(std::string(1, c)));
  return w;
}

std::string word_str(const std::vector<std::string>& nodes, const Word& w) {
  bool single_chars = std::all_of(nodes.begin(), nodes.end(),
                                  [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_chars && i) out += " ";
    out += nodes[w[i]];
  }
  return out;
}

GeometricRep geometric_rep(const GramMatrix& g) {
  std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!(g.entries(i, i) - g.field->one()).is_zero())
      throw InputError("Gram matrix must have unit diagonal");
  GeometricRep rep{g, {}};
  FMatrix ident = FMatrix::identity(n, g.field->zero(), g.field->one());
  for (std::size_t i = 0; i < n; ++i) {
    FMatrix r = ident;
    for (std::size_t j = 0; j < n; ++j)
      r(i, j) = r(i, j) - Rational(2) * g.entries(i, j);
    if (!(r * r == ident))
      throw InternalError("generator is not an involution");
    if (!(r.transpose() * g.entries * r == g.entries))
      throw InternalError("generator does not preserve the Gram form");
    rep.generators.push_back(std::move(r));
  }
  return rep;
}

FMatrix evaluate_word(const GeometricRep& rep, const Word& w) {
  FMatrix m = FMatrix::identity(rep.size(), rep.gram.field->zero(),
                                rep.gram.field->one());
  for (std::size_t i : w) {
    if (i >= rep.size()) throw InputError("word letter out of range");
    m = m * rep.generators[i];
  }
  return m;
}

std::string OrderResult::str() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(order);
    case Kind::ExceedsCap:
      return "exceeds-cap(" + std::to_string(cap) + ")";
    case Kind::InfiniteHeuristic:
      return "infinite(heuristic)";
  }
  return "?";
}

namespace {

// Max bit-size over all rational coefficients of all entries.
std::size_t matrix_height(const FMatrix& m) {
  std::size_t h = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [idx, c] : m(i, j).terms()) {
        h = std::max(h, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
        h = std::max(h, mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
      }
  return h;
}

}  // namespace

OrderResult element_order(const FMatrix& g, int cap) {
  if (g.rows() != g.cols()) throw InputError("element_order: non-square matrix");
  FMatrix ident = FMatrix::identity(g.rows(), g.zero_like(),
                                    g.zero_like().one_like());
  FMatrix power = g;
  std::size_t prev_height = matrix_height(g);
  int growth_streak = 0;
  constexpr int kGrowthStreak = 16;
  constexpr std::size_t kGrowthFloor = 48;  // bits; small matrices stay tiny
  for (int n = 1; n <= cap; ++n) {
    if (power == ident) return {OrderResult::Kind::Finite, n, cap, ""};
    std::size_t h = matrix_height(power);
    if (h > prev_height)
      ++growth_streak;
    else
      growth_streak = 0;
    prev_height = h;
    if (growth_streak >= kGrowthStreak && h >= kGrowthFloor) {
      std::ostringstream os;
      os << "coefficient size grew for " << growth_streak
         << " consecutive powers (now " << h << " bits at power " << n << ")";
      return {OrderResult::Kind::InfiniteHeuristic, 0, cap, os.str()};
    }
    power = power * g;
  }
  return {OrderResult::Kind::ExceedsCap, 0, cap, ""};
}

NodePermutation parse_permutation(const std::vector<std::string>& nodes,
                                  const std::string& text) {
  auto index_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == name) return i;
    throw InputError("unknown node name '" + name + "' in permutation");
  };
  NodePermutation perm(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) perm[i] = i;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  skip_ws();
  if (pos == text.size())
    throw InputError("empty permutation (use \"()\" for the identity)");
  if (text == "()") return perm;
  std::vector<bool> moved(nodes.size(), false);
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw InputError("expected '(' in cycle notation");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::string token;
      while (pos < text.size() && !std::isspace((unsigned char)text[pos]) &&
             text[pos] != ')' && text[pos] != ',')
        token += text[pos++];
      if (pos < text.size() && text[pos] == ',') ++pos;
      if (token.empty()) throw InputError("malformed cycle notation");
      std::size_t idx = index_of(token);
      if (moved[idx])
        throw InputError("node '" + token + "' appears twice in permutation");
      moved[idx] = true;
      cycle.push_back(idx);
    }
    if (cycle.size() < 2)
      throw InputError("cycles must have length >= 2");
    for (std::size_t i = 0; i < cycle.size(); ++i)
      perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return perm;
}

FMatrix diagram_automorphism(const CoxeterDiagram& d, const GramMatrix& g,
                             const NodePermutation& perm) {
  std::size_t n = d.size();
  if (perm.size() != n) throw InputError("permutation has wrong size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(d.label(i, j) == d.label(perm[i], perm[j])))
        throw InputError("permutation does not preserve labels: pair (" +
                         d.nodes()[i] + "," + d.nodes()[j] + ") has label " +
                         d.label(i, j).str() + " but its image (" +
                         d.nodes()[perm[i]] + "," + d.nodes()[perm[j]] +
                         ") has label " + d.label(perm[i], perm[j]).str());
  FMatrix p(n, n, g.field->zero());
  for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = g.field->one();
  if (!(p.transpose() * g.entries * p == g.entries))
    throw InternalError("label-preserving permutation fails the Gram check");
  return p;
}

std::vector<NodePermutation> diagram_automorphism_group(
    const CoxeterDiagram& d) {
  std::size_t n = d.size();
  NodePermutation perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<NodePermutation> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (!(d.label(i, j) == d.label(perm[i], perm[j]))) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<CentralizerHit> centralizer_search(const GeometricRep& rep,
                                               const FMatrix& g, int maxlen) {
  std::size_t n = rep.size();
  FMatrix ident = FMatrix::identity(n, rep.gram.field->zero(),
                                    rep.gram.field->one());
  // BFS by word length; dedupe on exact matrices. The shortest word reaching
  // an element first in (length, lex) order is the stored witness.
  std::map<FMatrix, Word> seen;
  seen.insert({ident, {}});
  std::vector<std::pair<FMatrix, Word>> frontier{{ident, {}}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::pair<FMatrix, Word>> next;
    for (const auto& [m, w] : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        FMatrix m2 = m * rep.generators[i];
        if (seen.count(m2)) continue;
        Word w2 = w;
        w2.push_back(i);
        seen.insert({m2, w2});
        next.push_back({std::move(m2), std::move(w2)});
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;  // group exhausted
  }
  std::vector<CentralizerHit> hits;
  for (const auto& [m, w] : seen)
    if (m * g == g * m) hits.push_back({w, m});
  std::sort(hits.begin(), hits.end(),
            [](const CentralizerHit& a, const CentralizerHit& b) {
              if (a.word.size() != b.word.size())
                return a.word.size() < b.word.size();
              return a.word < b.word;
            });
  return hits;
}

FMatrix induced_action(const FMatrix& g, const Subspace& h) {
  if (h.dim() == 0) throw InputError("induced_action: zero subspace");
  const FMatrix& b = h.basis();
  if (g.cols() != b.rows())
    throw InputError("induced_action: dimension mismatch");
  FMatrix gb = g * b;
  // Invariance check: every column of gB must lie in the span of B.
  std::vector<std::size_t> all_rows(b.rows());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  for (std::size_t j = 0; j < gb.cols(); ++j)
    if (!h.contains_vector(gb.submatrix(all_rows, {j})))
      throw DomainError("subspace is not invariant under the isometry");
  // Solve B A = gB via the normal equations; B has full column rank, so
  // B^T B is invertible and the solution is exact.
  FMatrix bt = b.transpose();
  FMatrix a = solve(bt * b, bt * gb);
  if (!(b * a == gb)) throw InternalError("induced action reconstruction failed");
  return a;
}

std::array<OrderResult, 3> triangle_signature(const FMatrix& a1,
                                              const FMatrix& a2,
                                              const FMatrix& a3, int cap) {
  for (const FMatrix* m : {&a1, &a2, &a3}) {
    FMatrix sq = (*m) * (*m);
    if (!sq.is_identity())
      throw InputError("triangle_signature arguments must be involutions");
  }
  return {element_order(a1 * a2, cap), element_order(a2 * a3, cap),
          element_order(a1 * a3, cap)};
}

}  // namespace hyplat
