#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <hyplat/coxgroup.hpp>

#include "test_util.hpp"

using namespace hyplat;
using namespace hyplat::testutil;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(HYPLAT_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CoxeterDiagram load(const std::string& name) {
  return parse_diagram(slurp(name));
}

GramMatrix pair_gram(int label) {
  std::ostringstream os;
  os << R"({"nodes":["a","b"],"edges":[{"u":"a","v":"b","label":)" << label
     << "}]}";
  return gram_from_diagram(parse_diagram(os.str()));
}

}  // namespace

TEST_CASE("geometric representation basics") {
  auto f = MQField::rationals();
  FMatrix one(1, 1, f->one());
  GeometricRep rep1 = geometric_rep(GramMatrix{{"a"}, one, f});
  CHECK(rep1.generators[0](0, 0) == f->constant(Rational(-1)));

  GramMatrix g2 = gram_from_diagram(
      parse_diagram(R"({"nodes":["a","b"],"edges":[]})"));
  GeometricRep rep2 = geometric_rep(g2);
  CHECK(rep2.generators[0] * rep2.generators[1] ==
        rep2.generators[1] * rep2.generators[0]);

  GramMatrix g4 = pair_gram(4);
  GeometricRep rep4 = geometric_rep(g4);
  OrderResult o = element_order(rep4.generators[0] * rep4.generators[1]);
  CHECK(o.finite());
  CHECK(o.order == 4);
}

TEST_CASE("generator invariants hold for every label") {
  for (int label : {2, 3, 4, 5, 6}) {
    GramMatrix g = pair_gram(label);
    GeometricRep rep = geometric_rep(g);  // construction asserts rho^2 = I
    OrderResult o = element_order(rep.generators[0] * rep.generators[1]);
    REQUIRE(o.finite());
    CHECK(o.order == label);
  }
}

TEST_CASE("word evaluation") {
  GramMatrix g = pair_gram(4);
  GeometricRep rep = geometric_rep(g);
  CHECK(evaluate_word(rep, {}).is_identity());
  CHECK(evaluate_word(rep, parse_word(g.nodes, "aa")).is_identity());
  FMatrix rot2 = evaluate_word(rep, parse_word(g.nodes, "abab"));
  CHECK_FALSE(rot2.is_identity());
  CHECK((rot2 * rot2).is_identity());
  CHECK_THROWS_AS(parse_word(g.nodes, "az"), InputError);
}

TEST_CASE("word evaluation is a homomorphism") {
  Rng rng(33);
  GramMatrix g = gram_from_diagram(load("triangle_246.json"));
  GeometricRep rep = geometric_rep(g);
  std::uniform_int_distribution<std::size_t> letter(0, 2);
  for (int t = 0; t < 50; ++t) {
    Word w1, w2;
    for (int i = 0; i < t % 7; ++i) w1.push_back(letter(rng));
    for (int i = 0; i < (t + 3) % 5; ++i) w2.push_back(letter(rng));
    Word cat = w1;
    cat.insert(cat.end(), w2.begin(), w2.end());
    CHECK(evaluate_word(rep, cat) ==
          evaluate_word(rep, w1) * evaluate_word(rep, w2));
  }
}

TEST_CASE("element order: identity and caps") {
  GramMatrix g = pair_gram(6);
  GeometricRep rep = geometric_rep(g);
  FMatrix ident = evaluate_word(rep, {});
  OrderResult o1 = element_order(ident);
  CHECK(o1.finite());
  CHECK(o1.order == 1);
  OrderResult o6 = element_order(rep.generators[0] * rep.generators[1]);
  CHECK(o6.order == 6);
}

TEST_CASE("element order: infinite-order elements are flagged") {
  // dotted edge: rho_a rho_b is loxodromic, entries blow up
  GramMatrix g = gram_from_diagram(load("dotted_pair.json"));
  GeometricRep rep = geometric_rep(g);
  OrderResult o = element_order(rep.generators[0] * rep.generators[1], 128);
  CHECK(o.kind == OrderResult::Kind::InfiniteHeuristic);

  // infinity label: parabolic, polynomial growth; either outcome is sound
  GramMatrix gi = gram_from_diagram(parse_diagram(
      R"({"nodes":["a","b"],"edges":[{"u":"a","v":"b","label":"inf"}]})"));
  GeometricRep repi = geometric_rep(gi);
  OrderResult oi = element_order(repi.generators[0] * repi.generators[1], 64);
  CHECK_FALSE(oi.finite());
}

TEST_CASE("diagram automorphisms") {
  CoxeterDiagram d = load("simplex5.json");
  GramMatrix g = gram_from_diagram(d);

  NodePermutation id = parse_permutation(d.nodes(), "()");
  CHECK(diagram_automorphism(d, g, id).is_identity());

  NodePermutation tau = parse_permutation(d.nodes(), "(a b)(c d)(e f)");
  FMatrix p = diagram_automorphism(d, g, tau);
  CHECK(p.transpose() * g.entries * p == g.entries);
  CHECK((p * p).is_identity());

  try {
    (void)diagram_automorphism(d, g, parse_permutation(d.nodes(), "(a c)"));
    CHECK(false);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("does not preserve labels") !=
          std::string::npos);
  }

  auto autos = diagram_automorphism_group(d);
  CHECK(autos.size() == 2);  // identity and tau only, out of 720 candidates
  CHECK(autos[1] == tau);
}

TEST_CASE("swap on a symmetric pair is a valid involution") {
  CoxeterDiagram d = parse_diagram(
      R"({"nodes":["a","b"],"edges":[{"u":"a","v":"b","label":4}]})");
  GramMatrix g = gram_from_diagram(d);
  FMatrix p = diagram_automorphism(d, g, parse_permutation(d.nodes(), "(a b)"));
  CHECK((p * p).is_identity());
  CHECK_FALSE(p.is_identity());
}

TEST_CASE("centralizer search on small groups") {
  // A1 x A1: everything commutes
  GramMatrix g = gram_from_diagram(
      parse_diagram(R"({"nodes":["a","b"],"edges":[]})"));
  GeometricRep rep = geometric_rep(g);
  auto all = centralizer_search(rep, evaluate_word(rep, {}), 4);
  CHECK(all.size() == 4);  // id, a, b, ab

  auto hits = centralizer_search(rep, rep.generators[0], 4);
  CHECK(hits.size() == 4);
  bool found_b = false;
  for (const auto& h : hits)
    if (h.word == Word{1}) found_b = true;
  CHECK(found_b);

  // results commute exactly and are closed under inversion in the radius
  GramMatrix g246 = gram_from_diagram(load("triangle_246.json"));
  GeometricRep rep246 = geometric_rep(g246);
  FMatrix target = evaluate_word(rep246, parse_word(g246.nodes, "pq"));
  auto hits2 = centralizer_search(rep246, target, 4);
  for (const auto& h : hits2) {
    CHECK(h.matrix * target == target * h.matrix);
    bool inverse_found = false;
    for (const auto& h2 : hits2)
      if ((h.matrix * h2.matrix).is_identity()) inverse_found = true;
    CHECK(inverse_found);
  }
}

TEST_CASE("induced action") {
  CoxeterDiagram d = load("simplex5.json");
  GramMatrix g = gram_from_diagram(d);
  GeometricRep rep = geometric_rep(g);
  NodePermutation tau = parse_permutation(d.nodes(), "(a b)(c d)(e f)");
  FMatrix p = diagram_automorphism(d, g, tau);
  QuadraticSpace space = QuadraticSpace::make(g.entries, g.field);
  Isometry ptau = Isometry::make(space, p);
  Subspace fix = fixed_subspace(6, g.field, std::span(&ptau, 1));
  REQUIRE(fix.dim() == 3);

  // identity induces identity; tau induces identity on its own fixed space
  FMatrix ident = FMatrix::identity(6, g.field->zero(), g.field->one());
  CHECK(induced_action(ident, fix).is_identity());
  CHECK(induced_action(p, fix).is_identity());

  // r1 = abab acts as a reflection (involution, not identity)
  FMatrix r1 = evaluate_word(rep, parse_word(d.nodes(), "abab"));
  FMatrix a1 = induced_action(r1, fix);
  CHECK_FALSE(a1.is_identity());
  CHECK((a1 * a1).is_identity());

  // a single generator does not preserve the fixed plane
  CHECK_THROWS_AS(induced_action(rep.generators[0], fix), DomainError);
}

TEST_CASE("triangle signatures") {
  auto f = MQField::rationals();
  // three pairwise commuting involutions: diag sign matrices
  FMatrix m1 = FMatrix::identity(3, f->zero(), f->one());
  FMatrix m2 = m1, m3 = m1;
  m1(0, 0) = f->constant(Rational(-1));
  m2(1, 1) = f->constant(Rational(-1));
  m3(2, 2) = f->constant(Rational(-1));
  auto tri = triangle_signature(m1, m2, m3, 16);
  CHECK(tri[0].order == 2);
  CHECK(tri[1].order == 2);
  CHECK(tri[2].order == 2);

  // dihedral label-4 pair plus a commuting reflection
  GramMatrix g = gram_from_diagram(parse_diagram(
      R"({"nodes":["a","b","c"],"edges":[{"u":"a","v":"b","label":4}]})"));
  GeometricRep rep = geometric_rep(g);
  auto tri2 = triangle_signature(rep.generators[0], rep.generators[1],
                                 rep.generators[2], 16);
  CHECK(tri2[0].order == 4);
  CHECK(tri2[1].order == 2);
  CHECK(tri2[2].order == 2);

  CHECK_THROWS_AS(
      triangle_signature(rep.generators[0] * rep.generators[1],
                         rep.generators[1], rep.generators[2], 16),
      InputError);
}

TEST_CASE("section 5: induced triangle group orders (8,4,2)") {
  CoxeterDiagram d = load("simplex5.json");
  GramMatrix g = gram_from_diagram(d);
  GeometricRep rep = geometric_rep(g);
  NodePermutation tau = parse_permutation(d.nodes(), "(a b)(c d)(e f)");
  FMatrix p = diagram_automorphism(d, g, tau);
  QuadraticSpace space = QuadraticSpace::make(g.entries, g.field);
  Isometry ptau = Isometry::make(space, p);
  Subspace fix = fixed_subspace(6, g.field, std::span(&ptau, 1));

  RestrictedForm rf = restricted_form(space, fix);
  CHECK(rf.sig == SignatureTriple{2, 1, 0});
  CHECK(rf.meets_hyperbolic_space);

  FMatrix i1 = induced_action(evaluate_word(rep, parse_word(d.nodes(), "abab")), fix);
  FMatrix i2 = induced_action(evaluate_word(rep, parse_word(d.nodes(), "cd")), fix);
  FMatrix i3 = induced_action(evaluate_word(rep, parse_word(d.nodes(), "efe")), fix);
  auto tri = triangle_signature(i1, i2, i3, 512);
  CHECK(tri[0].order == 8);
  CHECK(tri[1].order == 4);
  CHECK(tri[2].order == 2);

  // the centralizer search discovers the generator words
  auto hits = centralizer_search(rep, p, 4);
  std::vector<std::string> words;
  for (const auto& h : hits) words.push_back(word_str(d.nodes(), h.word));
  CHECK(words == std::vector<std::string>{"", "cd", "efe", "abab"});
}
