// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of
// failures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include <hyplat/coxeter.hpp>
#include <hyplat/coxgroup.hpp>
#include <hyplat/lorentz.hpp>
#include <hyplat/polynomial.hpp>
#include <hyplat/quaternion.hpp>
#include <hyplat/skewherm.hpp>

#include "test_util.hpp"

using namespace hyplat;
using namespace hyplat::testutil;
using nlohmann::json;

namespace {

const std::string kBin = HYPLAT_CLI_BIN;
const std::string kData = HYPLAT_TEST_DATA;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!pass) ++g_failures;
}

struct Check {
  bool ok = true;
  std::string first_failure;
  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

std::string slurp(const std::string& name) {
  std::ifstream in(kData + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
             .count() /
         1000.0;
}

// 1. Section 5 pipeline through the CLI: fixed-subspace dimension 3,
//    restricted signature (2,1), product orders exactly (8,4,2); < 60 s.
void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  auto [code, out] = run_command(
      kBin + " fixsub " + kData +
      "/simplex5.json --perm \"(a b)(c d)(e f)\" --generators abab,cd,efe "
      "--json");
  c.expect(code == 0, "exit code " + std::to_string(code));
  if (code == 0) {
    json doc = json::parse(out);
    c.expect(doc["fixed_subspace"]["dimension"] == 3, "fix dim != 3");
    c.expect(doc["restricted_signature"] == json::array({2, 1, 0}),
             "restricted signature != (2,1)");
    c.expect(doc["orders"][0] == json({{"kind", "finite"}, {"order", 8}}),
             "order(r1 r2) != 8");
    c.expect(doc["orders"][1] == json({{"kind", "finite"}, {"order", 4}}),
             "order(r2 r3) != 4");
    c.expect(doc["orders"][2] == json({{"kind", "finite"}, {"order", 2}}),
             "order(r1 r3) != 2");
  }
  double secs = seconds_since(t0);
  c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s >= 60 s");
  report(1, c.ok,
         c.ok ? "section 5 fixsub: dim 3, signature (2,1), orders (8,4,2) in " +
                    std::to_string(secs) + " s"
              : c.first_failure);
}

// 2. Section 5 arithmeticity: verdict "neither", exactly 2 ideal vertices.
void criterion_2() {
  Check c;
  auto [code, out] =
      run_command(kBin + " analyze " + kData + "/simplex5.json --json");
  c.expect(code == 0, "exit code " + std::to_string(code));
  if (code == 0) {
    json doc = json::parse(out);
    c.expect(doc["vinberg"]["verdict"] == "neither", "verdict != neither");
    c.expect(doc["ideal_vertex_count"] == 2, "ideal vertices != 2");
  }
  report(2, c.ok,
         c.ok ? "section 5 analyze: verdict neither, 2 ideal vertices"
              : c.first_failure);
}

// 3. Transcription cross-check: tau is an automorphism and the only
//    nontrivial one among all 720 permutations.
void criterion_3() {
  Check c;
  CoxeterDiagram d = parse_diagram(slurp("simplex5.json"));
  GramMatrix g = gram_from_diagram(d);
  NodePermutation tau = parse_permutation(d.nodes(), "(a b)(c d)(e f)");
  try {
    diagram_automorphism(d, g, tau);
  } catch (const Error& e) {
    c.expect(false, std::string("tau rejected: ") + e.what());
  }
  auto autos = diagram_automorphism_group(d);
  c.expect(autos.size() == 2, "automorphism count " +
                                   std::to_string(autos.size()) + " != 2");
  if (autos.size() == 2) c.expect(autos[1] == tau, "nontrivial automorphism is not tau");
  report(3, c.ok,
         c.ok ? "tau validates; unique nontrivial automorphism among 720 "
                "permutations"
              : c.first_failure);
}

// 4. Vinberg criterion sanity: the (2,4,6) triangle is arithmetic over Q.
void criterion_4() {
  Check c;
  VinbergReport rep = vinberg_check(parse_diagram(slurp("triangle_246.json")));
  c.expect(rep.verdict == VinbergReport::Verdict::Arithmetic,
           "verdict != arithmetic");
  c.expect(rep.ground->rank() == 0, "ground field != Q");
  c.expect(rep.v2.empty(), "V2 not vacuous");
  std::set<Rational> cyc2;
  for (const auto& x : rep.cyc2) cyc2.insert(x.rational_value());
  c.expect(cyc2 == std::set<Rational>{Rational(0), Rational(2), Rational(3)},
           "Cyc(2G) != {0,2,3}");
  report(4, c.ok,
         c.ok ? "(2,4,6) triangle: arithmetic over Q, Cyc(2G) = {0,2,3}"
              : c.first_failure);
}

// 5. Quaternion identities on >= 10^3 random pairs per algebra; matrix
//    representation in D(1,1) is a homomorphism with det = N. Exact.
void criterion_5() {
  Check c;
  Rng rng(501);
  auto field = MQField::rationals();
  int pairs = 0;
  for (auto [a, b] :
       std::vector<std::pair<long, long>>{{1, 1}, {-1, -1}, {2, -5}}) {
    auto alg = QuaternionAlgebra::make(field->constant(Rational(a)),
                                       field->constant(Rational(b)));
    for (int t = 0; t < 350; ++t, ++pairs) {
      Quaternion p = rand_quaternion(rng, alg), q = rand_quaternion(rng, alg);
      c.expect((p * q).norm() == p.norm() * q.norm(), "N(pq) != N(p)N(q)");
      c.expect((p * q).conjugate() == q.conjugate() * p.conjugate(),
               "(pq)* != q* p*");
      Quaternion nq(alg, p.norm(), field->zero(), field->zero(), field->zero());
      c.expect(p * p.conjugate() == nq, "q q* != N(q)");
      if (a == 1 && b == 1) {
        c.expect(matrix_rep_split(p * q) ==
                     matrix_rep_split(p) * matrix_rep_split(q),
                 "rep not a homomorphism");
        auto m = matrix_rep_split(p);
        c.expect(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) == p.norm(),
                 "det(rep) != N");
        c.expect(m(0, 0) + m(1, 1) == p.trace(), "tr(rep) != Tr");
      }
    }
  }
  report(5, c.ok,
         c.ok ? "quaternion identities exact on " + std::to_string(pairs) +
                    " random pairs in D(1,1), D(-1,-1), D(2,-5)"
              : c.first_failure);
}

// 6. Hilbert reciprocity on >= 50 random pairs with |a|,|b| <= 50.
void criterion_6() {
  Check c;
  Rng rng(601);
  int done = 0;
  while (done < 60) {
    long a = std::uniform_int_distribution<long>(-50, 50)(rng);
    long b = std::uniform_int_distribution<long>(-50, 50)(rng);
    if (a == 0 || b == 0) continue;
    int prod = 1;
    for (const Place& v : relevant_places(Rational(a), Rational(b)))
      prod *= hilbert_symbol(Rational(a), Rational(b), v);
    c.expect(prod == 1,
             "reciprocity fails for (" + std::to_string(a) + "," +
                 std::to_string(b) + ")");
    ++done;
  }
  report(6, c.ok,
         c.ok ? "Hilbert reciprocity holds on 60 random pairs"
              : c.first_failure);
}

// 7. Gram-Schmidt orthogonality on >= 100 random forms and bases over
//    D(-1,-1) and D(2,-5); >= 10^3 random nonzero vectors are non-isotropic.
//    Exact; < 120 s.
void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  Rng rng(701);
  auto field = MQField::rationals();
  int forms_done = 0, vectors_done = 0;
  for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, -1}, {2, -5}}) {
    auto alg = QuaternionAlgebra::make(field->constant(Rational(a)),
                                       field->constant(Rational(b)));
    int target = 55;
    int done = 0;
    while (done < target) {
      std::size_t m = 1 + (done % 3);  // m <= 3
      SkewHermitianForm f = rand_skewherm(rng, alg, m);
      auto vs = rand_independent_dvectors(rng, alg, m, m);
      std::vector<DVector> ys;
      try {
        ys = gram_schmidt(f, vs);
      } catch (const IsotropicVectorError&) {
        continue;  // measure-zero event over division algebras
      }
      for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j)
          if (i != j)
            c.expect(evaluate(f, ys[i], ys[j]).is_zero(),
                     "Gram-Schmidt output not orthogonal");
      ++done;
      ++forms_done;
      // non-isotropy samples on this form
      for (int t = 0; t < 10; ++t, ++vectors_done) {
        DVector v;
        for (std::size_t i = 0; i < m; ++i)
          v.push_back(rand_quaternion(rng, alg, 4));
        bool zero = true;
        for (const auto& q : v) zero = zero && q.is_zero();
        if (zero) v[0] = Quaternion::scalar(alg, Rational(1));
        c.expect(!evaluate(f, v, v).is_zero(),
                 "F(v,v) = 0 on a random nonzero vector");
      }
    }
  }
  double secs = seconds_since(t0);
  c.expect(secs < 120.0, "runtime " + std::to_string(secs) + " s >= 120 s");
  std::ostringstream os;
  os << "Gram-Schmidt exact on " << forms_done << " forms; " << vectors_done
     << " random vectors non-isotropic (" << secs << " s)";
  report(7, c.ok, c.ok ? os.str() : c.first_failure);
}

// 8. Involution contracts: type I and type II on >= 100 random instances
//    each. Exact.
void criterion_8() {
  Check c;
  Rng rng(801);
  // type I
  int done = 0;
  while (done < 100) {
    std::size_t n1 = 3 + (done % 4);
    auto f = (done % 2 == 0) ? MQField::rationals() : MQField::make({Integer(2)});
    FMatrix form(n1, n1, f->zero());
    for (std::size_t i = 0; i + 1 < n1; ++i) {
      Rational v = rand_nonzero_rational(rng, 4, 2);
      form(i, i) = f->constant(v * v);
    }
    Rational v = rand_nonzero_rational(rng, 4, 2);
    form(n1 - 1, n1 - 1) = (f->rank() == 0)
                               ? f->constant(-(v * v))
                               : f->radical(2, -(v * v));
    QuadraticSpace space = QuadraticSpace::make(form, f);
    std::size_t k = 1 + (done % (n1 - 1));
    FMatrix b(n1, k, f->zero());
    std::uniform_int_distribution<int> coef(-2, 2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < k; ++j)
        b(i, j) = f->constant(Rational(coef(rng)));
    if (rank(b) != k) continue;
    FMatrix r = b.transpose() * space.form() * b;
    if (signature(r).zero != 0) continue;
    Subspace v1 = Subspace::make(b);
    TypeIInvolution inv = involution_from_subspace(space, v1);
    FMatrix ident = FMatrix::identity(n1, f->zero(), f->one());
    c.expect(inv.m.matrix * inv.m.matrix == ident, "M^2 != I");
    c.expect(inv.m.matrix.transpose() * space.form() * inv.m.matrix ==
                 space.form(),
             "M^T Q M != Q");
    Subspace fix = fixed_subspace(n1, f, std::span(&inv.m, 1));
    c.expect(fix.same_span(v1), "Fix(M) != V1");
    ++done;
  }
  // type II
  auto field = MQField::rationals();
  auto alg = QuaternionAlgebra::make(field->constant(Rational(2)),
                                     field->constant(Rational(-5)));
  done = 0;
  int hyp_flags_checked = 0;
  while (done < 100) {
    std::size_t m = 2 + (done % 2);
    SkewHermitianForm f = rand_skewherm(rng, alg, m);
    std::size_t l = 1 + (done % m);
    auto d1 = rand_independent_dvectors(rng, alg, m, l);
    TypeIIInvolution inv;
    try {
      inv = involution_from_submodule(f, d1);
    } catch (const DomainError&) {
      continue;
    }
    QMatrix ident =
        QMatrix::identity(m, Quaternion::scalar(alg, Rational(0)),
                          Quaternion::scalar(alg, Rational(1)));
    c.expect(inv.theta * inv.theta == ident, "theta^2 != I");
    c.expect(conjugate_transpose(inv.theta) * f.gram() * inv.theta == f.gram(),
             "F(theta x, theta y) != F(x,y)");
    if (inv.restricted_signature) {
      ++hyp_flags_checked;
      bool is_hyp = inv.restricted_signature->positive == int(2 * l - 1) &&
                    inv.restricted_signature->negative == 1;
      c.expect(inv.hyperbolic == is_hyp, "hyperbolic flag inconsistent");
    }
    ++done;
  }
  c.expect(hyp_flags_checked > 0, "no restricted signatures computed");
  report(8, c.ok,
         c.ok ? "type I and type II involution contracts exact on 100 "
                "instances each"
              : c.first_failure);
}

// 9. Associated symmetric form: (j) over D(1,1) has signature (1,1); over
//    D(2,-1) it has signature (0,2). Exact.
void criterion_9() {
  Check c;
  {
    SkewHermitianForm f =
        SkewHermitianForm::from_json(slurp("form_j_d11.json"));
    auto sig = signature_of_form(f, Embedding::identity(f.algebra()->field()));
    c.expect(sig.has_value() && *sig == SignatureTriple{1, 1, 0},
             "D(1,1): signature != (1,1)");
  }
  {
    SkewHermitianForm f =
        SkewHermitianForm::from_json(slurp("form_j_d2m1.json"));
    auto sig = signature_of_form(f, Embedding::identity(f.algebra()->field()));
    c.expect(sig.has_value() && *sig == SignatureTriple{0, 2, 0},
             "D(2,-1): signature != (0,2)");
  }
  report(9, c.ok,
         c.ok ? "associated symmetric forms: (j)/D(1,1) -> (1,1), "
                "(j)/D(2,-1) -> (0,2)"
              : c.first_failure);
}

// 10. Signature congruence invariance on >= 100 random invertible rational
//     matrices, sizes <= 6. Exact.
void criterion_10() {
  Check c;
  Rng rng(1001);
  auto f = MQField::rationals();
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + (t % 5);
    FMatrix g = rand_symmetric_rational(rng, n, f);
    FMatrix s = rand_invertible_rational(rng, n, f);
    c.expect(signature(s.transpose() * g * s) == signature(g),
             "signature changed under congruence");
  }
  report(10, c.ok,
         c.ok ? "signature(S^T G S) == signature(G) on 100 random congruences"
              : c.first_failure);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures;
}
