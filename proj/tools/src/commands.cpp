#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>

#include <hyplat/expr.hpp>
#include <hyplat/polynomial.hpp>
#include <hyplat/quaternion.hpp>
#include <hyplat/skewherm.hpp>

#include "render.hpp"

namespace hyplat::cli {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

void emit(const json& doc, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

// Parse "D(a,b)" with exact-expression parameters; both end up in one field.
std::pair<FieldElement, FieldElement> parse_algebra_literal(
    const std::string& text) {
  std::string s = text;
  auto fail = [&] {
    throw InputError("malformed algebra literal '" + text +
                     "' (expected D(a,b))");
  };
  if (s.size() < 4 || (s[0] != 'D' && s[0] != 'd') || s[1] != '(' ||
      s.back() != ')')
    fail();
  std::string inner = s.substr(2, s.size() - 3);
  int depth = 0;
  std::size_t comma = std::string::npos;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) {
      comma = i;
      break;
    }
  }
  if (comma == std::string::npos) fail();
  FieldExtender ext;
  FieldElement a = ext.parse(inner.substr(0, comma));
  FieldElement b = ext.parse(inner.substr(comma + 1));
  return {a.lift_to(ext.field()), b.lift_to(ext.field())};
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int cmd_analyze(const AnalyzeOpts& opts) {
  auto start = Clock::now();
  std::string content = read_file(opts.path);
  CoxeterDiagram d = parse_diagram(content);
  GramMatrix g = gram_from_diagram(d);
  VinbergReport rep = vinberg_check(g);
  OddCycleResult odd = odd_cycle_check(d);

  json doc;
  doc["input_digest"] = digest(content);
  doc["nodes"] = d.nodes();
  doc["gram"] = gram_to_json(g.entries);
  doc["fields"] = {{"K", to_json(rep.big_field)}, {"k", to_json(rep.ground)}};
  doc["identity_signature"] = to_json(rep.identity_signature);
  // signatures under every embedding of K(P)
  {
    json all = json::array();
    FMatrix in_k = g.entries;  // entries live in a field containing K(P)
    for (const Embedding& e : Embedding::all(g.field)) {
      std::vector<int> signs;
      for (const Integer& gen : rep.big_field->generators())
        signs.push_back(e.sign_of_radicand(gen));
      // skip duplicates arising from ambient generators outside K(P)
      bool fresh = true;
      for (const auto& prev : all)
        if (prev["signs"].get<std::vector<int>>() == signs) fresh = false;
      if (!fresh) continue;
      all.push_back(json{{"signs", signs},
                         {"signature", to_json(signature_at(in_k, e))}});
    }
    doc["per_embedding"] = all;
  }
  json embs = json::array();
  for (const auto& v : rep.v2)
    embs.push_back(json{{"signs", v.signs},
                        {"signature", to_json(v.sig)},
                        {"psd", v.psd}});
  json failures = json::array();
  for (const auto& c : rep.v3_failures) failures.push_back(c.str());
  doc["vinberg"] = {{"v1", rep.v1},
                    {"v2", embs},
                    {"v2_ok", rep.v2_ok},
                    {"v3_failures", failures},
                    {"cyc2_count", rep.cyc2.size()},
                    {"verdict", rep.verdict_str()}};
  json oddj{{"acyclic", odd.acyclic}};
  if (!odd.acyclic) {
    json w = json::array();
    for (std::size_t i : odd.witness) w.push_back(d.nodes()[i]);
    oddj["witness"] = w;
  }
  doc["odd_cycle"] = oddj;

  std::ostringstream text;
  text << "diagram: " << opts.path << " (" << doc["input_digest"].get<std::string>() << ")\n";
  text << "nodes: " << d.size() << "\n";
  text << "K(P) = " << rep.big_field->describe()
       << "   k(P) = " << rep.ground->describe() << "\n";
  text << "signature at identity: " << rep.identity_signature.str() << "\n";
  for (const auto& e : doc["per_embedding"]) {
    auto signs = e["signs"].get<std::vector<int>>();
    if (signs.empty() ||
        std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; }))
      continue;  // identity row already printed
    text << "  signature under [";
    for (std::size_t i = 0; i < signs.size(); ++i)
      text << (i ? "," : "") << (signs[i] > 0 ? "+" : "-");
    auto sig = e["signature"].get<std::vector<int>>();
    text << "]: (" << sig[0] << "," << sig[1] << "," << sig[2] << ")\n";
  }
  for (const auto& v : rep.v2) {
    text << "  V2 embedding [";
    for (std::size_t i = 0; i < v.signs.size(); ++i)
      text << (i ? "," : "") << (v.signs[i] > 0 ? "+" : "-");
    text << "]: " << v.sig.str() << (v.psd ? " (psd)" : " (NOT psd)") << "\n";
  }
  text << "V2: " << (rep.v2_ok ? "holds" : "fails")
       << (rep.v2.empty() ? " (vacuous: k(P) = Q)" : "") << "\n";
  text << "V3: " << (rep.v3_failures.empty() ? "holds" : "fails");
  if (!rep.v3_failures.empty()) {
    text << " (non-integral:";
    for (const auto& c : rep.v3_failures) text << " " << c.str();
    text << ")";
  }
  text << "\n";
  text << "verdict: " << rep.verdict_str();
  if (rep.verdict == VinbergReport::Verdict::Arithmetic)
    text << " over " << rep.ground->describe();
  text << "\n";
  text << "odd-label cycles: " << (odd.acyclic ? "none" : "present") << "\n";

  // Simplex vertex classification when the node count fits a simplex.
  int n_hyperbolic = rep.identity_signature.positive;
  if (int(d.size()) == n_hyperbolic + 1 && rep.identity_signature.zero == 0) {
    auto kinds = classify_simplex_vertices(g);
    json verts = json::array();
    int ideal = 0;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      verts.push_back(json{{"opposite", d.nodes()[i]},
                           {"class", vertex_kind_str(kinds[i])}});
      if (kinds[i] == VertexKind::Ideal) ++ideal;
    }
    doc["vertices"] = verts;
    doc["ideal_vertex_count"] = ideal;
    text << "simplex vertices:";
    for (std::size_t i = 0; i < kinds.size(); ++i)
      text << " " << d.nodes()[i] << ":" << vertex_kind_str(kinds[i]);
    text << "  (" << ideal << " ideal)\n";
  }

  // Godement/Meyer: isotropy and uniformity for rational Gram matrices.
  if (rep.big_field->rank() == 0) {
    QuadraticSpace space = QuadraticSpace::make(g.entries, g.field);
    IsotropyResult iso = rational_isotropy(space, opts.isotropy_height);
    json isoj;
    isoj["height_bound"] = opts.isotropy_height;
    isoj["height_used"] = iso.height_used;
    switch (iso.kind) {
      case IsotropyResult::Kind::Isotropic: {
        isoj["kind"] = "isotropic";
        json w = json::array();
        for (const Integer& x : iso.witness) w.push_back(x.get_str());
        isoj["witness"] = w;
        break;
      }
      case IsotropyResult::Kind::AnisotropicCertified:
        isoj["kind"] = "anisotropic-certified";
        break;
      case IsotropyResult::Kind::Unknown:
        isoj["kind"] = "unknown";
        break;
    }
    isoj["uniformity"] =
        iso.uniformity == IsotropyResult::Uniformity::Uniform ? "uniform"
        : iso.uniformity == IsotropyResult::Uniformity::NonUniform
            ? "non-uniform"
            : "unknown";
    doc["isotropy"] = isoj;
    text << "isotropy over Q: " << isoj["kind"].get<std::string>()
         << ", uniformity: " << isoj["uniformity"].get<std::string>() << "\n";
  }

  doc["defaults"] = {{"isotropy_height", opts.isotropy_height}};
  if (opts.timings) {
    doc["timing_ms"] = elapsed_ms(start);
    text << "elapsed: " << elapsed_ms(start) << " ms\n";
  }
  emit(doc, opts.json, text.str());
  return 0;
}

int cmd_fixsub(const FixsubOpts& opts) {
  auto start = Clock::now();
  std::string content = read_file(opts.path);
  CoxeterDiagram d = parse_diagram(content);
  GramMatrix g = gram_from_diagram(d);

  NodePermutation perm = parse_permutation(d.nodes(), opts.perm);
  FMatrix p = diagram_automorphism(d, g, perm);
  QuadraticSpace space = QuadraticSpace::make(g.entries, g.field);
  Isometry tau = Isometry::make(space, p);
  Subspace fix = fixed_subspace(g.size(), g.field, std::span(&tau, 1));

  json doc;
  doc["input_digest"] = digest(content);
  doc["permutation"] = opts.perm;
  json basis = json::array();
  for (std::size_t c = 0; c < fix.dim(); ++c)
    basis.push_back(vector_to_json(fix.basis(), c));
  doc["fixed_subspace"] = {{"dimension", fix.dim()}, {"basis", basis}};

  std::ostringstream text;
  text << "diagram: " << opts.path << " (" << doc["input_digest"].get<std::string>() << ")\n";
  text << "automorphism: " << opts.perm << "\n";
  text << "fixed subspace dimension: " << fix.dim() << "\n";

  if (fix.dim() > 0) {
    RestrictedForm rf = restricted_form(space, fix);
    doc["restricted_signature"] = to_json(rf.sig);
    doc["meets_hyperbolic_space"] = rf.meets_hyperbolic_space;
    text << "restricted signature: " << rf.sig.str()
         << (rf.meets_hyperbolic_space ? " (hyperbolic plane)" : "") << "\n";
  }

  GeometricRep rep = geometric_rep(g);
  auto hits = centralizer_search(rep, p, opts.centralizer_maxlen);
  json words = json::array();
  for (const auto& h : hits)
    if (!h.word.empty()) words.push_back(word_str(d.nodes(), h.word));
  doc["centralizer"] = {{"maxlen", opts.centralizer_maxlen}, {"words", words}};
  text << "centralizer elements found (words of length <= "
       << opts.centralizer_maxlen << "): " << words.size() << "\n  ";
  for (const auto& w : words) text << w.get<std::string>() << " ";
  text << "\n";

  if (!opts.generators.empty()) {
    std::vector<std::string> gen_words = split_commas(opts.generators);
    if (gen_words.size() != 3)
      throw InputError("--generators expects exactly three comma-separated words");
    std::vector<FMatrix> induced;
    json gens = json::array();
    for (const auto& wtext : gen_words) {
      Word w = parse_word(d.nodes(), wtext);
      FMatrix m = evaluate_word(rep, w);
      FMatrix a = induced_action(m, fix);
      FMatrix sq = a * a;
      if (!sq.is_identity())
        throw InputError("generator word '" + wtext +
                         "' does not induce an involution on the fixed "
                         "subspace");
      gens.push_back(wtext);
      induced.push_back(std::move(a));
    }
    auto orders = triangle_signature(induced[0], induced[1], induced[2],
                                     opts.order_cap);
    doc["generators"] = gens;
    doc["orders"] = json::array(
        {to_json(orders[0]), to_json(orders[1]), to_json(orders[2])});
    text << "induced involutions: " << opts.generators << "\n";
    text << "product orders (g1*g2, g2*g3, g1*g3): " << orders[0].str() << ", "
         << orders[1].str() << ", " << orders[2].str() << "\n";
  }

  doc["defaults"] = {{"order_cap", opts.order_cap},
                     {"centralizer_maxlen", opts.centralizer_maxlen}};
  if (opts.timings) {
    doc["timing_ms"] = elapsed_ms(start);
    text << "elapsed: " << elapsed_ms(start) << " ms\n";
  }
  emit(doc, opts.json, text.str());
  return 0;
}

int cmd_order(const OrderOpts& opts) {
  std::string content = read_file(opts.path);
  CoxeterDiagram d = parse_diagram(content);
  GramMatrix g = gram_from_diagram(d);
  GeometricRep rep = geometric_rep(g);
  Word w = parse_word(d.nodes(), opts.word);
  OrderResult res = element_order(evaluate_word(rep, w), opts.cap);

  json doc;
  doc["input_digest"] = digest(content);
  doc["word"] = opts.word;
  doc["order"] = to_json(res);
  doc["defaults"] = {{"cap", opts.cap}};
  std::ostringstream text;
  text << "order(" << opts.word << ") = " << res.str() << "\n";
  emit(doc, opts.json, text.str());
  return 0;
}

int cmd_quat_symbol(const QuatSymbolOpts& opts) {
  FieldExtender ext;
  FieldElement a = ext.parse(opts.a), b = ext.parse(opts.b);
  if (!a.is_rational() || !b.is_rational())
    throw InputError("quat symbol expects rational a and b");
  Rational ra = a.rational_value(), rb = b.rational_value();
  if (sgn(ra) == 0 || sgn(rb) == 0)
    throw InputError("quat symbol arguments must be nonzero");

  json doc;
  doc["a"] = to_string(ra);
  doc["b"] = to_string(rb);
  json symbols = json::array();
  std::ostringstream text;
  text << "Hilbert symbols for (" << to_string(ra) << ", " << to_string(rb)
       << "):\n";
  bool division = false;
  for (const Place& v : relevant_places(ra, rb)) {
    int s = hilbert_symbol(ra, rb, v);
    symbols.push_back(json{{"place", v.str()}, {"symbol", s}});
    text << "  (" << v.str() << "): " << (s > 0 ? "+1" : "-1") << "\n";
    if (s < 0) division = true;
  }
  doc["symbols"] = symbols;
  doc["verdict"] = division ? "division" : "split";
  text << "verdict: " << doc["verdict"].get<std::string>() << "\n";
  emit(doc, opts.json, text.str());
  return 0;
}

int cmd_quat_psl(const QuatPslOpts& opts) {
  auto [a, b] = parse_algebra_literal(opts.algebra);
  auto coords = split_commas(opts.q);
  if (coords.size() != 4)
    throw InputError("-q expects four comma-separated coordinates w,x,y,z");
  FieldExtender ext(a.field());
  std::vector<FieldElement> c;
  for (const auto& t : coords) c.push_back(ext.parse(t));
  MQField::Ptr field = ext.field();
  auto alg = QuaternionAlgebra::make(a.lift_to(field), b.lift_to(field));
  Quaternion q(alg, c[0].lift_to(field), c[1].lift_to(field),
               c[2].lift_to(field), c[3].lift_to(field));
  bool inv = is_psl_involution(q);
  json doc;
  doc["algebra"] = alg->describe();
  doc["q"] = q.str();
  doc["trace"] = q.trace().str();
  doc["norm"] = q.norm().str();
  doc["psl_involution"] = inv;
  std::ostringstream text;
  text << "q = " << q.str() << " in " << alg->describe() << "\n";
  text << "Tr = " << q.trace().str() << ", N = " << q.norm().str() << "\n";
  text << "projective involution: " << (inv ? "true" : "false") << "\n";
  emit(doc, opts.json, text.str());
  return 0;
}

int cmd_quat_split(const QuatSplitOpts& opts) {
  auto [a, b] = parse_algebra_literal(opts.algebra);
  auto alg = QuaternionAlgebra::make(a, b);
  SplitReport rep = is_division(*alg);
  json doc;
  doc["algebra"] = alg->describe();
  json places = json::array();
  for (const auto& [signs, split] : rep.real_places)
    places.push_back(json{{"signs", signs}, {"split", split}});
  doc["real_places"] = places;
  json symbols = json::array();
  for (const auto& [place, s] : rep.symbols)
    symbols.push_back(json{{"place", place.str()}, {"symbol", s}});
  doc["symbols"] = symbols;
  doc["verdict"] = rep.verdict_str();
  if (!rep.note.empty()) doc["note"] = rep.note;
  std::ostringstream text;
  text << alg->describe() << "\n";
  for (const auto& [signs, split] : rep.real_places) {
    text << "  embedding [";
    for (std::size_t i = 0; i < signs.size(); ++i)
      text << (i ? "," : "") << (signs[i] > 0 ? "+" : "-");
    text << "]: " << (split ? "split" : "ramified") << "\n";
  }
  text << "verdict: " << rep.verdict_str() << "\n";
  emit(doc, opts.json, text.str());
  return 0;
}

int cmd_skewherm_analyze(const SkewAnalyzeOpts& opts) {
  std::string content = read_file(opts.path);
  SkewHermitianForm f = SkewHermitianForm::from_json(content);
  FormAdmissibility adm = form_admissibility(f);
  json doc;
  doc["input_digest"] = digest(content);
  doc["algebra"] = f.algebra()->describe();
  doc["dimension"] = f.dim();
  doc["valid"] = true;
  json per = json::array();
  for (const auto& [signs, sig] : adm.per_embedding) {
    json e{{"signs", signs}};
    if (sig)
      e["signature"] = to_json(*sig);
    else
      e["ramified"] = true;
    per.push_back(e);
  }
  doc["per_embedding"] = per;
  doc["identity_signature"] = to_json(adm.identity_signature);
  doc["admissible"] = adm.admissible;
  std::ostringstream text;
  text << "form over " << f.algebra()->describe() << ", m = " << f.dim()
       << "\n";
  text << "valid skew-Hermitian, nondegenerate\n";
  for (const auto& [signs, sig] : adm.per_embedding) {
    text << "  embedding [";
    for (std::size_t i = 0; i < signs.size(); ++i)
      text << (i ? "," : "") << (signs[i] > 0 ? "+" : "-");
    text << "]: " << (sig ? sig->str() : std::string("ramified")) << "\n";
  }
  text << "admissible: " << (adm.admissible ? "yes" : "no") << "\n";
  emit(doc, opts.json, text.str());
  return 0;
}

int cmd_skewherm_involution(const SkewInvolutionOpts& opts) {
  std::string content = read_file(opts.path);
  SkewHermitianForm f = SkewHermitianForm::from_json(content);
  std::string sub_content = read_file(opts.submodule_path);
  json sub;
  try {
    sub = json::parse(sub_content);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!sub.contains("vectors") || !sub["vectors"].is_array())
    throw InputError("submodule document needs a \"vectors\" array");
  std::vector<DVector> d1;
  for (const auto& vec : sub["vectors"]) {
    if (vec.size() != f.dim())
      throw InputError("submodule vector has wrong dimension");
    DVector v;
    for (const auto& cell : vec) {
      auto coord = [&](const char* name) {
        if (!cell.contains(name)) return f.algebra()->field()->zero();
        return parse_field_expr(cell[name].get<std::string>(),
                                f.algebra()->field());
      };
      v.emplace_back(f.algebra(), coord("w"), coord("x"), coord("y"),
                     coord("z"));
    }
    d1.push_back(std::move(v));
  }
  TypeIIInvolution inv = involution_from_submodule(f, d1);
  json doc;
  doc["input_digest"] = digest(content);
  doc["submodule_rank"] = d1.size();
  json theta = json::array();
  for (std::size_t i = 0; i < inv.theta.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < inv.theta.cols(); ++j)
      row.push_back(inv.theta(i, j).str());
    theta.push_back(row);
  }
  doc["theta"] = theta;
  if (inv.restricted_signature)
    doc["restricted_signature"] = to_json(*inv.restricted_signature);
  doc["hyperbolic"] = inv.hyperbolic;
  std::ostringstream text;
  text << "involution on D^" << f.dim() << " fixing a rank-" << d1.size()
       << " submodule\n";
  for (std::size_t i = 0; i < inv.theta.rows(); ++i) {
    text << "  [";
    for (std::size_t j = 0; j < inv.theta.cols(); ++j)
      text << (j ? " | " : "") << inv.theta(i, j).str();
    text << "]\n";
  }
  if (inv.restricted_signature)
    text << "restricted signature: " << inv.restricted_signature->str()
         << (inv.hyperbolic ? " (hyperbolic)" : "") << "\n";
  else
    text << "restricted signature: unavailable (no split at identity)\n";
  emit(doc, opts.json, text.str());
  return 0;
}

}  // namespace hyplat::cli
