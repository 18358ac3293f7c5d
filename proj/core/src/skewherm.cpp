#include "hyplat/skewherm.hpp"

#include <algorithm>

#include <json.hpp>

#include "hyplat/expr.hpp"

namespace hyplat {

using nlohmann::json;

QMatrix conjugate_transpose(const QMatrix& m) {
  QMatrix out(m.cols(), m.rows(), m.zero_like());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(j, i) = m(i, j).conjugate();
  return out;
}

namespace {

// Row echelon over a quaternion algebra. Rows are combined by LEFT
// multiplication, which preserves the right-module solution set of M q = 0.
// Pivots must have nonzero norm; over a division algebra every nonzero entry
// qualifies.
std::size_t quat_row_reduce(QMatrix& m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = m.rows();
    bool stuck_nonzero = false;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      if (!m(r, col).norm().is_zero()) {
        pr = r;
        break;
      }
      stuck_nonzero = true;
    }
    if (pr == m.rows()) {
      if (stuck_nonzero)
        throw DomainError(
            "quaternionic row reduction stuck on a zero-norm pivot (split "
            "algebra); rank undecided");
      continue;
    }
    if (pr != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
    Quaternion inv = m(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Quaternion f = m(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = m(r, j) - f * m(row, j);
    }
    ++row;
  }
  return row;
}

QMatrix columns_matrix(const std::vector<DVector>& vs, std::size_t m,
                       const Quaternion& zero) {
  QMatrix out(m, vs.size(), zero);
  for (std::size_t c = 0; c < vs.size(); ++c) {
    if (vs[c].size() != m) throw InputError("vector has wrong dimension");
    for (std::size_t r = 0; r < m; ++r) out(r, c) = vs[c][r];
  }
  return out;
}

}  // namespace

std::size_t quat_rank(QMatrix m) { return quat_row_reduce(m); }

QMatrix quat_inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw InternalError("quat_inverse: non-square");
  std::size_t n = m.rows();
  Quaternion zero = m.zero_like();
  Quaternion one = zero.one_like();
  QMatrix aug(n, 2 * n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one;
  }
  if (quat_row_reduce(aug) != n)
    throw DomainError("quaternion matrix is singular");
  QMatrix out(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

FormValidation SkewHermitianForm::validate(const QuaternionAlgebra::Ptr& alg,
                                           const QMatrix& gram) {
  FormValidation v;
  if (gram.rows() != gram.cols()) {
    v.note = "gram matrix must be square";
    return v;
  }
  v.skew_hermitian = true;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      if (!(gram(i, j) == -(gram(j, i).conjugate()))) {
        v.skew_hermitian = false;
        if (j >= i) v.symmetry_offenders.push_back({i, j});
      }
    }
  if (!v.skew_hermitian) {
    v.note = "entries must satisfy a_ij = -(a_ji)*";
    return v;
  }
  try {
    std::size_t r = quat_rank(gram);
    v.rank_state = (r == gram.rows()) ? FormValidation::Rank::Full
                                      : FormValidation::Rank::Degenerate;
    if (v.rank_state == FormValidation::Rank::Degenerate)
      v.note = "form is degenerate (rank " + std::to_string(r) + " of " +
               std::to_string(gram.rows()) + ")";
  } catch (const DomainError& e) {
    v.rank_state = FormValidation::Rank::Undecided;
    v.note = e.what();
  }
  return v;
}

SkewHermitianForm SkewHermitianForm::make(QuaternionAlgebra::Ptr alg,
                                          QMatrix gram) {
  FormValidation v = validate(alg, gram);
  if (!v.skew_hermitian) {
    std::string where;
    for (auto [i, j] : v.symmetry_offenders)
      where += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    throw InputError("not skew-Hermitian; offending entries:" + where);
  }
  return SkewHermitianForm(std::move(alg), std::move(gram), v.rank_state);
}

void SkewHermitianForm::require_nondegenerate() const {
  if (rank_state_ == FormValidation::Rank::Full) return;
  if (rank_state_ == FormValidation::Rank::Degenerate)
    throw InputError("form is degenerate");
  throw InputError(
      "form nondegeneracy is undecided (zero-norm pivots in a split algebra)");
}

DVector SkewHermitianForm::basis_vector(std::size_t t) const {
  DVector v(dim(), Quaternion::scalar(alg_, Rational(0)));
  v[t] = Quaternion::scalar(alg_, Rational(1));
  return v;
}

namespace {

Quaternion parse_quat(const QuaternionAlgebra::Ptr& alg, const json& cell) {
  auto coord = [&](const char* name) {
    if (!cell.contains(name)) return alg->field()->zero();
    return parse_field_expr(cell[name].get<std::string>(), alg->field());
  };
  return Quaternion(alg, coord("w"), coord("x"), coord("y"), coord("z"));
}

}  // namespace

SkewHermitianForm SkewHermitianForm::from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.contains("algebra") || !doc.contains("gram"))
    throw InputError("form document needs \"algebra\" and \"gram\"");
  const json& aj = doc["algebra"];
  std::vector<Integer> rads;
  auto param_text = [&](const char* name) -> std::string {
    if (!aj.contains(name)) throw InputError("algebra needs \"a\" and \"b\"");
    return aj[name].get<std::string>();
  };
  std::string a_text = param_text("a"), b_text = param_text("b");
  for (const auto& t : {a_text, b_text})
    for (const Integer& r : collect_radicands(t)) rads.push_back(r);
  for (const auto& row : doc["gram"])
    for (const auto& cell : row)
      for (const char* name : {"w", "x", "y", "z"})
        if (cell.contains(name))
          for (const Integer& r :
               collect_radicands(cell[name].get<std::string>()))
            rads.push_back(r);
  std::sort(rads.begin(), rads.end());
  MQField::Ptr field = MQField::span(rads);
  auto alg = QuaternionAlgebra::make(parse_field_expr(a_text, field),
                                     parse_field_expr(b_text, field));
  std::size_t m = doc["gram"].size();
  QMatrix gram(m, m, Quaternion::scalar(alg, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (doc["gram"][i].size() != m)
      throw InputError("gram rows must have equal length");
    for (std::size_t j = 0; j < m; ++j)
      gram(i, j) = parse_quat(alg, doc["gram"][i][j]);
  }
  return make(std::move(alg), std::move(gram));
}

Quaternion evaluate(const SkewHermitianForm& f, const DVector& x,
                    const DVector& y) {
  if (x.size() != f.dim() || y.size() != f.dim())
    throw InputError("vector dimension mismatch");
  Quaternion acc = Quaternion::scalar(f.algebra(), Rational(0));
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (x[i].is_zero()) continue;
    Quaternion xc = x[i].conjugate();
    for (std::size_t j = 0; j < f.dim(); ++j) {
      if (y[j].is_zero() || f.gram()(i, j).is_zero()) continue;
      acc += xc * f.gram()(i, j) * y[j];
    }
  }
  return acc;
}

std::vector<DVector> gram_schmidt(const SkewHermitianForm& f,
                                  const std::vector<DVector>& vectors) {
  SplitReport split = is_division(*f.algebra());
  if (split.verdict != SplitReport::Verdict::Division)
    throw DomainError("Gram-Schmidt requires a division algebra; got verdict " +
                      split.verdict_str());
  QMatrix cols = columns_matrix(vectors, f.dim(),
                                Quaternion::scalar(f.algebra(), Rational(0)));
  if (vectors.empty()) return {};
  if (quat_rank(cols) != vectors.size())
    throw InputError("Gram-Schmidt input vectors are linearly dependent");

  std::vector<DVector> ys;
  std::vector<std::optional<Quaternion>> ynorm_inv;  // lazy F(y,y)^{-1}
  auto norm_inv = [&](std::size_t j) -> const Quaternion& {
    if (!ynorm_inv[j]) {
      Quaternion yy = evaluate(f, ys[j], ys[j]);
      if (yy.is_zero())
        throw IsotropicVectorError(
            ys[j],
            "F(y,y) = 0 on a nonzero vector: certified isotropic vector "
            "contradicting the division/admissibility hypotheses");
      ynorm_inv[j] = yy.inverse();
    }
    return *ynorm_inv[j];
  };
  for (const DVector& x : vectors) {
    DVector y = x;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      // proj_{y_j}(x) = y_j F(y_j,y_j)^{-1} F(y_j, x)
      Quaternion fyx = evaluate(f, ys[j], y);
      if (fyx.is_zero()) continue;  // already orthogonal to y_j
      Quaternion s = norm_inv(j) * fyx;
      for (std::size_t t = 0; t < y.size(); ++t) y[t] = y[t] - ys[j][t] * s;
    }
    ys.push_back(std::move(y));
    ynorm_inv.push_back(std::nullopt);
  }
  return ys;
}

OrthogonalDecomposition orthogonal_complement(const SkewHermitianForm& f,
                                              const std::vector<DVector>& d1) {
  f.require_nondegenerate();
  std::size_t m = f.dim(), l = d1.size();
  if (l > m) throw InputError("submodule basis larger than ambient dimension");
  Quaternion zero = Quaternion::scalar(f.algebra(), Rational(0));
  QMatrix cols = columns_matrix(d1, m, zero);
  if (l > 0 && quat_rank(cols) != l)
    throw InputError("submodule basis vectors are linearly dependent");
  // Restriction nondegenerate <=> the l x l Gram of d1 has full rank.
  if (l > 0) {
    QMatrix restricted(l, l, zero);
    for (std::size_t s = 0; s < l; ++s)
      for (std::size_t t = 0; t < l; ++t)
        restricted(s, t) = evaluate(f, d1[s], d1[t]);
    if (quat_rank(restricted) != l)
      throw DomainError("restriction of the form to the submodule is degenerate");
  }
  // Complete to a basis of D^m with standard vectors, then orthogonalize;
  // the tail of the Gram-Schmidt output spans the complement.
  std::vector<DVector> full = d1;
  QMatrix working = cols;
  for (std::size_t t = 0; t < m && full.size() < m; ++t) {
    DVector e = f.basis_vector(t);
    QMatrix trial(m, full.size() + 1, zero);
    for (std::size_t c = 0; c < full.size(); ++c)
      for (std::size_t r = 0; r < m; ++r) trial(r, c) = full[c][r];
    for (std::size_t r = 0; r < m; ++r) trial(r, full.size()) = e[r];
    if (quat_rank(trial) == full.size() + 1) full.push_back(std::move(e));
  }
  if (full.size() != m)
    throw InternalError("failed to complete submodule to a full basis");
  std::vector<DVector> ortho = gram_schmidt(f, full);
  OrthogonalDecomposition dec;
  dec.basis1 = d1;
  dec.basis_perp.assign(ortho.begin() + l, ortho.end());
  // Decomposition invariant: mutual orthogonality of the two halves.
  for (const DVector& x : dec.basis1)
    for (const DVector& y : dec.basis_perp)
      if (!evaluate(f, x, y).is_zero())
        throw InternalError("complement fails orthogonality check");
  return dec;
}

TypeIIInvolution involution_from_submodule(const SkewHermitianForm& f,
                                           const std::vector<DVector>& d1) {
  std::size_t m = f.dim(), l = d1.size();
  OrthogonalDecomposition dec = orthogonal_complement(f, d1);
  Quaternion zero = Quaternion::scalar(f.algebra(), Rational(0));
  Quaternion one = Quaternion::scalar(f.algebra(), Rational(1));
  QMatrix u(m, m, zero);
  for (std::size_t c = 0; c < l; ++c)
    for (std::size_t r = 0; r < m; ++r) u(r, c) = dec.basis1[c][r];
  for (std::size_t c = 0; c < m - l; ++c)
    for (std::size_t r = 0; r < m; ++r) u(r, l + c) = dec.basis_perp[c][r];
  QMatrix d(m, m, zero);
  for (std::size_t i = 0; i < m; ++i) d(i, i) = (i < l) ? one : -one;
  QMatrix theta = u * d * quat_inverse(u);

  QMatrix ident = QMatrix::identity(m, zero, one);
  if (!(theta * theta == ident))
    throw InternalError("involution square check failed");
  if (!(conjugate_transpose(theta) * f.gram() * theta == f.gram()))
    throw InternalError("involution does not preserve the form");

  TypeIIInvolution out;
  out.theta = std::move(theta);
  if (l > 0) {
    QMatrix restricted(l, l, zero);
    for (std::size_t s = 0; s < l; ++s)
      for (std::size_t t = 0; t < l; ++t)
        restricted(s, t) = evaluate(f, d1[s], d1[t]);
    try {
      SkewHermitianForm rf = SkewHermitianForm::make(f.algebra(), restricted);
      out.restricted_signature =
          signature_of_form(rf, Embedding::identity(f.algebra()->field()));
    } catch (const DomainError&) {
      out.restricted_signature = std::nullopt;  // no split at identity
    }
    if (out.restricted_signature)
      out.hyperbolic = (out.restricted_signature->positive == int(2 * l - 1) &&
                        out.restricted_signature->negative == 1);
  }
  return out;
}

namespace {

// The algebra isomorphism D(a,b) -> D(b,a): i <-> j, k -> -k.
Quaternion swap_params(const QuaternionAlgebra::Ptr& target,
                       const Quaternion& q) {
  return Quaternion(target, q.w(), q.y(), q.x(), -q.z());
}

AssociatedForm associated_form_impl(const QuaternionAlgebra::Ptr& alg,
                                    const QMatrix& gram) {
  const FieldElement& a = alg->a();
  if (!a.is_rational() || a.sign() <= 0)
    throw DomainError("associated symmetric form needs a positive rational "
                      "first parameter, got a = " + a.str());
  Rational a_rat = a.rational_value();
  // Extend the field by sqrt(a).
  std::vector<Integer> rads(alg->field()->generators());
  Integer nd = a_rat.get_num() * a_rat.get_den();
  rads.push_back(nd);
  MQField::Ptr ext = MQField::span(rads);
  auto [kernel, square] = squarefree_kernel(nd);
  Rational c(square, a_rat.get_den());
  c.canonicalize();
  FieldElement sqrt_a = (kernel == 1) ? ext->constant(c)
                                      : ext->radical(kernel, c);

  auto lift_quat = [&](const Quaternion& q, const QuaternionAlgebra::Ptr& target) {
    return Quaternion(target, q.w().lift_to(ext), q.x().lift_to(ext),
                      q.y().lift_to(ext), q.z().lift_to(ext));
  };
  auto ext_alg = QuaternionAlgebra::make(alg->a().lift_to(ext),
                                         alg->b().lift_to(ext));
  std::size_t m = gram.rows();
  QMatrix g(m, m, Quaternion::scalar(ext_alg, Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = lift_quat(gram(i, j), ext_alg);

  // Basis of the +sqrt(a) eigenspace of right multiplication by i:
  // u_{2t} = e_t (i + sqrt a), u_{2t+1} = e_t (i - sqrt a) j.
  Quaternion plus(ext_alg, sqrt_a, ext->one(), ext->zero(), ext->zero());
  Quaternion minus_j(ext_alg, ext->zero(), ext->zero(), -sqrt_a, ext->one());
  auto eigen_vector = [&](std::size_t s) {
    DVector v(m, Quaternion::scalar(ext_alg, Rational(0)));
    v[s / 2] = (s % 2 == 0) ? plus : minus_j;
    return v;
  };

  SkewHermitianForm lifted = SkewHermitianForm::make(ext_alg, g);
  FMatrix sym(2 * m, 2 * m, ext->zero());
  for (std::size_t s = 0; s < 2 * m; ++s) {
    for (std::size_t t = 0; t < 2 * m; ++t) {
      Quaternion val = evaluate(lifted, eigen_vector(s), eigen_vector(t));
      // F(x,y) must lie on the line spanned by (i - sqrt a) j = -sqrt(a) j + k.
      if (!val.w().is_zero() || !val.x().is_zero())
        throw InternalError("associated form: 1/i components do not vanish");
      if (!(val.y() + sqrt_a * val.z()).is_zero())
        throw InternalError("associated form: j component is not -sqrt(a) "
                            "times the k component");
      sym(s, t) = val.z();
    }
  }
  for (std::size_t s = 0; s < 2 * m; ++s)
    for (std::size_t t = s + 1; t < 2 * m; ++t)
      if (sym(s, t) != sym(t, s))
        throw InternalError("associated form is not symmetric");
  if (rank(sym) != 2 * m)
    throw InternalError("associated form is degenerate");
  return {std::move(sym), ext, std::move(sqrt_a)};
}

}  // namespace

AssociatedForm associated_symmetric_form(const SkewHermitianForm& f) {
  f.require_nondegenerate();
  return associated_form_impl(f.algebra(), f.gram());
}

std::optional<SignatureTriple> signature_of_form(const SkewHermitianForm& f,
                                                 const Embedding& e) {
  f.require_nondegenerate();
  if (!e.field()->same_as(*f.algebra()->field()))
    throw InputError("embedding belongs to a different field");
  FieldElement sa = f.algebra()->a().apply(e);
  FieldElement sb = f.algebra()->b().apply(e);
  QMatrix g(f.dim(), f.dim(),
            Quaternion::scalar(f.algebra(), Rational(0)));
  auto apply_quat = [&](const Quaternion& q, const QuaternionAlgebra::Ptr& target) {
    return Quaternion(target, q.w().apply(e), q.x().apply(e), q.y().apply(e),
                      q.z().apply(e));
  };
  QuaternionAlgebra::Ptr alg_e = QuaternionAlgebra::make(sa, sb);
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j)
      g(i, j) = apply_quat(f.gram()(i, j), alg_e);

  bool a_pos = sa.sign() > 0, b_pos = sb.sign() > 0;
  if (!a_pos && !b_pos) {
    if (e.is_identity())
      throw DomainError(
          "both parameters negative under the identity embedding: the "
          "algebra is ramified over R and the signature is undefined in "
          "this framework");
    return std::nullopt;  // ramified at a non-identity place
  }
  if (!a_pos) {
    // Swap roles via D(a,b) ~ D(b,a).
    QuaternionAlgebra::Ptr swapped = QuaternionAlgebra::make(sb, sa);
    QMatrix g2(f.dim(), f.dim(), Quaternion::scalar(swapped, Rational(0)));
    for (std::size_t i = 0; i < f.dim(); ++i)
      for (std::size_t j = 0; j < f.dim(); ++j)
        g2(i, j) = swap_params(swapped, g(i, j));
    AssociatedForm af = associated_form_impl(swapped, g2);
    return signature(af.sym);
  }
  AssociatedForm af = associated_form_impl(alg_e, g);
  return signature(af.sym);
}

FormAdmissibility form_admissibility(const SkewHermitianForm& f) {
  FormAdmissibility rep;
  std::size_t m = f.dim();
  bool ok = true;
  for (const Embedding& e : Embedding::all(f.algebra()->field())) {
    std::optional<SignatureTriple> s = signature_of_form(f, e);
    if (e.is_identity()) {
      rep.identity_signature = *s;  // identity throws rather than nullopt
      if (!(s->positive == int(2 * m - 1) && s->negative == 1)) ok = false;
    } else if (!s) {
      ok = false;  // ramified at a non-identity embedding
    } else if (!(s->positive == int(2 * m) && s->negative == 0)) {
      ok = false;
    }
    rep.per_embedding.push_back({e.generator_signs(), s});
  }
  rep.admissible = ok;
  return rep;
}

}  // namespace hyplat
