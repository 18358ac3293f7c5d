#include "hyplat/lorentz.hpp"

#include <algorithm>

#include <json.hpp>

#include "hyplat/expr.hpp"

namespace hyplat {

using nlohmann::json;

QuadraticSpace QuadraticSpace::make(FMatrix form, MQField::Ptr field) {
  if (form.rows() != form.cols())
    throw InputError("quadratic form matrix must be square");
  for (std::size_t i = 0; i < form.rows(); ++i)
    for (std::size_t j = i + 1; j < form.cols(); ++j)
      if (form(i, j) != form(j, i))
        throw InputError("quadratic form matrix must be symmetric");
  SignatureTriple s = signature(form);
  if (s.zero != 0)
    throw InputError("quadratic form is degenerate (signature " + s.str() + ")");
  return QuadraticSpace(std::move(form), std::move(field));
}

QuadraticSpace QuadraticSpace::from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
    throw InputError("quadratic space document needs a \"matrix\" array");
  std::vector<Integer> gens;
  if (doc.contains("field")) {
    for (const auto& g : doc["field"]) gens.push_back(Integer(g.get<long>()));
  }
  // Collect radicands from entries as well, so the declared field may be
  // omitted when entries carry all the information.
  std::vector<std::vector<std::string>> raw;
  for (const auto& row : doc["matrix"]) {
    raw.emplace_back();
    for (const auto& cell : row) raw.back().push_back(cell.get<std::string>());
  }
  for (const auto& row : raw)
    for (const auto& cell : row)
      for (const Integer& r : collect_radicands(cell)) gens.push_back(r);
  MQField::Ptr field = MQField::span(gens);
  std::size_t n = raw.size();
  FMatrix m(n, n, field->zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) throw InputError("matrix rows must have equal length");
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = parse_field_expr(raw[i][j], field);
  }
  return make(std::move(m), std::move(field));
}

Subspace Subspace::make(FMatrix basis_columns) {
  if (basis_columns.cols() > 0 &&
      rank(basis_columns) != basis_columns.cols())
    throw InputError("subspace basis vectors are linearly dependent");
  return Subspace(std::move(basis_columns));
}

Subspace Subspace::zero(std::size_t ambient_dim, const MQField::Ptr& field) {
  return Subspace(FMatrix(ambient_dim, 0, field->zero()));
}

bool Subspace::contains_vector(const FMatrix& column) const {
  if (dim() == 0) {
    for (std::size_t i = 0; i < column.rows(); ++i)
      if (!column(i, 0).is_zero()) return false;
    return true;
  }
  FMatrix aug(basis_.rows(), basis_.cols() + 1, basis_.zero_like());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    for (std::size_t j = 0; j < basis_.cols(); ++j) aug(i, j) = basis_(i, j);
    aug(i, basis_.cols()) = column(i, 0);
  }
  return rank(aug) == basis_.cols();
}

bool Subspace::same_span(const Subspace& o) const {
  if (ambient_dim() != o.ambient_dim()) return false;
  if (dim() != o.dim()) return false;
  for (std::size_t j = 0; j < o.dim(); ++j) {
    if (!contains_vector(o.basis_.submatrix(
            [&] {
              std::vector<std::size_t> all(ambient_dim());
              for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
              return all;
            }(),
            {j})))
      return false;
  }
  return true;
}

Isometry Isometry::make(const QuadraticSpace& q, FMatrix m) {
  if (m.rows() != q.dim() || m.cols() != q.dim())
    throw InputError("isometry has wrong dimensions");
  if (!(m.transpose() * q.form() * m == q.form()))
    throw InputError("matrix does not preserve the form");
  return Isometry{std::move(m)};
}

AdmissibilityReport check_admissible(const QuadraticSpace& q) {
  AdmissibilityReport rep;
  std::size_t n1 = q.dim();
  bool ok = true;
  for (const Embedding& e : Embedding::all(q.field())) {
    SignatureTriple s = signature_at(q.form(), e);
    if (e.is_identity()) {
      rep.identity_signature = s;
      if (!(s.negative == 1 && s.zero == 0)) ok = false;
    } else {
      if (!(s.positive == int(n1) && s.negative == 0)) ok = false;
    }
    rep.per_embedding.push_back({e.generator_signs(), s});
  }
  rep.admissible = ok;
  return rep;
}

TypeIInvolution involution_from_subspace(const QuadraticSpace& q,
                                         const Subspace& v1) {
  const FMatrix& b = v1.basis();
  if (b.rows() != q.dim())
    throw InputError("subspace has wrong ambient dimension");
  if (v1.dim() == 0) {
    // -identity; fixed space is zero.
    FMatrix m = FMatrix::identity(q.dim(), q.field()->zero(), q.field()->one());
    m = m.map([](const FieldElement& x) { return -x; });
    return {Isometry{std::move(m)}, SignatureTriple{0, 0, 0}, false};
  }
  FMatrix r = b.transpose() * q.form() * b;
  SignatureTriple rsig = signature(r);
  if (rsig.zero != 0)
    throw DomainError(
        "restriction of the form to the subspace is degenerate; the "
        "orthogonal complement is not transverse");
  // Projection onto V1 along the orthogonal complement: P = B R^{-1} B^T Q.
  FMatrix p = b * inverse(r) * b.transpose() * q.form();
  FMatrix ident =
      FMatrix::identity(q.dim(), q.field()->zero(), q.field()->one());
  FMatrix m = p + p - ident;  // 2P - I
  if (!(m * m == ident)) throw InternalError("involution square check failed");
  if (!(m.transpose() * q.form() * m == q.form()))
    throw InternalError("involution does not preserve the form");
  bool hyper = (rsig.negative == 1 && rsig.zero == 0);
  return {Isometry{std::move(m)}, rsig, hyper};
}

Subspace fixed_subspace(std::size_t ambient_dim, const MQField::Ptr& field,
                        std::span<const Isometry> isoms) {
  if (isoms.empty()) {
    // Fixed space of the empty set is everything.
    return Subspace::make(
        FMatrix::identity(ambient_dim, field->zero(), field->one()));
  }
  FMatrix stacked(ambient_dim * isoms.size(), ambient_dim, field->zero());
  FMatrix ident = FMatrix::identity(ambient_dim, field->zero(), field->one());
  for (std::size_t k = 0; k < isoms.size(); ++k) {
    FMatrix diff = isoms[k].matrix - ident;
    for (std::size_t i = 0; i < ambient_dim; ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j)
        stacked(k * ambient_dim + i, j) = diff(i, j);
  }
  return Subspace::make(nullspace(std::move(stacked)));
}

RestrictedForm restricted_form(const QuadraticSpace& q, const Subspace& s) {
  if (s.dim() == 0) throw InputError("restricted_form: zero subspace");
  FMatrix gram = s.basis().transpose() * q.form() * s.basis();
  SignatureTriple sig = signature(gram);
  return {std::move(gram), sig, sig.negative == 1};
}

namespace {

// Shell enumeration in a canonical order: per coordinate 0, 1, -1, 2, -2, ...
// Only vectors whose max-norm equals `shell` are reported.
class ShellEnumerator {
 public:
  ShellEnumerator(std::size_t dim, long shell) : dim_(dim), shell_(shell) {
    state_.assign(dim, 0);
    done_ = !advance_to_valid(true);
  }

  bool done() const { return done_; }
  const std::vector<long>& value() const { return state_; }

  void next() { done_ = !advance_to_valid(false); }

 private:
  std::size_t dim_;
  long shell_;
  std::vector<long> state_;
  bool done_ = false;

  static long next_value(long v) {
    if (v == 0) return 1;
    if (v > 0) return -v;
    return -v + 1;
  }

  bool increment() {
    for (std::size_t i = dim_; i-- > 0;) {
      long nv = next_value(state_[i]);
      if (std::abs(nv) <= shell_) {
        state_[i] = nv;
        return true;
      }
      state_[i] = 0;
    }
    return false;
  }

  bool on_shell() const {
    long m = 0;
    for (long v : state_) m = std::max(m, std::abs(v));
    return m == shell_;
  }

  bool advance_to_valid(bool include_current) {
    if (include_current && on_shell()) return true;
    while (increment())
      if (on_shell()) return true;
    return false;
  }
};

}  // namespace

IsotropyResult rational_isotropy(const QuadraticSpace& q, long height_bound) {
  IsotropyResult res;
  if (height_bound < 1) throw InputError("height bound must be >= 1");

  if (q.field()->rank() != 0) {
    AdmissibilityReport adm = check_admissible(q);
    if (adm.admissible) {
      res.kind = IsotropyResult::Kind::AnisotropicCertified;
      res.uniformity = IsotropyResult::Uniformity::Uniform;
      res.note =
          "admissible Lorentzian form over a nontrivial totally real "
          "extension of Q is anisotropic";
    } else {
      res.kind = IsotropyResult::Kind::Unknown;
      res.note = "form is not admissible and not rational; no certificate";
    }
    return res;
  }

  std::size_t n = q.dim();
  // Scale to an integer matrix (lcm of denominators); the search then runs
  // in 128-bit integers when entries allow, exact mpz otherwise.
  Integer den_lcm = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer d = q.form()(i, j).rational_value().get_den();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
  std::vector<std::vector<Integer>> mi(n, std::vector<Integer>(n));
  bool fits64 = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = q.form()(i, j).rational_value() * Rational(den_lcm);
      mi[i][j] = scaled.get_num();
      if (!mi[i][j].fits_slong_p()) fits64 = false;
    }
  std::vector<std::vector<long>> ml;
  if (fits64) {
    ml.assign(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ml[i][j] = mi[i][j].get_si();
  }

  auto value_is_zero = [&](const std::vector<long>& x) {
    if (fits64) {
      __int128 acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (x[j] == 0) continue;
          acc += static_cast<__int128>(ml[i][j]) * x[i] * x[j];
        }
      }
      return acc == 0;
    }
    Integer acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (x[j] == 0) continue;
        acc += mi[i][j] * x[i] * x[j];
      }
    }
    return sgn(acc) == 0;
  };

  long cap = std::max(height_bound, 1024L);
  long bound = height_bound;
  long first_shell = 1;
  for (;;) {
    for (long shell = first_shell; shell <= bound; ++shell) {
      for (ShellEnumerator en(n, shell); !en.done(); en.next()) {
        const auto& x = en.value();
        if (value_is_zero(x)) {
          res.kind = IsotropyResult::Kind::Isotropic;
          res.witness.assign(x.begin(), x.end());
          res.uniformity = IsotropyResult::Uniformity::NonUniform;
          res.height_used = shell;
          return res;
        }
      }
    }
    res.height_used = bound;
    if (n >= 5 && bound < cap) {
      first_shell = bound + 1;
      bound = std::min(cap, bound * 2);  // Meyer: a witness must exist
      continue;
    }
    break;
  }
  res.kind = IsotropyResult::Kind::Unknown;
  res.uniformity = IsotropyResult::Uniformity::Unknown;
  res.note = "no isotropic vector up to height " + std::to_string(res.height_used);
  return res;
}

}  // namespace hyplat
