#include "hyplat/quaternion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hyplat {

QuaternionAlgebra::Ptr QuaternionAlgebra::make(FieldElement a, FieldElement b) {
  if (a.is_zero() || b.is_zero())
    throw InputError("quaternion algebra parameters must be nonzero");
  if (!a.field()->same_as(*b.field()))
    throw InputError("algebra parameters must share a field");
  MQField::Ptr f = a.field();
  return Ptr(new QuaternionAlgebra(std::move(a), std::move(b), std::move(f)));
}

std::string QuaternionAlgebra::describe() const {
  return "D(" + a_.str() + ", " + b_.str() + ") over " + field_->describe();
}

Quaternion::Quaternion(QuaternionAlgebra::Ptr alg, FieldElement w,
                       FieldElement x, FieldElement y, FieldElement z)
    : alg_(std::move(alg)),
      w_(std::move(w)),
      x_(std::move(x)),
      y_(std::move(y)),
      z_(std::move(z)) {
  for (const FieldElement* c : {&w_, &x_, &y_, &z_})
    if (!c->field()->same_as(*alg_->field()))
      throw InputError("quaternion coordinate lies outside the algebra's field");
}

Quaternion Quaternion::scalar(const QuaternionAlgebra::Ptr& alg,
                              const Rational& c) {
  const auto& f = alg->field();
  return {alg, f->constant(c), f->zero(), f->zero(), f->zero()};
}
Quaternion Quaternion::unit_i(const QuaternionAlgebra::Ptr& alg) {
  const auto& f = alg->field();
  return {alg, f->zero(), f->one(), f->zero(), f->zero()};
}
Quaternion Quaternion::unit_j(const QuaternionAlgebra::Ptr& alg) {
  const auto& f = alg->field();
  return {alg, f->zero(), f->zero(), f->one(), f->zero()};
}
Quaternion Quaternion::unit_k(const QuaternionAlgebra::Ptr& alg) {
  const auto& f = alg->field();
  return {alg, f->zero(), f->zero(), f->zero(), f->one()};
}

bool Quaternion::is_zero() const {
  return w_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero();
}
bool Quaternion::is_scalar() const {
  return x_.is_zero() && y_.is_zero() && z_.is_zero();
}
Quaternion Quaternion::zero_like() const {
  const auto& f = alg_->field();
  return {alg_, f->zero(), f->zero(), f->zero(), f->zero()};
}
Quaternion Quaternion::one_like() const { return scalar(alg_, Rational(1)); }

namespace {
void require_same_algebra(const Quaternion& p, const Quaternion& q) {
  if (!p.algebra()->same_as(*q.algebra()))
    throw InputError("algebra mismatch: " + p.algebra()->describe() + " vs " +
                     q.algebra()->describe());
}
}  // namespace

Quaternion Quaternion::operator-() const {
  return {alg_, -w_, -x_, -y_, -z_};
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
  require_same_algebra(*this, o);
  return {alg_, w_ + o.w_, x_ + o.x_, y_ + o.y_, z_ + o.z_};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  require_same_algebra(*this, o);
  return {alg_, w_ - o.w_, x_ - o.x_, y_ - o.y_, z_ - o.z_};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  require_same_algebra(*this, o);
  const FieldElement& a = alg_->a();
  const FieldElement& b = alg_->b();
  // From i^2=a, j^2=b, ij=-ji=k: jk=-kj=-b i? no: jk = -b i holds with the
  // sign conventions ik=aj, ki=-aj, jk=-bi, kj=bi, k^2=-ab.
  FieldElement w = w_ * o.w_ + a * (x_ * o.x_) + b * (y_ * o.y_) -
                   a * b * (z_ * o.z_);
  FieldElement x = w_ * o.x_ + x_ * o.w_ - b * (y_ * o.z_) + b * (z_ * o.y_);
  FieldElement y = w_ * o.y_ + y_ * o.w_ + a * (x_ * o.z_) - a * (z_ * o.x_);
  FieldElement z = w_ * o.z_ + z_ * o.w_ + x_ * o.y_ - y_ * o.x_;
  return {alg_, std::move(w), std::move(x), std::move(y), std::move(z)};
}

Quaternion Quaternion::operator*(const FieldElement& c) const {
  return {alg_, w_ * c, x_ * c, y_ * c, z_ * c};
}

Quaternion operator*(const FieldElement& c, const Quaternion& q) {
  return q * c;
}

bool Quaternion::operator==(const Quaternion& o) const {
  return alg_->same_as(*o.alg_) && w_ == o.w_ && x_ == o.x_ && y_ == o.y_ &&
         z_ == o.z_;
}

std::strong_ordering Quaternion::operator<=>(const Quaternion& o) const {
  if (auto c = w_ <=> o.w_; c != 0) return c;
  if (auto c = x_ <=> o.x_; c != 0) return c;
  if (auto c = y_ <=> o.y_; c != 0) return c;
  return z_ <=> o.z_;
}

Quaternion Quaternion::conjugate() const {
  return {alg_, w_, -x_, -y_, -z_};
}

FieldElement Quaternion::norm() const {
  const FieldElement& a = alg_->a();
  const FieldElement& b = alg_->b();
  return w_ * w_ - a * (x_ * x_) - b * (y_ * y_) + a * b * (z_ * z_);
}

FieldElement Quaternion::trace() const { return w_ * Rational(2); }

Quaternion Quaternion::inverse() const {
  FieldElement n = norm();
  if (n.is_zero())
    throw DomainError("quaternion with zero norm has no inverse");
  return conjugate() * n.inverse();
}

std::string Quaternion::str() const {
  std::ostringstream os;
  os << "(" << w_.str() << ") + (" << x_.str() << ")i + (" << y_.str()
     << ")j + (" << z_.str() << ")k";
  return os.str();
}

std::pair<FieldElement, FieldElement> norm_trace(const Quaternion& q) {
  return {q.norm(), q.trace()};
}

std::optional<FieldElement> field_sqrt(const FieldElement& x) {
  if (x.is_zero()) return x.field()->zero();
  if (x.sign() < 0) return std::nullopt;
  if (x.is_rational()) {
    Rational q = x.rational_value();
    // sqrt(n/d) = sqrt(n d) / d; reduce n d to kernel * square^2.
    Integer nd = q.get_num() * q.get_den();
    auto [kernel, square] = squarefree_kernel(nd);
    Rational c(square, q.get_den());
    c.canonicalize();
    if (kernel == 1) return x.field()->constant(c);
    if (x.field()->contains_radicand(kernel))
      return x.field()->radical(kernel, c);
    return std::nullopt;
  }
  // Single radical term c*sqrt(b): sqrt needs a quartic root; unsupported.
  // Multi-term (p + q sqrt(b))^2 patterns are not searched.
  return std::nullopt;
}

Matrix<FieldElement> matrix_rep_split(const Quaternion& q) {
  const auto& alg = q.algebra();
  std::optional<FieldElement> s = field_sqrt(alg->a());
  if (!s || s->is_zero())
    throw DomainError("D(" + alg->a().str() + ", " + alg->b().str() +
                      ") is not split-representable over " +
                      alg->field()->describe() +
                      ": parameter a is not a nonzero square there");
  // Rescale i' = i/s so i'^2 = 1; then
  //   1 -> I, i' -> diag(1,-1), j -> [[0,b],[1,0]], k' = i'j -> [[0,b],[-1,0]]
  // which for b = 1 is the classical splitting of D(1,1).
  const FieldElement& b = alg->b();
  FieldElement xs = q.x() * (*s);
  FieldElement zs = q.z() * (*s);
  Matrix<FieldElement> m(2, 2, alg->field()->zero());
  m(0, 0) = q.w() + xs;
  m(0, 1) = b * (q.y() + zs);
  m(1, 0) = q.y() - zs;
  m(1, 1) = q.w() - xs;
  return m;
}

bool is_split_at(const QuaternionAlgebra& alg, const Embedding& e) {
  return embed_sign(alg.a(), e) > 0 || embed_sign(alg.b(), e) > 0;
}

namespace {

// v = 2^alpha * u with u odd; also strips the sign into u.
std::pair<long, Integer> split_two(const Integer& v) {
  long alpha = 0;
  Integer u = v;
  while (u % 2 == 0) {
    u /= 2;
    ++alpha;
  }
  return {alpha, u};
}

int epsilon_mod2(const Integer& u) {  // (u-1)/2 mod 2, u odd
  Integer r = ((u - 1) / 2) % 2;
  return std::abs(r.get_si()) % 2;
}

int omega_mod2(const Integer& u) {  // (u^2-1)/8 mod 2, u odd
  Integer r = ((u * u - 1) / 8) % 2;
  return std::abs(r.get_si()) % 2;
}

// The square class of a nonzero rational as a squarefree integer.
Integer squarefree_rep(const Rational& q) {
  Integer nd = q.get_num() * q.get_den();
  int s = sgn(nd);
  auto [kernel, square] = squarefree_kernel(abs(nd));
  return s < 0 ? -kernel : kernel;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (sgn(a) == 0 || sgn(b) == 0)
    throw InputError("Hilbert symbol arguments must be nonzero");
  Integer sa = squarefree_rep(a), sb = squarefree_rep(b);
  if (place.infinite) return (sgn(sa) < 0 && sgn(sb) < 0) ? -1 : 1;
  const Integer& p = place.p;
  if (p < 2) throw InputError("invalid place");
  if (p == 2) {
    auto [alpha, u] = split_two(sa);
    auto [beta, v] = split_two(sb);
    int exp = epsilon_mod2(u) * epsilon_mod2(v) +
              int(alpha % 2) * omega_mod2(v) + int(beta % 2) * omega_mod2(u);
    return (exp % 2) ? -1 : 1;
  }
  // odd p: a = p^alpha u, b = p^beta v with u, v prime to p
  long alpha = 0, beta = 0;
  Integer u = sa, v = sb;
  while (u % p == 0) {
    u /= p;
    ++alpha;
  }
  while (v % p == 0) {
    v /= p;
    ++beta;
  }
  int eps_p = epsilon_mod2(p);
  int result = 1;
  if ((alpha % 2) && (beta % 2) && eps_p) result = -result;
  if (beta % 2) result *= legendre_symbol(u, p);
  if (alpha % 2) result *= legendre_symbol(v, p);
  return result;
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
  std::vector<Place> out{Place::infinity(), Place::prime(2)};
  std::set<Integer> primes;
  for (const Rational* q : {&a, &b})
    for (const Integer& p : factorize(squarefree_rep(*q)))
      if (p != 2) primes.insert(p);
  for (const Integer& p : primes) out.push_back(Place::prime(p));
  return out;
}

std::string SplitReport::verdict_str() const {
  switch (verdict) {
    case Verdict::Division:
      return "division";
    case Verdict::Split:
      return "split";
    case Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

SplitReport is_division(const QuaternionAlgebra& alg) {
  SplitReport rep;
  for (const Embedding& e : Embedding::all(alg.field()))
    rep.real_places.push_back({e.generator_signs(), is_split_at(alg, e)});

  if (alg.a().is_rational() && alg.b().is_rational()) {
    Rational a = alg.a().rational_value(), b = alg.b().rational_value();
    bool ramified_somewhere = false;
    for (const Place& v : relevant_places(a, b)) {
      int s = hilbert_symbol(a, b, v);
      rep.symbols.push_back({v, s});
      if (s < 0) ramified_somewhere = true;
    }
    rep.verdict = ramified_somewhere ? SplitReport::Verdict::Division
                                     : SplitReport::Verdict::Split;
    return rep;
  }

  // Non-rational parameters: look for a zero divisor (norm form zero) among
  // small coordinates; finding one certifies a split algebra.
  const auto& f = alg.field();
  auto alg_ptr = alg.shared_from_this();
  std::vector<FieldElement> pool = {f->zero(), f->one(),
                                    f->constant(Rational(-1)),
                                    f->constant(Rational(2)),
                                    f->constant(Rational(-2))};
  for (std::size_t g = 1; g < f->degree(); ++g) {
    pool.push_back(FieldElement::from_terms(f, {{g, Rational(1)}}));
    pool.push_back(FieldElement::from_terms(f, {{g, Rational(-1)}}));
  }
  for (const auto& w : pool)
    for (const auto& x : pool)
      for (const auto& y : pool)
        for (const auto& z : pool) {
          Quaternion q(alg_ptr, w, x, y, z);
          if (q.is_zero()) continue;
          if (q.norm().is_zero()) {
            rep.verdict = SplitReport::Verdict::Split;
            rep.zero_divisor = q;
            rep.note = "zero divisor found: " + q.str();
            return rep;
          }
        }
  rep.verdict = SplitReport::Verdict::Unknown;
  rep.note = "no zero divisor with small coordinates; division status undecided";
  return rep;
}

bool is_psl_involution(const Quaternion& q) {
  return q.trace().is_zero() && !q.norm().is_zero();
}

}  // namespace hyplat
