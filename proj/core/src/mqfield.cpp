#include "hyplat/mqfield.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace hyplat {

namespace {

// Product of two squarefree radicands: m*n = g^2 * kernel with g = gcd(m,n)
// and kernel squarefree. Returns {kernel, g}.
std::pair<Integer, Integer> radicand_product(const Integer& m, const Integer& n) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  return {(m / g) * (n / g), g};
}

}  // namespace

MQField::Ptr MQField::rationals() {
  static Ptr q = build({});
  return q;
}

MQField::Ptr MQField::build(const std::vector<Integer>& gens) {
  auto f = std::shared_ptr<MQField>(new MQField());
  f->generators_ = gens;
  // Basis: subset products, reduced. Build incrementally; collisions mean the
  // generators were dependent, which callers must rule out beforehand.
  std::vector<std::pair<Integer, unsigned>> entries = {{Integer(1), 0u}};
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::size_t old = entries.size();
    for (std::size_t i = 0; i < old; ++i) {
      auto [kernel, g] = radicand_product(entries[i].first, gens[k]);
      entries.push_back({kernel, entries[i].second | (1u << k)});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (entries[i].first == entries[i + 1].first)
      throw InputError("field generators are multiplicatively dependent: "
                       "duplicate basis radicand " + entries[i].first.get_str());
  }
  f->basis_.reserve(entries.size());
  f->subset_.reserve(entries.size());
  for (auto& [rad, mask] : entries) {
    f->basis_.push_back(rad);
    f->subset_.push_back(mask);
  }
  // Multiplication tables.
  std::size_t d = f->basis_.size();
  f->mul_index_.resize(d * d);
  f->mul_coeff_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto [kernel, g] = radicand_product(f->basis_[i], f->basis_[j]);
      auto it = std::lower_bound(f->basis_.begin(), f->basis_.end(), kernel);
      if (it == f->basis_.end() || *it != kernel)
        throw InternalError("basis not closed under products");
      f->mul_index_[i * d + j] = std::size_t(it - f->basis_.begin());
      f->mul_coeff_[i * d + j] = g;
    }
  }
  return f;
}

MQField::Ptr MQField::make(const std::vector<Integer>& generators) {
  for (const Integer& g : generators) {
    if (g <= 1) throw InputError("field generator must be an integer > 1, got " + g.get_str());
    auto [kernel, sq] = squarefree_kernel(g);
    if (sq != 1) throw InputError("field generator " + g.get_str() + " is not squarefree");
  }
  if (generators.size() >= 20)
    throw InputError("too many field generators (limit 20)");
  return build(generators);
}

MQField::Ptr MQField::span(const std::vector<Integer>& radicands) {
  std::vector<Integer> gens;
  Ptr current = rationals();
  for (const Integer& r : radicands) {
    if (sgn(r) <= 0) throw InputError("radicand must be positive, got " + r.get_str());
    auto [kernel, sq] = squarefree_kernel(r);
    if (kernel == 1) continue;
    if (current->contains_radicand(kernel)) continue;
    gens.push_back(kernel);
    if (gens.size() >= 20) throw InputError("too many independent radicands (limit 20)");
    current = build(gens);
  }
  return current;
}

std::optional<std::size_t> MQField::basis_index(const Integer& radicand) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), radicand);
  if (it == basis_.end() || *it != radicand) return std::nullopt;
  return std::size_t(it - basis_.begin());
}

bool MQField::contains(const MQField& sub) const {
  for (const Integer& b : sub.basis_)
    if (!contains_radicand(b)) return false;
  return true;
}

FieldElement MQField::zero() const { return FieldElement(shared_from_this()); }
FieldElement MQField::one() const { return constant(Rational(1)); }

FieldElement MQField::constant(const Rational& q) const {
  return FieldElement(shared_from_this(), q);
}

FieldElement MQField::radical(const Integer& radicand, const Rational& c) const {
  if (sgn(radicand) <= 0) throw InputError("radicand must be positive");
  auto [kernel, sq] = squarefree_kernel(radicand);
  auto idx = basis_index(kernel);
  if (!idx)
    throw InputError("sqrt(" + radicand.get_str() + ") does not lie in " + describe());
  return FieldElement::from_terms(shared_from_this(),
                                  {{*idx, c * Rational(sq)}});
}

std::string MQField::describe() const {
  if (generators_.empty()) return "Q";
  std::ostringstream os;
  os << "Q(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    os << "sqrt(" << generators_[i].get_str() << ")";
  }
  os << ")";
  return os.str();
}

std::vector<Embedding> Embedding::all(const MQField::Ptr& field) {
  std::vector<Embedding> out;
  unsigned count = 1u << field->rank();
  out.reserve(count);
  for (unsigned m = 0; m < count; ++m) out.emplace_back(field, m);
  return out;
}

int Embedding::sign_of_basis(std::size_t basis_idx) const {
  unsigned overlap = field_->generator_subset(basis_idx) & flips_;
  return (std::popcount(overlap) % 2) ? -1 : 1;
}

int Embedding::sign_of_radicand(const Integer& radicand) const {
  auto idx = field_->basis_index(radicand);
  if (!idx) throw InternalError("radicand not in field basis");
  return sign_of_basis(*idx);
}

std::vector<int> Embedding::generator_signs() const {
  std::vector<int> out(field_->rank());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (flips_ >> i) & 1u ? -1 : 1;
  return out;
}

FieldElement::FieldElement() : field_(MQField::rationals()) {}

FieldElement::FieldElement(MQField::Ptr field) : field_(std::move(field)) {}

FieldElement::FieldElement(MQField::Ptr field, const Rational& q)
    : field_(std::move(field)) {
  if (sgn(q) != 0) terms_.push_back({0, q});
}

FieldElement FieldElement::from_terms(
    MQField::Ptr field, std::vector<std::pair<std::size_t, Rational>> terms) {
  FieldElement x(std::move(field));
  x.terms_ = std::move(terms);
  x.normalize();
  return x;
}

void FieldElement::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, Rational>> out;
  for (auto& [idx, c] : terms_) {
    if (!out.empty() && out.back().first == idx)
      out.back().second += c;
    else
      out.push_back({idx, c});
  }
  std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
  terms_ = std::move(out);
}

Rational FieldElement::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
  throw InternalError("rational_value on irrational element " + str());
}

Rational FieldElement::coefficient(const Integer& radicand) const {
  auto idx = field_->basis_index(radicand);
  if (!idx) return Rational(0);
  for (const auto& [i, c] : terms_)
    if (i == *idx) return c;
  return Rational(0);
}

std::vector<Integer> FieldElement::support_radicands() const {
  std::vector<Integer> out;
  for (const auto& [i, c] : terms_)
    if (i != 0) out.push_back(field_->basis()[i]);
  return out;
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_as(*b.field()))
    throw InputError("field mismatch: " + a.field()->describe() + " vs " +
                     b.field()->describe());
}
}  // namespace

FieldElement FieldElement::operator-() const {
  auto t = terms_;
  for (auto& [i, c] : t) c = -c;
  FieldElement out(field_);
  out.terms_ = std::move(t);
  return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(*this, o);
  auto t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(field_, std::move(t));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(*this, o);
  std::vector<std::pair<std::size_t, Rational>> t;
  t.reserve(terms_.size() * o.terms_.size());
  for (const auto& [i, ci] : terms_) {
    for (const auto& [j, cj] : o.terms_) {
      std::size_t k = field_->mul_index(i, j);
      t.push_back({k, ci * cj * Rational(field_->mul_coeff(i, j))});
    }
  }
  return from_terms(field_, std::move(t));
}

FieldElement FieldElement::operator*(const Rational& c) const {
  auto t = terms_;
  for (auto& [i, x] : t) x *= c;
  return from_terms(field_, std::move(t));
}

FieldElement FieldElement::operator+(const Rational& c) const {
  return *this + FieldElement(field_, c);
}
FieldElement FieldElement::operator-(const Rational& c) const {
  return *this + FieldElement(field_, -c);
}

FieldElement operator*(const Rational& c, const FieldElement& x) {
  return x * c;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (is_rational()) return FieldElement(field_, Rational(1) / terms_[0].second);
  // Product of all nontrivial conjugates; x * conj_product is the rational norm.
  FieldElement conj_product = field_->one();
  unsigned count = 1u << field_->rank();
  for (unsigned m = 1; m < count; ++m)
    conj_product = conj_product * apply(Embedding(field_, m));
  FieldElement norm = *this * conj_product;
  if (!norm.is_rational())
    throw InternalError("norm of field element is not rational");
  Rational n = norm.rational_value();
  if (sgn(n) == 0) throw InternalError("nonzero element with zero norm");
  return conj_product * (Rational(1) / n);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(*this, o);
  if (o.is_zero()) throw InputError("division by zero");
  if (o.is_rational()) return *this * (Rational(1) / o.terms_[0].second);
  return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) return false;
  return terms_ == o.terms_;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  if (auto c = field_->generators().size() <=> o.field_->generators().size();
      c != 0)
    return c;
  for (std::size_t i = 0; i < field_->generators().size(); ++i) {
    if (auto c = cmp(field_->generators()[i], o.field_->generators()[i]) <=> 0;
        c != 0)
      return c;
  }
  if (auto c = terms_.size() <=> o.terms_.size(); c != 0) return c;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (auto c = terms_[i].first <=> o.terms_[i].first; c != 0) return c;
    if (auto c = cmp(terms_[i].second, o.terms_[i].second) <=> 0; c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

FieldElement FieldElement::apply(const Embedding& e) const {
  if (!e.field()->same_as(*field_))
    throw InputError("embedding belongs to a different field");
  auto t = terms_;
  for (auto& [i, c] : t)
    if (e.sign_of_basis(i) < 0) c = -c;
  FieldElement out(field_);
  out.terms_ = std::move(t);
  return out;
}

RatInterval FieldElement::enclosure(unsigned bits) const {
  RatInterval acc{Rational(0), Rational(0)};
  for (const auto& [i, c] : terms_) {
    if (i == 0) {
      acc = acc + RatInterval{c, c};
    } else {
      RatInterval root = sqrt_enclosure(field_->basis()[i], bits);
      acc = acc + root.scaled(c);
    }
  }
  return acc;
}

int FieldElement::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_[0].second);  // c or c*sqrt(b), b>0
  unsigned bits = default_precision_bits();
  for (;;) {
    RatInterval iv = enclosure(bits);
    if (sgn(iv.lo) > 0) return 1;
    if (sgn(iv.hi) < 0) return -1;
    if (bits > (1u << 24))
      throw InternalError("sign determination exceeded precision limit");
    bits *= 2;
  }
}

double FieldElement::to_double() const {
  RatInterval iv = enclosure(96);
  return (iv.lo.get_d() + iv.hi.get_d()) / 2.0;
}

FieldElement FieldElement::lift_to(const MQField::Ptr& target) const {
  std::vector<std::pair<std::size_t, Rational>> t;
  for (const auto& [i, c] : terms_) {
    auto idx = target->basis_index(field_->basis()[i]);
    if (!idx)
      throw InputError("element " + str() + " does not lie in " +
                       target->describe());
    t.push_back({*idx, c});
  }
  return from_terms(target, std::move(t));
}

std::string FieldElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "sqrt(" << field_->basis()[i].get_str() << ")";
    }
    first = false;
  }
  return os.str();
}

int embed_sign(const FieldElement& x, const Embedding& e) {
  return x.apply(e).sign();
}

MQField::Ptr subfield_generated(const std::vector<FieldElement>& elems) {
  MQField::Ptr ambient = MQField::rationals();
  for (const auto& x : elems) {
    if (x.field()->rank() > ambient->rank()) ambient = x.field();
  }
  for (const auto& x : elems) {
    if (!ambient->contains(*x.field()))
      throw InputError("subfield_generated: elements in incompatible fields");
  }
  std::set<Integer> support;
  for (const auto& x : elems)
    for (const Integer& r : x.support_radicands()) support.insert(r);
  return MQField::span({support.begin(), support.end()});
}

}  // namespace hyplat
