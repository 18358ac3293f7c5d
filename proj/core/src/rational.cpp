#include "hyplat/rational.hpp"

#include <cctype>

namespace hyplat {

std::vector<Integer> factorize(Integer n) {
  std::vector<Integer> out;
  if (sgn(n) < 0) n = -n;
  if (n <= 1) return out;
  for (Integer p = 2; p * p <= n;) {
    if (n % p == 0) {
      out.push_back(p);
      n /= p;
    } else {
      p += (p == 2) ? 1 : 2;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<Integer, Integer> squarefree_kernel(const Integer& n) {
  if (sgn(n) <= 0) throw InternalError("squarefree_kernel: nonpositive input");
  Integer kernel = 1, square = 1;
  Integer rest = n;
  for (Integer p = 2; p * p <= rest;) {
    if (rest % p == 0) {
      int mult = 0;
      while (rest % p == 0) {
        rest /= p;
        ++mult;
      }
      for (int i = 0; i < mult / 2; ++i) square *= p;
      if (mult % 2) kernel *= p;
    } else {
      p += (p == 2) ? 1 : 2;
    }
  }
  kernel *= rest;  // leftover prime
  return {kernel, square};
}

bool perfect_square(const Integer& n, Integer* root) {
  if (sgn(n) < 0) return false;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

int legendre_symbol(const Integer& a, const Integer& p) {
  Integer am = a % p;
  if (am < 0) am += p;
  if (am == 0) return 0;
  return mpz_legendre(am.get_mpz_t(), p.get_mpz_t());
}

Integer parse_integer(const std::string& text, std::size_t pos_offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError(pos_offset, "expected integer");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(pos_offset + i, "invalid digit in integer");
  }
  return Integer(text);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hyplat
