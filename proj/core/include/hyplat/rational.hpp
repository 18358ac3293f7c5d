#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "hyplat/errors.hpp"

namespace hyplat {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Integer& n) { return sgn(n); }
inline int sign_of(const Rational& q) { return sgn(q); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// True when q is an integer (denominator 1 in canonical form).
inline bool is_integral(const Rational& q) {
  return q.get_den() == 1;
}

/// Prime factorization by trial division; factors returned in increasing
/// order with multiplicity. Intended for the small radicands and Hilbert
/// symbol arguments that appear in practice.
std::vector<Integer> factorize(Integer n);

/// Decompose n > 0 as kernel * square^2 with kernel squarefree.
/// Returns {kernel, square}.
std::pair<Integer, Integer> squarefree_kernel(const Integer& n);

/// Exact test: is n a perfect square? If so *root is set.
bool perfect_square(const Integer& n, Integer* root = nullptr);

/// Legendre symbol (a|p) for an odd prime p. Returns -1, 0 or +1.
int legendre_symbol(const Integer& a, const Integer& p);

/// Parse a decimal integer, throwing ParseError on garbage.
Integer parse_integer(const std::string& text, std::size_t pos_offset = 0);

std::string to_string(const Rational& q);

}  // namespace hyplat
