#pragma once

#include "hyplat/rational.hpp"

namespace hyplat {

/// Starting precision (in bits) for adaptive interval evaluation.
/// Reads HYPLAT_PRECISION_BITS once; defaults to 128.
unsigned default_precision_bits();

/// Override the starting precision (mainly for tests). 0 restores the default.
void set_precision_bits(unsigned bits);

/// Closed interval with exact rational endpoints, lo <= hi.
struct RatInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }

  RatInterval operator+(const RatInterval& o) const {
    return {lo + o.lo, hi + o.hi};
  }
  /// Scale by an exact rational (sign-aware).
  RatInterval scaled(const Rational& c) const {
    if (sgn(c) >= 0) return {c * lo, c * hi};
    return {c * hi, c * lo};
  }
};

/// Dyadic enclosure of sqrt(n) for n >= 0 with denominator 2^bits:
/// lo <= sqrt(n) <= hi and hi - lo == 2^-bits.
RatInterval sqrt_enclosure(const Integer& n, unsigned bits);

}  // namespace hyplat
