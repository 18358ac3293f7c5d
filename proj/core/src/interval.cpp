#include "hyplat/interval.hpp"

#include <cstdlib>

namespace hyplat {

namespace {
unsigned g_precision_override = 0;
}

unsigned default_precision_bits() {
  if (g_precision_override != 0) return g_precision_override;
  static unsigned env_bits = [] {
    if (const char* s = std::getenv("HYPLAT_PRECISION_BITS")) {
      long v = std::atol(s);
      if (v >= 4 && v <= 1 << 20) return static_cast<unsigned>(v);
    }
    return 128u;
  }();
  return env_bits;
}

void set_precision_bits(unsigned bits) { g_precision_override = bits; }

RatInterval sqrt_enclosure(const Integer& n, unsigned bits) {
  if (sgn(n) < 0) throw InternalError("sqrt_enclosure: negative radicand");
  // floor(sqrt(n * 4^bits)) / 2^bits brackets sqrt(n) from below.
  Integer shifted = n << (2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), shifted.get_mpz_t());
  Integer den = Integer(1) << bits;
  Rational lo(root, den);
  lo.canonicalize();
  Rational hi(root + 1, den);
  hi.canonicalize();
  // Exact squares deserve an exact answer.
  if (root * root == shifted) hi = lo;
  return {lo, hi};
}

}  // namespace hyplat
