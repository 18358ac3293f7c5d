#include "hyplat/signature.hpp"

namespace hyplat {

FMatrix apply_embedding(const FMatrix& m, const Embedding& e) {
  return m.map([&](const FieldElement& x) { return x.apply(e); });
}

SignatureTriple signature(const FMatrix& sym) {
  std::size_t n = sym.rows();
  if (n != sym.cols()) throw InternalError("signature of non-square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sym(i, j) != sym(j, i))
        throw InternalError("signature of non-symmetric matrix");

  FMatrix w = sym;
  SignatureTriple sig;
  std::size_t start = 0;
  while (start < n) {
    // Prefer a nonzero diagonal pivot in the remaining block.
    std::size_t piv = n;
    for (std::size_t t = start; t < n; ++t) {
      if (!w(t, t).is_zero()) {
        piv = t;
        break;
      }
    }
    if (piv == n) {
      // Diagonal all zero: look for an off-diagonal entry. Adding row+column
      // t to row+column s turns w(s,s) into 2*w(s,t), nonzero in char 0.
      std::size_t s = n, t = n;
      for (std::size_t i = start; i < n && s == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!w(i, j).is_zero()) {
            s = i;
            t = j;
            break;
          }
      if (s == n) {
        sig.zero += int(n - start);
        break;
      }
      for (std::size_t j = 0; j < n; ++j) w(s, j) += w(t, j);
      for (std::size_t i = 0; i < n; ++i) w(i, s) += w(i, t);
      piv = s;
    }
    if (piv != start) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(start, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(w(i, piv), w(i, start));
    }
    const FieldElement d = w(start, start);
    if (d.sign() > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (std::size_t i = start + 1; i < n; ++i) {
      if (w(i, start).is_zero()) continue;
      FieldElement f = w(i, start) / d;
      for (std::size_t j = start; j < n; ++j) w(i, j) -= f * w(start, j);
      for (std::size_t j = start; j < n; ++j) w(j, i) = w(i, j);
    }
    ++start;
  }
  return sig;
}

SignatureTriple signature_at(const FMatrix& sym, const Embedding& e) {
  return signature(apply_embedding(sym, e));
}

}  // namespace hyplat
