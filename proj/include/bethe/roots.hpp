#pragma once
// Bethe-root containers and canonicalization.  The eigenvalue functions are
// invariant under the crossing image u -> 1/(qu) of any single root, so each
// root is stored as the larger-modulus representative of its crossing pair
// and sets are sorted to give a total order for deduplication.

#include "bethe/functions.hpp"
#include "bethe/params.hpp"
#include "bethe/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bethe {

struct RootSet {
  int sector_m = 0;
  std::vector<Complex> roots;
  TransferCase kase = TransferCase::Diag;
};

// The spectral problem is invariant under crossing u -> 1/(qu) and under
// u -> -u (every coefficient function is even in each root), so each root
// has the four-element orbit {u, -u, 1/(qu), -1/(qu)}; pick one member
// deterministically.
inline Complex sign_fixed(Complex u) {
  if (u.real() < 0.0 || (u.real() == 0.0 && u.imag() < 0.0)) u = -u;
  return u;
}

inline Complex canonical_root(const Complex& u, const Complex& q) {
  const Complex su = sign_fixed(u);
  const Complex so = sign_fixed(1.0 / (q * u));
  const double au = std::abs(su), ao = std::abs(so);
  if (std::abs(au - ao) < 1e-12 * std::max(au, ao)) {  // modulus tie
    if (std::abs(su.real() - so.real()) > 1e-12 * std::max(au, ao))
      return su.real() > so.real() ? su : so;
    return su.imag() >= so.imag() ? su : so;
  }
  return au > ao ? su : so;
}

inline void canonicalize(RootSet& rs, const Complex& q) {
  for (Complex& u : rs.roots) u = canonical_root(u, q);
  std::sort(rs.roots.begin(), rs.roots.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-12 * std::max({1.0, ma, mb})) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  rs.sector_m = static_cast<int>(rs.roots.size());
}

// Distinctness invariant: min pairwise |b(u_i/u_j)| > 1e-8.
inline bool roots_distinct(const std::vector<Complex>& roots, const Complex& q) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(fn_b(roots[i] / roots[j], q)) <= 1e-8) return false;
  return true;
}

inline bool same_rootset(const RootSet& a, const RootSet& b, double tol = 1e-6) {
  if (a.roots.size() != b.roots.size()) return false;
  for (size_t i = 0; i < a.roots.size(); ++i) {
    const double scale = std::max(1.0, std::abs(a.roots[i]));
    if (std::abs(a.roots[i] - b.roots[i]) > tol * scale) return false;
  }
  return true;
}

}  // namespace bethe
