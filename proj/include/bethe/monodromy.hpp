#pragma once
// The one-row monodromy L_a(u) = R_a1(u/v_1)...R_aN(u/v_N), its co-matrix
// (built from the reversed R-product), the quantum determinant, vacuum
// eigenvalues, and the Izergin partition function.

#include "bethe/functions.hpp"
#include "bethe/linalg.hpp"
#include "bethe/params.hpp"
#include "bethe/rmatrix.hpp"
#include "bethe/types.hpp"

#include <utility>
#include <vector>

namespace bethe {

// Entries of a 2x2 auxiliary-space matrix of quantum operators, stored with
// the full (N+1)-factor product they were cut from (auxiliary = factor 0).
struct MonodromyBlocks {
  int n_sites = 0;
  Mat full;  // 2^(n+1) x 2^(n+1)
  QOperator l11, l12, l21, l22;
};

namespace detail {
inline MonodromyBlocks cut_blocks(int n, Mat full) {
  const long d = dim_of(n);
  MonodromyBlocks out;
  out.n_sites = n;
  out.l11 = QOperator(n, full.block(0, 0, d, d));
  out.l12 = QOperator(n, full.block(0, d, d, d));
  out.l21 = QOperator(n, full.block(d, 0, d, d));
  out.l22 = QOperator(n, full.block(d, d, d, d));
  out.full = std::move(full);
  return out;
}
}  // namespace detail

inline void check_build_cap(int n) {
  if (n > kBuildCapSites)
    throw std::invalid_argument("operator build cap exceeded (n > " +
                                std::to_string(kBuildCapSites) + ")");
}

inline MonodromyBlocks build_monodromy(const Complex& u, const BulkParams& p) {
  check_build_cap(p.n);
  const int nf = p.n + 1;
  Mat m = Mat::Identity(1L << nf, 1L << nf);
  for (int i = 0; i < p.n; ++i) m = m * embed_two(build_r(u / p.v[i], p.q), 0, i + 1, nf);
  return detail::cut_blocks(p.n, std::move(m));
}

// Co-matrix at the crossed-shifted point: the reversed product
// (-1)^N R_aN(u v_N)...R_a1(u v_1) equals Lhat(q^{-2} u^{-1}).  Blocks are the
// entries of Lhat evaluated there.
inline MonodromyBlocks build_comonodromy(const Complex& u, const BulkParams& p) {
  check_build_cap(p.n);
  const int nf = p.n + 1;
  Mat m = Mat::Identity(1L << nf, 1L << nf);
  for (int i = p.n - 1; i >= 0; --i) m = m * embed_two(build_r(u * p.v[i], p.q), 0, i + 1, nf);
  if (p.n % 2 == 1) m = -m;
  return detail::cut_blocks(p.n, std::move(m));
}

// Cross-check of the co-matrix against its algebraic definition
// Lhat(w) = [[l22(qw), -l12(qw)], [-l21(qw), l11(qw)]] at w = q^{-2}u^{-1}.
inline double comonodromy_crosscheck_residual(const Complex& u, const BulkParams& p) {
  const MonodromyBlocks hat = build_comonodromy(u, p);
  const MonodromyBlocks l = build_monodromy(1.0 / (p.q * u), p);  // argument qw
  double worst = 0.0;
  worst = std::max(worst, residual(hat.l11.m, l.l22.m));
  worst = std::max(worst, residual(hat.l12.m, Mat(-l.l12.m)));
  worst = std::max(worst, residual(hat.l21.m, Mat(-l.l21.m)));
  worst = std::max(worst, residual(hat.l22.m, l.l11.m));
  return worst;
}

// Fundamental-representation value of the quantum determinant.
inline Complex qdet_product(const Complex& u, const BulkParams& p) {
  Complex out = 1.0;
  for (const Complex& vi : p.v) out *= fn_b(p.q * p.q * u / vi, p.q) * fn_b(u / vi, p.q);
  return out;
}

// The central combination l11(qu) l22(u) - l12(qu) l21(u) evaluated as a
// matrix; must be proportional to the identity, and the scalar equals the
// product formula.  Throws if proportionality fails (parameter degeneracy).
inline Complex quantum_determinant(const Complex& u, const BulkParams& p,
                                   double tol = 1e-8) {
  const MonodromyBlocks lu = build_monodromy(u, p);
  const MonodromyBlocks lqu = build_monodromy(p.q * u, p);
  const Mat comb = lqu.l11.m * lu.l22.m - lqu.l12.m * lu.l21.m;
  const Complex s = comb(0, 0);
  const long d = dim_of(p.n);
  if (residual(comb, Mat(s * Mat::Identity(d, d))) > tol)
    throw std::runtime_error("quantum_determinant: combination not proportional to identity");
  return s;
}

// L(1/u) Lhat(q^{-2}/u) = Det_q{L(q^{-1}/u)} Id on the full (N+1)-factor
// space.  (The determinant argument carries the crossing shift q^{-1}.)
inline double inverse_relation_residual(const Complex& u, const BulkParams& p) {
  const Mat prod = build_monodromy(1.0 / u, p).full * build_comonodromy(u, p).full;
  const long d = dim_of(p.n + 1);
  const Complex s = qdet_product(1.0 / (p.q * u), p);
  return residual(prod, Mat(s * Mat::Identity(d, d)));
}

// Vacuum eigenvalues of the diagonal entries:
// lambda1(u) = prod b(qu/v_i), lambda2(u) = prod b(u/v_i).
inline std::pair<Complex, Complex> vacuum_lambdas(const Complex& u, const BulkParams& p) {
  Complex l1 = 1.0, l2 = 1.0;
  for (const Complex& vi : p.v) {
    l1 *= fn_b(p.q * u / vi, p.q);
    l2 *= fn_b(u / vi, p.q);
  }
  return {l1, l2};
}

// Izergin determinant Z(us | v) with kernel a(u,v) = 1/(b(u/v) b(qu/v)):
// Z = det[a(u_i,v_j)] / (prod_ij a(u_i,v_j) * prod_{i<j} b(u_i/u_j) b(v_j/v_i)).
inline Complex izergin_z(const std::vector<Complex>& us, const BulkParams& p) {
  const int n = p.n;
  if (static_cast<int>(us.size()) != n)
    throw std::invalid_argument("izergin_z: need exactly n spectral points");
  if (n == 0) return 1.0;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex bu = fn_b(us[i] / p.v[j], p.q), bqu = fn_b(p.q * us[i] / p.v[j], p.q);
      if (std::abs(bu) < 1e-14)
        throw std::domain_error("izergin_z: pole, b(u_i/v_j) vanishes");
      a(i, j) = 1.0 / (bu * bqu);
    }
  Complex den = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) den *= a(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Complex bij = fn_b(us[i] / us[j], p.q);
      if (std::abs(bij) < 1e-14)
        throw std::domain_error("izergin_z: coincident spectral points");
      den *= bij * fn_b(p.v[j] / p.v[i], p.q);
    }
  return a.determinant() / den;
}

}  // namespace bethe
