#pragma once
// Scalar eigenvalue machinery: the vacuum eigenvalue Lambda(u), psi(u), the
// two eigenvalue branches (diagonal lambda_d and the lower-upper extra term
// lambda_g), their Bethe-equation residuals E_d / E_g, and the reflecting-end
// partition function Z_d.

#include "bethe/functions.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/params.hpp"
#include "bethe/roots.hpp"
#include "bethe/types.hpp"

#include <stdexcept>
#include <vector>

namespace bethe {

// Lambda(u) = prod_i b(qu/v_i) b(quv_i)  (= (-1)^N lambda1(u) lambda2(1/(qu))).
inline Complex lambda_vacuum(const Complex& u, const BulkParams& p) {
  Complex out = 1.0;
  for (const Complex& vi : p.v) out *= fn_b(p.q * u / vi, p.q) * fn_b(p.q * u * vi, p.q);
  return out;
}

// psi(u) = phi(u) k^+(u) k^-(u) Lambda(u).
inline Complex psi_fn(const Complex& u, const ModelParams& p) {
  return fn_phi(u, p.bulk.q) * k_plus(u, p.left) * k_minus(u, p.right) *
         lambda_vacuum(u, p.bulk);
}

// lambda_d(u | roots) = psi(u) prod f(u,u_i) + psi(1/(qu)) prod h(u,u_i).
inline Complex lambda_d(const Complex& u, const std::vector<Complex>& roots,
                        const ModelParams& p) {
  const Complex q = p.bulk.q;
  Complex pf = 1.0, ph = 1.0;
  for (const Complex& ui : roots) {
    pf *= fn_f(u, ui, q);
    ph *= fn_h(u, ui, q);
  }
  return psi_fn(u, p) * pf + psi_fn(1.0 / (q * u), p) * ph;
}

// E_d(u_i | rest) = phi(1/(qu_i)) psi(u_i) prod f(u_i,u_j)
//                 - phi(u_i) psi(1/(qu_i)) prod h(u_i,u_j).
inline Complex bethe_residual_d(int i, const std::vector<Complex>& roots,
                                const ModelParams& p) {
  const Complex q = p.bulk.q;
  const Complex ui = roots[static_cast<size_t>(i)];
  Complex pf = 1.0, ph = 1.0;
  for (size_t j = 0; j < roots.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    pf *= fn_f(ui, roots[j], q);
    ph *= fn_h(ui, roots[j], q);
  }
  return fn_phi(1.0 / (q * ui), q) * psi_fn(ui, p) * pf -
         fn_phi(ui, q) * psi_fn(1.0 / (q * ui), p) * ph;
}

// lambda_g(u | roots) = -tau kappa c(u) c(1/(qu)) Lambda(u) Lambda(1/(qu))
//                       * prod m(u,u_i).   (Lower-upper extra branch.)
inline Complex lambda_g(const Complex& u, const std::vector<Complex>& roots,
                        const ModelParams& p) {
  const Complex q = p.bulk.q;
  Complex pm = 1.0;
  for (const Complex& ui : roots) pm *= fn_m(u, ui, q);
  return -p.right.tau * p.left.kappa * fn_c(u) * fn_c(1.0 / (q * u)) *
         lambda_vacuum(u, p.bulk) * lambda_vacuum(1.0 / (q * u), p.bulk) * pm;
}

// E_g(u_i | rest) = tau kappa c(u_i) c(1/(qu_i)) / b(qu_i^2)
//                   * Lambda(u_i) Lambda(1/(qu_i)) prod m(u_i,u_j).
inline Complex bethe_residual_g(int i, const std::vector<Complex>& roots,
                                const ModelParams& p) {
  const Complex q = p.bulk.q;
  const Complex ui = roots[static_cast<size_t>(i)];
  Complex pm = 1.0;
  for (size_t j = 0; j < roots.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    pm *= fn_m(ui, roots[j], q);
  }
  return p.right.tau * p.left.kappa * fn_c(ui) * fn_c(1.0 / (q * ui)) /
         fn_b(q * ui * ui, q) * lambda_vacuum(ui, p.bulk) *
         lambda_vacuum(1.0 / (q * ui), p.bulk) * pm;
}

inline bool case_has_g_branch(TransferCase c) { return c == TransferCase::LowerUpper; }

// Total eigenvalue for a given case; the g-branch contributes only in the
// lower-upper case (and there the root count must equal N).
inline Complex lambda_total(const Complex& u, const RootSet& rs, const ModelParams& p) {
  Complex out = lambda_d(u, rs.roots, p);
  if (case_has_g_branch(rs.kase)) {
    if (rs.sector_m != p.bulk.n)
      throw std::invalid_argument("lambda_total: lower-upper case requires N roots");
    out += lambda_g(u, rs.roots, p);
  }
  return out;
}

inline Complex bethe_residual_total(int i, const RootSet& rs, const ModelParams& p) {
  Complex out = bethe_residual_d(i, rs.roots, p);
  if (case_has_g_branch(rs.kase)) out += bethe_residual_g(i, rs.roots, p);
  return out;
}

// Reflecting-end partition function (one diagonal reflecting end):
// Z_d(us|v) = (-1)^N prod_ij b(u_i/v_j) b(u_i v_j) b(qu_i/v_j) b(qu_i v_j)
//             / prod_{i<j} b(u_i/u_j) b(qu_i u_j) b(v_j/v_i) b(v_i v_j)
//             * det M,
// M_ij = phi(1/(qu_i)) / (b(qu_i v_j) b(v_j/u_i))
//        * [k^-(u_i)/b(u_i v_j) + k^-(1/(qu_i))/b(qu_i/v_j)].
inline Complex zd_partition(const std::vector<Complex>& us, const ModelParams& p) {
  const int n = p.bulk.n;
  if (static_cast<int>(us.size()) != n)
    throw std::invalid_argument("zd_partition: need exactly n spectral points");
  if (n == 0) return 1.0;
  const Complex q = p.bulk.q;
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    const Complex ui = us[static_cast<size_t>(i)];
    const Complex phicr = fn_phi(1.0 / (q * ui), q);
    for (int j = 0; j < n; ++j) {
      const Complex vj = p.bulk.v[static_cast<size_t>(j)];
      m(i, j) = phicr / (fn_b(q * ui * vj, q) * fn_b(vj / ui, q)) *
                (k_minus(ui, p.right) / fn_b(ui * vj, q) +
                 k_minus(1.0 / (q * ui), p.right) / fn_b(q * ui / vj, q));
    }
  }
  Complex num = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex ui = us[static_cast<size_t>(i)], vj = p.bulk.v[static_cast<size_t>(j)];
      num *= fn_b(ui / vj, q) * fn_b(ui * vj, q) * fn_b(q * ui / vj, q) * fn_b(q * ui * vj, q);
    }
  Complex den = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Complex ui = us[static_cast<size_t>(i)], uj = us[static_cast<size_t>(j)];
      const Complex vi = p.bulk.v[static_cast<size_t>(i)], vj = p.bulk.v[static_cast<size_t>(j)];
      den *= fn_b(ui / uj, q) * fn_b(q * ui * uj, q) * fn_b(vj / vi, q) * fn_b(vi * vj, q);
    }
  const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
  return sgn * num / den * m.determinant();
}

}  // namespace bethe
