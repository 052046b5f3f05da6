#pragma once
// The reflection layer: double-row monodromy entries A, B, C, D, their closed
// forms in terms of the one-row blocks, the transfer-matrix specializations,
// and the m-shifted (modified) operators used by the triangular-boundary
// Bethe ansatz.

#include "bethe/functions.hpp"
#include "bethe/kmatrix.hpp"
#include "bethe/linalg.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/params.hpp"
#include "bethe/types.hpp"

#include <stdexcept>

namespace bethe {

// Entries of the dressed double-row matrix at a spectral point.  The operator
// basis splits the raw (2,2) block as raw22 = D + A / b(qu^2); D stores the
// shifted combination and the raw block is never exposed.
struct DoubleRowEntries {
  int n_sites = 0;
  Complex at_point{};
  QOperator A, B, C, D;
};

namespace detail {
// Two-sided product K_a(u) = R_a1(u/v_1)...R_aN(u/v_N) K^-_a(u)
//                            R_aN(u v_N)...R_a1(u v_1) on aux (x) H.
inline Mat double_row_full(const Complex& u, const ModelParams& p) {
  const int nf = p.bulk.n + 1;
  const long d = dim_of(p.bulk.n);
  Mat m = Mat::Identity(1L << nf, 1L << nf);
  for (int i = 0; i < p.bulk.n; ++i)
    m = m * embed_two(build_r(u / p.bulk.v[i], p.bulk.q), 0, i + 1, nf);
  m = m * kron(build_k_minus(u, p.right, p.bulk.q), Mat::Identity(d, d));
  for (int i = p.bulk.n - 1; i >= 0; --i)
    m = m * embed_two(build_r(u * p.bulk.v[i], p.bulk.q), 0, i + 1, nf);
  return m;
}
}  // namespace detail

inline DoubleRowEntries build_double_row(const Complex& u, const ModelParams& p) {
  check_build_cap(p.bulk.n);
  if (std::abs(p.right.tau_tilde) != 0.0)
    throw std::invalid_argument("build_double_row: triangular right boundary requires tau_tilde = 0");
  const Complex bq = fn_b(p.bulk.q * u * u, p.bulk.q);
  if (std::abs(bq) < 1e-12)
    throw std::domain_error("build_double_row: pole, b(qu^2) vanishes");
  const Mat full = detail::double_row_full(u, p);
  const long d = dim_of(p.bulk.n);
  DoubleRowEntries out;
  out.n_sites = p.bulk.n;
  out.at_point = u;
  out.A = QOperator(p.bulk.n, full.block(0, 0, d, d));
  out.B = QOperator(p.bulk.n, full.block(0, d, d, d));
  out.C = QOperator(p.bulk.n, full.block(d, 0, d, d));
  out.D = QOperator(p.bulk.n, Mat(full.block(d, d, d, d) - out.A.m / bq));
  return out;
}

// Closed forms of A, B, C, D in terms of the one-row blocks at u and at the
// crossed point cr = 1/(qu).  Independent assembly used as a cross-check of
// the product construction.  The C entry carries l22 factors (its two
// k^- terms mirror B with l12 -> l21, l11 -> l22).
inline DoubleRowEntries closed_double_row(const Complex& u, const ModelParams& p) {
  check_build_cap(p.bulk.n);
  const Complex q = p.bulk.q;
  const Complex cr = 1.0 / (q * u);
  const MonodromyBlocks lu = build_monodromy(u, p.bulk);
  const MonodromyBlocks lc = build_monodromy(cr, p.bulk);
  const double sgn = (p.bulk.n % 2 == 0) ? 1.0 : -1.0;
  const Complex tau = p.right.tau;
  const Complex phicr = fn_phi(cr, q);
  auto km = [&](const Complex& w) { return k_minus(w, p.right); };

  DoubleRowEntries out;
  out.n_sites = p.bulk.n;
  out.at_point = u;
  out.A = sgn * (km(u) * (lu.l11 * lc.l22) - km(1.0 / u) * (lu.l12 * lc.l21)) +
          (sgn * tau * fn_c(u)) *
              ((1.0 / fn_b(q * u * u, q)) * (lu.l21 * lc.l11) - fn_phi(u, q) * (lc.l21 * lu.l11));
  out.B = (sgn * phicr) * (km(cr) * (lu.l12 * lc.l11) - km(u) * (lc.l12 * lu.l11)) +
          (sgn * tau * fn_c(u)) * (lu.l11 * lc.l11);
  out.C = (sgn * phicr) * (km(q * u) * (lu.l21 * lc.l22) - km(1.0 / u) * (lc.l21 * lu.l22)) -
          (sgn * tau * fn_c(u)) * (lu.l21 * lc.l21);
  out.D = (sgn * phicr) * (km(cr) * (lc.l11 * lu.l22) - km(q * u) * (lc.l12 * lu.l21)) +
          (sgn * tau * fn_c(cr) * phicr) *
              ((1.0 / fn_b(q * cr * cr, q)) * (lc.l21 * lu.l11) - phicr * (lu.l21 * lc.l11));
  return out;
}

inline void check_case_consistency(const ModelParams& p, TransferCase c) {
  if (std::abs(p.right.tau_tilde) != 0.0)
    throw std::invalid_argument("transfer case: tau_tilde must be 0");
  const bool has_kappa = std::abs(p.left.kappa) != 0.0;
  const bool has_kappa_tilde = std::abs(p.left.kappa_tilde) != 0.0;
  switch (c) {
    case TransferCase::Diag:
      if (has_kappa || has_kappa_tilde)
        throw std::invalid_argument("diag case requires kappa = kappa_tilde = 0");
      break;
    case TransferCase::UpperUpper:
      if (has_kappa) throw std::invalid_argument("upper-upper case requires kappa = 0");
      break;
    case TransferCase::LowerUpper:
      if (has_kappa_tilde)
        throw std::invalid_argument("lower-upper case requires kappa_tilde = 0");
      break;
    case TransferCase::GeneralTriangular:
      break;
  }
}

// t(u) = phi(u) k^+(u) A(u) + k^+(1/(qu)) D(u) + c(qu) (kappa B(u) + kappa_tilde C(u)).
inline QOperator build_transfer(const Complex& u, const ModelParams& p, TransferCase c) {
  check_case_consistency(p, c);
  const Complex q = p.bulk.q;
  const DoubleRowEntries k = build_double_row(u, p);
  QOperator t = fn_phi(u, q) * k_plus(u, p.left) * k.A +
                k_plus(1.0 / (q * u), p.left) * k.D;
  const Complex cqu = fn_c(q * u);
  if (c == TransferCase::LowerUpper || c == TransferCase::GeneralTriangular)
    t = t + (cqu * p.left.kappa) * k.B;
  if (c == TransferCase::UpperUpper || c == TransferCase::GeneralTriangular)
    t = t + (cqu * p.left.kappa_tilde) * k.C;
  return t;
}

// m-shifted operators of the upper-upper case:
//   Atil(u,m) = A - q^m u^{-1} a C
//   Dtil(u,m) = D + q^m q u a phi(u) C
//   Btil(u,m) = B + q^{m+2} a (q u b(u^2)/b(qu^2) A - u^{-1} D) - (q^{m+2} a)^2 C
// with a = kappa_tilde / (q eps_minus).
struct ModifiedUpper {
  QOperator Atil, Dtil, Btil;
};

inline ModifiedUpper build_modified_ops_upper(const Complex& u, int m, const ModelParams& p) {
  if (std::abs(p.left.eps_minus) == 0.0)
    throw std::invalid_argument("modified operators require eps_minus != 0");
  const Complex q = p.bulk.q;
  const Complex a = p.left.kappa_tilde / (q * p.left.eps_minus);
  const Complex qm = std::pow(q, static_cast<double>(m));
  const Complex qm2 = qm * q * q;
  const DoubleRowEntries k = build_double_row(u, p);
  ModifiedUpper out;
  out.Atil = k.A - (qm / u * a) * k.C;
  out.Dtil = k.D + (qm * q * u * a * fn_phi(u, q)) * k.C;
  out.Btil = k.B +
             (qm2 * a) * ((q * u * fn_b(u * u, q) / fn_b(q * u * u, q)) * k.A -
                          (1.0 / u) * k.D) -
             (qm2 * a * qm2 * a) * k.C;
  return out;
}

// m-shifted operators of the lower-upper case:
//   Abar(u,m) = A - q^m a u^{-1} B,  Dbar(u,m) = D + q^m a q u phi(u) B
// with a = kappa / (q eps_minus).
struct ModifiedLower {
  QOperator Abar, Dbar;
};

inline ModifiedLower build_modified_ops_lower(const Complex& u, int m, const ModelParams& p) {
  if (std::abs(p.left.eps_minus) == 0.0)
    throw std::invalid_argument("modified operators require eps_minus != 0");
  const Complex q = p.bulk.q;
  const Complex a = p.left.kappa / (q * p.left.eps_minus);
  const Complex qm = std::pow(q, static_cast<double>(m));
  const DoubleRowEntries k = build_double_row(u, p);
  ModifiedLower out;
  out.Abar = k.A - (qm * a / u) * k.B;
  out.Dbar = k.D + (qm * a * q * u * fn_phi(u, q)) * k.B;
  return out;
}

}  // namespace bethe
