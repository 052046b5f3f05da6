#pragma once
// State construction: vacua, the three Bethe-vector builders (diagonal,
// upper-upper with descending m-shifts, lower-upper with N roots), scalar
// products against the lowest-weight vector, the small-N explicit vectors,
// and projection onto the l12-generated basis.

#include "bethe/double_row.hpp"
#include "bethe/eigenvalues.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/params.hpp"
#include "bethe/roots.hpp"
#include "bethe/types.hpp"

#include <stdexcept>
#include <vector>

namespace bethe {

// Highest-weight (all up, first basis vector) and lowest-weight (all down,
// last basis vector) states.
inline StateVector vacuum(int n) {
  Vec v = Vec::Zero(dim_of(n));
  v(0) = 1.0;
  return StateVector(n, std::move(v));
}
inline StateVector covacuum(int n) {
  Vec v = Vec::Zero(dim_of(n));
  v(dim_of(n) - 1) = 1.0;
  return StateVector(n, std::move(v));
}

struct BetheVector {
  StateVector state;
  RootSet roots;
};

// Phi_d = B(u_1)...B(u_M) |Omega> by sequential application.
inline BetheVector build_phi_d(const std::vector<Complex>& roots, const ModelParams& p) {
  if (static_cast<int>(roots.size()) > p.bulk.n)
    throw std::invalid_argument("build_phi_d: M <= N required");
  StateVector s = vacuum(p.bulk.n);
  for (size_t i = roots.size(); i-- > 0;) s = build_double_row(roots[i], p).B * s;
  return BetheVector{std::move(s), RootSet{static_cast<int>(roots.size()), roots,
                                           TransferCase::Diag}};
}

// Phi_up = Btil(u_1,-2) Btil(u_2,-4) ... Btil(u_M,-2M) |Omega>.
inline BetheVector build_phi_up(const std::vector<Complex>& roots, const ModelParams& p) {
  if (std::abs(p.left.kappa) != 0.0)
    throw std::invalid_argument("build_phi_up: upper-upper case requires kappa = 0");
  StateVector s = vacuum(p.bulk.n);
  for (size_t i = roots.size(); i-- > 0;)
    s = build_modified_ops_upper(roots[i], -2 * (static_cast<int>(i) + 1), p).Btil * s;
  return BetheVector{std::move(s), RootSet{static_cast<int>(roots.size()), roots,
                                           TransferCase::UpperUpper}};
}

// Phi_lo/up = B(u_1)...B(u_N) |Omega> with exactly N roots.
inline BetheVector build_phi_lo_up(const std::vector<Complex>& roots, const ModelParams& p) {
  if (static_cast<int>(roots.size()) != p.bulk.n)
    throw std::invalid_argument("build_phi_lo_up: lower-upper case requires exactly N roots");
  if (std::abs(p.left.kappa_tilde) != 0.0)
    throw std::invalid_argument("build_phi_lo_up: lower-upper case requires kappa_tilde = 0");
  StateVector s = vacuum(p.bulk.n);
  for (size_t i = roots.size(); i-- > 0;) s = build_double_row(roots[i], p).B * s;
  return BetheVector{std::move(s), RootSet{static_cast<int>(roots.size()), roots,
                                           TransferCase::LowerUpper}};
}

// S^{P+M}(ws | us) = <hatOmega| B(w_1)...B(w_P) B(u_1)...B(u_M) |Omega>,
// i.e. the lowest-weight component of the combined B-product state.
inline Complex scalar_product_sup(const std::vector<Complex>& ws,
                                  const std::vector<Complex>& us, const ModelParams& p) {
  StateVector s = vacuum(p.bulk.n);
  for (size_t i = us.size(); i-- > 0;) s = build_double_row(us[i], p).B * s;
  for (size_t i = ws.size(); i-- > 0;) s = build_double_row(ws[i], p).B * s;
  return s.v(dim_of(p.bulk.n) - 1);
}

// Coefficients of `state` in the basis { prod_{i in S} l12(u_i) |Omega> } for
// all subsets S of the N points, indexed by the subset bitmask (bit i set =
// u_i present; bitmask 0 = |Omega>, full mask = Izergin multiple of
// |hatOmega>).  Solves one dense 2^N x 2^N system.
inline std::vector<Complex> project_basis(const StateVector& state,
                                          const std::vector<Complex>& us,
                                          const ModelParams& p) {
  const int n = p.bulk.n;
  if (static_cast<int>(us.size()) != n)
    throw std::invalid_argument("project_basis: need exactly N basis points");
  if (state.n_sites != n) throw std::invalid_argument("project_basis: state size mismatch");
  const long d = dim_of(n);
  std::vector<QOperator> l12s;
  l12s.reserve(static_cast<size_t>(n));
  for (const Complex& ui : us) l12s.push_back(build_monodromy(ui, p.bulk).l12);
  Mat basis(d, d);
  for (long mask = 0; mask < d; ++mask) {
    StateVector col = vacuum(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) col = l12s[static_cast<size_t>(i)] * col;
    basis.col(mask) = col.v;
  }
  Eigen::FullPivLU<Mat> lu(basis);
  const double cond_floor = lu.rcond();
  if (!(cond_floor > 1e-12))
    throw std::runtime_error("project_basis: basis condition number exceeds 1e12 "
                             "(degenerate basis points)");
  Vec coeff = lu.solve(state.v);
  return std::vector<Complex>(coeff.data(), coeff.data() + coeff.size());
}

// l12til(w) = k^-(1/(qw)) lambda1(1/(qw)) l12(w): the rescaled creation
// operator in which the small-N explicit vectors are written.
inline QOperator l12_tilde(const Complex& w, const ModelParams& p) {
  const Complex cr = 1.0 / (p.bulk.q * w);
  return (k_minus(cr, p.right) * vacuum_lambdas(cr, p.bulk).first) *
         build_monodromy(w, p.bulk).l12;
}

// Explicit N=1 vector:
// B(u1)|Omega> = phi(1/(qu1)) [l12til(1/(qu1)) - l12til(u1)] |Omega>
//                - tau c(u1) lambda1(u1) lambda1(1/(qu1)) |Omega>.
inline StateVector explicit_phi_lo_up_n1(const Complex& u1, const ModelParams& p) {
  if (p.bulk.n != 1) throw std::invalid_argument("explicit_phi_lo_up_n1: N = 1 required");
  const Complex q = p.bulk.q;
  const Complex cr = 1.0 / (q * u1);
  const StateVector om = vacuum(1);
  StateVector out = fn_phi(cr, q) * ((l12_tilde(cr, p) - l12_tilde(u1, p)) * om);
  out.v -= p.right.tau * fn_c(u1) * vacuum_lambdas(u1, p.bulk).first *
           vacuum_lambdas(cr, p.bulk).first * om.v;
  return out;
}

// Explicit N=2 vector; cq12(u) = c(q^{1/2}u) = (q - 1/q) b(qu^2) keeps the
// expression free of square-root branches.
inline StateVector explicit_phi_lo_up_n2(const Complex& u1, const Complex& u2,
                                         const ModelParams& p) {
  if (p.bulk.n != 2) throw std::invalid_argument("explicit_phi_lo_up_n2: N = 2 required");
  const Complex q = p.bulk.q;
  const Complex tau = p.right.tau;
  const Complex cr1 = 1.0 / (q * u1), cr2 = 1.0 / (q * u2);
  auto lam1 = [&](const Complex& w) { return vacuum_lambdas(w, p.bulk).first; };
  auto cq12 = [&](const Complex& w) { return (q - 1.0 / q) * fn_b(q * w * w, q); };
  const StateVector om = vacuum(2);
  const QOperator t1 = l12_tilde(u1, p), t1c = l12_tilde(cr1, p);
  const QOperator t2 = l12_tilde(u2, p), t2c = l12_tilde(cr2, p);

  Vec brace1 = tau * tau * lam1(u1) * lam1(cr1) * lam1(u2) * lam1(cr2) * om.v;
  brace1 += tau * lam1(u2) * lam1(cr2) / cq12(u1) *
            ((fn_h(u1, u2, q) * t1.m - fn_f(u1, u2, q) * t1c.m) * om.v);
  brace1 += tau * lam1(u1) * lam1(cr1) / cq12(u2) *
            ((fn_h(u2, u1, q) * t2.m - fn_f(u2, u1, q) * t2c.m) * om.v);
  brace1 *= fn_c(u1) * fn_c(u2);

  Vec brace2 = (fn_b(q * q * u1 * u2, q) / fn_b(q * u1 * u2, q)) * (t1.m * (t2.m * om.v));
  brace2 += (fn_b(u1 * u2, q) / fn_b(q * u1 * u2, q)) * (t1c.m * (t2c.m * om.v));
  brace2 -= (fn_b(q * u1 / u2, q) / fn_b(u1 / u2, q)) * (t1.m * (t2c.m * om.v));
  brace2 -= (fn_b(q * u2 / u1, q) / fn_b(u2 / u1, q)) * (t2.m * (t1c.m * om.v));
  brace2 *= fn_phi(cr1, q) * fn_phi(cr2, q);

  return StateVector(2, Vec(brace1 + brace2));
}

}  // namespace bethe
