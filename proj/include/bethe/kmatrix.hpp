#pragma once
// Boundary K-matrices and their defining reflection equations.  K^-(u) is the
// right (triangular when tau_tilde = 0) boundary, K^+(u) the left dual one.

#include "bethe/functions.hpp"
#include "bethe/linalg.hpp"
#include "bethe/params.hpp"
#include "bethe/rmatrix.hpp"
#include "bethe/types.hpp"

namespace bethe {

// K^-(u) = [[k^-(u), tau c(u)], [tau_tilde c(u), k^-(1/u)]].
inline Mat build_k_minus(const Complex& u, const RightBoundary& r, const Complex& q) {
  (void)q;
  Mat k(2, 2);
  k(0, 0) = k_minus(u, r);
  k(0, 1) = r.tau * fn_c(u);
  k(1, 0) = r.tau_tilde * fn_c(u);
  k(1, 1) = k_minus(1.0 / u, r);
  return k;
}

// K^+(u) = [[k^+(qu), kappa_tilde c(qu)], [kappa c(qu), k^+(1/(qu))]].
inline Mat build_k_plus(const Complex& u, const LeftBoundary& l, const Complex& q) {
  Mat k(2, 2);
  k(0, 0) = k_plus(q * u, l);
  k(0, 1) = l.kappa_tilde * fn_c(q * u);
  k(1, 0) = l.kappa * fn_c(q * u);
  k(1, 1) = k_plus(1.0 / (q * u), l);
  return k;
}

// Reflection equation on C^2 x C^2:
// R(u1/u2) K1(u1) R(u1 u2) K2(u2) = K2(u2) R(u1 u2) K1(u1) R(u1/u2).
inline double re_residual(const Complex& u1, const Complex& u2, const RightBoundary& r,
                          const Complex& q) {
  const Mat id2 = Mat::Identity(2, 2);
  const Mat k1 = kron(build_k_minus(u1, r, q), id2);
  const Mat k2 = kron(id2, build_k_minus(u2, r, q));
  const Mat r12 = build_r(u1 / u2, q);
  const Mat r12p = build_r(u1 * u2, q);
  return residual(r12 * k1 * r12p * k2, k2 * r12p * k1 * r12);
}

// Dual reflection equation:
// R(u2/u1) K1+(u1) R(1/(q^2 u1 u2)) K2+(u2) = K2+(u2) R(1/(q^2 u1 u2)) K1+(u1) R(u2/u1).
inline double dre_residual(const Complex& u1, const Complex& u2, const LeftBoundary& l,
                           const Complex& q) {
  const Mat id2 = Mat::Identity(2, 2);
  const Mat k1 = kron(build_k_plus(u1, l, q), id2);
  const Mat k2 = kron(id2, build_k_plus(u2, l, q));
  const Mat r21 = build_r(u2 / u1, q);
  const Mat rx = build_r(1.0 / (q * q * u1 * u2), q);
  return residual(r21 * k1 * rx * k2, k2 * rx * k1 * r21);
}

}  // namespace bethe
