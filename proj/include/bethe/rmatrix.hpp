#pragma once
// The symmetric trigonometric R-matrix on C^2 x C^2, the Yang-Baxter residual
// on the triple tensor space, and the RLL exchange residual for the
// inhomogeneous monodromy.

#include "bethe/functions.hpp"
#include "bethe/linalg.hpp"
#include "bethe/params.hpp"
#include "bethe/types.hpp"

namespace bethe {

// R(u) = [[b(qu),0,0,0],[0,b(u),1,0],[0,1,b(u),0],[0,0,0,b(qu)]].
inline Mat build_r(const Complex& u, const Complex& q) {
  Mat r = Mat::Zero(4, 4);
  const Complex bu = fn_b(u, q), bqu = fn_b(q * u, q);
  r(0, 0) = bqu;
  r(1, 1) = bu;
  r(1, 2) = 1.0;
  r(2, 1) = 1.0;
  r(2, 2) = bu;
  r(3, 3) = bqu;
  return r;
}

// R_12(ua/ub) R_13(ua/uc) R_23(ub/uc) = R_23 R_13 R_12 on the 8-dim space.
inline double ybe_residual(const Complex& ua, const Complex& ub, const Complex& uc,
                           const Complex& q) {
  const Mat r12 = embed_two(build_r(ua / ub, q), 0, 1, 3);
  const Mat r13 = embed_two(build_r(ua / uc, q), 0, 2, 3);
  const Mat r23 = embed_two(build_r(ub / uc, q), 1, 2, 3);
  return residual(r12 * r13 * r23, r23 * r13 * r12);
}

// R_ab(u/v) L_a(u) L_b(v) = L_b(v) L_a(u) R_ab(u/v) with two auxiliary
// factors (0 and 1) in front of the n quantum factors.
inline double rll_residual(const Complex& u, const Complex& v, const BulkParams& p) {
  const int nf = p.n + 2;
  const long d = 1L << nf;
  auto l_on = [&](const Complex& w, int aux) {
    Mat m = Mat::Identity(d, d);
    for (int i = 0; i < p.n; ++i) m = m * embed_two(build_r(w / p.v[i], p.q), aux, i + 2, nf);
    return m;
  };
  const Mat rab = embed_two(build_r(u / v, p.q), 0, 1, nf);
  const Mat la = l_on(u, 0), lb = l_on(v, 1);
  return residual(rab * la * lb, lb * la * rab);
}

}  // namespace bethe
