#pragma once
// The open-chain Hamiltonian: explicit construction from the mapped couplings
// and the transfer-matrix route (logarithmic derivative at the homogeneous
// point), which must agree entrywise.

#include "bethe/double_row.hpp"
#include "bethe/linalg.hpp"
#include "bethe/params.hpp"
#include "bethe/types.hpp"

#include <cmath>
#include <stdexcept>

namespace bethe {

// H = eps sz_1 + kappa^- sm_1 + kappa^+ sp_1
//   + sum_k [sx_k sx_{k+1} + sy_k sy_{k+1} + Delta sz_k sz_{k+1}]
//   + nu sz_N + tau^- sm_N + tau^+ sp_N.
inline QOperator build_hamiltonian_direct(const MappedBoundary& mb, int n) {
  if (n < 1) throw std::invalid_argument("build_hamiltonian_direct: n >= 1 required");
  check_build_cap(n);
  QOperator h = mb.eps * embed_local(pauli_z(), 1, n) +
                mb.kappa_minus * embed_local(sigma_minus(), 1, n) +
                mb.kappa_plus * embed_local(sigma_plus(), 1, n);
  for (int k = 1; k < n; ++k) {
    h = h + embed_local(pauli_x(), k, n) * embed_local(pauli_x(), k + 1, n) +
        embed_local(pauli_y(), k, n) * embed_local(pauli_y(), k + 1, n) +
        mb.delta * (embed_local(pauli_z(), k, n) * embed_local(pauli_z(), k + 1, n));
  }
  h = h + mb.nu * embed_local(pauli_z(), n, n) +
      mb.tau_minus * embed_local(sigma_minus(), n, n) +
      mb.tau_plus * embed_local(sigma_plus(), n, n);
  return h;
}

inline QOperator build_hamiltonian_direct(const ModelParams& p) {
  return build_hamiltonian_direct(map_boundary_params(p.left, p.right, p.bulk.q), p.bulk.n);
}

// H = (q - q^{-1})/2 * t'(1) t(1)^{-1} - [N(q+q^{-1})/2 + (q-q^{-1})^2/(2(q+q^{-1}))] Id
// at the homogeneous point v_i = 1.  t'(1) uses fourth-order central
// differences (step 1e-3) plus one Richardson step; t(1)^{-1} is a scalar
// inverse after asserting proportionality to the identity.
inline QOperator build_hamiltonian_from_transfer(const ModelParams& p) {
  ModelParams hp = p;
  if (hp.bulk.v.empty()) hp.bulk.v.assign(hp.bulk.n, Complex(1.0));
  for (const Complex& vi : hp.bulk.v)
    if (std::abs(vi - 1.0) > 1e-12)
      throw std::invalid_argument(
          "build_hamiltonian_from_transfer: homogeneous point v_i = 1 required");
  const Complex q = hp.bulk.q;
  const int n = hp.bulk.n;
  const long d = dim_of(n);
  auto tmat = [&](double x) {
    return build_transfer(Complex(x), hp, TransferCase::GeneralTriangular).m;
  };
  auto tprime = [&](double h) {
    return Mat(((-tmat(1 + 2 * h) + 8 * tmat(1 + h)) - (8 * tmat(1 - h) - tmat(1 - 2 * h))) /
               (12 * h));
  };
  const double h = 1e-3;
  const Mat d1 = tprime(h), d2 = tprime(h / 2);
  const Mat tp = (16.0 * d2 - d1) / 15.0;
  const Mat t1 = tmat(1.0);
  const Complex s = t1(0, 0);
  if (residual(t1, Mat(s * Mat::Identity(d, d))) > 1e-8)
    throw std::runtime_error(
        "build_hamiltonian_from_transfer: t(1) not proportional to identity");
  const Complex qq = q - 1.0 / q, qp = q + 1.0 / q;
  const Complex shift = static_cast<double>(n) * qp / 2.0 + qq * qq / (2.0 * qp);
  return QOperator(n, Mat(qq / 2.0 * tp / s - shift * Mat::Identity(d, d)));
}

}  // namespace bethe
