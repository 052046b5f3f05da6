#pragma once
// Parameter records for the open chain: bulk (q, inhomogeneities), the two
// boundary matrices' constants, transfer-matrix case labels, and the map from
// boundary constants to the Hamiltonian couplings.

#include "bethe/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace bethe {

// Bulk data: deformation q, chain length n, per-site inhomogeneities v.
// The hard invariants (q not a low-order root of unity, v_i != 0) are checked
// by validate(); the stronger genericity predicate is_generic() additionally
// rejects v_i/v_j near q^m, |m| <= 2 -- it is a sampling-time predicate, not a
// constructor invariant, because the physical homogeneous point v_i = 1
// deliberately violates it.
struct BulkParams {
  Complex q{};
  int n = 0;
  std::vector<Complex> v;

  void validate() const {
    if (n < 0) throw std::invalid_argument("BulkParams: n < 0");
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("BulkParams: v size != n");
    Complex qk = 1.0;
    for (int k = 1; k <= 2 * n + 4; ++k) {
      qk *= q;
      if (std::abs(qk - 1.0) <= 1e-6)
        throw std::invalid_argument("BulkParams: q is a root of unity of order " +
                                    std::to_string(k) + " within 1e-6");
    }
    for (const Complex& vi : v)
      if (std::abs(vi) == 0.0) throw std::invalid_argument("BulkParams: v_i = 0");
  }

  bool is_generic() const {
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j) {
        if (i == j) continue;
        const Complex ratio = v[i] / v[j];
        Complex qm = q * q;  // walks q^{-2}..q^{2} via division below
        for (int m = -2; m <= 2; ++m) {
          if (std::abs(ratio - 1.0 / qm) < 1e-8) return false;
          qm /= q;
        }
      }
    return true;
  }

  Complex anisotropy() const { return (q + 1.0 / q) / 2.0; }
};

// Right boundary K^-(u) constants (nu_pm on the diagonal, tau / tau_tilde on
// the off-diagonal).  tau_tilde = 0 is required whenever a transfer matrix is
// assembled (triangular right boundary).
struct RightBoundary {
  Complex nu_plus{}, nu_minus{}, tau{}, tau_tilde{};
};

// Left boundary K^+(u) constants.  eps_minus != 0 is required by the m-shifted
// operators (they divide by q*eps_minus); eps_plus + eps_minus != 0 by the
// Hamiltonian map.
struct LeftBoundary {
  Complex eps_plus{}, eps_minus{}, kappa{}, kappa_tilde{};
};

struct ModelParams {
  BulkParams bulk;
  LeftBoundary left;
  RightBoundary right;

  void validate() const { bulk.validate(); }
};

enum class TransferCase { Diag, UpperUpper, LowerUpper, GeneralTriangular };

inline std::string to_string(TransferCase c) {
  switch (c) {
    case TransferCase::Diag: return "diag";
    case TransferCase::UpperUpper: return "upper-upper";
    case TransferCase::LowerUpper: return "lower-upper";
    case TransferCase::GeneralTriangular: return "general-triangular";
  }
  throw std::logic_error("unknown TransferCase");
}

inline TransferCase parse_case(const std::string& s) {
  if (s == "diag") return TransferCase::Diag;
  if (s == "upper-upper" || s == "upper_upper") return TransferCase::UpperUpper;
  if (s == "lower-upper" || s == "lower_upper") return TransferCase::LowerUpper;
  if (s == "general-triangular" || s == "general_triangular")
    return TransferCase::GeneralTriangular;
  throw std::invalid_argument("unknown case '" + s +
                              "' (expected diag|upper-upper|lower-upper|general-triangular)");
}

// Couplings of the explicit spin-chain Hamiltonian.
struct MappedBoundary {
  Complex eps, kappa_minus, kappa_plus;  // site-1 terms
  Complex nu, tau_minus, tau_plus;       // site-N terms
  Complex delta;                         // bulk anisotropy
};

// Boundary-constant -> Hamiltonian-coupling map.  Note the cross assignment on
// the right edge: tau_minus is proportional to tau_tilde and tau_plus to tau.
inline MappedBoundary map_boundary_params(const LeftBoundary& left,
                                          const RightBoundary& right,
                                          const Complex& q) {
  const Complex eps_sum = left.eps_plus + left.eps_minus;
  const Complex nu_sum = right.nu_plus + right.nu_minus;
  if (std::abs(eps_sum) < 1e-12)
    throw std::invalid_argument("map_boundary_params: eps_plus + eps_minus = 0");
  if (std::abs(nu_sum) < 1e-12)
    throw std::invalid_argument("map_boundary_params: nu_plus + nu_minus = 0");
  const Complex qq = q - 1.0 / q;
  MappedBoundary out;
  out.eps = qq / 2.0 * (left.eps_plus - left.eps_minus) / eps_sum;
  out.kappa_minus = 2.0 * qq * left.kappa / eps_sum;
  out.kappa_plus = 2.0 * qq * left.kappa_tilde / eps_sum;
  out.nu = qq / 2.0 * (right.nu_minus - right.nu_plus) / nu_sum;
  out.tau_minus = 2.0 * qq * right.tau_tilde / nu_sum;
  out.tau_plus = 2.0 * qq * right.tau / nu_sum;
  out.delta = (q + 1.0 / q) / 2.0;
  return out;
}

}  // namespace bethe
