#pragma once
// Core value types: dense complex operators and states on the 2^n tensor
// space, plus the shared residual metric used by every verification suite.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace bethe {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Dimension caps: operator builds up to 2^8, full eigensolves up to 2^6.
inline constexpr int kBuildCapSites = 8;
inline constexpr int kEigenCapSites = 6;

inline long dim_of(int n_sites) { return 1L << n_sites; }

// Dense operator on the chain Hilbert space (C^2)^{tensor n_sites}.
// Basis order is lexicographic with spin-up as the first component, so the
// all-up state is the first basis vector.
struct QOperator {
  int n_sites = 0;
  Mat m;

  QOperator() = default;
  QOperator(int n, Mat mat) : n_sites(n), m(std::move(mat)) {
    if (m.rows() != dim_of(n_sites) || m.cols() != dim_of(n_sites))
      throw std::invalid_argument("QOperator: matrix dimension != 2^n_sites");
  }
  static QOperator identity(int n) {
    return QOperator(n, Mat::Identity(dim_of(n), dim_of(n)));
  }
  static QOperator zero(int n) {
    return QOperator(n, Mat::Zero(dim_of(n), dim_of(n)));
  }
};

struct StateVector {
  int n_sites = 0;
  Vec v;

  StateVector() = default;
  StateVector(int n, Vec vec) : n_sites(n), v(std::move(vec)) {
    if (v.size() != dim_of(n_sites))
      throw std::invalid_argument("StateVector: length != 2^n_sites");
  }
};

inline void check_same_sites(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": n_sites mismatch");
}

inline QOperator operator*(const QOperator& a, const QOperator& b) {
  check_same_sites(a.n_sites, b.n_sites, "operator*");
  return QOperator(a.n_sites, a.m * b.m);
}
inline QOperator operator+(const QOperator& a, const QOperator& b) {
  check_same_sites(a.n_sites, b.n_sites, "operator+");
  return QOperator(a.n_sites, a.m + b.m);
}
inline QOperator operator-(const QOperator& a, const QOperator& b) {
  check_same_sites(a.n_sites, b.n_sites, "operator-");
  return QOperator(a.n_sites, a.m - b.m);
}
inline QOperator operator*(const Complex& s, const QOperator& a) {
  return QOperator(a.n_sites, s * a.m);
}
inline QOperator operator*(double s, const QOperator& a) {
  return QOperator(a.n_sites, s * a.m);
}
inline StateVector operator*(const QOperator& a, const StateVector& x) {
  check_same_sites(a.n_sites, x.n_sites, "apply");
  return StateVector(a.n_sites, a.m * x.v);
}
inline StateVector operator*(const Complex& s, const StateVector& x) {
  return StateVector(x.n_sites, s * x.v);
}
inline StateVector operator+(const StateVector& a, const StateVector& b) {
  check_same_sites(a.n_sites, b.n_sites, "operator+");
  return StateVector(a.n_sites, a.v + b.v);
}
inline StateVector operator-(const StateVector& a, const StateVector& b) {
  check_same_sites(a.n_sites, b.n_sites, "operator-");
  return StateVector(a.n_sites, a.v - b.v);
}

// Relative Frobenius residual: ||lhs-rhs|| / max(1, ||lhs||, ||rhs||).
// Zero iff equal; the max(1,...) floor keeps tiny operators comparable.
template <typename DerivedA, typename DerivedB>
inline double residual(const Eigen::MatrixBase<DerivedA>& lhs,
                       const Eigen::MatrixBase<DerivedB>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("residual: dimension mismatch");
  const double na = lhs.norm(), nb = rhs.norm();
  return (lhs - rhs).norm() / std::max({1.0, na, nb});
}
inline double residual(const QOperator& lhs, const QOperator& rhs) {
  return residual(lhs.m, rhs.m);
}
inline double residual(const StateVector& lhs, const StateVector& rhs) {
  return residual(lhs.v, rhs.v);
}

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}
inline bool is_finite(const Mat& m) { return m.allFinite(); }
inline bool is_finite(const Vec& v) { return v.allFinite(); }

}  // namespace bethe
