#pragma once
// Exact dense linear algebra on the tensor space: Kronecker products, local
// and two-factor operator embedding, total spin, eigenvalues, linear solves.
// Factor 0 is the most significant bit of the basis index, so kron(a, b)
// places a on factor 0.

#include "bethe/types.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace bethe {

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat pauli_x() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat pauli_y() { Mat m(2, 2); m << 0, Complex(0, -1), Complex(0, 1), 0; return m; }
inline Mat pauli_z() { Mat m(2, 2); m << 1, 0, 0, -1; return m; }
inline Mat sigma_plus() { Mat m(2, 2); m << 0, 1, 0, 0; return m; }
inline Mat sigma_minus() { Mat m(2, 2); m << 0, 0, 1, 0; return m; }

// Id x ... x op2 x ... x Id with op2 in slot `site` (1-based).
inline QOperator embed_local(const Mat& op2, int site, int n) {
  if (op2.rows() != 2 || op2.cols() != 2)
    throw std::invalid_argument("embed_local: op2 must be 2x2");
  if (site < 1 || site > n) throw std::invalid_argument("embed_local: site out of range");
  const long d = dim_of(n);
  const int shift = n - site;  // bit position of the site (factor 0 = MSB)
  Mat out = Mat::Zero(d, d);
  for (long col = 0; col < d; ++col) {
    const int bc = static_cast<int>((col >> shift) & 1);
    const long base = col & ~(1L << shift);
    for (int br = 0; br < 2; ++br) {
      const Complex w = op2(br, bc);
      if (w == Complex(0.0)) continue;
      out(base | (static_cast<long>(br) << shift), col) += w;
    }
  }
  return QOperator(n, std::move(out));
}

// Embed a two-factor operator (4x4, row index 2*ra+rb) onto factors fa, fb
// (0-based) of an nf-factor space.  Used for auxiliary-space constructions.
inline Mat embed_two(const Mat& op4, int fa, int fb, int nf) {
  if (op4.rows() != 4 || op4.cols() != 4)
    throw std::invalid_argument("embed_two: op4 must be 4x4");
  if (fa == fb || fa < 0 || fb < 0 || fa >= nf || fb >= nf)
    throw std::invalid_argument("embed_two: bad factor indices");
  const long d = 1L << nf;
  const int sha = nf - 1 - fa, shb = nf - 1 - fb;
  Mat out = Mat::Zero(d, d);
  for (long col = 0; col < d; ++col) {
    const int ba = static_cast<int>((col >> sha) & 1);
    const int bb = static_cast<int>((col >> shb) & 1);
    const long base = col & ~((1L << sha) | (1L << shb));
    for (int ra = 0; ra < 2; ++ra)
      for (int rb = 0; rb < 2; ++rb) {
        const Complex w = op4(2 * ra + rb, 2 * ba + bb);
        if (w == Complex(0.0)) continue;
        out(base | (static_cast<long>(ra) << sha) | (static_cast<long>(rb) << shb), col) += w;
      }
  }
  return out;
}

// J^z = (1/2) sum_i sigma^z_i; diagonal, eigenvalue (n-2i)/2 on sector W_i.
inline QOperator total_spin_z(int n) {
  if (n < 1) throw std::invalid_argument("total_spin_z: n >= 1 required");
  const long d = dim_of(n);
  Mat out = Mat::Zero(d, d);
  for (long s = 0; s < d; ++s) {
    int down = 0;
    for (int bit = 0; bit < n; ++bit) down += static_cast<int>((s >> bit) & 1);
    out(s, s) = 0.5 * (n - 2 * down);
  }
  return QOperator(n, std::move(out));
}

// All eigenvalues of a general complex matrix (unordered).
inline std::vector<Complex> spectrum(const Mat& m, long cap_dim = 1L << kBuildCapSites) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectrum: non-square");
  if (m.rows() > cap_dim) throw std::invalid_argument("spectrum: dimension cap exceeded");
  Eigen::ComplexEigenSolver<Mat> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectrum: eigensolver did not converge");
  std::vector<Complex> out(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}
inline std::vector<Complex> spectrum(const QOperator& op) { return spectrum(op.m); }

}  // namespace bethe
