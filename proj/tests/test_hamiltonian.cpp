#include <catch2/catch_amalgamated.hpp>

#include <bethe/hamiltonian.hpp>
#include <bethe/linalg.hpp>
#include <bethe/params.hpp>

#include <complex>

using namespace bethe;

namespace {
const Complex kQ{1.2, 0.3};

ModelParams model(int n, TransferCase c) {
  ModelParams p;
  p.bulk.q = kQ;
  p.bulk.n = n;
  p.bulk.v.assign(n, Complex(1.0));
  p.right.nu_plus = Complex(0.83, -0.41);
  p.right.nu_minus = Complex(1.21, 0.35);
  p.right.tau = Complex(0.57, 0.93);
  p.right.tau_tilde = 0.0;
  p.left.eps_plus = Complex(-0.62, 0.71);
  p.left.eps_minus = Complex(1.05, -0.22);
  p.left.kappa = Complex(0.44, -0.67);
  p.left.kappa_tilde = Complex(-0.31, 0.52);
  switch (c) {
    case TransferCase::Diag:
      p.right.tau = 0.0;
      p.left.kappa = 0.0;
      p.left.kappa_tilde = 0.0;
      break;
    case TransferCase::UpperUpper:
      p.left.kappa = 0.0;
      break;
    case TransferCase::LowerUpper:
      p.left.kappa_tilde = 0.0;
      break;
    case TransferCase::GeneralTriangular:
      break;
  }
  return p;
}

bool near(const Complex& a, const Complex& b, double tol = 5e-15) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

TEST_CASE("boundary coupling map matches reference values", "[hamiltonian]") {
  const ModelParams p = model(2, TransferCase::GeneralTriangular);
  const MappedBoundary mb = map_boundary_params(p.left, p.right, kQ);
  // reference values computed with an independent implementation
  REQUIRE(near(mb.eps, Complex(-0.83929273356401368, 0.44260945790080708)));
  REQUIRE(near(mb.kappa_minus, Complex(0.90377762399077299, -1.310050288350634)));
  REQUIRE(near(mb.tau_plus, Complex(-0.23910552985239053, 0.6491958581185282)));
  REQUIRE(near(mb.delta, Complex(0.99215686274509807, 0.051960784313725472)));
}

TEST_CASE("boundary coupling map rejects vanishing scalar boundary terms",
          "[hamiltonian]") {
  ModelParams p = model(2, TransferCase::GeneralTriangular);
  p.left.eps_plus = Complex(1.0, 0.0);
  p.left.eps_minus = Complex(-1.0, 0.0);
  REQUIRE_THROWS_AS(map_boundary_params(p.left, p.right, kQ), std::invalid_argument);
}

TEST_CASE("dense chain Hamiltonian has nearest-neighbour structure",
          "[hamiltonian]") {
  const ModelParams p = model(3, TransferCase::Diag);
  const QOperator h = build_hamiltonian_direct(p);
  const QOperator jz = total_spin_z(3);
  // diagonal boundaries preserve magnetization
  REQUIRE(residual(h * jz, jz * h) < 1e-13);

  // triangular boundaries add exactly the site-1 and site-N flip terms
  const ModelParams pt = model(3, TransferCase::GeneralTriangular);
  const MappedBoundary mb = map_boundary_params(pt.left, pt.right, kQ);
  const QOperator ht = build_hamiltonian_direct(pt);
  const QOperator flips = mb.kappa_minus * embed_local(sigma_minus(), 1, 3) +
                          mb.kappa_plus * embed_local(sigma_plus(), 1, 3) +
                          mb.tau_minus * embed_local(sigma_minus(), 3, 3) +
                          mb.tau_plus * embed_local(sigma_plus(), 3, 3);
  const ModelParams pd = model(3, TransferCase::Diag);
  // switching the couplings off inside the map needs the same scalar parts,
  // so compare against the direct build with flip couplings removed
  MappedBoundary md = mb;
  md.kappa_minus = md.kappa_plus = md.tau_minus = md.tau_plus = 0.0;
  (void)pd;
  REQUIRE(residual(ht, build_hamiltonian_direct(md, 3) + flips) < 1e-13);
}

TEST_CASE("transfer derivative reproduces the dense Hamiltonian",
          "[hamiltonian]") {
  for (int n = 1; n <= 3; ++n) {
    for (const TransferCase c :
         {TransferCase::Diag, TransferCase::GeneralTriangular}) {
      const ModelParams p = model(n, c);
      const QOperator from_t = build_hamiltonian_from_transfer(p);
      const QOperator direct = build_hamiltonian_direct(p);
      const double scale = std::max(1.0, direct.m.cwiseAbs().maxCoeff());
      REQUIRE((from_t.m - direct.m).cwiseAbs().maxCoeff() / scale < 1e-7);
    }
  }
}

TEST_CASE("transfer-derivative construction requires the homogeneous point",
          "[hamiltonian]") {
  ModelParams p = model(2, TransferCase::Diag);
  p.bulk.v = {Complex(1.12, 0.31), Complex(0.84, -0.47)};
  REQUIRE_THROWS_AS(build_hamiltonian_from_transfer(p), std::invalid_argument);
}
