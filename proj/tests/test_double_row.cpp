#include <catch2/catch_amalgamated.hpp>

#include <bethe/double_row.hpp>
#include <bethe/linalg.hpp>
#include <bethe/params.hpp>
#include <bethe/states.hpp>

#include <complex>

using namespace bethe;

namespace {
ModelParams model2(TransferCase c) {
  ModelParams p;
  p.bulk.q = Complex(1.2, 0.3);
  p.bulk.n = 2;
  p.bulk.v = {Complex(1.12, 0.31), Complex(0.84, -0.47)};
  p.bulk.validate();
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
}  // namespace

TEST_CASE("double-row entries match their closed one-row expressions",
          "[double-row]") {
  const ModelParams p = model2(TransferCase::GeneralTriangular);
  const Complex u{1.7, 0.2};
  const DoubleRowEntries prod = build_double_row(u, p);
  const DoubleRowEntries closed = closed_double_row(u, p);
  REQUIRE(residual(prod.A, closed.A) < 1e-12);
  REQUIRE(residual(prod.B, closed.B) < 1e-12);
  REQUIRE(residual(prod.C, closed.C) < 1e-12);
  REQUIRE(residual(prod.D, closed.D) < 1e-12);
}

TEST_CASE("creation and annihilation entries shift the magnetization sector",
          "[double-row]") {
  const ModelParams p = model2(TransferCase::Diag);
  const Complex u{1.45, 0.21};
  const DoubleRowEntries k = build_double_row(u, p);
  const QOperator jz = total_spin_z(p.bulk.n);
  // B lowers J^z by one, C raises it; A and D preserve it
  REQUIRE(residual(jz * k.B - k.B * jz, Complex(-1.0) * k.B) < 1e-12);
  REQUIRE(residual(jz * k.C - k.C * jz, Complex(1.0) * k.C) < 1e-12);
  REQUIRE(residual(jz * k.A, k.A * jz) < 1e-12);
  REQUIRE(residual(jz * k.D, k.D * jz) < 1e-12);
}

TEST_CASE("transfer matrix assembles from the double-row entries",
          "[double-row]") {
  const ModelParams p = model2(TransferCase::LowerUpper);
  const Complex u{1.7, 0.2};
  const Complex q = p.bulk.q;
  const DoubleRowEntries k = build_double_row(u, p);
  const QOperator expect = fn_phi(u, q) * k_plus(u, p.left) * k.A +
                           k_plus(1.0 / (q * u), p.left) * k.D +
                           (fn_c(q * u) * p.left.kappa) * k.B;
  REQUIRE(residual(build_transfer(u, p, TransferCase::LowerUpper), expect) < 1e-13);
}

TEST_CASE("transfer matrices commute at distinct spectral points",
          "[double-row]") {
  for (const TransferCase c : {TransferCase::Diag, TransferCase::UpperUpper,
                               TransferCase::LowerUpper}) {
    const ModelParams p = model2(c);
    const QOperator tu = build_transfer(Complex(1.7, 0.2), p, c);
    const QOperator tv = build_transfer(Complex(0.9, -0.4), p, c);
    REQUIRE(residual(tu * tv, tv * tu) < 1e-12);
  }
}

TEST_CASE("diagonal transfer preserves magnetization; triangular does not",
          "[double-row]") {
  const QOperator jz = total_spin_z(2);
  const ModelParams pd = model2(TransferCase::Diag);
  const QOperator td = build_transfer(Complex(1.7, 0.2), pd, TransferCase::Diag);
  REQUIRE(residual(td * jz, jz * td) < 1e-12);

  const ModelParams pl = model2(TransferCase::LowerUpper);
  const QOperator tl = build_transfer(Complex(1.7, 0.2), pl, TransferCase::LowerUpper);
  REQUIRE(residual(tl * jz, jz * tl) > 1e-4);
}

TEST_CASE("case switches reject inconsistent boundary couplings",
          "[double-row]") {
  const ModelParams p = model2(TransferCase::GeneralTriangular);
  REQUIRE_THROWS_AS(build_transfer(Complex(1.7, 0.2), p, TransferCase::Diag),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(build_transfer(Complex(1.7, 0.2), p, TransferCase::LowerUpper),
                    std::invalid_argument);
  ModelParams bad = p;
  bad.right.tau_tilde = Complex(0.1, 0.0);
  REQUIRE_THROWS_AS(build_double_row(Complex(1.7, 0.2), bad), std::invalid_argument);
}

TEST_CASE("double-row build rejects the pole of the entry basis",
          "[double-row]") {
  const ModelParams p = model2(TransferCase::Diag);
  // b(qu^2) = 0 at u = 1/sqrt(q)
  const Complex pole = 1.0 / std::sqrt(p.bulk.q);
  REQUIRE_THROWS_AS(build_double_row(pole, p), std::domain_error);
}

TEST_CASE("transfer rewrites in shifted operators drop the explicit "
          "off-diagonal term",
          "[double-row]") {
  const Complex u{1.31, 0.09};
  {
    const ModelParams p = model2(TransferCase::UpperUpper);
    const Complex q = p.bulk.q;
    const ModifiedUpper mo = build_modified_ops_upper(u, 0, p);
    const QOperator rewrite = fn_phi(u, q) * k_plus(u, p.left) * mo.Atil +
                              k_plus(1.0 / (q * u), p.left) * mo.Dtil;
    REQUIRE(residual(rewrite, build_transfer(u, p, TransferCase::UpperUpper)) < 1e-12);
  }
  {
    const ModelParams p = model2(TransferCase::LowerUpper);
    const Complex q = p.bulk.q;
    const ModifiedLower mo = build_modified_ops_lower(u, 0, p);
    const QOperator rewrite = fn_phi(u, q) * k_plus(u, p.left) * mo.Abar +
                              k_plus(1.0 / (q * u), p.left) * mo.Dbar;
    REQUIRE(residual(rewrite, build_transfer(u, p, TransferCase::LowerUpper)) < 1e-12);
  }
}
