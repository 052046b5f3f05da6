#include <catch2/catch_amalgamated.hpp>

#include <bethe/double_row.hpp>
#include <bethe/eigenvalues.hpp>
#include <bethe/params.hpp>
#include <bethe/roots.hpp>
#include <bethe/states.hpp>

#include <complex>
#include <vector>

using namespace bethe;

namespace {
const Complex kQ{1.2, 0.3};

ModelParams model(int n, TransferCase c) {
  ModelParams p;
  p.bulk.q = kQ;
  p.bulk.n = n;
  const std::vector<Complex> pool = {Complex(1.12, 0.31), Complex(0.84, -0.47),
                                     Complex(1.31, 0.09), Complex(0.66, 0.58)};
  p.bulk.v.assign(pool.begin(), pool.begin() + n);
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

bool near(const Complex& a, const Complex& b, double tol = 1e-13) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

TEST_CASE("vacuum eigenvalue matches the reference value", "[eigenvalues]") {
  const ModelParams p = model(2, TransferCase::Diag);
  // reference value computed with an independent implementation
  REQUIRE(near(lambda_vacuum(Complex(1.7, 0.2), p.bulk),
               Complex(-8.1550824925946266, -63.00657961183218)));
}

TEST_CASE("dressed eigenvalue matches the reference value", "[eigenvalues]") {
  const ModelParams p = model(1, TransferCase::Diag);
  const std::vector<Complex> roots = {Complex(1.3, 0.5)};
  REQUIRE(near(lambda_d(Complex(1.7, 0.2), roots, p),
               Complex(38.270592691933736, 11.334725487873214)));
}

TEST_CASE("eigenvalue function is invariant under crossing and sign flips",
          "[eigenvalues]") {
  const ModelParams p = model(2, TransferCase::LowerUpper);
  RootSet rs;
  rs.sector_m = 2;
  rs.kase = TransferCase::LowerUpper;
  rs.roots = {Complex(1.45, 0.21), Complex(0.77, -0.61)};
  const Complex u{1.7, 0.2};
  const Complex base = lambda_total(u, rs, p);

  // crossing the evaluation point
  REQUIRE(near(lambda_total(1.0 / (kQ * u), rs, p), base, 1e-12));
  // crossing one root
  RootSet rc = rs;
  rc.roots[0] = 1.0 / (kQ * rc.roots[0]);
  REQUIRE(near(lambda_total(u, rc, p), base, 1e-12));
  // flipping the sign of one root
  RootSet rn = rs;
  rn.roots[1] = -rn.roots[1];
  REQUIRE(near(lambda_total(u, rn, p), base, 1e-12));
}

TEST_CASE("lower-upper eigenvalue adds the gauge branch to the dressed one",
          "[eigenvalues]") {
  const ModelParams p = model(2, TransferCase::LowerUpper);
  RootSet rs;
  rs.sector_m = 2;
  rs.kase = TransferCase::LowerUpper;
  rs.roots = {Complex(1.45, 0.21), Complex(0.77, -0.61)};
  const Complex u{1.7, 0.2};
  REQUIRE(near(lambda_total(u, rs, p),
               lambda_d(u, rs.roots, p) + lambda_g(u, rs.roots, p), 1e-13));

  // the diagonal case carries no gauge branch
  const ModelParams pd = model(2, TransferCase::Diag);
  RootSet rd = rs;
  rd.kase = TransferCase::Diag;
  REQUIRE(near(lambda_total(u, rd, pd), lambda_d(u, rd.roots, pd), 1e-13));
  REQUIRE(case_has_g_branch(TransferCase::LowerUpper));
  REQUIRE_FALSE(case_has_g_branch(TransferCase::Diag));
  REQUIRE_FALSE(case_has_g_branch(TransferCase::UpperUpper));
}

TEST_CASE("equation residuals are the weighted limits of the eigenvalue at "
          "its poles",
          "[eigenvalues]") {
  // E_i = lim_{u -> u_i} b(u_i/u) Lambda(u): the eigenvalue has a simple
  // pole at each root whose residue is the equation residual.
  const ModelParams p = model(2, TransferCase::LowerUpper);
  const std::vector<Complex> roots = {Complex(1.45, 0.21), Complex(0.77, -0.61)};
  const Complex ui = roots[0];
  const auto weighted = [&](const auto& lam, double eps) {
    const Complex u = ui * (1.0 + eps);
    return fn_b(ui / u, kQ) * lam(u);
  };
  const auto richardson = [&](const auto& lam) {
    const double e0 = 1e-4;
    const Complex l1 = weighted(lam, e0);
    const Complex l2 = weighted(lam, e0 / 2.0);
    const Complex l3 = weighted(lam, e0 / 4.0);
    const Complex r1 = 2.0 * l2 - l1;
    const Complex r2 = 2.0 * l3 - l2;
    return (4.0 * r2 - r1) / 3.0;
  };
  const auto lamd = [&](const Complex& u) { return lambda_d(u, roots, p); };
  const auto lamg = [&](const Complex& u) { return lambda_g(u, roots, p); };
  const Complex ed = bethe_residual_d(0, roots, p);
  const Complex eg = bethe_residual_g(0, roots, p);
  REQUIRE(std::abs(richardson(lamd) - ed) <
          1e-8 * std::max(1.0, std::abs(ed)));
  REQUIRE(std::abs(richardson(lamg) - eg) <
          1e-8 * std::max(1.0, std::abs(eg)));
  // off-shell roots are genuinely off shell
  REQUIRE(std::abs(ed) > 1e-3);
}

TEST_CASE("reflecting-end determinant matches the reference value",
          "[eigenvalues]") {
  const ModelParams p = model(1, TransferCase::Diag);
  const std::vector<Complex> us = {Complex(1.45, 0.21)};
  REQUIRE(near(zd_partition(us, p),
               Complex(5.0801140782599541, -2.9803442360877415), 1e-12));
}

TEST_CASE("reflecting-end determinant matches the brute-force double-row "
          "product",
          "[eigenvalues]") {
  for (int n = 1; n <= 2; ++n) {
    ModelParams p = model(n, TransferCase::Diag);
    const std::vector<Complex> pts = {Complex(1.45, 0.21), Complex(0.77, -0.61)};
    std::vector<Complex> us(pts.begin(), pts.begin() + n);
    StateVector s = vacuum(n);
    for (const Complex& u : us) s = build_double_row(u, p).B * s;
    const Complex brute = s.v(dim_of(n) - 1);
    const Complex z = zd_partition(us, p);
    REQUIRE(std::abs(brute - z) < 1e-11 * std::max(1.0, std::abs(z)));
  }
}
