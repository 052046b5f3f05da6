#include <catch2/catch_amalgamated.hpp>

#include <bethe/double_row.hpp>
#include <bethe/eigenvalues.hpp>
#include <bethe/linalg.hpp>
#include <bethe/params.hpp>
#include <bethe/roots.hpp>
#include <bethe/solver.hpp>

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
                                     Complex(1.31, 0.09)};
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
}  // namespace

TEST_CASE("canonical root representative collapses the symmetry orbit",
          "[solver]") {
  for (const Complex u : {Complex(1.45, 0.21), Complex(0.37, -0.81),
                          Complex(-1.1, 0.6), Complex(0.0, 1.3)}) {
    const Complex c0 = canonical_root(u, kQ);
    REQUIRE(std::abs(canonical_root(-u, kQ) - c0) < 1e-14);
    REQUIRE(std::abs(canonical_root(1.0 / (kQ * u), kQ) - c0) < 1e-14);
    REQUIRE(std::abs(canonical_root(-1.0 / (kQ * u), kQ) - c0) < 1e-14);
    REQUIRE(c0.real() >= 0.0);
  }
}

TEST_CASE("root sets deduplicate across the orbit and root order", "[solver]") {
  const Complex u1{1.45, 0.21}, u2{0.77, -0.61};
  RootSet a{2, {u1, u2}, TransferCase::Diag};
  RootSet b{2, {-u2, 1.0 / (kQ * u1)}, TransferCase::Diag};
  canonicalize(a, kQ);
  canonicalize(b, kQ);
  REQUIRE(same_rootset(a, b));

  RootSet c{2, {u1, Complex(1.46, 0.21)}, TransferCase::Diag};
  canonicalize(c, kQ);
  REQUIRE_FALSE(same_rootset(a, c));
}

TEST_CASE("degenerate root configurations are rejected as unphysical",
          "[solver]") {
  const ModelParams p = model(2, TransferCase::Diag);
  const Complex good{1.45, 0.21};
  REQUIRE(detail::physical_roots({good}, p.bulk));
  // collision with an inhomogeneity
  REQUIRE_FALSE(detail::physical_roots({p.bulk.v[0]}, p.bulk));
  REQUIRE_FALSE(detail::physical_roots({-p.bulk.v[1]}, p.bulk));
  // crossing image of an inhomogeneity collision
  REQUIRE_FALSE(detail::physical_roots({1.0 / (kQ * p.bulk.v[0])}, p.bulk));
  // fixed points of the crossing map: c(u) = 0 or b(qu^2) = 0
  REQUIRE_FALSE(detail::physical_roots({Complex(1.0, 0.0)}, p.bulk));
  REQUIRE_FALSE(detail::physical_roots({1.0 / std::sqrt(kQ)}, p.bulk));
  // reflection-paired roots u1 u2 = 1 degenerate the coupled system
  REQUIRE_FALSE(detail::physical_roots({good, 1.0 / good}, p.bulk));
  // crossing-paired roots u1 u2 = 1/q
  REQUIRE_FALSE(detail::physical_roots({good, 1.0 / (kQ * good)}, p.bulk));
  // root collisions
  REQUIRE_FALSE(detail::physical_roots({good, good}, p.bulk));
  REQUIRE_FALSE(detail::physical_roots({good, -good}, p.bulk));
}

TEST_CASE("sector solutions are on-shell and match the exact spectrum",
          "[solver]") {
  const ModelParams p = model(2, TransferCase::Diag);
  SolverOptions opt;
  opt.seed = 11;
  const std::vector<Complex> exact =
      spectrum(build_transfer(Complex(1.7, 0.2), p, TransferCase::Diag));

  int matched = 0;
  for (int m = 0; m <= 2; ++m) {
    const SolveOutcome out = solve_bethe(p, TransferCase::Diag, m, opt);
    // sector dimensions of the 2-site chain: 1, 2, 1
    const int expect = (m == 1) ? 2 : 1;
    REQUIRE(static_cast<int>(out.solutions.size()) == expect);
    for (const BetheSolution& sol : out.solutions) {
      REQUIRE(sol.max_equation_residual < 1e-11);
      for (int i = 0; i < m; ++i)
        REQUIRE(std::abs(bethe_residual_total(i, sol.roots, p)) < 1e-9);
      const Complex lam = lambda_total(Complex(1.7, 0.2), sol.roots, p);
      const EigenvalueMatch em = match_eigenvalue(lam, exact);
      REQUIRE(em.distance < 1e-8);
      ++matched;
    }
  }
  REQUIRE(matched == 4);  // full spectrum of the 2-site chain
}

TEST_CASE("lower-upper sector is pinned to M = N", "[solver]") {
  const ModelParams p = model(2, TransferCase::LowerUpper);
  REQUIRE_THROWS_AS(solve_bethe(p, TransferCase::LowerUpper, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(solve_bethe(p, TransferCase::LowerUpper, 3), std::invalid_argument);
}

TEST_CASE("solver output is deterministic for a fixed seed", "[solver]") {
  const ModelParams p = model(2, TransferCase::LowerUpper);
  SolverOptions opt;
  opt.seed = 23;
  const SolveOutcome a = solve_bethe(p, TransferCase::LowerUpper, 2, opt);
  const SolveOutcome b = solve_bethe(p, TransferCase::LowerUpper, 2, opt);
  REQUIRE(a.solutions.size() == b.solutions.size());
  REQUIRE(a.attempts == b.attempts);
  for (std::size_t s = 0; s < a.solutions.size(); ++s)
    for (std::size_t i = 0; i < a.solutions[s].roots.roots.size(); ++i)
      REQUIRE(a.solutions[s].roots.roots[i] == b.solutions[s].roots.roots[i]);
}

TEST_CASE("empty sector returns the trivial on-shell solution", "[solver]") {
  const ModelParams p = model(2, TransferCase::Diag);
  const SolveOutcome out = solve_bethe(p, TransferCase::Diag, 0);
  REQUIRE(out.solutions.size() == 1);
  REQUIRE(out.solutions[0].roots.roots.empty());
  REQUIRE(out.solutions[0].max_equation_residual == 0.0);
}
