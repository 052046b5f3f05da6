#include <catch2/catch_amalgamated.hpp>

#include <bethe/monodromy.hpp>
#include <bethe/params.hpp>
#include <bethe/states.hpp>

#include <complex>

using namespace bethe;

namespace {
BulkParams bulk2() {
  BulkParams p;
  p.q = Complex(1.2, 0.3);
  p.n = 2;
  p.v = {Complex(1.12, 0.31), Complex(0.84, -0.47)};
  p.validate();
  return p;
}
}  // namespace

TEST_CASE("diagonal monodromy blocks act on the vacuum by known scalars",
          "[monodromy]") {
  const BulkParams p = bulk2();
  const Complex u{1.7, 0.2};
  const MonodromyBlocks l = build_monodromy(u, p);
  const StateVector omega = vacuum(p.n);
  const auto [l1, l2] = vacuum_lambdas(u, p);

  REQUIRE(residual(l.l11 * omega, l1 * omega) < 1e-13);
  REQUIRE(residual(l.l22 * omega, l2 * omega) < 1e-13);
  // the lower-left block annihilates the vacuum
  REQUIRE((l.l21 * omega).v.norm() < 1e-13);
  // the upper-right block creates one magnon: component along the vacuum is 0
  REQUIRE(std::abs((l.l12 * omega).v(0)) < 1e-13);
}

TEST_CASE("quantum determinant equals the factorized product", "[monodromy]") {
  const BulkParams p = bulk2();
  for (const Complex u : {Complex(1.7, 0.2), Complex(0.66, -0.58)}) {
    const Complex s = quantum_determinant(u, p);
    const Complex expect = qdet_product(u, p);
    REQUIRE(std::abs(s - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("reversed product equals the crossing image of the monodromy",
          "[monodromy]") {
  const BulkParams p = bulk2();
  REQUIRE(comonodromy_crosscheck_residual(Complex(1.7, 0.2), p) < 1e-12);
  REQUIRE(comonodromy_crosscheck_residual(Complex(0.9, -0.4), p) < 1e-12);
}

TEST_CASE("monodromy and co-monodromy satisfy the inverse relation",
          "[monodromy]") {
  const BulkParams p = bulk2();
  REQUIRE(inverse_relation_residual(Complex(1.7, 0.2), p) < 1e-12);
  REQUIRE(inverse_relation_residual(Complex(1.05, 0.33), p) < 1e-12);
}

TEST_CASE("Izergin determinant matches the brute-force creation coefficient",
          "[monodromy]") {
  // <uparrow...| l12(u_1)...l12(u_n) |vacuum> equals the determinant formula
  for (int n = 1; n <= 2; ++n) {
    BulkParams p;
    p.q = Complex(1.2, 0.3);
    p.n = n;
    p.v = {Complex(1.12, 0.31), Complex(0.84, -0.47)};
    p.v.resize(n);
    p.validate();
    const std::vector<Complex> us = {Complex(1.45, 0.21), Complex(0.77, -0.61)};
    std::vector<Complex> pts(us.begin(), us.begin() + n);

    StateVector s = vacuum(n);
    for (const Complex& u : pts) s = build_monodromy(u, p).l12 * s;
    const Complex brute = s.v(dim_of(n) - 1);  // component along the all-down state
    const Complex z = izergin_z(pts, p);
    REQUIRE(std::abs(brute - z) < 1e-12 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("operator construction respects the build cap", "[monodromy]") {
  BulkParams p;
  p.q = Complex(1.2, 0.3);
  p.n = kBuildCapSites + 1;
  p.v.assign(p.n, Complex(1.0));
  REQUIRE_THROWS_AS(build_monodromy(Complex(1.5, 0.1), p), std::invalid_argument);
}
