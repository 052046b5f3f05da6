#include <catch2/catch_amalgamated.hpp>

#include <bethe/functions.hpp>
#include <bethe/params.hpp>
#include <bethe/rmatrix.hpp>

#include <complex>

using namespace bethe;

namespace {
const Complex kQ{1.2, 0.3};
}

TEST_CASE("R matrix has the six-vertex structure", "[rmatrix]") {
  const Complex u{1.7, 0.2};
  const Mat r = build_r(u, kQ);
  REQUIRE(r.rows() == 4);
  REQUIRE(std::abs(r(0, 0) - fn_b(kQ * u, kQ)) < 1e-14);
  REQUIRE(std::abs(r(3, 3) - fn_b(kQ * u, kQ)) < 1e-14);
  REQUIRE(std::abs(r(1, 1) - fn_b(u, kQ)) < 1e-14);
  REQUIRE(std::abs(r(2, 2) - fn_b(u, kQ)) < 1e-14);
  REQUIRE(std::abs(r(1, 2) - Complex(1.0)) < 1e-14);
  REQUIRE(std::abs(r(2, 1) - Complex(1.0)) < 1e-14);
  // all other entries vanish
  REQUIRE(r.cwiseAbs().sum() ==
          Catch::Approx(2.0 * std::abs(fn_b(kQ * u, kQ)) +
                        2.0 * std::abs(fn_b(u, kQ)) + 2.0));
}

TEST_CASE("R at the identity point is the permutation matrix", "[rmatrix]") {
  const Mat r = build_r(Complex(1.0), kQ);
  Mat p = Mat::Zero(4, 4);
  p(0, 0) = p(3, 3) = p(1, 2) = p(2, 1) = 1.0;
  REQUIRE((r - p).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("R satisfies the Yang-Baxter equation at generic points", "[rmatrix]") {
  REQUIRE(ybe_residual(Complex(1.7, 0.2), Complex(0.9, -0.4), Complex(1.3, 0.5), kQ) < 1e-13);
  REQUIRE(ybe_residual(Complex(0.6, 0.8), Complex(1.1, 0.1), Complex(0.7, -0.9), kQ) < 1e-13);
  REQUIRE(ybe_residual(Complex(2.0, -0.3), Complex(1.4, 0.6), Complex(0.5, 0.2),
                       Complex(0.9, 0.45)) < 1e-13);
}

TEST_CASE("monodromy satisfies the RLL exchange relation", "[rmatrix]") {
  BulkParams p;
  p.q = kQ;
  p.n = 2;
  p.v = {Complex(1.12, 0.31), Complex(0.84, -0.47)};
  p.validate();
  REQUIRE(rll_residual(Complex(1.7, 0.2), Complex(0.9, -0.4), p) < 1e-13);
  REQUIRE(rll_residual(Complex(0.77, 0.61), Complex(1.35, -0.28), p) < 1e-13);
}
