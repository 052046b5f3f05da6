#include <catch2/catch_amalgamated.hpp>

#include <bethe/linalg.hpp>
#include <bethe/types.hpp>

#include <algorithm>
#include <complex>
#include <vector>

using namespace bethe;

namespace {
bool near(const Complex& a, const Complex& b, double tol = 1e-13) {
  return std::abs(a - b) <= tol;
}
}  // namespace

TEST_CASE("kron of Pauli matrices has the expected entries", "[tensor]") {
  const Mat k = kron(pauli_x(), pauli_y());
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  // sigma^x x sigma^y is antidiagonal: -i, i, -i, i from the top-right corner
  REQUIRE(near(k(0, 3), Complex(0, -1)));
  REQUIRE(near(k(1, 2), Complex(0, 1)));
  REQUIRE(near(k(2, 1), Complex(0, -1)));
  REQUIRE(near(k(3, 0), Complex(0, 1)));
  REQUIRE(k.cwiseAbs().sum() == Catch::Approx(4.0));
}

TEST_CASE("kron is multiplicative over matrix products", "[tensor]") {
  const Mat a = pauli_x(), b = pauli_y(), c = pauli_z(), d = sigma_plus();
  const Mat lhs = kron(a * c, b * d);
  const Mat rhs = kron(a, b) * kron(c, d);
  REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("embed_local places a one-site operator at the requested site", "[tensor]") {
  // Id x sigma^+ on two sites: nonzeros exactly at (0,1) and (2,3)
  const QOperator op = embed_local(sigma_plus(), 2, 2);
  REQUIRE(op.n_sites == 2);
  REQUIRE(near(op.m(0, 1), Complex(1.0)));
  REQUIRE(near(op.m(2, 3), Complex(1.0)));
  REQUIRE(op.m.cwiseAbs().sum() == Catch::Approx(2.0));

  // sigma^+ x Id: nonzeros at (0,2) and (1,3)
  const QOperator op1 = embed_local(sigma_plus(), 1, 2);
  REQUIRE(near(op1.m(0, 2), Complex(1.0)));
  REQUIRE(near(op1.m(1, 3), Complex(1.0)));
  REQUIRE(op1.m.cwiseAbs().sum() == Catch::Approx(2.0));

  REQUIRE_THROWS_AS(embed_local(sigma_plus(), 0, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(embed_local(sigma_plus(), 3, 2), std::invalid_argument);
}

TEST_CASE("embeddings at distinct sites commute and reproduce kron", "[tensor]") {
  const QOperator a = embed_local(pauli_x(), 1, 3);
  const QOperator b = embed_local(pauli_y(), 3, 3);
  REQUIRE(residual(a * b, b * a) < 1e-14);

  const Mat direct = kron(pauli_x(), kron(Mat::Identity(2, 2), pauli_y()));
  REQUIRE(((a * b).m - direct).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("embed_two matches kron on two factors and handles swapped slots", "[tensor]") {
  const Mat op4 = kron(sigma_plus(), pauli_z());
  REQUIRE((embed_two(op4, 0, 1, 2) - op4).cwiseAbs().maxCoeff() < 1e-14);
  // swapping the target slots transposes the tensor factors
  REQUIRE((embed_two(op4, 1, 0, 2) - kron(pauli_z(), sigma_plus()))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  // middle identity factor
  const Mat emb = embed_two(op4, 0, 2, 3);
  const Mat direct = kron(sigma_plus(), kron(Mat::Identity(2, 2), pauli_z()));
  REQUIRE((emb - direct).cwiseAbs().maxCoeff() < 1e-14);

  REQUIRE_THROWS_AS(embed_two(op4, 0, 0, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(embed_two(Mat::Identity(2, 2), 0, 1, 2), std::invalid_argument);
}

TEST_CASE("total spin-z has binomial eigenvalue multiplicities", "[tensor]") {
  const QOperator jz = total_spin_z(3);
  std::vector<double> diag;
  for (long i = 0; i < 8; ++i) diag.push_back(jz.m(i, i).real());
  std::sort(diag.begin(), diag.end());
  const std::vector<double> expect = {-1.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.5};
  for (std::size_t i = 0; i < expect.size(); ++i)
    REQUIRE(diag[i] == Catch::Approx(expect[i]));
  // off-diagonal part vanishes
  REQUIRE((jz.m - jz.m.diagonal().asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spectrum returns all eigenvalues; their sum equals the trace", "[tensor]") {
  const std::vector<Complex> sz = spectrum(pauli_z());
  REQUIRE(sz.size() == 2);
  std::vector<double> re = {sz[0].real(), sz[1].real()};
  std::sort(re.begin(), re.end());
  REQUIRE(re[0] == Catch::Approx(-1.0));
  REQUIRE(re[1] == Catch::Approx(1.0));

  Mat m(3, 3);
  m << Complex(1, 2), Complex(0, 1), Complex(2, 0),
       Complex(3, -1), Complex(-2, 0.5), Complex(1, 1),
       Complex(0, 0), Complex(4, 4), Complex(0.5, -3);
  Complex sum = 0.0;
  for (const Complex& z : spectrum(m)) sum += z;
  REQUIRE(near(sum, m.trace(), 1e-12));

  REQUIRE_THROWS_AS(spectrum(Mat::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("relative residual normalizes by the larger operand norm", "[tensor]") {
  const QOperator id = QOperator::identity(2);
  const QOperator two = 2.0 * id;
  // ||I - 2I||_F / max(1, ||I||_F, ||2I||_F) = 2 / 4 = 0.5
  REQUIRE(residual(id, two) == Catch::Approx(0.5));
  REQUIRE(residual(id, id) == 0.0);
}

TEST_CASE("operator and state wrappers enforce dimension consistency", "[tensor]") {
  REQUIRE_THROWS_AS(QOperator(2, Mat::Identity(3, 3)), std::invalid_argument);
  REQUIRE_THROWS_AS(StateVector(2, Vec::Zero(3)), std::invalid_argument);
  const QOperator a = QOperator::identity(1);
  const QOperator b = QOperator::identity(2);
  REQUIRE_THROWS_AS(a * b, std::invalid_argument);
  REQUIRE_THROWS_AS(a + b, std::invalid_argument);
}
