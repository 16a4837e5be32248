#include <doctest.h>

#include <cmath>

#include "qtherm/hilbert.hpp"
#include "test_support.hpp"

using namespace qtherm;
using namespace qtherm_test;

TEST_CASE("tensor product identities") {
  Operator i2 = Operator::identity(2);
  Operator i4 = tensor_product(i2, i2);
  CHECK(i4.dim() == 4);
  CHECK((i4.mat() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  Operator zi = tensor_product(pauli_z(), i2);
  Eigen::Vector4d diag(1, 1, -1, -1);
  for (int i = 0; i < 4; ++i) CHECK(zi.mat()(i, i).real() == doctest::Approx(diag(i)));
}

TEST_CASE("sigma_x (x) sigma_x flips |00> to |11>") {
  Operator xx = tensor_product(pauli_x(), pauli_x());
  Vector v00 = Vector::Zero(4);
  v00(0) = 1;
  Vector out = xx.mat() * v00;
  // oracle: explicit 4x4 index expansion (sx)_{ab}(sx)_{cd}
  Matrix expect = Matrix::Zero(4, 4);
  Matrix sx = pauli_x().mat();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          expect(2 * a + c, 2 * b + d) = sx(a, b) * sx(c, d);
  CHECK((xx.mat() - expect).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(std::abs(out(3) - Complex(1, 0)) <= 1e-15);
}

TEST_CASE("partial trace over a Bell state is maximally mixed") {
  Vector bell = Vector::Zero(4);
  bell(0) = 1.0 / std::sqrt(2.0);
  bell(3) = 1.0 / std::sqrt(2.0);
  DensityMatrix rho = DensityMatrix::pure(bell);
  DensityMatrix reduced = partial_trace(rho, {{2, 2}}, {0});
  CHECK((reduced.mat() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("partial trace of a product returns the factor") {
  DensityMatrix a = random_density(2);
  DensityMatrix b = random_density(3);
  DensityMatrix joint = tensor_product(a, b);
  DensityMatrix ra = partial_trace(joint, {{2, 3}}, {0});
  DensityMatrix rb = partial_trace(joint, {{2, 3}}, {1});
  CHECK((ra.mat() - a.mat()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((rb.mat() - b.mat()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("partial trace matches the double-index contraction oracle") {
  DensityMatrix rho = random_density(4);
  DensityMatrix reduced = partial_trace(rho, {{2, 2}}, {1});
  // oracle: rho_B[j,l] = sum_i <i j| rho |i l>
  Matrix expect = Matrix::Zero(2, 2);
  for (int j = 0; j < 2; ++j)
    for (int l = 0; l < 2; ++l)
      for (int i = 0; i < 2; ++i) expect(j, l) += rho.mat()(2 * i + j, 2 * i + l);
  CHECK((reduced.mat() - expect).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("partial trace rejects inconsistent factorizations") {
  DensityMatrix rho = random_density(4);
  CHECK_THROWS_AS(partial_trace(rho, {{2, 3}}, {0}), dimension_error);
}

TEST_CASE("gibbs state limits") {
  Operator h = tls_hamiltonian(1.0);
  SUBCASE("beta = 0 is maximally mixed") {
    DensityMatrix rho = gibbs_state(h, 0.0);
    CHECK((rho.mat() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <= 1e-14);
  }
  SUBCASE("excited population at beta = 1") {
    DensityMatrix rho = gibbs_state(h, 1.0);
    CHECK(rho.mat()(1, 1).real() == doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-12));
    CHECK(rho.mat()(1, 1).real() == doctest::Approx(0.268941).epsilon(1e-5));
  }
  SUBCASE("ground state flag") {
    DensityMatrix rho = ground_state(h);
    CHECK(rho.mat()(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(rho.mat()(1, 1)) <= 1e-14);
  }
  SUBCASE("non-hermitian rejected") {
    Matrix bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS_AS(gibbs_state(Operator(bad), 1.0), domain_error);
  }
  SUBCASE("large beta stays finite") {
    DensityMatrix rho = gibbs_state(h, 1e6);
    CHECK(rho.mat()(0, 0).real() == doctest::Approx(1.0));
  }
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(DensityMatrix::pure(random_state(3))) <= 1e-10);
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // thermal TLS with p_e = 1/(1+e): scalar formula oracle
  double pe = 1.0 / (1.0 + std::exp(1.0));
  double expect = -pe * std::log(pe) - (1 - pe) * std::log(1 - pe);
  DensityMatrix rho = gibbs_state(tls_hamiltonian(1.0), 1.0);
  CHECK(von_neumann_entropy(rho) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("entropy is invariant under unitary conjugation") {
  for (int trial = 0; trial < 5; ++trial) {
    DensityMatrix rho = random_density(4);
    Matrix u = random_unitary(4);
    DensityMatrix rotated(u * rho.mat() * u.adjoint());
    CHECK(std::abs(von_neumann_entropy(rho) - von_neumann_entropy(rotated)) <= 1e-10);
  }
}

TEST_CASE("relative entropy") {
  SUBCASE("identical states give zero") {
    DensityMatrix rho = random_density(3);
    CHECK(std::abs(relative_entropy(rho, rho)) <= 1e-10);
  }
  SUBCASE("eigenbasis formula oracle") {
    Matrix sig = Matrix::Zero(2, 2);
    sig(0, 0) = 0.9;
    sig(1, 1) = 0.1;
    double d = relative_entropy(DensityMatrix::maximally_mixed(2), DensityMatrix(sig));
    double expect = -std::log(2.0) - 0.5 * (std::log(0.9) + std::log(0.1));
    CHECK(d == doctest::Approx(expect).epsilon(1e-12));
  }
  SUBCASE("pure vs mixed closed form") {
    Vector ground = Vector::Zero(2);
    ground(0) = 1;
    double d = relative_entropy(DensityMatrix::pure(ground), DensityMatrix::maximally_mixed(2));
    CHECK(d == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }
  SUBCASE("support violation flagged as +inf") {
    Vector g = Vector::Zero(2), e = Vector::Zero(2);
    g(0) = 1;
    e(1) = 1;
    bool violated = false;
    double d = relative_entropy(DensityMatrix::pure(g), DensityMatrix::pure(e), &violated);
    CHECK(violated);
    CHECK(std::isinf(d));
  }
  SUBCASE("nonnegative on random pairs") {
    for (int trial = 0; trial < 10; ++trial) {
      DensityMatrix rho = random_density(3), sig = random_density(3);
      CHECK(relative_entropy(rho, sig) >= -1e-10);
    }
  }
}

TEST_CASE("expectation values") {
  CHECK(expectation(random_density(3), Operator::identity(3)).real() ==
        doctest::Approx(1.0).epsilon(1e-12));

  Vector e = Vector::Zero(2);
  e(1) = 1;
  CHECK(expectation(DensityMatrix::pure(e), pauli_z()).real() == doctest::Approx(-1.0));

  DensityMatrix rho = gibbs_state(tls_hamiltonian(1.0), 1.0);
  CHECK(expectation(rho, tls_hamiltonian(1.0)).real() ==
        doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-12));

  CHECK_THROWS_AS(expectation(random_density(2), Operator::identity(3)), dimension_error);
}

TEST_CASE("density matrix invariants enforced") {
  Matrix notrace = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(notrace), domain_error);

  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(negative), domain_error);
}
