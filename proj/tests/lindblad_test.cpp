#include <doctest.h>

#include <cmath>

#include "qtherm/lindblad.hpp"
#include "test_support.hpp"

using namespace qtherm;
using namespace qtherm_test;

namespace {

ThermalDissipator tls_bath(double gamma, double beta, double gap) {
  return {sigma_minus(), gamma, beta, gap};
}

LiouvillianModel single_bath_tls(double gap, double beta, double gamma) {
  return {tls_hamiltonian(gap), {tls_bath(gamma, beta, gap)}};
}

}  // namespace

TEST_CASE("dissipator basics") {
  SUBCASE("gibbs state is the detailed-balance fixed point") {
    double gap = 1.3, beta = 0.7;
    DensityMatrix rho = gibbs_state(tls_hamiltonian(gap), beta);
    Matrix d = apply_dissipator(tls_bath(2.0, beta, gap), rho.mat());
    CHECK(d.cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("zero rate gives zero") {
    DensityMatrix rho = random_density(2);
    Matrix d = apply_dissipator(tls_bath(0.0, 1.0, 1.0), rho.mat());
    CHECK(d.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("explicit 2x2 expansion oracle for the excited state") {
    // A = sigma-, rho = |1><1|, gamma = 1, beta*omega = 1:
    // down channel moves population e -> g at rate 1; up channel acts on
    // the ground population only (zero here)
    Vector e = Vector::Zero(2);
    e(1) = 1;
    Matrix d = apply_dissipator(tls_bath(1.0, 1.0, 1.0), DensityMatrix::pure(e).mat());
    Matrix expect = Matrix::Zero(2, 2);
    expect(0, 0) = 1.0;
    expect(1, 1) = -1.0;
    CHECK((d - expect).cwiseAbs().maxCoeff() <= 1e-14);
  }
  SUBCASE("result is traceless hermitian") {
    for (int trial = 0; trial < 5; ++trial) {
      DensityMatrix rho = random_density(3);
      Matrix a = Matrix::Zero(3, 3);
      a(0, 2) = 1;
      Matrix d = apply_dissipator({Operator(a), 0.8, 0.5, 1.0}, rho.mat());
      CHECK(std::abs(d.trace()) <= 1e-12);
      CHECK((d - d.adjoint().eval()).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("adjoint dissipator duality") {
  SUBCASE("identity maps to zero") {
    Operator out = adjoint_dissipator(tls_bath(1.0, 0.5, 1.0), Operator::identity(2));
    CHECK(out.mat().cwiseAbs().maxCoeff() <= 1e-14);
  }
  SUBCASE("tr[O D(rho)] = tr[rho D+(O)] on random inputs") {
    for (int trial = 0; trial < 10; ++trial) {
      DensityMatrix rho = random_density(3);
      Operator obs(random_hermitian(3));
      Matrix a = Matrix::Zero(3, 3);
      a(1, 2) = 1;
      ThermalDissipator d{Operator(a), 1.3, 0.4, 0.9};
      Complex lhs = (obs.mat() * apply_dissipator(d, rho.mat())).trace();
      Complex rhs = (rho.mat() * adjoint_dissipator(d, obs).mat()).trace();
      CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("propagation") {
  SUBCASE("t = 0 returns the initial state") {
    LiouvillianModel m = single_bath_tls(1.0, 1.0, 0.5);
    DensityMatrix rho = random_density(2);
    auto out = propagate(m, rho, 0.0, 0.01);
    CHECK((out.state.mat() - rho.mat()).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("closed-system coherence rotates as exp(-i w t)") {
    double w = 2.0;
    LiouvillianModel m{Operator(0.5 * w * pauli_z().mat()), {}};
    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    DensityMatrix rho0 = DensityMatrix::pure(plus);
    double t = 0.73;
    auto out = propagate(m, rho0, t, 1e-4);
    Complex expect = 0.5 * std::exp(Complex(0, -w * t));
    CHECK(std::abs(out.state.mat()(0, 1) - expect) <= 1e-8);
    CHECK(out.state.mat()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-10));
  }
  SUBCASE("single-bath TLS relaxes to the Gibbs state") {
    double gap = 1.0, beta = 0.8, gamma = 1.0;
    LiouvillianModel m = single_bath_tls(gap, beta, gamma);
    Vector e = Vector::Zero(2);
    e(1) = 1;
    auto out = propagate(m, DensityMatrix::pure(e), 40.0, 1e-3);
    DensityMatrix target = gibbs_state(tls_hamiltonian(gap), beta);
    CHECK((out.state.mat() - target.mat()).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK(out.trace_drift <= 1e-9);
  }
  SUBCASE("positivity and trace along checkpoints") {
    LiouvillianModel m = single_bath_tls(1.0, 0.5, 0.7);
    DensityMatrix rho = random_density(2);
    for (int k = 0; k < 4; ++k) {
      auto out = propagate(m, rho, 0.5, 1e-3);
      rho = out.state;  // constructor re-validates trace/positivity
      CHECK(std::abs(rho.mat().trace().real() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("steady state") {
  SUBCASE("single bath gives the Gibbs state") {
    double gap = 1.0, beta = 0.8;
    LiouvillianModel m = single_bath_tls(gap, beta, 0.9);
    DensityMatrix rho = steady_state(m);
    DensityMatrix target = gibbs_state(tls_hamiltonian(gap), beta);
    CHECK((rho.mat() - target.mat()).cwiseAbs().maxCoeff() <= 1e-10);
  }
  SUBCASE("agrees with long-time propagation") {
    LiouvillianModel m = single_bath_tls(1.4, 0.6, 0.8);
    DensityMatrix ss = steady_state(m);
    auto prop = propagate(m, DensityMatrix::maximally_mixed(2), 40.0, 1e-3);
    CHECK((ss.mat() - prop.state.mat()).cwiseAbs().maxCoeff() <= 1e-8);
  }
  SUBCASE("no dissipators means a degenerate null space") {
    LiouvillianModel m{tls_hamiltonian(1.0), {}};
    CHECK_THROWS_AS(steady_state(m), degenerate_steady_state_error);
  }
}

TEST_CASE("heat currents") {
  SUBCASE("zero at the fixed point") {
    LiouvillianModel m = single_bath_tls(1.0, 1.0, 1.0);
    DensityMatrix rho = steady_state(m);
    CHECK(std::abs(heat_current(m, m.dissipators[0], rho)) <= 1e-12);
  }
  SUBCASE("currents sum to zero at any two-bath steady state") {
    LiouvillianModel m{tls_hamiltonian(1.0),
                       {tls_bath(1.0, 0.2, 1.0), tls_bath(0.5, 2.0, 1.0)}};
    DensityMatrix rho = steady_state(m);
    double total = 0;
    for (const auto& d : m.dissipators) total += heat_current(m, d, rho);
    CHECK(std::abs(total) <= 1e-10);
  }
}

TEST_CASE("entropy production") {
  SUBCASE("zero at global equilibrium") {
    LiouvillianModel m = single_bath_tls(1.0, 0.7, 1.0);
    DensityMatrix rho = steady_state(m);
    CHECK(std::abs(spohn_entropy_production(m, rho)) <= 1e-10);
  }
  SUBCASE("matches -d/dt D(rho_t || rho_gibbs) along a relaxation") {
    double gap = 1.0, beta = 0.8, gamma = 0.6;
    LiouvillianModel m = single_bath_tls(gap, beta, gamma);
    DensityMatrix gibbs = gibbs_state(tls_hamiltonian(gap), beta);
    Vector e = Vector::Zero(2);
    e(1) = 1;
    DensityMatrix rho = propagate(m, DensityMatrix::pure(e), 0.4, 1e-4).state;
    double sigma = spohn_entropy_production(m, rho);
    CHECK(sigma >= 0);
    // finite-difference oracle on the relative entropy to the fixed point
    double dt = 1e-4;
    DensityMatrix fwd = propagate(m, rho, dt, 1e-5).state;
    DensityMatrix bwd = propagate(m, rho, 2 * dt, 1e-5).state;
    double d0 = relative_entropy(rho, gibbs);
    double d1 = relative_entropy(fwd, gibbs);
    double d2 = relative_entropy(bwd, gibbs);
    double rate = -(-3.0 * d0 + 4.0 * d1 - d2) / (2 * dt);
    CHECK(sigma == doctest::Approx(rate).epsilon(1e-6));
  }
}

TEST_CASE("global entropy production") {
  SUBCASE("identity unitary gives (0, 0)") {
    auto out = global_entropy_production(Operator::identity(4), random_density(2),
                                         gibbs_state(tls_hamiltonian(1.0), 1.0));
    CHECK(std::abs(out.sigma) <= 1e-12);
    CHECK(std::abs(out.phi) <= 1e-12);
  }
  SUBCASE("full swap against the direct 4x4 computation") {
    Matrix swap = Matrix::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = 1;
    swap(1, 2) = swap(2, 1) = 1;
    DensityMatrix rho_s = random_density(2);
    DensityMatrix rho_e = gibbs_state(tls_hamiltonian(1.0), 2.0);
    auto out = global_entropy_production(Operator(swap), rho_s, rho_e);
    // after a swap the system state is rho_e and vice versa
    double expect_phi = von_neumann_entropy(rho_s) - von_neumann_entropy(rho_e) +
                        relative_entropy(rho_s, rho_e);
    double expect_sigma =
        von_neumann_entropy(rho_e) - von_neumann_entropy(rho_s) + expect_phi;
    CHECK(out.phi == doctest::Approx(expect_phi).epsilon(1e-10));
    CHECK(out.sigma == doctest::Approx(expect_sigma).epsilon(1e-10));
    CHECK(out.sigma >= -1e-10);
  }
  SUBCASE("thermal environment: Phi equals beta times the env heat") {
    double beta = 1.7;
    Operator h_e = tls_hamiltonian(0.9);
    DensityMatrix rho_e = gibbs_state(h_e, beta);
    DensityMatrix rho_s = random_density(2);
    // partial swap generated by the swap hamiltonian at small angle
    Matrix swap = Matrix::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = 1;
    swap(1, 2) = swap(2, 1) = 1;
    double theta = 1e-2;
    // swap^2 = 1, so exp(-i theta S) = cos(theta) 1 - i sin(theta) S
    Matrix u = std::cos(theta) * Matrix::Identity(4, 4) -
               Complex(0, std::sin(theta)) * swap;
    auto out = global_entropy_production(Operator(u), rho_s, rho_e);
    DensityMatrix joint = tensor_product(rho_s, rho_e);
    Matrix evolved = u * joint.mat() * u.adjoint();
    DensityMatrix rho_e_t =
        partial_trace(DensityMatrix(evolved), {{2, 2}}, {1});
    double q_env = (expectation(rho_e_t, h_e) - expectation(rho_e, h_e)).real();
    CHECK(out.phi == doctest::Approx(beta * q_env).epsilon(1e-9));
  }
  SUBCASE("non-unitary input rejected") {
    Matrix notu = Matrix::Zero(4, 4);
    CHECK_THROWS_AS(
        global_entropy_production(Operator(notu), random_density(2), random_density(2)),
        domain_error);
  }
}
