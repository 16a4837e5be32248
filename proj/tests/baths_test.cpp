#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qtherm/baths.hpp"
#include "test_support.hpp"

using namespace qtherm;
using namespace qtherm_test;

TEST_CASE("bose occupation") {
  CHECK(bose_occupation(50.0, 1.0) <= 1e-20);
  CHECK(bose_occupation(std::log(2.0), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bose_occupation(0.2, 1.0) == doctest::Approx(4.51667).epsilon(1e-5));
  CHECK_THROWS_AS(bose_occupation(0.0, 1.0), divergence_error);
}

TEST_CASE("fermi distribution") {
  BathSpec lead{1.0, 0.5, {}, {}};
  CHECK(fermi_distribution(0.5, lead) == doctest::Approx(0.5));
  CHECK(fermi_distribution(1.5, lead) == doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-12));

  BathSpec cold{1e9, 0.0, {}, {}};
  CHECK(fermi_distribution(-1.0, cold) == doctest::Approx(1.0));
  CHECK(fermi_distribution(1.0, cold) == doctest::Approx(0.0));

  BathSpec nomu{1.0, {}, {}, {}};
  CHECK_THROWS_AS(fermi_distribution(0.0, nomu), domain_error);

  // monotone decreasing in E at fixed beta > 0
  double prev = 2.0;
  for (double e = -3; e <= 3; e += 0.25) {
    double f = fermi_distribution(e, lead);
    CHECK(f < prev);
    prev = f;
  }
}

TEST_CASE("bath correlation function") {
  SUBCASE("zero coupling gives zero") {
    SpectralDensity j = OhmicDensity{0.0, 5.0};
    auto l = bath_correlation(j, 1.0, 0.7);
    CHECK(std::abs(l) <= 1e-12);
  }
  SUBCASE("imaginary part vanishes at t = 0") {
    SpectralDensity j = OhmicDensity{1.0, 5.0};
    CHECK(bath_correlation(j, 2.0, 0.0).imag() == 0.0);
  }
  SUBCASE("Ohmic value matches the fine-grid trapezoid oracle") {
    SpectralDensity j = OhmicDensity{1.0, 5.0};
    const double beta = 1.0, t = 0.3;
    auto spectral = [](double w) { return w * std::exp(-w / 5.0); };
    auto coth_ref = [](double x) { return 1.0 / std::tanh(x); };
    double re = trapezoid(
        [&](double w) {
          if (w <= 1e-12) return 2.0 / beta / M_PI;  // w coth(bw/2) -> 2/b
          return spectral(w) * coth_ref(0.5 * beta * w) * std::cos(w * t) / M_PI;
        },
        0.0, 120.0, 4000000);
    double im = trapezoid(
        [&](double w) { return -spectral(w) * std::sin(w * t) / M_PI; }, 0.0,
        120.0, 4000000);
    auto l = bath_correlation(j, beta, t, 1e-10);
    CHECK(l.real() == doctest::Approx(re).epsilon(1e-6));
    CHECK(l.imag() == doctest::Approx(im).epsilon(1e-6));
  }
  SUBCASE("conjugation symmetry L(-t) = conj(L(t))") {
    SpectralDensity j = LorentzianDensity{0.8, 0.5, 2.0};
    auto lp = bath_correlation(j, 1.5, 0.4);
    auto lm = bath_correlation(j, 1.5, -0.4);
    CHECK(std::abs(lm - std::conj(lp)) <= 1e-8);
  }
}

TEST_CASE("polaron factor") {
  SUBCASE("zero coupling gives 1") {
    CHECK(polaron_factor(OhmicDensity{0.0, 1.0}, 1.0) == 1.0);
    TabulatedDensity flat{{0.5, 1.0, 2.0}, {0.0, 0.0, 0.0}};
    CHECK(polaron_factor(SpectralDensity{flat}, 1.0) == 1.0);
  }
  SUBCASE("Ohmic at finite beta is infrared divergent") {
    CHECK_THROWS_AS(polaron_factor(OhmicDensity{1.0, 1.0}, 1.0), divergence_error);
    CHECK_THROWS_AS(polaron_factor(LorentzianDensity{1.0, 0.5, 1.0}, 1.0),
                    divergence_error);
  }
  // super-Ohmic tabulated grid J = w^3 exp(-w)
  auto super_ohmic = [](double amp) {
    TabulatedDensity d;
    for (int i = 0; i <= 4000; ++i) {
      double w = 0.01 + i * (40.0 - 0.01) / 4000.0;
      d.omega.push_back(w);
      d.j.push_back(amp * w * w * w * std::exp(-w));
    }
    return d;
  };
  SUBCASE("matches the quadrature oracle at beta = 2") {
    SpectralDensity j{super_ohmic(1.0)};
    double integral = trapezoid(
        [&](double w) {
          return spectral_density_value(j, w) / (w * w) / std::tanh(w);
        },
        0.01, 40.0, 2000000);
    CHECK(polaron_factor(j, 2.0, 1e-10) ==
          doctest::Approx(std::exp(-0.5 * integral)).epsilon(1e-8));
  }
  SUBCASE("coupling x4 raises the factor to the 4th power") {
    double b1 = polaron_factor(SpectralDensity{super_ohmic(1.0)}, 2.0, 1e-10);
    double b4 = polaron_factor(SpectralDensity{super_ohmic(4.0)}, 2.0, 1e-10);
    CHECK(b4 == doctest::Approx(std::pow(b1, 4)).epsilon(1e-9));
    CHECK(b1 > 0);
    CHECK(b1 <= 1.0);
    CHECK(b4 < b1);  // decreasing in coupling strength
  }
}

TEST_CASE("squeezed enhancement") {
  CHECK(squeezed_enhancement(0.0, 1.0) == 1.0);
  double s1 = std::sinh(1.0);
  CHECK(squeezed_enhancement(1.0, 1.0) == doctest::Approx(1.0 + 3.0 * s1 * s1).epsilon(1e-12));
  CHECK(squeezed_enhancement(1.0, 1.0) == doctest::Approx(5.1432).epsilon(1e-4));
  // even in r: symmetric finite difference derivative at 0 vanishes
  double h = 1e-6;
  CHECK(std::abs(squeezed_enhancement(h, 2.0) - squeezed_enhancement(0.0, 2.0)) <= 1e-11);
  CHECK_THROWS_AS(squeezed_enhancement(1.0, 0.0), domain_error);
}

TEST_CASE("tabulated density CSV loading") {
  const char* path = "tab_density_test.csv";
  {
    std::ofstream out(path);
    out << "# omega, J\n0.5, 0.25\n1.0, 1.0\n2.0, 0.5\n";
  }
  TabulatedDensity d = TabulatedDensity::from_csv(path);
  CHECK(d.omega.size() == 3);
  CHECK(d(1.0) == doctest::Approx(1.0));
  CHECK(d(0.75) == doctest::Approx(0.625));  // linear interpolation
  CHECK(d(3.0) == 0.0);                      // outside the grid
  CHECK(d(0.1) == 0.0);
  std::remove(path);
}

TEST_CASE("bath spec squeeze fields validated together") {
  BathSpec ok{1.0, {}, 0.5, 0.1};
  ok.validate();
  BathSpec bad{1.0, {}, 0.5, {}};
  CHECK_THROWS_AS(bad.validate(), domain_error);
}
