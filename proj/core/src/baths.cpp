#include "qtherm/baths.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace qtherm {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  double err = 0;
  double val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, 15, 1e-14, &err);
  if (!(err <= abs_tol) && !(err <= 1e-12 * std::abs(val)))
    throw accuracy_error("integrate: quadrature error " + std::to_string(err) +
                             " above tolerance",
                         val);
  return val;
}

double integrate_semi_infinite(const std::function<double(double)>& f, double a,
                               double scale, double abs_tol) {
  if (scale <= 0) throw domain_error("integrate_semi_infinite: scale must be > 0");
  // w = a - scale ln u maps u in (0,1] onto [a, inf); dw = -scale/u du
  auto g = [&](double u) {
    if (u <= 0) return 0.0;
    double w = a - scale * std::log(u);
    return f(w) * scale / u;
  };
  return integrate(g, 0.0, 1.0, abs_tol);
}

void BathSpec::validate() const {
  if (!std::isfinite(beta)) throw domain_error("BathSpec: beta must be finite");
  if (squeeze_r.has_value() != squeeze_theta.has_value())
    throw domain_error("BathSpec: squeeze r and theta must be present together");
  if (squeeze_r && *squeeze_r < 0)
    throw domain_error("BathSpec: squeeze_r must be >= 0");
}

double TabulatedDensity::operator()(double w) const {
  if (omega.size() < 2 || omega.size() != j.size())
    throw domain_error("TabulatedDensity: need >= 2 grid points, equal column sizes");
  if (w < omega.front() || w > omega.back()) return 0.0;
  auto it = std::upper_bound(omega.begin(), omega.end(), w);
  size_t hi = std::min(static_cast<size_t>(it - omega.begin()), omega.size() - 1);
  if (hi == 0) hi = 1;
  size_t lo = hi - 1;
  double t = (w - omega[lo]) / (omega[hi] - omega[lo]);
  return j[lo] + t * (j[hi] - j[lo]);
}

TabulatedDensity TabulatedDensity::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("TabulatedDensity: cannot open " + path);
  TabulatedDensity d;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double w, jv;
    if (ss >> w >> jv) {
      d.omega.push_back(w);
      d.j.push_back(jv);
    }
  }
  if (d.omega.size() < 2)
    throw domain_error("TabulatedDensity: fewer than 2 rows in " + path);
  for (size_t i = 1; i < d.omega.size(); ++i)
    if (d.omega[i] <= d.omega[i - 1])
      throw domain_error("TabulatedDensity: omega column must be strictly ascending");
  for (double jv : d.j)
    if (jv < 0) throw domain_error("TabulatedDensity: J(omega) must be >= 0");
  return d;
}

double spectral_density_value(const SpectralDensity& j, double omega) {
  return std::visit(
      [omega](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, OhmicDensity>) {
          if (omega <= 0) return 0.0;
          return d.gamma * omega * std::exp(-omega / d.omega_c);
        } else if constexpr (std::is_same_v<T, LorentzianDensity>) {
          if (omega <= 0) return 0.0;
          double a = omega * omega - d.omega1 * d.omega1;
          return d.d1 * d.gamma1 * omega / (a * a + d.gamma1 * d.gamma1 * omega * omega);
        } else {
          return d(omega);
        }
      },
      j);
}

namespace {

// frequency scale of a spectral density, used for substitutions and the
// coth series switch-over
double density_scale(const SpectralDensity& j) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, OhmicDensity>) return d.omega_c;
        else if constexpr (std::is_same_v<T, LorentzianDensity>) return std::max(d.omega1, d.gamma1);
        else return d.omega.back();
      },
      j);
}

bool is_tabulated(const SpectralDensity& j) {
  return std::holds_alternative<TabulatedDensity>(j);
}

}  // namespace

double bose_occupation(double omega, double beta) {
  double x = beta * omega;
  if (x == 0.0) throw divergence_error("bose_occupation: beta*omega = 0 diverges");
  return 1.0 / std::expm1(x);
}

double fermi_distribution(double energy, const BathSpec& lead) {
  if (!lead.mu) throw domain_error("fermi_distribution: lead has no chemical potential");
  double x = lead.beta * (energy - *lead.mu);
  if (x > 700) return 0.0;
  if (x < -700) return 1.0;
  return 1.0 / (1.0 + std::exp(x));
}

double coth(double x) {
  if (std::abs(x) < 1e-6) return 1.0 / x + x / 3.0 - x * x * x / 45.0;
  return 1.0 / std::tanh(x);
}

std::complex<double> bath_correlation(const SpectralDensity& j, double beta,
                                      double t, double abs_tol) {
  const double scale = density_scale(j);
  auto re = [&](double w) {
    return spectral_density_value(j, w) * coth(0.5 * beta * w) * std::cos(w * t) / M_PI;
  };
  auto im = [&](double w) {
    return -spectral_density_value(j, w) * std::sin(w * t) / M_PI;
  };
  double re_val, im_val;
  if (is_tabulated(j)) {
    const auto& d = std::get<TabulatedDensity>(j);
    double a = std::max(d.omega.front(), 0.0);
    re_val = integrate(re, a, d.omega.back(), abs_tol);
    im_val = (t == 0.0) ? 0.0 : integrate(im, a, d.omega.back(), abs_tol);
  } else {
    re_val = integrate_semi_infinite(re, 0.0, scale, abs_tol);
    im_val = (t == 0.0) ? 0.0 : integrate_semi_infinite(im, 0.0, scale, abs_tol);
  }
  return {re_val, im_val};
}

double polaron_factor(const SpectralDensity& j, double beta, double abs_tol) {
  if (const auto* o = std::get_if<OhmicDensity>(&j)) {
    if (o->gamma == 0.0) return 1.0;
    throw divergence_error(
        "polaron_factor: Ohmic J ~ omega at omega -> 0 makes "
        "J/omega^2 coth(beta omega/2) infrared divergent");
  }
  if (const auto* l = std::get_if<LorentzianDensity>(&j)) {
    if (l->d1 == 0.0) return 1.0;
    throw divergence_error(
        "polaron_factor: Lorentzian J ~ omega at omega -> 0 makes "
        "J/omega^2 coth(beta omega/2) infrared divergent");
  }

  const auto& d = std::get<TabulatedDensity>(j);
  // support starts at the last grid point before J becomes nonzero
  size_t first = 0;
  while (first < d.j.size() && d.j[first] == 0.0) ++first;
  if (first == d.j.size()) return 1.0;  // J identically zero
  double a = d.omega[first > 0 ? first - 1 : 0];
  if (a <= 0.0)
    throw divergence_error(
        "polaron_factor: tabulated J has support down to omega <= 0; "
        "piecewise-linear behavior there is infrared divergent");
  auto f = [&](double w) {
    return spectral_density_value(j, w) * coth(0.5 * beta * w) / (w * w);
  };
  double integral = integrate(f, a, d.omega.back(), abs_tol);
  return std::exp(-0.5 * integral);
}

double squeezed_enhancement(double r, double n_th) {
  if (n_th <= 0) throw domain_error("squeezed_enhancement: n_th must be > 0");
  double s = std::sinh(r);
  return 1.0 + (2.0 + 1.0 / n_th) * s * s;
}

}  // namespace qtherm
