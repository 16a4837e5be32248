#include "qtherm/thermoelectric.hpp"

#include <algorithm>
#include <cmath>

namespace qtherm {

double LeadSpec::fermi(double energy) const {
  double x = beta * (energy - mu);
  if (x > 700) return 0.0;
  if (x < -700) return 1.0;
  return 1.0 / (1.0 + std::exp(x));
}

double transmission_value(const TransmissionFunction& t, double energy) {
  return std::visit(
      [energy](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstantTransmission>) {
          return v.tau0;
        } else if constexpr (std::is_same_v<T, BoxcarTransmission>) {
          return std::abs(energy - v.center) <= 0.5 * v.width ? v.height : 0.0;
        } else if constexpr (std::is_same_v<T, LorentzianTransmission>) {
          double hw = 0.5 * v.gamma;
          double d = energy - v.center;
          return v.peak * hw * hw / (d * d + hw * hw);
        } else {
          if (v.energy.size() < 2 || v.energy.size() != v.tau.size())
            throw domain_error("TabulatedTransmission: bad grid");
          if (energy < v.energy.front() || energy > v.energy.back()) return 0.0;
          auto it = std::upper_bound(v.energy.begin(), v.energy.end(), energy);
          size_t hi = std::min(static_cast<size_t>(it - v.energy.begin()),
                               v.energy.size() - 1);
          if (hi == 0) hi = 1;
          size_t lo = hi - 1;
          double s = (energy - v.energy[lo]) / (v.energy[hi] - v.energy[lo]);
          return v.tau[lo] + s * (v.tau[hi] - v.tau[lo]);
        }
      },
      t);
}

namespace {

// window outside which both Fermi windows are numerically dead
std::pair<double, double> fermi_window(const LeadSpec& l, const LeadSpec& r) {
  double spread = 60.0 * std::max(1.0 / l.beta, 1.0 / r.beta);
  return {std::min(l.mu, r.mu) - spread, std::max(l.mu, r.mu) + spread};
}

// restrict [a,b] to the support of the transmission where it is compact
std::pair<double, double> clip_to_support(const TransmissionFunction& t, double a,
                                          double b) {
  if (const auto* box = std::get_if<BoxcarTransmission>(&t)) {
    a = std::max(a, box->center - 0.5 * box->width);
    b = std::min(b, box->center + 0.5 * box->width);
  } else if (const auto* tab = std::get_if<TabulatedTransmission>(&t)) {
    a = std::max(a, tab->energy.front());
    b = std::min(b, tab->energy.back());
  }
  return {a, b};
}

}  // namespace

LandauerCurrents landauer_currents(const TransmissionFunction& tau, const LeadSpec& left,
                                   const LeadSpec& right, double abs_tol) {
  if (left.beta <= 0 || right.beta <= 0)
    throw domain_error("landauer_currents: lead temperatures must be positive");
  auto [a, b] = fermi_window(left, right);
  std::tie(a, b) = clip_to_support(tau, a, b);
  LandauerCurrents out{0, 0, 0, 0, 0};
  if (a < b) {
    auto moment = [&](auto weight) {
      return integrate(
          [&](double e) {
            return transmission_value(tau, e) * (left.fermi(e) - right.fermi(e)) *
                   weight(e);
          },
          a, b, abs_tol);
    };
    out.j_e = moment([](double) { return 1.0; });
    out.j_u_left = moment([](double e) { return e; });
    out.j_h_left = moment([&](double e) { return e - left.mu; });
    out.j_h_right = integrate(
        [&](double e) {
          return transmission_value(tau, e) * (right.fermi(e) - left.fermi(e)) *
                 (e - right.mu);
        },
        a, b, abs_tol);
  }
  out.p_gen = -(left.mu - right.mu) * out.j_e;
  return out;
}

Eigen::Matrix2d onsager_matrix(const TransmissionFunction& tau, double temperature,
                               double mu, double abs_tol) {
  if (temperature <= 0) throw domain_error("onsager_matrix: T must be > 0");
  double beta = 1.0 / temperature;
  double a = mu - 60.0 * temperature, b = mu + 60.0 * temperature;
  std::tie(a, b) = clip_to_support(tau, a, b);
  auto window_moment = [&](int n) {
    if (a >= b) return 0.0;
    return integrate(
        [&](double e) {
          double x = 0.5 * beta * (e - mu);
          double sech = 1.0 / std::cosh(x);
          double minus_df = 0.25 * beta * sech * sech;  // -df/dE
          return std::pow(e - mu, n) * transmission_value(tau, e) * minus_df;
        },
        a, b, abs_tol);
  };
  double i0 = window_moment(0), i1 = window_moment(1), i2 = window_moment(2);
  Eigen::Matrix2d L;
  L << temperature * i0, temperature * i1, temperature * i1, temperature * i2;
  return L;
}

TransportCoefficients transport_coefficients(const Eigen::Matrix2d& onsager,
                                             double temperature) {
  double lee = onsager(0, 0);
  if (lee <= 0) throw domain_error("transport_coefficients: L_ee must be > 0");
  TransportCoefficients c;
  c.conductance = lee / temperature;
  c.thermal_conductance = onsager.determinant() / (temperature * temperature * lee);
  c.seebeck = onsager(0, 1) / (temperature * lee);
  c.peltier = onsager(1, 0) / lee;
  return c;
}

FigureOfMerit figure_of_merit(double conductance, double thermal_conductance,
                              double seebeck, double temperature) {
  if (thermal_conductance <= 0)
    throw domain_error("figure_of_merit: K must be > 0");
  FigureOfMerit f;
  f.zt = seebeck * seebeck * conductance * temperature / thermal_conductance;
  double s = std::sqrt(f.zt + 1.0);
  f.eta_max_over_carnot = (s - 1.0) / (s + 1.0);
  return f;
}

void RateModel::validate() const {
  const size_t n = energies.size();
  if (n == 0) throw domain_error("RateModel: no states");
  if (occupations.size() != n)
    throw dimension_error("RateModel: occupations size mismatch");
  if (leads.size() != rates.size())
    throw dimension_error("RateModel: one rate matrix per lead required");
  for (const auto& g : rates) {
    if (g.rows() != static_cast<Eigen::Index>(n) ||
        g.cols() != static_cast<Eigen::Index>(n))
      throw dimension_error("RateModel: rate matrix shape mismatch");
    if (g.minCoeff() < 0) throw domain_error("RateModel: negative rate");
  }
}

RateModel single_level_rate_model(double level, double g_left, double g_right,
                                  const LeadSpec& left, const LeadSpec& right) {
  if (g_left < 0 || g_right < 0)
    throw domain_error("single_level_rate_model: rates must be >= 0");
  RateModel m;
  m.energies = {0.0, level};
  m.occupations = {0, 1};
  m.leads = {left, right};
  Eigen::MatrixXd gl = Eigen::MatrixXd::Zero(2, 2), gr = gl;
  gl(1, 0) = g_left * left.fermi(level);
  gl(0, 1) = g_left * (1.0 - left.fermi(level));
  gr(1, 0) = g_right * right.fermi(level);
  gr(0, 1) = g_right * (1.0 - right.fermi(level));
  m.rates = {gl, gr};
  return m;
}

RateSteadyState rate_steady_state(const RateModel& m) {
  m.validate();
  const int n = m.num_states();
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(n, n);
  for (const auto& g : m.rates) {
    gen += g;
    for (int k = 0; k < n; ++k) gen(k, k) -= g.col(k).sum();
  }
  // null space of the generator
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(gen, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double tol = std::max(sv(0), 1.0) * 1e-12 * n;
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= tol) ++null_dim;
  if (null_dim != 1)
    throw degenerate_steady_state_error(
        "rate_steady_state: null space dimension " + std::to_string(null_dim) +
            " (reducible rate graph?)",
        null_dim);
  Eigen::VectorXd p = svd.matrixV().col(n - 1);
  if (p.sum() < 0) p = -p;
  p = p.cwiseMax(0.0);
  p /= p.sum();

  RateSteadyState out;
  out.occupations = p;
  for (size_t i = 0; i < m.leads.size(); ++i) {
    double jp = 0, jh = 0;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        if (k == l) continue;
        double flow = m.rates[i](k, l) * p(l);  // l -> k via lead i
        double dn = m.occupations[static_cast<size_t>(k)] -
                    m.occupations[static_cast<size_t>(l)];
        double de = m.energies[static_cast<size_t>(k)] -
                    m.energies[static_cast<size_t>(l)];
        jp += dn * flow;
        jh += (de - m.leads[i].mu * dn) * flow;
      }
    out.j_particle.push_back(jp);
    out.j_heat.push_back(jh);
  }
  return out;
}

double harvester_current(double gamma_l0, double gamma_l1, double gamma_r0,
                         double gamma_r1, double j_gate, double e_charging) {
  if (gamma_l0 < 0 || gamma_l1 < 0 || gamma_r0 < 0 || gamma_r1 < 0)
    throw domain_error("harvester_current: rates must be >= 0");
  if (e_charging <= 0) throw domain_error("harvester_current: E_C must be > 0");
  double denom = (gamma_l0 + gamma_r0) * (gamma_l1 + gamma_r1);
  if (denom == 0) throw domain_error("harvester_current: zero rate denominator");
  return -(gamma_l1 * gamma_r0 - gamma_l0 * gamma_r1) / denom * j_gate / e_charging;
}

HarvesterPerformance harvester_performance(double bias, double e_charging,
                                           double t_gate, double t_wire) {
  if (e_charging <= 0) throw domain_error("harvester_performance: E_C must be > 0");
  if (t_gate <= t_wire || t_wire <= 0)
    throw domain_error("harvester_performance: need T_g > T_w > 0");
  double eta_c = 1.0 - t_wire / t_gate;
  double v_stop = e_charging * eta_c;
  if (bias < 0 || bias > v_stop + 1e-12 * v_stop)
    throw regime_error("harvester_performance: bias beyond the stopping potential");
  return {bias / e_charging, v_stop};
}

namespace {

double bcs_dos(double e, double delta) {
  double a = std::abs(e);
  if (a <= delta) return 0.0;
  return a / std::sqrt(e * e - delta * delta);
}

// integrate g over [a, b] where g may carry inverse-square-root
// singularities at the interval endpoints; substitute the singular ends
// with E = edge +- delta(cosh u - 1)-style maps via u^2 scaling
double integrate_edge(const std::function<double(double)>& g, double a, double b,
                      bool singular_a, bool singular_b, double abs_tol) {
  if (b <= a) return 0.0;
  if (singular_a && singular_b) {
    double mid = 0.5 * (a + b);
    return integrate_edge(g, a, mid, true, false, 0.5 * abs_tol) +
           integrate_edge(g, mid, b, false, true, 0.5 * abs_tol);
  }
  if (singular_a) {
    // E = a + u^2: dE = 2u du removes a 1/sqrt(E-a) edge
    double umax = std::sqrt(b - a);
    return integrate([&](double u) { return g(a + u * u) * 2.0 * u; }, 0.0, umax,
                     abs_tol);
  }
  if (singular_b) {
    double umax = std::sqrt(b - a);
    return integrate([&](double u) { return g(b - u * u) * 2.0 * u; }, 0.0, umax,
                     abs_tol);
  }
  return integrate(g, a, b, abs_tol);
}

}  // namespace

SisCurrents sis_currents(double delta_left, double delta_right, double bias,
                         double t_left, double t_right, double conductance,
                         double abs_tol) {
  if (delta_left < 0 || delta_right < 0)
    throw domain_error("sis_currents: gaps must be >= 0");
  if (t_left <= 0 || t_right <= 0)
    throw domain_error("sis_currents: temperatures must be > 0");
  const double mu_l = 0.5 * bias, mu_r = -0.5 * bias;
  const LeadSpec left{1.0 / t_left, mu_l}, right{1.0 / t_right, mu_r};

  // gap edges in the global energy variable
  std::vector<double> edges;
  if (delta_left > 0) {
    edges.push_back(mu_l - delta_left);
    edges.push_back(mu_l + delta_left);
  }
  if (delta_right > 0) {
    edges.push_back(mu_r - delta_right);
    edges.push_back(mu_r + delta_right);
  }
  double w = 60.0 * std::max(t_left, t_right) + delta_left + delta_right +
             std::abs(bias) + 5.0;
  std::vector<double> cuts{-w, w};
  for (double e : edges)
    if (e > -w && e < w) cuts.push_back(e);
  std::sort(cuts.begin(), cuts.end());

  auto is_edge = [&](double e) {
    for (double x : edges)
      if (std::abs(e - x) < 1e-14 * std::max(1.0, std::abs(x))) return true;
    return false;
  };

  auto piecewise = [&](auto weight) {
    double total = 0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      double a = cuts[i], b = cuts[i + 1];
      if (b - a < 1e-300) continue;
      auto g = [&](double e) {
        double nl = bcs_dos(e - mu_l, delta_left);
        double nr = bcs_dos(e - mu_r, delta_right);
        if (nl == 0.0 || nr == 0.0) return 0.0;
        return nl * nr * (left.fermi(e) - right.fermi(e)) * weight(e);
      };
      total += integrate_edge(g, a, b, is_edge(a), is_edge(b),
                              abs_tol / static_cast<double>(cuts.size()));
    }
    return total;
  };

  SisCurrents out;
  out.i_left = conductance * piecewise([](double) { return 1.0; });
  out.q_left = conductance * piecewise([&](double e) { return e - mu_l; });
  return out;
}

JosephsonPoint josephson_photonic(int m, int n, double omega_hot, double omega_cold) {
  if (m < 1 || n < 1)
    throw domain_error("josephson_photonic: photon numbers must be >= 1");
  if (!(omega_hot > omega_cold) || omega_cold <= 0)
    throw domain_error("josephson_photonic: need Omega_h > Omega_c > 0");
  double gain = m * omega_hot - n * omega_cold;
  if (gain <= 0)
    throw regime_error("josephson_photonic: m Omega_h <= n Omega_c, no power");
  // 2eV = m Omega_h - n Omega_c with e = 1
  return {0.5 * gain, 1.0 - n * omega_cold / (m * omega_hot)};
}

}  // namespace qtherm
