#include "qtherm/cycles.hpp"

#include <cmath>
#include <limits>

namespace qtherm {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

CycleResult classify(double q_hot, double q_cold) {
  CycleResult r;
  r.q_hot = q_hot;
  r.q_cold = q_cold;
  r.work = -(q_hot + q_cold);
  r.eta = kNaN;
  r.cop = kNaN;
  if (r.work < 0 && q_hot > 0) {
    r.mode = CycleMode::engine;
    r.eta = -r.work / q_hot;
  } else if (r.work > 0 && q_cold > 0) {
    r.mode = CycleMode::refrigerator;
    r.cop = q_cold / r.work;
  } else {
    r.mode = CycleMode::heater;
  }
  return r;
}

}  // namespace

Operator lmg_hamiltonian(double j, double gamma_anisotropy, double h) {
  Operator sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), id = Operator::identity(2);
  Operator hxx = tensor_product(sx, sx);
  Operator hyy = tensor_product(sy, sy);
  Operator hz = tensor_product(sz, id) + tensor_product(id, sz);
  Operator shift = Operator::identity(4);
  return (-j / 4.0) * (hxx + gamma_anisotropy * hyy) + (-h / 2.0) * hz +
         (-j * (1.0 + gamma_anisotropy) / 4.0) * shift;
}

CycleResult otto_quasistatic_tls(double gap_cold, double gap_hot, double t_hot,
                                 double t_cold) {
  if (gap_cold <= 0 || gap_hot <= 0 || t_hot <= 0 || t_cold <= 0)
    throw domain_error("otto_quasistatic_tls: gaps and temperatures must be > 0");
  double n_h = 1.0 / (1.0 + std::exp(gap_hot / t_hot));
  double n_c = 1.0 / (1.0 + std::exp(gap_cold / t_cold));
  double q_hot = gap_hot * (n_h - n_c);
  double q_cold = gap_cold * (n_c - n_h);
  CycleResult r = classify(q_hot, q_cold);
  if (r.mode == CycleMode::engine) r.eta = 1.0 - gap_cold / gap_hot;
  return r;
}

CycleResult otto_quasistatic_ho(double omega_cold, double omega_hot, double t_hot,
                                double t_cold) {
  if (omega_cold <= 0 || omega_hot <= 0 || t_hot <= 0 || t_cold <= 0)
    throw domain_error("otto_quasistatic_ho: frequencies and temperatures must be > 0");
  double n_h = 1.0 / std::expm1(omega_hot / t_hot);
  double n_c = 1.0 / std::expm1(omega_cold / t_cold);
  double q_hot = omega_hot * (n_h - n_c);
  double q_cold = omega_cold * (n_c - n_h);
  CycleResult r = classify(q_hot, q_cold);
  if (r.mode == CycleMode::engine) r.eta = 1.0 - omega_cold / omega_hot;
  return r;
}

CycleResult carnot_quasistatic_tls(double eps_a, double eps_b, double t_hot,
                                   double t_cold) {
  if (!(eps_a >= eps_b) || eps_b <= 0)
    throw domain_error("carnot_quasistatic_tls: need eps_A >= eps_B > 0");
  if (!(t_hot >= t_cold) || t_cold <= 0)
    throw domain_error("carnot_quasistatic_tls: need T_h >= T_c > 0");

  double beta_h = 1.0 / t_hot;
  // thermal entropy of levels (-eps, +eps): S = ln(2 cosh be) - be tanh(be)
  auto entropy = [&](double eps) {
    double x = beta_h * eps;
    return std::log(2.0 * std::cosh(x)) - x * std::tanh(x);
  };
  double delta_s_hot = entropy(eps_b) - entropy(eps_a);
  double q_hot = t_hot * delta_s_hot;
  double q_cold = -t_cold * delta_s_hot;
  CycleResult r = classify(q_hot, q_cold);
  if (r.mode == CycleMode::engine) r.eta = 1.0 - t_cold / t_hot;
  return r;
}

CycleResult generic_quasistatic_otto(const MediumBuilder& medium, double lambda_cold,
                                     double lambda_hot, double t_hot, double t_cold) {
  Operator h_cold = medium(lambda_cold);
  Operator h_hot = medium(lambda_hot);
  if (!h_cold.hermitian() || !h_hot.hermitian())
    throw domain_error("generic_quasistatic_otto: H(lambda) must be hermitian");
  if (h_cold.dim() != h_hot.dim())
    throw dimension_error("generic_quasistatic_otto: endpoint dimensions differ");
  const int n = h_cold.dim();

  auto ec = eigh(h_cold.mat());
  auto eh = eigh(h_hot.mat());

  // thermal populations in ascending eigenvalue order
  auto thermal_populations = [&](const Eigen::VectorXd& vals, double t) {
    double emin = vals.minCoeff();
    Eigen::VectorXd w = (-(vals.array() - emin) / t).exp();
    return (w / w.sum()).eval();
  };
  Eigen::VectorXd p_cold = thermal_populations(ec.values, t_cold);
  Eigen::VectorXd p_hot = thermal_populations(eh.values, t_hot);

  // adiabats carry populations level-by-level between sorted spectra
  double e_in_hot = (p_cold.array() * eh.values.array()).sum();
  double e_thermal_hot = (p_hot.array() * eh.values.array()).sum();
  double e_in_cold = (p_hot.array() * ec.values.array()).sum();
  double e_thermal_cold = (p_cold.array() * ec.values.array()).sum();

  double q_hot = e_thermal_hot - e_in_hot;
  double q_cold = e_thermal_cold - e_in_cold;

  CycleResult r = classify(q_hot, q_cold);
  if (r.mode == CycleMode::engine) r.eta = -r.work / q_hot;

  // scan the linear lambda path for near-crossings of adjacent levels
  constexpr int kSamples = 33;
  double scale = std::max(ec.values.cwiseAbs().maxCoeff(), eh.values.cwiseAbs().maxCoeff());
  for (int s = 0; s < kSamples && !r.crossing_warning; ++s) {
    double lam = lambda_cold + (lambda_hot - lambda_cold) * s / (kSamples - 1.0);
    auto es = eigh(medium(lam).mat());
    for (int i = 0; i + 1 < n; ++i)
      if (es.values(i + 1) - es.values(i) <= 1e-9 * std::max(scale, 1.0))
        r.crossing_warning = true;
  }
  return r;
}

double nonadiabatic_otto_efficiency(double omega1, double omega2, double e_a,
                                    double e_c, double qstar_ab, double qstar_cd) {
  if (!(omega2 > omega1) || omega1 <= 0)
    throw domain_error("nonadiabatic_otto_efficiency: need omega2 > omega1 > 0");
  if (qstar_ab < 1 || qstar_cd < 1)
    throw domain_error("nonadiabatic_otto_efficiency: Q* factors must be >= 1");
  double r = omega1 / omega2;
  double denom = r * e_c - qstar_ab * e_a;
  if (denom <= 0)
    throw regime_error("nonadiabatic_otto_efficiency: heat input <= 0, not an engine");
  double numer = qstar_cd * e_c - e_a / r;
  return 1.0 - r * numer / denom;
}

double kz_exponent(double nu, double z, double d) {
  if (nu <= 0 || z <= 0 || d <= 0)
    throw domain_error("kz_exponent: nu, z, d must be > 0");
  return nu * d / (nu * z + 1.0);
}

double hybrid_efficiency(const std::vector<double>& work_flows,
                         const std::vector<HeatFlow>& heat_flows, double t_ref) {
  if (t_ref <= 0) throw domain_error("hybrid_efficiency: t_ref must be > 0");
  double useful = 0, wasteful = 0, scale = 0;
  auto account = [&](double x) {
    scale = std::max(scale, std::abs(x));
    if (x > 0)
      useful += x;
    else
      wasteful += x;
  };
  for (double w : work_flows) account(w);
  for (const auto& h : heat_flows) {
    if (h.temperature <= 0) throw domain_error("hybrid_efficiency: T_i must be > 0");
    account(h.qdot * (t_ref / h.temperature - 1.0));
  }
  if (scale == 0) throw domain_error("hybrid_efficiency: no nonzero flows");
  // second law: total free-energy rate must not be positive
  if (useful + wasteful > 1e-12 * scale)
    throw domain_error("hybrid_efficiency: flows have positive free-energy rate");
  if (useful == 0) return 0.0;
  if (wasteful == 0)
    throw domain_error("hybrid_efficiency: all flows useful, ratio undefined");
  double eta = -useful / wasteful;
  return std::min(eta, 1.0);
}

}  // namespace qtherm
