#include "qtherm/fluctuations.hpp"

#include <algorithm>
#include <cmath>

namespace qtherm {

OutcomeDistribution::OutcomeDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw domain_error("OutcomeDistribution: no atoms");
  double scale = 0;
  for (const auto& a : atoms_) {
    if (a.probability < -1e-15)
      throw domain_error("OutcomeDistribution: negative probability");
    scale = std::max(scale, std::abs(a.value));
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  // merge equal outcomes
  std::vector<Atom> merged;
  const double tol = 1e-12 * std::max(scale, 1e-300);
  for (const auto& a : atoms_) {
    if (!merged.empty() && a.value - merged.back().value <= tol) {
      double p = merged.back().probability + a.probability;
      merged.back().value =
          (merged.back().value * merged.back().probability + a.value * a.probability) /
          (p > 0 ? p : 1.0);
      merged.back().probability = p;
    } else {
      merged.push_back(a);
    }
  }
  atoms_ = std::move(merged);
  double total = 0;
  for (const auto& a : atoms_) total += a.probability;
  if (std::abs(total - 1.0) > 1e-12)
    throw domain_error("OutcomeDistribution: probabilities sum to " +
                       std::to_string(total));
}

double OutcomeDistribution::mean() const {
  double m = 0;
  for (const auto& a : atoms_) m += a.value * a.probability;
  return m;
}

double OutcomeDistribution::variance() const {
  double m = mean(), v = 0;
  for (const auto& a : atoms_) v += (a.value - m) * (a.value - m) * a.probability;
  return v;
}

double OutcomeDistribution::moment(int n) const {
  if (n < 0) throw domain_error("OutcomeDistribution::moment: n must be >= 0");
  double m = 0;
  for (const auto& a : atoms_) m += std::pow(a.value, n) * a.probability;
  return m;
}

void StrokeProtocol::validate() const {
  const auto n = static_cast<Eigen::Index>(initial_energies.size());
  const auto m = static_cast<Eigen::Index>(final_energies.size());
  if (n == 0 || m == 0) throw domain_error("StrokeProtocol: empty spectrum");
  if (transition.rows() != n || transition.cols() != m)
    throw dimension_error("StrokeProtocol: transition matrix shape mismatch");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (transition.row(i).minCoeff() < -1e-15)
      throw domain_error("StrokeProtocol: negative transition probability");
    if (std::abs(transition.row(i).sum() - 1.0) > 1e-12)
      throw domain_error("StrokeProtocol: row " + std::to_string(i) +
                         " does not sum to 1");
  }
}

bool StrokeProtocol::doubly_stochastic(double tol) const {
  if (transition.rows() != transition.cols()) return false;
  for (Eigen::Index j = 0; j < transition.cols(); ++j)
    if (std::abs(transition.col(j).sum() - 1.0) > tol) return false;
  return true;
}

StrokeProtocol adiabatic_work_stroke(std::vector<double> initial,
                                     std::vector<double> final_energies) {
  if (initial.size() != final_energies.size())
    throw dimension_error("adiabatic_work_stroke: spectra sizes differ");
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(
      static_cast<Eigen::Index>(initial.size()), static_cast<Eigen::Index>(initial.size()));
  return {std::move(initial), std::move(final_energies), std::move(id)};
}

StrokeProtocol work_stroke(std::vector<double> initial,
                           std::vector<double> final_energies,
                           Eigen::MatrixXd transition) {
  StrokeProtocol s{std::move(initial), std::move(final_energies), std::move(transition)};
  s.validate();
  if (!s.doubly_stochastic())
    throw domain_error("work_stroke: transition matrix must be doubly stochastic");
  return s;
}

StrokeProtocol thermal_heat_stroke(std::vector<double> energies, double beta_final) {
  const auto n = static_cast<Eigen::Index>(energies.size());
  if (n == 0) throw domain_error("thermal_heat_stroke: empty spectrum");
  double emin = *std::min_element(energies.begin(), energies.end());
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i)
    w(i) = std::exp(-beta_final * (energies[static_cast<size_t>(i)] - emin));
  w /= w.sum();
  Eigen::MatrixXd t(n, n);
  for (Eigen::Index i = 0; i < n; ++i) t.row(i) = w.transpose();
  return {energies, energies, std::move(t)};
}

namespace {

Eigen::VectorXd thermal_weights(const std::vector<double>& energies, double beta) {
  const auto n = static_cast<Eigen::Index>(energies.size());
  double emin = *std::min_element(energies.begin(), energies.end());
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i)
    w(i) = std::exp(-beta * (energies[static_cast<size_t>(i)] - emin));
  return w / w.sum();
}

}  // namespace

OutcomeDistribution tpm_work_distribution(const StrokeProtocol& stroke, double beta) {
  stroke.validate();
  Eigen::VectorXd p0 = thermal_weights(stroke.initial_energies, beta);
  std::vector<OutcomeDistribution::Atom> atoms;
  for (Eigen::Index n = 0; n < p0.size(); ++n)
    for (Eigen::Index m = 0; m < stroke.transition.cols(); ++m)
      atoms.push_back({stroke.final_energies[static_cast<size_t>(m)] -
                           stroke.initial_energies[static_cast<size_t>(n)],
                       p0(n) * stroke.transition(n, m)});
  return OutcomeDistribution(std::move(atoms));
}

OutcomeDistribution conditional_heat_distribution(const StrokeProtocol& stroke,
                                                  int start_level) {
  stroke.validate();
  if (stroke.initial_energies != stroke.final_energies)
    throw domain_error(
        "conditional_heat_distribution: heat stroke must keep the spectrum fixed");
  if (start_level < 0 || start_level >= stroke.transition.rows())
    throw dimension_error("conditional_heat_distribution: start level out of range");
  std::vector<OutcomeDistribution::Atom> atoms;
  for (Eigen::Index l = 0; l < stroke.transition.cols(); ++l)
    atoms.push_back({stroke.final_energies[static_cast<size_t>(l)] -
                         stroke.initial_energies[static_cast<size_t>(start_level)],
                     stroke.transition(start_level, l)});
  return OutcomeDistribution(std::move(atoms));
}

double CycleJointDistribution::mean_total_work() const {
  double m = 0;
  for (const auto& a : atoms) m += (a.w_in + a.w_out) * a.probability;
  return m;
}

double CycleJointDistribution::mean_heat() const {
  double m = 0;
  for (const auto& a : atoms) m += a.q_h * a.probability;
  return m;
}

double CycleJointDistribution::var_total_work() const {
  double m = mean_total_work(), v = 0;
  for (const auto& a : atoms) {
    double w = a.w_in + a.w_out;
    v += (w - m) * (w - m) * a.probability;
  }
  return v;
}

double CycleJointDistribution::var_heat() const {
  double m = mean_heat(), v = 0;
  for (const auto& a : atoms) v += (a.q_h - m) * (a.q_h - m) * a.probability;
  return v;
}

CycleJointDistribution cycle_joint_distribution(const StrokeProtocol& work_in,
                                                const StrokeProtocol& heat,
                                                const StrokeProtocol& work_out,
                                                double beta0) {
  work_in.validate();
  heat.validate();
  work_out.validate();
  if (work_in.final_energies != heat.initial_energies ||
      heat.final_energies != work_out.initial_energies)
    throw dimension_error("cycle_joint_distribution: stroke spectra do not chain");

  const auto n0 = static_cast<size_t>(work_in.transition.rows());
  const auto n1 = static_cast<size_t>(work_in.transition.cols());
  const auto n2 = static_cast<size_t>(heat.transition.cols());
  const auto n3 = static_cast<size_t>(work_out.transition.cols());
  if (n0 * n1 * n2 * n3 > 1000000)
    throw size_error("cycle_joint_distribution: more than 1e6 trajectory atoms");

  Eigen::VectorXd p0 = thermal_weights(work_in.initial_energies, beta0);
  CycleJointDistribution joint;
  joint.atoms.reserve(n0 * n1 * n2 * n3);
  for (size_t n = 0; n < n0; ++n)
    for (size_t m = 0; m < n1; ++m)
      for (size_t k = 0; k < n2; ++k)
        for (size_t l = 0; l < n3; ++l) {
          double p = p0(static_cast<Eigen::Index>(n)) *
                     work_in.transition(static_cast<Eigen::Index>(n),
                                        static_cast<Eigen::Index>(m)) *
                     heat.transition(static_cast<Eigen::Index>(m),
                                     static_cast<Eigen::Index>(k)) *
                     work_out.transition(static_cast<Eigen::Index>(k),
                                         static_cast<Eigen::Index>(l));
          joint.atoms.push_back(
              {p, work_in.final_energies[m] - work_in.initial_energies[n],
               heat.final_energies[k] - heat.initial_energies[m],
               work_out.final_energies[l] - work_out.initial_energies[k]});
        }
  return joint;
}

EfficiencyDistribution efficiency_distribution(const CycleJointDistribution& joint) {
  double qscale = 0;
  for (const auto& a : joint.atoms) qscale = std::max(qscale, std::abs(a.q_h));
  const double qtol = 1e-12 * std::max(qscale, 1e-300);

  std::vector<OutcomeDistribution::Atom> atoms;
  double excluded = 0, kept = 0;
  for (const auto& a : joint.atoms) {
    if (std::abs(a.q_h) <= qtol) {
      excluded += a.probability;
    } else {
      atoms.push_back({-(a.w_in + a.w_out) / a.q_h, a.probability});
      kept += a.probability;
    }
  }
  if (kept <= 0)
    throw regime_error("efficiency_distribution: all mass at Q_h = 0");
  for (auto& a : atoms) a.probability /= kept;  // conditional on Q_h != 0
  return {OutcomeDistribution(std::move(atoms)), excluded};
}

TurReport tur_check(double mean_current, double var_current,
                    double entropy_production) {
  if (entropy_production <= 0)
    throw domain_error("tur_check: entropy production must be > 0");
  if (mean_current == 0) throw domain_error("tur_check: mean current must be nonzero");
  if (var_current < 0) throw domain_error("tur_check: variance must be >= 0");
  TurReport r;
  r.lhs = var_current / (mean_current * mean_current);
  r.rhs = 2.0 / entropy_production;
  r.satisfied = r.lhs >= r.rhs - 1e-12 * std::max(1.0, std::abs(r.rhs));
  return r;
}

Eta2Report eta2_bound_check(const CycleJointDistribution& joint, double t_hot,
                            double t_cold) {
  if (t_hot <= 0 || t_cold <= 0 || t_hot <= t_cold)
    throw domain_error("eta2_bound_check: need T_h > T_c > 0");
  double var_q = joint.var_heat();
  if (var_q == 0) throw domain_error("eta2_bound_check: Var(Q_in) = 0");
  double mean_q = joint.mean_heat();
  if (mean_q == 0) throw domain_error("eta2_bound_check: <Q_in> = 0");

  Eta2Report r;
  double eta = -joint.mean_total_work() / mean_q;
  double eta_c = 1.0 - t_cold / t_hot;
  r.eta_sq = eta * eta;
  r.ratio = joint.var_total_work() / var_q;
  r.eta_c_sq = eta_c * eta_c;
  double tol = 1e-12 * std::max({r.eta_sq, r.ratio, r.eta_c_sq, 1e-300});
  r.within_bounds = (r.eta_sq <= r.ratio + tol) && (r.ratio <= r.eta_c_sq + tol);
  r.regime_warning = eta_c > 0.1;
  return r;
}

}  // namespace qtherm
