#ifndef QTHERM_FLUCTUATIONS_HPP
#define QTHERM_FLUCTUATIONS_HPP

// Two-point-measurement statistics for stroke engines: work, heat, joint,
// and efficiency distributions; TUR and second-moment bound verifiers.
//
// Work and heat outcomes are recorded as system energy changes
// (W < 0 = extracted, matching the cycle module); efficiency atoms use the
// net extracted work, eta = -(W_in + W_out)/Q_h.

#include <vector>

#include <Eigen/Dense>

#include "qtherm/errors.hpp"

namespace qtherm {

/// Finite weighted set of real outcomes. Atoms with equal values are
/// merged (tolerance 1e-12 * value scale); probabilities sum to 1.
class OutcomeDistribution {
public:
  struct Atom {
    double value;
    double probability;
  };

  explicit OutcomeDistribution(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  double mean() const;
  double variance() const;
  double moment(int n) const;  // n-th raw moment

private:
  std::vector<Atom> atoms_;  // sorted by value
};

/// One stroke of a TPM protocol: spectra at the two measurement points
/// and the row-stochastic transition matrix between them.
struct StrokeProtocol {
  std::vector<double> initial_energies;
  std::vector<double> final_energies;
  Eigen::MatrixXd transition;  // transition(n, m) = P(n -> m)

  void validate() const;  // rows sum to 1 within 1e-12
  bool doubly_stochastic(double tol = 1e-12) const;
};

/// Unitary work stroke with no transitions (adiabatic idealization).
StrokeProtocol adiabatic_work_stroke(std::vector<double> initial,
                                     std::vector<double> final_energies);

/// Work stroke with an explicit doubly-stochastic transition matrix.
StrokeProtocol work_stroke(std::vector<double> initial,
                           std::vector<double> final_energies,
                           Eigen::MatrixXd transition);

/// Full-thermalization heat stroke at fixed spectrum: every row is the
/// Gibbs distribution at beta_final.
StrokeProtocol thermal_heat_stroke(std::vector<double> energies, double beta_final);

/// P(W): delta-weighted work outcomes of a stroke entered thermally.
OutcomeDistribution tpm_work_distribution(const StrokeProtocol& stroke, double beta);

/// P(Q | start level k): heat outcomes of a fixed-spectrum stroke given the
/// post-measurement start level.
OutcomeDistribution conditional_heat_distribution(const StrokeProtocol& stroke,
                                                  int start_level);

/// Chain-rule joint over (W_in, Q_h, W_out) trajectories.
struct CycleJointDistribution {
  struct Atom {
    double probability;
    double w_in;
    double q_h;
    double w_out;
  };
  std::vector<Atom> atoms;

  double mean_total_work() const;  // <W_in + W_out>
  double mean_heat() const;        // <Q_h>
  double var_total_work() const;
  double var_heat() const;
};

/// Enumerates P(W_in)P(Q_h|W_in)P(W_out|Q_h,W_in) for chained strokes;
/// the initial state is thermal at beta0 on work_in's initial spectrum.
/// Refuses joints beyond 10^6 atoms.
CycleJointDistribution cycle_joint_distribution(const StrokeProtocol& work_in,
                                                const StrokeProtocol& heat,
                                                const StrokeProtocol& work_out,
                                                double beta0);

struct EfficiencyDistribution {
  OutcomeDistribution distribution;  // atoms at eta = -(W_in + W_out)/Q_h
  double excluded_mass;              // total probability of Q_h = 0 atoms
};

/// P(eta) over trajectories with Q_h != 0; the Q_h = 0 mass is excluded
/// and reported separately. All mass at Q_h = 0 is an error.
EfficiencyDistribution efficiency_distribution(const CycleJointDistribution& joint);

struct TurReport {
  double lhs;  // Var(j)/<j>^2
  double rhs;  // 2/sigma
  bool satisfied;
};

/// Var(j)/<j>^2 >= 2/sigma (k_B = 1).
TurReport tur_check(double mean_current, double var_current,
                    double entropy_production);

struct Eta2Report {
  double eta_sq;     // squared mean efficiency
  double ratio;      // Var(W)/Var(Q_in)
  double eta_c_sq;   // squared Carnot efficiency
  bool within_bounds;
  bool regime_warning;  // dimensionless gradient above 0.1
};

/// Linear-response bound eta^2 <= Var(W)/Var(Q_in) <= eta_C^2 evaluated on
/// a cycle joint; reported, never asserted.
Eta2Report eta2_bound_check(const CycleJointDistribution& joint, double t_hot,
                            double t_cold);

}  // namespace qtherm

#endif
