#ifndef QTHERM_THERMOELECTRIC_HPP
#define QTHERM_THERMOELECTRIC_HPP

// Steady-state transport: Landauer-Buttiker currents, linear-response
// Onsager coefficients and figures of merit, sequential-tunneling rate
// equations, the Coulomb-coupled energy harvester, SIS junction currents,
// and photonic Josephson formulas.
//
// Reduced units e = h = k_B = 1 throughout; single transport mode
// (tau(E) <= 1). Current signs: J > 0 means particles leaving the left
// lead (charge current equals particle current with e = 1).

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qtherm/errors.hpp"
#include "qtherm/quad.hpp"

namespace qtherm {

struct LeadSpec {
  double beta;
  double mu;

  double fermi(double energy) const;
  double temperature() const { return 1.0 / beta; }
};

struct ConstantTransmission {
  double tau0 = 1.0;
};
struct BoxcarTransmission {
  double center = 0.0;
  double width = 1.0;
  double height = 1.0;
};
struct LorentzianTransmission {
  double center = 0.0;
  double gamma = 0.1;  // full width at half maximum
  double peak = 1.0;
};
struct TabulatedTransmission {
  std::vector<double> energy;
  std::vector<double> tau;  // linear interpolation, 0 outside the grid
};

using TransmissionFunction = std::variant<ConstantTransmission, BoxcarTransmission,
                                          LorentzianTransmission, TabulatedTransmission>;

double transmission_value(const TransmissionFunction& t, double energy);

struct LandauerCurrents {
  double j_e;      // charge current out of the left lead
  double j_u_left; // energy current out of the left lead
  double j_h_left; // heat current out of the left lead
  double j_h_right;
  double p_gen;    // generated power -sum_i mu_i J_e,i
};

/// Two-terminal single-mode Landauer-Buttiker currents.
LandauerCurrents landauer_currents(const TransmissionFunction& tau, const LeadSpec& left,
                                   const LeadSpec& right,
                                   double abs_tol = kQuadDefaultTol);

/// 2x2 Onsager matrix at reference (T, mu) from the windowed integrals
/// I^(n) = Int dE (E-mu)^n tau(E) (-df/dE):
///   L_ee = T I0, L_eh = L_he = T I1, L_hh = T I2.
Eigen::Matrix2d onsager_matrix(const TransmissionFunction& tau, double temperature,
                               double mu, double abs_tol = kQuadDefaultTol);

struct TransportCoefficients {
  double conductance;       // G = L_ee / T
  double thermal_conductance;  // K = det L / (T^2 L_ee)
  double seebeck;           // S = L_eh / (T L_ee)
  double peltier;           // Pi = L_he / L_ee = T S
};

TransportCoefficients transport_coefficients(const Eigen::Matrix2d& onsager,
                                             double temperature);

struct FigureOfMerit {
  double zt;
  double eta_max_over_carnot;  // (sqrt(ZT+1)-1)/(sqrt(ZT+1)+1)
};

FigureOfMerit figure_of_merit(double conductance, double thermal_conductance,
                              double seebeck, double temperature);

/// Classical master equation for sequential tunneling through a dot.
/// rates[i](k, l) is the lead-i tunneling rate l -> k.
struct RateModel {
  std::vector<double> energies;     // dot state energies
  std::vector<int> occupations;     // electrons in each dot state
  std::vector<LeadSpec> leads;
  std::vector<Eigen::MatrixXd> rates;  // one matrix per lead

  void validate() const;
  int num_states() const { return static_cast<int>(energies.size()); }
};

/// Spinless single level tunnel-coupled to two leads; g_i are the bare
/// tunneling rates, filled with Fermi factors at the level energy.
RateModel single_level_rate_model(double level, double g_left, double g_right,
                                  const LeadSpec& left, const LeadSpec& right);

struct RateSteadyState {
  Eigen::VectorXd occupations;     // state probabilities
  std::vector<double> j_particle;  // per lead, particles leaving the lead
  std::vector<double> j_heat;      // per lead, heat leaving the lead
};

/// Null-space steady state of the rate equation (same solver contract as
/// the Lindblad layer; a degenerate null space is an error).
RateSteadyState rate_steady_state(const RateModel& m);

/// Coulomb-coupled harvester: stationary conductor current
/// I = -(GL1 GR0 - GL0 GR1) / ((GL0+GR0)(GL1+GR1)) * J_g/E_C  (e = 1),
/// with G_{j,n} the summed tunnel rates at gate occupation n.
double harvester_current(double gamma_l0, double gamma_l1, double gamma_r0,
                         double gamma_r1, double j_gate, double e_charging);

struct HarvesterPerformance {
  double eta;     // e dV / E_C
  double v_stop;  // E_C eta_C
};

/// Efficiency grows linearly in the bias up to the stopping potential,
/// where it reaches eta_C = 1 - T_w/T_g.
HarvesterPerformance harvester_performance(double bias, double e_charging,
                                           double t_gate, double t_wire);

struct SisCurrents {
  double i_left;  // particle current leaving the left superconductor
  double q_left;  // heat current leaving the left superconductor
};

/// SIS quasiparticle currents with BCS densities of states
/// N(E) = theta(|E|-Delta) |E|/sqrt(E^2-Delta^2); bias enters as
/// mu_L = +V/2, mu_R = -V/2. Gap edges are integrated with the
/// E = Delta cosh(u) substitution.
SisCurrents sis_currents(double delta_left, double delta_right, double bias,
                         double t_left, double t_right, double conductance,
                         double abs_tol = kQuadDefaultTol);

struct JosephsonPoint {
  double v_resonance;  // 2eV = m Omega_h - n Omega_c with e = 1
  double eta;          // 1 - n Omega_c / (m Omega_h)
};

/// Photonic Josephson engine resonance and single-pair efficiency.
JosephsonPoint josephson_photonic(int m, int n, double omega_hot, double omega_cold);

}  // namespace qtherm

#endif
