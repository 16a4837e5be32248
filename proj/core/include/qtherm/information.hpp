#ifndef QTHERM_INFORMATION_HPP
#define QTHERM_INFORMATION_HPP

// Information-thermodynamics bounds and measurement-engine energetics:
// Szilard, Landauer erasure, conditional-entropy erasure, Sagawa-Ueda
// bound, steering work bound, two-qubit measurement engine.
//
// Entropies and informations carry explicit units; Bits and Nats are
// distinct types so mixing them does not compile.

#include <vector>

#include <Eigen/Dense>

#include "qtherm/hilbert.hpp"

namespace qtherm {

struct Bits {
  double value;
};
struct Nats {
  double value;
};

inline Nats to_nats(Bits b) { return {b.value * M_LN2}; }
inline Bits to_bits(Nats n) { return {n.value / M_LN2}; }

/// Binary Shannon entropy H(p) in bits, endpoint limits 0.
Bits binary_entropy(double p);

/// k_B T ln 2, the full-conversion work of one bit (k_B = 1).
double szilard_work(double temperature);

/// W_eras = k_B T ln2 H(p) <= szilard_work(T).
double erasure_work(double p, double temperature);

/// W_eras(S|Q) = T ln2 H(S|Q) with the conditional entropy
/// H(S|Q) = (S(rho_SQ) - S(rho_Q))/ln 2 in bits; negative for
/// entangled memories (work extraction).
double conditional_erasure_work(const DensityMatrix& rho_sq,
                                const HilbertFactorization& fact,
                                double temperature);

struct SagawaUedaReport {
  double slack;  // <W> - <dF> + k_B T <I>
  bool satisfied;
};

/// Feedback second law <W> - <dF> >= -k_B T <I> (information in nats).
SagawaUedaReport sagawa_ueda_gap(double mean_work, double mean_free_energy_change,
                                 Nats mean_information, double temperature);

/// Measurement outcome statistics with conditional feedback actions.
struct MeasurementRecord {
  std::vector<double> outcome_probs;          // p(m)
  Eigen::MatrixXd action_given_outcome;       // row m: p(k | m)

  void validate() const;
  /// mean of ln p(k|m)/p(m) over the joint p(m) p(k|m)
  Nats mean_information() const;
};

struct SteeringBound {
  double w_classical_bound;  // best local-hidden-state work
  double w_optimal;          // (1 + eta)/2 from the entangled strategy
  bool quantum_advantage;    // w_optimal > w_classical_bound
};

/// Work bounds of the steering Szilard engine at inverse temperature beta,
/// eta = (e^{-beta} - 1)/(e^{-beta} + 1). The advantage region is
/// reported, not asserted.
SteeringBound steering_work_bound(double beta);

struct MeasurementEngineEnergetics {
  double theta;      // arctan(g/delta)
  double e_m;        // delta sin^2(theta), energy supplied by measurement
  Bits s_m;          // binary entropy of sin^2(theta)
  double work;       // delta, extracted by the feedback pulse
};

/// Two-qubit entanglement-and-measurement engine energetics (hbar = 1).
MeasurementEngineEnergetics measurement_engine_energetics(double g, double delta);

}  // namespace qtherm

#endif
