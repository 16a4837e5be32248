#include "qtherm/information.hpp"

#include <cmath>

namespace qtherm {

Bits binary_entropy(double p) {
  if (p < 0 || p > 1) throw domain_error("binary_entropy: p must be in [0,1]");
  if (p == 0 || p == 1) return {0.0};
  return {-p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p)};
}

double szilard_work(double temperature) {
  if (temperature <= 0) throw domain_error("szilard_work: T must be > 0");
  return temperature * M_LN2;
}

double erasure_work(double p, double temperature) {
  return szilard_work(temperature) * binary_entropy(p).value;
}

double conditional_erasure_work(const DensityMatrix& rho_sq,
                                const HilbertFactorization& fact,
                                double temperature) {
  if (fact.dims.size() != 2)
    throw dimension_error("conditional_erasure_work: need a bipartite factorization");
  fact.check_against(rho_sq.dim());
  if (temperature <= 0)
    throw domain_error("conditional_erasure_work: T must be > 0");
  DensityMatrix rho_q = partial_trace(rho_sq, fact, {1});
  double cond_nats = von_neumann_entropy(rho_sq) - von_neumann_entropy(rho_q);
  return temperature * cond_nats;  // T ln2 * H(S|Q)_bits = T * H(S|Q)_nats
}

SagawaUedaReport sagawa_ueda_gap(double mean_work, double mean_free_energy_change,
                                 Nats mean_information, double temperature) {
  if (mean_information.value < 0)
    throw domain_error("sagawa_ueda_gap: mean information must be >= 0");
  if (temperature <= 0) throw domain_error("sagawa_ueda_gap: T must be > 0");
  double slack =
      mean_work - mean_free_energy_change + temperature * mean_information.value;
  return {slack, slack >= -1e-12};
}

void MeasurementRecord::validate() const {
  const auto n = static_cast<Eigen::Index>(outcome_probs.size());
  if (n == 0) throw domain_error("MeasurementRecord: no outcomes");
  double sum = 0;
  for (double p : outcome_probs) {
    if (p < 0) throw domain_error("MeasurementRecord: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw domain_error("MeasurementRecord: outcome probabilities not normalized");
  if (action_given_outcome.rows() != n)
    throw dimension_error("MeasurementRecord: one action row per outcome");
  for (Eigen::Index m = 0; m < n; ++m) {
    if (action_given_outcome.row(m).minCoeff() < 0)
      throw domain_error("MeasurementRecord: negative conditional probability");
    if (std::abs(action_given_outcome.row(m).sum() - 1.0) > 1e-12)
      throw domain_error("MeasurementRecord: conditional row not normalized");
  }
}

Nats MeasurementRecord::mean_information() const {
  validate();
  double info = 0;
  for (Eigen::Index m = 0; m < action_given_outcome.rows(); ++m) {
    double pm = outcome_probs[static_cast<size_t>(m)];
    if (pm == 0) continue;
    for (Eigen::Index k = 0; k < action_given_outcome.cols(); ++k) {
      double pkm = action_given_outcome(m, k);
      if (pkm > 0) info += pm * pkm * std::log(pkm / pm);
    }
  }
  return {info};
}

SteeringBound steering_work_bound(double beta) {
  if (!std::isfinite(beta)) throw domain_error("steering_work_bound: beta must be finite");
  double e = std::exp(-beta);
  double eta = (e - 1.0) / (e + 1.0);
  double root = std::sqrt(1.0 - eta * eta);
  SteeringBound b;
  b.w_classical_bound =
      (eta * (root + eta + 1.0) + std::sqrt(2.0 - 2.0 * eta * eta)) /
      (2.0 * (root + 1.0));
  b.w_optimal = 0.5 * (1.0 + eta);
  b.quantum_advantage = b.w_optimal > b.w_classical_bound;
  return b;
}

MeasurementEngineEnergetics measurement_engine_energetics(double g, double delta) {
  if (delta <= 0)
    throw domain_error("measurement_engine_energetics: delta must be > 0");
  if (g < 0) throw domain_error("measurement_engine_energetics: g must be >= 0");
  MeasurementEngineEnergetics e;
  e.theta = std::atan(g / delta);
  double s2 = std::sin(e.theta) * std::sin(e.theta);
  e.e_m = delta * s2;
  e.s_m = binary_entropy(s2);
  e.work = delta;
  return e;
}

}  // namespace qtherm
