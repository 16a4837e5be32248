#include "qtherm/lindblad.hpp"

#include <cmath>

namespace qtherm {

void ThermalDissipator::validate() const {
  if (gamma < 0) throw domain_error("ThermalDissipator: gamma must be >= 0");
  if (omega <= 0) throw domain_error("ThermalDissipator: omega must be > 0");
  if (!std::isfinite(beta)) throw domain_error("ThermalDissipator: beta must be finite");
}

double ThermalDissipator::upward_rate() const { return gamma * std::exp(-beta * omega); }

void LiouvillianModel::validate() const {
  for (const auto& d : dissipators) {
    d.validate();
    if (d.jump.dim() != hamiltonian.dim())
      throw dimension_error("LiouvillianModel: dissipator dimension mismatch");
  }
  if (!hamiltonian.hermitian())
    throw domain_error("LiouvillianModel: Hamiltonian not hermitian");
}

Matrix apply_dissipator(const ThermalDissipator& d, const Matrix& rho) {
  if (d.jump.dim() != rho.rows())
    throw dimension_error("apply_dissipator: dimension mismatch");
  const Matrix& a = d.jump.mat();
  Matrix ad = a.adjoint();
  Matrix ada = ad * a;
  Matrix aad = a * ad;
  double up = d.upward_rate();
  Matrix out = d.gamma * (a * rho * ad - 0.5 * (ada * rho + rho * ada)) +
               up * (ad * rho * a - 0.5 * (aad * rho + rho * aad));
  return out;
}

Operator apply_dissipator(const ThermalDissipator& d, const DensityMatrix& rho) {
  return Operator(apply_dissipator(d, rho.mat()));
}

Operator adjoint_dissipator(const ThermalDissipator& d, const Operator& obs) {
  if (d.jump.dim() != obs.dim())
    throw dimension_error("adjoint_dissipator: dimension mismatch");
  const Matrix& a = d.jump.mat();
  const Matrix& o = obs.mat();
  Matrix ad = a.adjoint();
  Matrix ada = ad * a;
  Matrix aad = a * ad;
  double up = d.upward_rate();
  Matrix out = d.gamma * (ad * o * a - 0.5 * (ada * o + o * ada)) +
               up * (a * o * ad - 0.5 * (aad * o + o * aad));
  return Operator(std::move(out));
}

Matrix liouvillian_apply(const LiouvillianModel& m, const Matrix& rho) {
  const Matrix& h = m.hamiltonian.mat();
  Matrix out = Complex(0, -1) * (h * rho - rho * h);
  for (const auto& d : m.dissipators) out += apply_dissipator(d, rho);
  return out;
}

Matrix liouvillian_matrix(const LiouvillianModel& m) {
  // vec(A rho B) = (B^T (x) A) vec(rho), columns stacked
  const int n = m.dim();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix& h = m.hamiltonian.mat();
  Matrix L = Complex(0, -1) * (tensor_product(id, h) - tensor_product(h.transpose(), id));
  auto add_channel = [&](const Matrix& op, double rate) {
    Matrix oo = op.adjoint() * op;
    L += rate * (tensor_product(op.conjugate(), op) -
                 0.5 * (tensor_product(id, oo) + tensor_product(oo.transpose(), id)));
  };
  for (const auto& d : m.dissipators) {
    add_channel(d.jump.mat(), d.gamma);
    add_channel(d.jump.mat().adjoint(), d.upward_rate());
  }
  return L;
}

Propagation propagate(const LiouvillianModel& m, const DensityMatrix& rho0,
                      double t, double dt) {
  m.validate();
  if (dt <= 0) throw domain_error("propagate: dt must be > 0");
  if (t < 0) throw domain_error("propagate: t must be >= 0");
  if (rho0.dim() != m.dim()) throw dimension_error("propagate: dimension mismatch");

  Matrix rho = rho0.mat();
  long nsteps = static_cast<long>(std::ceil(t / dt - 1e-12));
  double remaining = t;
  for (long i = 0; i < nsteps; ++i) {
    double h = std::min(dt, remaining);
    Matrix k1 = liouvillian_apply(m, rho);
    Matrix k2 = liouvillian_apply(m, rho + 0.5 * h * k1);
    Matrix k3 = liouvillian_apply(m, rho + 0.5 * h * k2);
    Matrix k4 = liouvillian_apply(m, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    remaining -= h;
  }

  double drift = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  if (drift > 1e-6)
    throw accuracy_error("propagate: trace drift " + std::to_string(drift) +
                             " above 1e-6; reduce dt",
                         drift);
  rho = (0.5 * (rho + rho.adjoint().eval())).eval();
  rho /= rho.trace().real();
  return {DensityMatrix(std::move(rho)), drift};
}

DensityMatrix steady_state(const LiouvillianModel& m) {
  m.validate();
  const int n = m.dim();
  Matrix L = liouvillian_matrix(m);
  Eigen::JacobiSVD<Matrix> svd(L, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  double tol = std::max(smax, 1.0) * 1e-12 * n;
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= tol) ++null_dim;
  if (null_dim != 1)
    throw degenerate_steady_state_error(
        "steady_state: null space dimension " + std::to_string(null_dim) +
            " (expected 1)",
        null_dim);

  Vector v = svd.matrixV().col(static_cast<int>(sv.size()) - 1);
  Matrix rho(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rho(i, j) = v(j * n + i);
  rho = (0.5 * (rho + rho.adjoint().eval())).eval();
  double tr = rho.trace().real();
  if (std::abs(tr) < 1e-14)
    throw degenerate_steady_state_error("steady_state: traceless null vector", 1);
  rho /= tr;

  // clip eigenvalue dust from the SVD so the state validates
  auto es = eigh(rho);
  Eigen::VectorXd vals = es.values.cwiseMax(0.0);
  vals /= vals.sum();
  rho = es.vectors * vals.asDiagonal() * es.vectors.adjoint();
  rho = (0.5 * (rho + rho.adjoint().eval())).eval();

  double residual = liouvillian_apply(m, rho).cwiseAbs().maxCoeff();
  if (residual > 1e-10)
    throw accuracy_error("steady_state: residual above 1e-10", residual);
  return DensityMatrix(std::move(rho));
}

double heat_current(const LiouvillianModel& m, const ThermalDissipator& d,
                    const DensityMatrix& rho) {
  return expectation(rho, adjoint_dissipator(d, m.hamiltonian)).real();
}

double spohn_entropy_production(const LiouvillianModel& m, const DensityMatrix& rho) {
  // dS/dt = -tr[L(rho) ln rho]; log on the support only
  Matrix lrho = liouvillian_apply(m, rho.mat());
  auto es = eigh(rho.mat());
  double ds_dt = 0;
  for (int i = 0; i < rho.dim(); ++i) {
    double p = es.values(i);
    if (p > 1e-14) {
      Vector v = es.vectors.col(i);
      ds_dt -= std::log(p) * (v.adjoint() * lrho * v)(0, 0).real();
    }
  }
  double flux = 0;
  for (const auto& d : m.dissipators) flux += d.beta * heat_current(m, d, rho);
  return ds_dt - flux;
}

EntropyProduction global_entropy_production(const Operator& u,
                                            const DensityMatrix& rho_s,
                                            const DensityMatrix& rho_e) {
  const int ds = rho_s.dim(), de = rho_e.dim();
  if (u.dim() != ds * de)
    throw dimension_error("global_entropy_production: U must act on S (x) E");
  Matrix uu = u.mat() * u.mat().adjoint();
  if ((uu - Matrix::Identity(u.dim(), u.dim())).cwiseAbs().maxCoeff() > 1e-10)
    throw domain_error("global_entropy_production: U not unitary");

  DensityMatrix joint = tensor_product(rho_s, rho_e);
  Matrix evolved = u.mat() * joint.mat() * u.mat().adjoint();
  evolved = (0.5 * (evolved + evolved.adjoint().eval())).eval();
  DensityMatrix joint_t(std::move(evolved));

  HilbertFactorization fact{{ds, de}};
  DensityMatrix rho_s_t = partial_trace(joint_t, fact, {0});
  DensityMatrix rho_e_t = partial_trace(joint_t, fact, {1});

  double dS_s = von_neumann_entropy(rho_s_t) - von_neumann_entropy(rho_s);
  double dS_e = von_neumann_entropy(rho_e_t) - von_neumann_entropy(rho_e);
  double phi = dS_e + relative_entropy(rho_e_t, rho_e);
  return {dS_s + phi, phi};
}

}  // namespace qtherm
