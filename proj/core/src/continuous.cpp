#include "qtherm/continuous.hpp"

#include <cmath>

namespace qtherm {

void MaserSpec::validate() const {
  if (!(omega3 > omega2 && omega2 > omega1))
    throw domain_error("MaserSpec: need omega3 > omega2 > omega1");
  if (gamma_h < 0 || gamma_c < 0 || gamma_w < 0)
    throw domain_error("MaserSpec: rates must be >= 0");
  if (gamma_h == 0 && gamma_c == 0 && gamma_w == 0)
    throw domain_error("MaserSpec: all rates zero, no dynamics");
  if (t_hot <= 0 || t_cold <= 0) throw domain_error("MaserSpec: temperatures must be > 0");
}

std::array<double, 3> maser_steady_populations(const MaserSpec& spec) {
  spec.validate();
  const double a = std::exp(-spec.omega_h() / spec.t_hot);  // hot Boltzmann factor
  const double b = std::exp(-spec.omega_c() / spec.t_cold);
  const double gh = spec.gamma_h, gc = spec.gamma_c, gw = spec.gamma_w;

  // dp1/dt = gh p3 + gw p2 - (gw + a gh) p1 = 0
  // dp2/dt = gc p3 + gw p1 - (gw + b gc) p2 = 0
  // p1 + p2 + p3 = 1
  Eigen::Matrix3d m;
  m << -(gw + a * gh), gw, gh,
       gw, -(gw + b * gc), gc,
       1, 1, 1;
  Eigen::Vector3d rhs(0, 0, 1);
  Eigen::Vector3d p = m.fullPivLu().solve(rhs);
  return {p(0), p(1), p(2)};
}

MaserCurrents maser_steady_currents(const MaserSpec& spec) {
  auto p = maser_steady_populations(spec);
  const double a = std::exp(-spec.omega_h() / spec.t_hot);
  const double b = std::exp(-spec.omega_c() / spec.t_cold);
  MaserCurrents c;
  c.j_hot = spec.omega_h() * spec.gamma_h * (a * p[0] - p[2]);
  c.j_cold = spec.omega_c() * spec.gamma_c * (b * p[1] - p[2]);
  c.power = (spec.omega_c() - spec.omega_h()) * spec.gamma_w * (p[1] - p[0]);
  return c;
}

namespace {

Matrix level_projector_jump(int from, int to) {
  // |to><from| on the three-level space
  Matrix m = Matrix::Zero(3, 3);
  m(to, from) = 1;
  return m;
}

}  // namespace

LiouvillianModel maser_model(const MaserSpec& spec) {
  spec.validate();
  Operator h = Operator::diagonal({spec.omega1, spec.omega2, spec.omega3});
  std::vector<ThermalDissipator> diss;
  diss.push_back({Operator(level_projector_jump(2, 0)), spec.gamma_h,
                  1.0 / spec.t_hot, spec.omega_h()});
  diss.push_back({Operator(level_projector_jump(2, 1)), spec.gamma_c,
                  1.0 / spec.t_cold, spec.omega_c()});
  // work bath at infinite temperature: beta = 0, equal up/down rates
  diss.push_back({Operator(level_projector_jump(1, 0)), spec.gamma_w, 0.0,
                  spec.omega_w()});
  return {h, std::move(diss)};
}

MaserCurrents maser_lindblad_currents(const MaserSpec& spec) {
  LiouvillianModel m = maser_model(spec);
  DensityMatrix rho = steady_state(m);
  MaserCurrents c;
  c.j_hot = heat_current(m, m.dissipators[0], rho);
  c.j_cold = heat_current(m, m.dissipators[1], rho);
  c.power = heat_current(m, m.dissipators[2], rho);
  return c;
}

double maser_efficiency(const MaserSpec& spec) {
  spec.validate();
  if (!(spec.omega_c() / spec.omega_h() < spec.t_cold / spec.t_hot))
    throw regime_error(
        "maser_efficiency: no population inversion, not in the engine regime");
  MaserCurrents c = maser_steady_currents(spec);
  return -c.power / c.j_hot;
}

void QarSpec::validate() const {
  if (!(omega_h > omega_c && omega_c > 0))
    throw domain_error("QarSpec: need omega_h > omega_c > 0");
  if (g < 0 || gamma < 0) throw domain_error("QarSpec: couplings must be >= 0");
  if (t_hot <= 0 || t_cold <= 0 || t_work <= 0)
    throw domain_error("QarSpec: temperatures must be > 0");
}

double qar_virtual_temperature_inverse(const QarSpec& spec) {
  spec.validate();
  return (spec.omega_h / spec.t_hot - spec.omega_w() / spec.t_work) / spec.omega_c;
}

LiouvillianModel qar_model(const QarSpec& spec) {
  spec.validate();
  const Operator id = Operator::identity(2);
  const Operator sm = sigma_minus();
  const Operator sp = sigma_plus();
  const Operator num = sp * sm;

  auto embed3 = [&](const Operator& a, const Operator& b, const Operator& c) {
    return tensor_product(tensor_product(a, b), c);
  };

  // factors ordered (cold, hot, work)
  Operator h0 = spec.omega_c * embed3(num, id, id) +
                spec.omega_h * embed3(id, num, id) +
                spec.omega_w() * embed3(id, id, num);
  Operator hint = embed3(sm, sp, sm) + embed3(sp, sm, sp);
  Operator h = h0 + spec.g * hint;

  std::vector<ThermalDissipator> diss;
  diss.push_back({embed3(sm, id, id), spec.gamma, 1.0 / spec.t_cold, spec.omega_c});
  diss.push_back({embed3(id, sm, id), spec.gamma, 1.0 / spec.t_hot, spec.omega_h});
  diss.push_back({embed3(id, id, sm), spec.gamma, 1.0 / spec.t_work, spec.omega_w()});
  return {h, std::move(diss)};
}

QarCurrents qar_steady_cooling(const QarSpec& spec) {
  LiouvillianModel m = qar_model(spec);
  DensityMatrix rho = steady_state(m);
  QarCurrents c;
  c.j_cold = heat_current(m, m.dissipators[0], rho);
  c.j_hot = heat_current(m, m.dissipators[1], rho);
  c.j_work = heat_current(m, m.dissipators[2], rho);
  c.cooling = c.j_cold > 0;
  return c;
}

}  // namespace qtherm
