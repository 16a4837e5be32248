#include "qtherm/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "qtherm/continuous.hpp"
#include "qtherm/cycles.hpp"
#include "qtherm/fluctuations.hpp"
#include "qtherm/information.hpp"
#include "qtherm/nonthermal.hpp"
#include "qtherm/thermoelectric.hpp"

namespace qtherm {

namespace {

using Params = std::map<std::string, double>;
using RowFn = std::function<std::vector<double>(int)>;

double grid_point(double lo, double hi, int i, int n) {
  if (n == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

// evaluate rows in parallel, assemble in grid order
std::vector<std::vector<double>> sweep(int n, const RowFn& fn) {
  std::vector<std::vector<double>> rows(static_cast<size_t>(n));
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  std::vector<std::future<void>> futs;
  std::atomic<int> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&]() {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        rows[static_cast<size_t>(i)] = fn(i);
    }));
  }
  for (auto& f : futs) f.get();
  return rows;
}

struct ExperimentDef {
  std::string description;
  Params defaults;
  std::function<Dataset(const Params&)> generate;
};

int int_param(const Params& p, const std::string& key) {
  double v = p.at(key);
  int n = static_cast<int>(std::lround(v));
  if (n < 1 || std::abs(v - n) > 1e-9)
    throw domain_error("experiment: parameter " + key + " must be a positive integer");
  return n;
}

Dataset make(const std::string& id, const Params& p, std::vector<std::string> cols,
             std::vector<std::vector<double>> rows) {
  return {id, p, std::move(cols), std::move(rows)};
}

Dataset gen_otto_sweep(const Params& p) {
  int n = int_param(p, "points");
  double lo = p.at("omega_h_min"), hi = p.at("omega_h_max");
  double wc = p.at("omega_c"), th = p.at("T_h"), tc = p.at("T_c");
  auto rows = sweep(n, [&](int i) {
    double wh = grid_point(lo, hi, i, n);
    CycleResult tls = otto_quasistatic_tls(wc, wh, th, tc);
    CycleResult ho = otto_quasistatic_ho(wc, wh, th, tc);
    return std::vector<double>{wh, tls.work, ho.work, 1.0 - wc / wh};
  });
  return make("otto-sweep", p, {"omega_h", "W_tls", "W_ho", "eta"}, std::move(rows));
}

Dataset gen_carnot(const Params& p) {
  int n = int_param(p, "points");
  double lo = p.at("eps_b_min"), hi = p.at("eps_b_max");
  double ea = p.at("eps_a"), th = p.at("T_h"), tc = p.at("T_c");
  auto rows = sweep(n, [&](int i) {
    double eb = grid_point(lo, hi, i, n);
    CycleResult r = carnot_quasistatic_tls(ea, eb, th, tc);
    return std::vector<double>{eb, r.work, r.q_hot, r.q_cold, r.eta};
  });
  return make("carnot", p, {"eps_b", "W", "Q_h", "Q_c", "eta"}, std::move(rows));
}

Dataset gen_maser_sweep(const Params& p) {
  int n = int_param(p, "points");
  double lo = p.at("T_h_min"), hi = p.at("T_h_max");
  auto rows = sweep(n, [&](int i) {
    MaserSpec spec;
    spec.omega1 = 0;
    spec.omega2 = p.at("omega_h") - p.at("omega_c");
    spec.omega3 = p.at("omega_h");
    spec.gamma_h = spec.gamma_c = spec.gamma_w = p.at("gamma");
    spec.t_cold = p.at("T_c");
    spec.t_hot = grid_point(lo, hi, i, n);
    MaserCurrents c = maser_steady_currents(spec);
    return std::vector<double>{spec.t_hot, c.j_hot, c.j_cold, c.power};
  });
  return make("maser-sweep", p, {"T_h", "J_h", "J_c", "P"}, std::move(rows));
}

Dataset gen_qar(const Params& p) {
  int n = int_param(p, "points");
  QarSpec base;
  base.omega_h = p.at("omega_h");
  base.omega_c = p.at("omega_c");
  base.g = p.at("g");
  base.gamma = p.at("gamma");
  base.t_hot = p.at("T_h");
  base.t_work = p.at("T_w");
  base.t_cold = 1.0;
  double tv = 1.0 / qar_virtual_temperature_inverse(base);
  double lo = p.at("T_c_min_rel") * tv, hi = p.at("T_c_max_rel") * tv;
  auto rows = sweep(n, [&](int i) {
    QarSpec spec = base;
    spec.t_cold = grid_point(lo, hi, i, n);
    QarCurrents c = qar_steady_cooling(spec);
    bool predicted = spec.t_cold > tv;
    return std::vector<double>{spec.t_cold,       c.j_cold, c.j_hot, c.j_work,
                               c.cooling ? 1.0 : 0.0, predicted ? 1.0 : 0.0};
  });
  return make("qar", p, {"T_c", "J_c", "J_h", "J_w", "cooling", "cooling_predicted"},
              std::move(rows));
}

Dataset gen_phaseonium(const Params& p) {
  int n = int_param(p, "points");
  PhaseoniumSpec spec;
  spec.t_hot = p.at("T_h");
  spec.t_cold = p.at("T_c");
  spec.n_th = p.at("n_th");
  spec.rho_bc_abs = p.at("rho_bc_abs");
  double eta_c = 1.0 - spec.t_cold / spec.t_hot;
  auto rows = sweep(n, [&](int i) {
    PhaseoniumSpec s = spec;
    s.phi = grid_point(0.0, 2.0 * M_PI, i, n);
    return std::vector<double>{s.phi, phaseonium_efficiency(s), eta_c};
  });
  return make("phaseonium", p, {"phi", "eta", "eta_carnot"}, std::move(rows));
}

Dataset gen_squeezed(const Params& p) {
  int n = int_param(p, "points");
  double b1 = p.at("beta1"), b2 = p.at("beta2");
  double eta_c = 1.0 - b2 / b1;
  auto rows = sweep(n, [&](int i) {
    double r = grid_point(p.at("r_min"), p.at("r_max"), i, n);
    return std::vector<double>{r, squeezed_eff_max_power(b1, b2, r), eta_c,
                               generalized_carnot(b1, b2, r)};
  });
  return make("squeezed", p, {"r", "eta_star", "eta_carnot", "eta_carnot_gen"},
              std::move(rows));
}

Dataset gen_tpm_otto(const Params& p) {
  double gc = p.at("gap_c"), gh = p.at("gap_h");
  double q = p.at("offdiag");
  Eigen::MatrixXd t(2, 2);
  t << 1 - q, q, q, 1 - q;
  StrokeProtocol win = work_stroke({0, gc}, {0, gh}, t);
  StrokeProtocol heat = thermal_heat_stroke({0, gh}, 1.0 / p.at("T_h"));
  StrokeProtocol wout = work_stroke({0, gh}, {0, gc}, t);
  CycleJointDistribution joint =
      cycle_joint_distribution(win, heat, wout, 1.0 / p.at("T_c"));
  std::vector<std::vector<double>> rows;
  for (const auto& a : joint.atoms)
    rows.push_back({a.w_in, a.q_h, a.w_out, a.probability});
  return make("tpm-otto", p, {"W_in", "Q_h", "W_out", "probability"}, std::move(rows));
}

Dataset gen_tur(const Params& p) {
  int n = int_param(p, "points");
  double q = p.at("q");
  auto rows = sweep(n, [&](int i) {
    // biased random walk: mean (p-q)t, variance (p+q)t, entropy (p-q)ln(p/q)t
    double pr = grid_point(p.at("p_min"), p.at("p_max"), i, n);
    double mean = pr - q, var = pr + q, sigma = (pr - q) * std::log(pr / q);
    TurReport r = tur_check(mean, var, sigma);
    return std::vector<double>{pr,    q,     mean,
                               var,   sigma, r.lhs,
                               r.rhs, r.satisfied ? 1.0 : 0.0};
  });
  return make("tur", p,
              {"p", "q", "mean", "var", "sigma", "lhs", "rhs", "satisfied"},
              std::move(rows));
}

Dataset gen_zt_curve(const Params& p) {
  int n = int_param(p, "points");
  auto rows = sweep(n, [&](int i) {
    double zt = grid_point(p.at("zt_min"), p.at("zt_max"), i, n);
    double s = std::sqrt(zt + 1.0);
    return std::vector<double>{zt, (s - 1.0) / (s + 1.0)};
  });
  return make("zt-curve", p, {"ZT", "eta_ratio"}, std::move(rows));
}

Dataset gen_landauer(const Params& p) {
  int n = int_param(p, "points");
  BoxcarTransmission tau{p.at("box_center"), p.at("box_width"), p.at("box_height")};
  LeadSpec right{1.0 / p.at("T_r"), 0.0};
  auto rows = sweep(n, [&](int i) {
    LeadSpec left{1.0 / p.at("T_l"), grid_point(p.at("mu_l_min"), p.at("mu_l_max"), i, n)};
    LandauerCurrents c = landauer_currents(TransmissionFunction{tau}, left, right);
    return std::vector<double>{left.mu, c.j_e, c.j_h_left, c.j_h_right, c.p_gen};
  });
  return make("landauer", p, {"mu_l", "J_e", "J_h_L", "J_h_R", "P_gen"},
              std::move(rows));
}

Dataset gen_harvester(const Params& p) {
  int n = int_param(p, "points");
  double lo = std::log10(p.at("R_min")), hi = std::log10(p.at("R_max"));
  auto rows = sweep(n, [&](int i) {
    double r = std::pow(10.0, grid_point(lo, hi, i, n));
    // asymmetric rates G_L0 = G_R1 = r, G_L1 = G_R0 = 1, in units of J_g/E_C
    double current = harvester_current(r, 1.0, 1.0, r, 1.0, 1.0);
    return std::vector<double>{r, current};
  });
  return make("harvester", p, {"R", "I_over_optimal"}, std::move(rows));
}

Dataset gen_sis(const Params& p) {
  int n = int_param(p, "points");
  auto rows = sweep(n, [&](int i) {
    double v = grid_point(p.at("V_min"), p.at("V_max"), i, n);
    SisCurrents c = sis_currents(p.at("delta_l"), p.at("delta_r"), v, p.at("T_l"),
                                 p.at("T_r"), p.at("G_T"));
    return std::vector<double>{v, c.i_left, c.q_left};
  });
  return make("sis", p, {"V", "I_L", "Qdot_L"}, std::move(rows));
}

Dataset gen_hp_curve(const Params& p) {
  int n = int_param(p, "points");
  auto rows = sweep(n, [&](int i) {
    double prob = grid_point(0.0, 1.0, i, n);
    return std::vector<double>{prob, binary_entropy(prob).value};
  });
  return make("hp-curve", p, {"p", "H_bits"}, std::move(rows));
}

Dataset gen_steering(const Params& p) {
  int n = int_param(p, "points");
  auto rows = sweep(n, [&](int i) {
    double beta = grid_point(p.at("beta_min"), p.at("beta_max"), i, n);
    SteeringBound b = steering_work_bound(beta);
    return std::vector<double>{beta, b.w_classical_bound, b.w_optimal,
                               b.quantum_advantage ? 1.0 : 0.0};
  });
  return make("steering", p, {"beta", "W_cl_bound", "W_opt", "advantage"},
              std::move(rows));
}

Dataset gen_measurement_engine(const Params& p) {
  int n = int_param(p, "points");
  double delta = p.at("delta");
  auto rows = sweep(n, [&](int i) {
    double g = grid_point(p.at("g_min"), p.at("g_max"), i, n);
    MeasurementEngineEnergetics e = measurement_engine_energetics(g, delta);
    return std::vector<double>{g, e.theta, e.e_m, e.s_m.value, e.work};
  });
  return make("measurement-engine", p, {"g", "theta", "E_m", "S_m_bits", "W"},
              std::move(rows));
}

const std::vector<std::pair<std::string, ExperimentDef>>& registry() {
  static const std::vector<std::pair<std::string, ExperimentDef>> defs = {
      {"otto-sweep",
       {"TLS vs harmonic-oscillator Otto work and efficiency over the compression ratio",
        {{"omega_c", 1.0}, {"omega_h_min", 1.0}, {"omega_h_max", 5.0},
         {"T_h", 10.0}, {"T_c", 2.0}, {"points", 81}},
        gen_otto_sweep}},
      {"carnot",
       {"reversible TLS Carnot cycle energetics over the hot-isotherm gap",
        {{"eps_a", 2.0}, {"eps_b_min", 0.5}, {"eps_b_max", 2.0}, {"T_h", 2.0},
         {"T_c", 1.0}, {"points", 31}},
        gen_carnot}},
      {"maser-sweep",
       {"three-level maser steady currents vs hot-bath temperature",
        {{"omega_h", 50.0}, {"omega_c", 10.0}, {"T_c", 10.0}, {"gamma", 1.0},
         {"T_h_min", 10.0}, {"T_h_max", 150.0}, {"points", 141}},
        gen_maser_sweep}},
      {"qar",
       {"three-qubit absorption refrigerator cooling window vs cold temperature",
        {{"omega_h", 2.0}, {"omega_c", 1.0}, {"g", 0.1}, {"gamma", 0.002},
         {"T_h", 2.0}, {"T_w", 5.0}, {"T_c_min_rel", 0.9}, {"T_c_max_rel", 1.1},
         {"points", 50}},
        gen_qar}},
      {"phaseonium",
       {"phaseonium engine efficiency vs coherence phase",
        {{"T_h", 1.0}, {"T_c", 0.85}, {"n_th", 1e3}, {"rho_bc_abs", 3e-6},
         {"points", 97}},
        gen_phaseonium}},
      {"squeezed",
       {"squeezed-bath Otto efficiency at maximum power vs squeezing",
        {{"beta1", 1.0}, {"beta2", 0.2}, {"r_min", 0.0}, {"r_max", 3.0},
         {"points", 61}},
        gen_squeezed}},
      {"tpm-otto",
       {"TPM joint trajectory atoms of a TLS Otto cycle",
        {{"gap_c", 1.0}, {"gap_h", 2.0}, {"T_h", 10.0}, {"T_c", 2.0},
         {"offdiag", 0.0}},
        gen_tpm_otto}},
      {"tur",
       {"thermodynamic uncertainty relation on a biased random walk",
        {{"p_min", 1.1}, {"p_max", 5.0}, {"q", 1.0}, {"points", 40}},
        gen_tur}},
      {"zt-curve",
       {"maximum thermoelectric efficiency over Carnot vs figure of merit ZT",
        {{"zt_min", 0.0}, {"zt_max", 20.0}, {"points", 201}},
        gen_zt_curve}},
      {"landauer",
       {"boxcar-filter Landauer currents and generated power vs bias",
        {{"box_center", 1.5}, {"box_width", 1.0}, {"box_height", 1.0},
         {"T_l", 2.0}, {"T_r", 1.0}, {"mu_l_min", -0.4}, {"mu_l_max", 0.0},
         {"points", 41}},
        gen_landauer}},
      {"harvester",
       {"Coulomb-coupled harvester current vs tunnel-rate asymmetry",
        {{"R_min", 1.0}, {"R_max", 1e3}, {"points", 61}},
        gen_harvester}},
      {"sis",
       {"SIS junction quasiparticle current-voltage characteristic",
        {{"delta_l", 1.0}, {"delta_r", 0.2}, {"T_l", 0.6}, {"T_r", 0.05},
         {"G_T", 1.0}, {"V_min", 0.0}, {"V_max", 1.6}, {"points", 81}},
        gen_sis}},
      {"hp-curve",
       {"binary entropy H(p)",
        {{"points", 101}},
        gen_hp_curve}},
      {"steering",
       {"steering Szilard work bounds vs inverse temperature",
        {{"beta_min", 0.0}, {"beta_max", 5.0}, {"points", 51}},
        gen_steering}},
      {"measurement-engine",
       {"two-qubit measurement engine energetics vs coupling",
        {{"delta", 1.0}, {"g_min", 0.0}, {"g_max", 3.0}, {"points", 61}},
        gen_measurement_engine}},
  };
  return defs;
}

const ExperimentDef& find_experiment(const std::string& id) {
  for (const auto& [key, def] : registry())
    if (key == id) return def;
  std::string msg = "unknown experiment id '" + id + "'; valid ids:";
  for (const auto& [key, def] : registry()) msg += " " + key;
  throw domain_error(msg);
}

void format_double(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> v;
    for (const auto& [key, def] : registry()) v.push_back({key, def.description});
    return v;
  }();
  return infos;
}

Dataset run_experiment(const std::string& id,
                       const std::map<std::string, double>& overrides) {
  const ExperimentDef& def = find_experiment(id);
  Params p = def.defaults;
  for (const auto& [key, value] : overrides) {
    auto it = p.find(key);
    if (it == p.end()) {
      std::string msg = "experiment " + id + ": unknown parameter '" + key +
                        "'; valid keys:";
      for (const auto& [k, v] : p) msg += " " + k;
      throw domain_error(msg);
    }
    it->second = value;
  }
  return def.generate(p);
}

void write_csv(const Dataset& d, std::ostream& out) {
  std::string buf;
  buf += "# qtherm ";
  buf += kVersion;
  buf += "\n# experiment: " + d.experiment + "\n";
  buf += "# units: hbar = k_B = e = h = 1\n";
  for (const auto& [key, value] : d.params) {
    buf += "# param " + key + " = ";
    format_double(buf, value);
    buf += "\n";
  }
  for (size_t i = 0; i < d.columns.size(); ++i) {
    if (i) buf += ",";
    buf += d.columns[i];
  }
  buf += "\n";
  for (const auto& row : d.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) buf += ",";
      format_double(buf, row[i]);
    }
    buf += "\n";
  }
  out << buf;
}

void write_json(const Dataset& d, std::ostream& out) {
  nlohmann::json j;
  j["tool"] = "qtherm";
  j["version"] = kVersion;
  j["experiment"] = d.experiment;
  j["units"] = "hbar = k_B = e = h = 1";
  j["params"] = d.params;
  j["columns"] = d.columns;
  j["rows"] = d.rows;
  out << j.dump(2) << "\n";
}

std::map<std::string, std::map<std::string, double>> parse_config(std::istream& in) {
  std::map<std::string, std::map<std::string, double>> sections;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string s = line.substr(first, last - first + 1);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[' && s.back() == ']') {
      section = s.substr(1, s.size() - 2);
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos || section.empty())
      throw domain_error("config: line " + std::to_string(lineno) +
                         ": expected `key = value` inside an [experiment] section");
    std::string key = s.substr(0, eq);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = s.substr(eq + 1);
    size_t pos = 0;
    double v;
    try {
      v = std::stod(value, &pos);
    } catch (const std::exception&) {
      throw domain_error("config: line " + std::to_string(lineno) +
                         ": cannot parse value '" + value + "'");
    }
    sections[section][key] = v;
  }
  return sections;
}

void run(const ExperimentSpec& spec,
         const std::map<std::string, std::map<std::string, double>>& config) {
  std::map<std::string, double> merged;
  auto it = config.find(spec.id);
  if (it != config.end()) merged = it->second;
  for (const auto& [key, value] : spec.overrides) merged[key] = value;

  Dataset d = run_experiment(spec.id, merged);

  auto emit = [&](std::ostream& out) {
    if (spec.format == OutputFormat::csv)
      write_csv(d, out);
    else
      write_json(d, out);
  };
  if (spec.out_path.empty()) {
    emit(std::cout);
  } else {
    std::ofstream out(spec.out_path, std::ios::binary);
    if (!out) throw error("cannot open output file " + spec.out_path);
    emit(out);
  }
}

}  // namespace qtherm
