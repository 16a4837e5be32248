#ifndef QTHERM_EXPERIMENTS_HPP
#define QTHERM_EXPERIMENTS_HPP

// Experiment runner: deterministic parameter sweeps over the library
// models, emitted as CSV or JSON datasets. Every dataset carries a header
// with the tool version, experiment id, resolved parameters, and the
// units note (hbar = k_B = e = h = 1). Reruns are byte-identical.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qtherm/errors.hpp"

namespace qtherm {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { csv, json };

struct ExperimentSpec {
  std::string id;
  std::map<std::string, double> overrides;
  std::string out_path;  // empty -> stdout
  OutputFormat format = OutputFormat::csv;
};

struct Dataset {
  std::string experiment;
  std::map<std::string, double> params;  // fully resolved
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ExperimentInfo {
  std::string id;
  std::string description;
};

/// Stable-ordered list of every experiment id with a one-line description.
const std::vector<ExperimentInfo>& list_experiments();

/// Resolve parameters (defaults < config < overrides) and compute the
/// dataset. Unknown ids and unknown parameter keys are domain errors whose
/// message lists the valid choices.
Dataset run_experiment(const std::string& id,
                       const std::map<std::string, double>& overrides);

void write_csv(const Dataset& d, std::ostream& out);
void write_json(const Dataset& d, std::ostream& out);

/// Flat `key = value` sections keyed by experiment id:
///   [otto-sweep]
///   T_h = 12
std::map<std::string, std::map<std::string, double>> parse_config(std::istream& in);

/// Run and write a dataset file (or stdout). CLI flag overrides win over
/// config file values.
void run(const ExperimentSpec& spec,
         const std::map<std::string, std::map<std::string, double>>& config = {});

}  // namespace qtherm

#endif
