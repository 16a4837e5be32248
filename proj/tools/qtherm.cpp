// qtherm: run the library's experiments as reproducible datasets.
//
//   qtherm --experiment otto-sweep --out otto.csv
//   qtherm --experiment maser-sweep --set T_c=5 --set points=200 --format json
//   qtherm --list [--format json]
//
// Exit codes: 0 ok, 1 usage error, 2 numerical error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qtherm/experiments.hpp"

namespace {

int list_ids(const std::string& format) {
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& info : qtherm::list_experiments())
      j.push_back({{"id", info.id}, {"description", info.description}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& info : qtherm::list_experiments())
      std::cout << info.id << "  -  " << info.description << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum thermal machine experiment runner"};

  std::string experiment, out_path, format = "csv", config_path;
  std::vector<std::string> sets;
  bool list = false;

  app.add_option("--experiment", experiment, "experiment id (see --list)");
  app.add_option("--set", sets, "parameter override key=value (repeatable)");
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--format", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", config_path, "key=value config file with [experiment] sections");
  app.add_flag("--list", list, "list experiment ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (list || experiment.empty()) return list_ids(format);

  try {
    qtherm::ExperimentSpec spec;
    spec.id = experiment;
    spec.out_path = out_path;
    spec.format = (format == "json") ? qtherm::OutputFormat::json
                                     : qtherm::OutputFormat::csv;
    for (const auto& kv : sets) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) {
        std::cerr << "error: --set expects key=value, got '" << kv << "'\n";
        return 1;
      }
      try {
        spec.overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        std::cerr << "error: cannot parse value in '" << kv << "'\n";
        return 1;
      }
    }

    std::map<std::string, std::map<std::string, double>> config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot open config file " << config_path << "\n";
        return 1;
      }
      config = qtherm::parse_config(in);
    }

    qtherm::run(spec, config);
    return 0;
  } catch (const qtherm::accuracy_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const qtherm::divergence_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const qtherm::degenerate_steady_state_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const qtherm::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
