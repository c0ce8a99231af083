// Copyright 2026 The syndrocal authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "syndrocal/scenario.hpp"

namespace {

using syndrocal::CsvFiles;
using syndrocal::ScenarioConfig;

void add_common_flags(CLI::App* cmd, ScenarioConfig& config,
                      std::string& config_path, std::string& lambdas) {
  cmd->add_option("--config", config_path, "flat key=value configuration file");
  cmd->add_option("--code", config.code, "steane or a code definition file");
  cmd->add_option("--circuit", config.circuit, "parallel or sequential");
  cmd->add_option("--noise", config.noise,
                  "noise model, e.g. depolarizing2:lambda=0.01");
  cmd->add_option("--state", config.state, "calibration, codeword or zeros");
  cmd->add_option("--lambdas", lambdas, "comma separated noise parameter grid");
  cmd->add_option("--shots", config.shots, "shots per experiment");
  cmd->add_option("--seed", config.seed, "master seed");
  cmd->add_option("--rounds", config.rounds, "calibration rounds (1 or 2)");
  cmd->add_flag("--analytic,!--sampled", config.analytic,
                "exact engines instead of sampling");
  cmd->add_option("--out", config.out_dir, "output directory for CSV files");
}

ScenarioConfig resolve_config(const ScenarioConfig& flag_values,
                              const std::string& config_path, CLI::App* cmd,
                              const std::string& lambdas) {
  ScenarioConfig config;
  if (!config_path.empty()) config = syndrocal::read_config_file(config_path);
  // Flags given on the command line override file values.
  auto override_if = [&](const char* flag, auto member) {
    if (cmd->count(flag) > 0) config.*member = flag_values.*member;
  };
  override_if("--code", &ScenarioConfig::code);
  override_if("--circuit", &ScenarioConfig::circuit);
  override_if("--noise", &ScenarioConfig::noise);
  override_if("--state", &ScenarioConfig::state);
  override_if("--shots", &ScenarioConfig::shots);
  override_if("--seed", &ScenarioConfig::seed);
  override_if("--rounds", &ScenarioConfig::rounds);
  override_if("--out", &ScenarioConfig::out_dir);
  if (cmd->count("--analytic") > 0 || cmd->count("--sampled") > 0) {
    config.analytic = flag_values.analytic;
  }
  if (cmd->count("--lambdas") > 0) {
    syndrocal::apply_config_entry(config, "lambdas", lambdas);
  }
  return config;
}

int write_files(const CsvFiles& files, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& [name, contents] : files) {
    std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << '\n';
      return 1;
    }
    out << contents;
    std::cout << path.string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calibrated stabilizer syndrome measurements"};
  app.require_subcommand(1);

  ScenarioConfig flag_values;
  std::string config_path, lambdas;

  CLI::App* calibrate = app.add_subcommand(
      "calibrate", "two-round calibration factors gamma, beta, alpha");
  bool emit_beta_au = false;
  calibrate->add_flag("--beta-au", emit_beta_au,
                      "also emit the outcome-resolved beta table");
  CLI::App* estimate = app.add_subcommand(
      "estimate-channel", "noise channel estimates with and without calibration");
  CLI::App* decode = app.add_subcommand(
      "decode-compare", "standard vs calibrated decoding wrong-correction rates");
  CLI::App* recover = app.add_subcommand(
      "recover-generators", "measured, corrected, true and REM generator values");
  CLI::App* selftest =
      app.add_subcommand("selftest", "cross-engine consistency checks");
  bool inject_fault = false;
  selftest->add_flag("--inject-fault", inject_fault,
                     "corrupt the parallel gate table to prove checks bite");

  for (CLI::App* cmd : {calibrate, estimate, decode, recover}) {
    add_common_flags(cmd, flag_values, config_path, lambdas);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (selftest->parsed()) {
      bool ok = syndrocal::run_selftest(std::cout, inject_fault);
      std::cout << (ok ? "selftest passed" : "selftest FAILED") << '\n';
      return ok ? 0 : 1;
    }
    CLI::App* active = app.get_subcommands().front();
    ScenarioConfig config = resolve_config(flag_values, config_path, active, lambdas);
    CsvFiles files;
    if (calibrate->parsed()) {
      config.emit_beta_au = emit_beta_au;
      files = syndrocal::cmd_calibrate(config);
    }
    if (estimate->parsed()) files = syndrocal::cmd_estimate_channel(config);
    if (decode->parsed()) files = syndrocal::cmd_decode_compare(config);
    if (recover->parsed()) files = syndrocal::cmd_recover_generators(config);
    return write_files(files, config.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
