// qcflow: evolution of conformal maps with quasiconformal extensions.
//
//   qcflow run <config.json> [--out DIR] [--snapshots EVERY]
//   qcflow validate <config.json>
//   qcflow version
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.
#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "qcflow/errors.hpp"
#include "qcflow/scenario.hpp"

namespace {

int do_validate(const std::string& path) {
  const qcflow::ScenarioConfig cfg = qcflow::parse_scenario_file(path);
  const std::vector<std::string> problems = qcflow::validate_scenario(cfg);
  if (problems.empty()) {
    std::printf("ok: %s scenario '%s'\n", cfg.kind.c_str(), path.c_str());
    return 0;
  }
  for (const std::string& p : problems) std::fprintf(stderr, "error: %s\n", p.c_str());
  std::fprintf(stderr, "invalid: %zu problem(s) in '%s'\n", problems.size(), path.c_str());
  return 2;
}

int do_run(const std::string& path, std::string out_dir, long snapshot_every) {
  const qcflow::ScenarioConfig cfg = qcflow::parse_scenario_file(path);
  const std::vector<std::string> problems = qcflow::validate_scenario(cfg);
  if (!problems.empty()) {
    for (const std::string& p : problems) std::fprintf(stderr, "error: %s\n", p.c_str());
    return 2;
  }
  if (out_dir.empty()) out_dir = cfg.out_dir;
  const qcflow::RunArtifacts art = qcflow::run_scenario(cfg, out_dir, snapshot_every);
  if (art.exit_code == 0) {
    std::printf("ok: %s\n", art.message.c_str());
    for (const std::string& f : art.files) std::printf("wrote %s\n", f.c_str());
  } else {
    std::fprintf(stderr, "numerical failure [%s]: %s\n", art.status.c_str(),
                 art.message.c_str());
    for (const std::string& f : art.files) std::fprintf(stderr, "wrote %s\n", f.c_str());
  }
  return art.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolution of conformal maps with quasiconformal extensions"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string config_path;
  std::string out_dir;
  long snapshot_every = 0;

  CLI::App* run = app.add_subcommand("run", "execute a scenario config");
  run->add_option("config", config_path, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "output directory (default: config output.dir or '.')");
  run->add_option("--snapshots", snapshot_every,
                  "snapshot every K accepted steps (default: first and last only)");

  CLI::App* validate = app.add_subcommand("validate", "check a scenario config");
  validate->add_option("config", config_path, "scenario JSON file")->required();

  CLI::App* version = app.add_subcommand("version", "print the tool version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (version->parsed()) {
      std::printf("qcflow %s\n", qcflow::qcflow_version().c_str());
      return 0;
    }
    if (validate->parsed()) return do_validate(config_path);
    return do_run(config_path, out_dir, snapshot_every);
  } catch (const qcflow::DomainError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  }
}
