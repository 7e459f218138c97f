// Scenario configuration (JSON), validation with field-path reporting, and
// batch execution with CSV / JSON artifact export.
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcflow/math_util.hpp"

namespace qcflow {

struct ScenarioConfig {
  std::string kind;  // heleshaw | lk-pde | lk-ode | douady-earle | nu-from-field | check-bounds
  double t_end = 0.0;

  // initial exterior map (evolution kinds)
  bool has_initial_map = false;
  double alpha = 1.0;
  cplx a0 = 0.0;
  std::vector<cplx> tail;

  // numerics
  std::size_t N = 64;    // coefficient truncation
  std::size_t n = 256;   // circle grid
  std::size_t n_r = 128; // radial grid for disk fields
  double atol = 1e-10;
  double rtol = 1e-10;
  double dt_init = 1e-3;
  double cusp_tol = 1e-3;
  double tail_tol = 1e-12;
  int sign = -1;  // heleshaw: -1 contracting bubble, +1 suction

  // driving block (exactly one for kinds that take one)
  std::vector<std::string> driving_keys;  // recognized blocks present in the document
  std::string driving_kind;               // the single active block when well formed
  double p_constant = 1.0;
  std::vector<cplx> p_coefficients;
  struct Harmonic {
    int m = 0;
    double cos_amp = 0.0;
    double sin_amp = 0.0;
  };
  std::vector<Harmonic> harmonics;
  double field_constant = 0.0;  // constant offset added to the harmonics
  double p0 = 1.0;              // leading Herglotz data for field driving
  cplx p1 = 0.0;
  cplx mobius_a = 0.0;  // douady-earle boundary map parameters
  double mobius_rot = 0.0;

  // lk-ode
  bool has_zeta0 = false;
  cplx zeta0 = 2.0;
  bool has_direction = false;
  std::string direction = "retracting";

  // evaluation points (pointwise kinds); defaulted when absent
  bool points_given = false;
  std::vector<cplx> points;

  std::string out_dir = ".";

  nlohmann::json echo;  // parsed source document (manifest reproduction)
};

// Parses the JSON document; throws DomainError on unreadable files or
// malformed JSON / mistyped fields.
ScenarioConfig parse_scenario_file(const std::string& path);
ScenarioConfig parse_scenario_json(const nlohmann::json& doc);

// Schema and invariant report; every entry reads "<field path>: <problem>".
std::vector<std::string> validate_scenario(const ScenarioConfig& cfg);

struct RunArtifacts {
  int exit_code = 0;      // 0 success, 3 numerical failure
  std::string status;     // machine-readable outcome tag
  std::string message;
  std::vector<std::string> files;  // artifacts written
};

// Executes a validated config.  snapshot_every <= 0 keeps only the first and
// last snapshot of evolution runs.
RunArtifacts run_scenario(const ScenarioConfig& cfg, const std::string& out_dir,
                          long snapshot_every);

std::string qcflow_version();

}  // namespace qcflow
