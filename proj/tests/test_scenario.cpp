// Config parsing, validation diagnostics, and batch execution: artifact
// layout, summary values, exit codes, and byte-level determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcflow/errors.hpp"
#include "qcflow/scenario.hpp"
#include "oracles.hpp"

using namespace qcflow;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json parse_text(const char* text) { return json::parse(text); }

std::vector<std::string> validate_text(const char* text) {
  return validate_scenario(parse_scenario_json(parse_text(text)));
}

bool has_error(const std::vector<std::string>& errs, const std::string& exact) {
  for (const auto& e : errs)
    if (e == exact) return true;
  return false;
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> read_csv_rows(const fs::path& p, std::string* header) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::string line;
  REQUIRE(std::getline(in, line));
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(std::move(row));
  }
  return rows;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qcflow_scenario_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("library version string") { CHECK(qcflow_version() == "0.1.0"); }

TEST_CASE("minimal config parses with documented defaults") {
  const json doc = parse_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                  "initial_map": {"alpha": 2.0}})");
  const ScenarioConfig cfg = parse_scenario_json(doc);
  CHECK(cfg.kind == "heleshaw");
  CHECK(cfg.t_end == 0.5);
  CHECK(cfg.has_initial_map);
  CHECK(cfg.alpha == 2.0);
  CHECK(cfg.a0 == cplx(0.0));
  CHECK(cfg.tail.empty());
  CHECK(cfg.N == 64);
  CHECK(cfg.n == 256);
  CHECK(cfg.n_r == 128);
  CHECK(cfg.atol == 1e-10);
  CHECK(cfg.rtol == 1e-10);
  CHECK(cfg.dt_init == 1e-3);
  CHECK(cfg.cusp_tol == 1e-3);
  CHECK(cfg.tail_tol == 1e-12);
  CHECK(cfg.sign == -1);
  CHECK(cfg.out_dir == ".");
  CHECK(!cfg.points_given);
  CHECK(cfg.echo == doc);  // manifest reproduction keeps the source document
  CHECK(validate_scenario(cfg).empty());
}

TEST_CASE("complex values accept plain numbers and {re, im} objects") {
  const ScenarioConfig cfg = parse_scenario_json(parse_text(
      R"({"kind": "heleshaw", "t_end": 1.0,
          "initial_map": {"alpha": 1.5, "a0": 0.25,
                          "tail": [{"re": 0.1, "im": -0.2}, 0.05, {"im": 1.0}]}})"));
  CHECK(cfg.a0 == cplx(0.25, 0.0));
  REQUIRE(cfg.tail.size() == 3);
  CHECK(cfg.tail[0] == cplx(0.1, -0.2));
  CHECK(cfg.tail[1] == cplx(0.05, 0.0));
  CHECK(cfg.tail[2] == cplx(0.0, 1.0));
}

TEST_CASE("parser rejects unknown keys and mistyped fields") {
  CHECK_THROWS_WITH_AS(parse_scenario_json(parse_text(R"([1, 2])")),
                       "(document): expected a JSON object", DomainError);
  CHECK_THROWS_WITH_AS(parse_scenario_json(parse_text(R"({"t_end": 1.0})")),
                       "kind: required", DomainError);
  CHECK_THROWS_WITH_AS(parse_scenario_json(parse_text(R"({"kind": 7})")),
                       "kind: expected a string", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(parse_text(R"({"kind": "heleshaw", "bogus": 1})")),
      "bogus: unknown key", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(parse_text(R"({"kind": "heleshaw", "t_end": "soon"})")),
      "t_end: expected a number", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(
          parse_text(R"({"kind": "heleshaw", "numerics": {"steps": 10}})")),
      "numerics.steps: unknown key", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(parse_text(R"({"kind": "heleshaw", "numerics": {"N": 100.5}})")),
      "numerics.N: expected a non-negative integer", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(parse_text(R"({"kind": "heleshaw", "numerics": {"N": -4}})")),
      "numerics.N: expected a non-negative integer", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(parse_text(R"({"kind": "heleshaw", "initial_map": {"tail": 3}})")),
      "initial_map.tail: expected an array", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(
          parse_text(R"({"kind": "heleshaw", "initial_map": {"a0": [1, 2]}})")),
      "initial_map.a0: expected a number or an {re, im} object", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(
          parse_text(R"({"kind": "heleshaw", "initial_map": {"a0": {"re": 1, "imag": 2}}})")),
      "initial_map.a0.imag: unknown key in complex value", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(parse_text(R"({"kind": "lk-pde", "driving": 5})")),
      "driving: expected an object", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(
          parse_text(R"({"kind": "lk-pde", "driving": {"field": {"harmonics": [{"cos": 1}]}}})")),
      "driving.field.harmonics[0].m: required", DomainError);
  CHECK_THROWS_WITH_AS(
      parse_scenario_json(parse_text(R"({"kind": "heleshaw", "numerics": {"sign": 1.5}})")),
      "numerics.sign: expected an integer", DomainError);
}

TEST_CASE("config files parse from disk and report file-level failures") {
  const fs::path dir = fresh_dir("files");
  const fs::path good = dir / "good.json";
  {
    std::ofstream out(good);
    out << R"({"kind": "lk-ode", "t_end": 2.0, "zeta0": 2.0,
               "driving": {"constant": 1.0}})";
  }
  const ScenarioConfig cfg = parse_scenario_file(good.string());
  CHECK(cfg.kind == "lk-ode");
  CHECK(cfg.has_zeta0);
  CHECK(cfg.zeta0 == cplx(2.0, 0.0));
  CHECK(validate_scenario(cfg).empty());

  const fs::path broken = dir / "broken.json";
  {
    std::ofstream out(broken);
    out << "{\"kind\": ";
  }
  CHECK_THROWS_AS(parse_scenario_file(broken.string()), DomainError);
  try {
    parse_scenario_file(broken.string());
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("JSON parse error") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scenario_file((dir / "missing.json").string()), DomainError);
}

TEST_CASE("validation pinpoints grid and tolerance problems by field path") {
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "numerics": {"N": 100}})"),
                  "numerics.N: 100 is not a power of two"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "numerics": {"n": 100}})"),
                  "numerics.n: 100 is not a power of two >= 8"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "numerics": {"n": 4}})"),
                  "numerics.n: 4 is not a power of two >= 8"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "numerics": {"n_r": 1}})"),
                  "numerics.n_r: must be at least 2"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "numerics": {"atol": 0.0}})"),
                  "numerics.atol: must be positive"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "numerics": {"sign": 2}})"),
                  "numerics.sign: must be -1 or +1"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": -1.0,
                                    "initial_map": {"alpha": 1.0}})"),
                  "t_end: must be positive for evolution runs"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5})"),
                  "initial_map: required for kind 'heleshaw'"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                    "initial_map": {"alpha": -1.0}})"),
                  "initial_map.alpha: must be positive"));
  CHECK(has_error(
      validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                        "initial_map": {"alpha": 1.0, "tail": [0.1, 0, 0, 0, 0.1]},
                        "numerics": {"N": 4}})"),
      "initial_map.tail: has 5 coefficients, exceeding numerics.N = 4"));
  CHECK(has_error(validate_text(R"({"kind": "banana"})"),
                  "kind: unknown scenario kind 'banana'"));
}

TEST_CASE("validation enforces the driving-block rules per scenario kind") {
  // Exactly one block, and only the kinds that take one.
  CHECK(has_error(validate_text(R"({"kind": "lk-pde", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "driving": {"constant": 1.0, "field": {"p0": 1.0}}})"),
                  "driving: exactly one driving block allowed, found 2"));
  CHECK(has_error(
      validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                        "initial_map": {"alpha": 1.0}, "driving": {"constant": 1.0}})"),
      "driving: heleshaw scenarios take no driving block (the interface drives itself)"));
  CHECK(has_error(validate_text(R"({"kind": "lk-pde", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0}})"),
                  "driving: kind 'lk-pde' requires one driving block: "
                  "constant, coefficients, or field"));
  CHECK(has_error(validate_text(R"({"kind": "lk-pde", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "driving": {"mobius": {"a": 0.3}}})"),
                  "driving.mobius: not applicable to kind 'lk-pde'"));
  CHECK(has_error(validate_text(R"({"kind": "douady-earle"})"),
                  "driving: kind 'douady-earle' requires a mobius boundary-map block"));
  CHECK(has_error(validate_text(R"({"kind": "douady-earle",
                                    "driving": {"constant": 1.0}})"),
                  "driving.constant: not applicable to kind 'douady-earle'"));
  CHECK(has_error(validate_text(R"({"kind": "check-bounds",
                                    "driving": {"mobius": {"a": 0.3}}})"),
                  "driving.mobius: not applicable to kind 'check-bounds'"));
  CHECK(has_error(validate_text(R"({"kind": "nu-from-field"})"),
                  "driving: kind 'nu-from-field' requires a field block"));

  // Block-level invariants.
  CHECK(has_error(validate_text(R"({"kind": "lk-pde", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "driving": {"constant": -2.0}})"),
                  "driving.constant: must be positive (Herglotz functions have Re p > 0)"));
  CHECK(has_error(validate_text(R"({"kind": "lk-pde", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "driving": {"coefficients": []}})"),
                  "driving.coefficients: must be non-empty"));
  CHECK(has_error(validate_text(R"({"kind": "lk-pde", "t_end": 0.5,
                                    "initial_map": {"alpha": 1.0},
                                    "driving": {"coefficients": [{"re": 0, "im": 1}]}})"),
                  "driving.coefficients[0]: leading coefficient must be real positive"));
  CHECK(has_error(validate_text(R"({"kind": "check-bounds",
                                    "driving": {"field": {"p0": -1.0,
                                      "harmonics": [{"m": 2, "cos": 1.0}]}}})"),
                  "driving.field.p0: must be positive"));
  CHECK(has_error(validate_text(R"({"kind": "douady-earle",
                                    "driving": {"mobius": {"a": 1.2}}})"),
                  "driving.mobius.a: must lie inside the open unit disk"));
}

TEST_CASE("validation ties trajectory and point options to the right kinds") {
  CHECK(has_error(validate_text(R"({"kind": "lk-ode", "t_end": 2.0, "zeta0": 0.5,
                                    "driving": {"constant": 1.0}})"),
                  "zeta0: must lie outside the closed unit disk"));
  CHECK(has_error(validate_text(R"({"kind": "lk-ode", "t_end": 2.0, "zeta0": 2.0,
                                    "direction": "sideways",
                                    "driving": {"constant": 1.0}})"),
                  "direction: must be 'retracting' or 'expanding'"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5, "zeta0": 2.0,
                                    "initial_map": {"alpha": 1.0}})"),
                  "zeta0: only applicable to kind 'lk-ode'"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                    "direction": "expanding",
                                    "initial_map": {"alpha": 1.0}})"),
                  "direction: only applicable to kind 'lk-ode'"));
  CHECK(has_error(validate_text(R"({"kind": "heleshaw", "t_end": 0.5,
                                    "points": [0.5],
                                    "initial_map": {"alpha": 1.0}})"),
                  "points: only applicable to pointwise kinds"));
  CHECK(has_error(validate_text(R"({"kind": "nu-from-field", "points": [],
                                    "driving": {"field": {"p0": 1.0,
                                      "harmonics": [{"m": 2, "cos": 1.0}]}}})"),
                  "points: must be non-empty when present"));
  CHECK(has_error(validate_text(R"({"kind": "nu-from-field", "points": [1.5],
                                    "driving": {"field": {"p0": 1.0,
                                      "harmonics": [{"m": 2, "cos": 1.0}]}}})"),
                  "points[0]: must lie inside the open unit disk"));

  // Every report entry follows the "<field path>: <problem>" shape.
  const auto errs = validate_text(R"({"kind": "banana", "t_end": -1.0,
                                      "numerics": {"N": 100, "sign": 3}})");
  CHECK(errs.size() >= 3);
  for (const auto& e : errs) CHECK(e.find(": ") != std::string::npos);
}

TEST_CASE("contracting-circle run writes the full artifact set") {
  const ScenarioConfig cfg = parse_scenario_json(parse_text(
      R"({"kind": "heleshaw", "t_end": 0.5,
          "initial_map": {"alpha": 2.0},
          "numerics": {"N": 8, "n": 64}})"));
  REQUIRE(validate_scenario(cfg).empty());
  const fs::path dir = fresh_dir("hs_run");
  const RunArtifacts art = run_scenario(cfg, dir.string(), 0);
  CHECK(art.exit_code == 0);
  CHECK(art.status == "ok");
  REQUIRE(art.files.size() == 3);
  for (const auto& f : art.files) CHECK(fs::exists(f));

  // Trajectory CSV: fixed column layout, then one row per accepted step.
  std::string header;
  const auto rows = read_csv_rows(dir / "trajectory.csv", &header);
  std::string expect = "t,alpha,re_a0,im_a0";
  for (int k = 1; k <= 8; ++k)
    expect += ",re_a" + std::to_string(k) + ",im_a" + std::to_string(k);
  expect += ",area,m1_re,m1_im,m2_re,m2_im,m3_re,m3_im,min_df,rep_margin";
  CHECK(header == expect);
  REQUIRE(rows.size() >= 2);
  for (const auto& row : rows) REQUIRE(row.size() == 4 + 2 * 8 + 9);
  CHECK(rows.front()[0] == 0.0);
  CHECK(std::abs(rows.back()[0] - 0.5) <= 1e-12);
  // Contracting circle: alpha(t) = sqrt(alpha0^2 - 2 t).
  CHECK(std::abs(rows.back()[1] - std::sqrt(4.0 - 2.0 * 0.5)) <= 1e-8);
  for (const auto& row : rows)
    CHECK(std::abs(row[20] - kPi * (4.0 - 2.0 * row[0])) <= 1e-7);  // area column

  // Snapshots: first and last state when no interval is requested.
  const json snaps = json::parse(read_bytes(dir / "snapshots.json"));
  REQUIRE(snaps.is_array());
  CHECK(snaps.size() == 2);
  CHECK(snaps.front().contains("map"));

  // Manifest: reproducible description of the run.
  const json man = json::parse(read_bytes(dir / "manifest.json"));
  CHECK(man.at("tool") == "qcflow");
  CHECK(man.at("version") == qcflow_version());
  CHECK(man.at("kind") == "heleshaw");
  CHECK(man.at("status") == "ok");
  CHECK(man.at("exit_code") == 0);
  CHECK(man.at("columns").size() == 4 + 2 * 8 + 9);
  CHECK(man.at("config") == cfg.echo);
  CHECK(std::abs(man.at("result").at("final_alpha").get<double>() - std::sqrt(3.0)) <= 1e-8);
}

TEST_CASE("identical configs produce byte-identical data artifacts") {
  const ScenarioConfig cfg = parse_scenario_json(parse_text(
      R"({"kind": "heleshaw", "t_end": 0.4,
          "initial_map": {"alpha": 2.0, "tail": [0.1, {"im": 0.05}]},
          "numerics": {"N": 16, "n": 64}})"));
  REQUIRE(validate_scenario(cfg).empty());
  const fs::path d1 = fresh_dir("det_a");
  const fs::path d2 = fresh_dir("det_b");
  CHECK(run_scenario(cfg, d1.string(), 2).exit_code == 0);
  CHECK(run_scenario(cfg, d2.string(), 2).exit_code == 0);
  CHECK(read_bytes(d1 / "trajectory.csv") == read_bytes(d2 / "trajectory.csv"));
  CHECK(read_bytes(d1 / "snapshots.json") == read_bytes(d2 / "snapshots.json"));
  // Manifests differ only through the informational wall-clock entry.
  json m1 = json::parse(read_bytes(d1 / "manifest.json"));
  json m2 = json::parse(read_bytes(d2 / "manifest.json"));
  m1.erase("wall_time_seconds");
  m2.erase("wall_time_seconds");
  CHECK(m1 == m2);
}

TEST_CASE("evolution past the breakdown time fails with exit code 3") {
  const ScenarioConfig cfg = parse_scenario_json(parse_text(
      R"({"kind": "heleshaw", "t_end": 3.0,
          "initial_map": {"alpha": 2.0},
          "numerics": {"N": 8, "n": 64, "atol": 1e-8, "rtol": 1e-8,
                       "cusp_tol": 0.1}})"));
  REQUIRE(validate_scenario(cfg).empty());
  const fs::path dir = fresh_dir("hs_blowup");
  const RunArtifacts art = run_scenario(cfg, dir.string(), 0);
  CHECK(art.exit_code == 3);
  CHECK(art.status == "cusp");
  CHECK(!art.message.empty());
  for (const auto& f : art.files) CHECK(fs::exists(f));  // partial data still lands

  const json man = json::parse(read_bytes(dir / "manifest.json"));
  CHECK(man.at("exit_code") == 3);
  CHECK(man.at("status") == "cusp");
  // For the circle, min|f'|^2 is exactly linear in t, so the extrapolated
  // breakdown time matches the exact value alpha0^2 / 2.
  REQUIRE(man.at("result").at("blowup_estimate").is_number());
  CHECK(std::abs(man.at("result").at("blowup_estimate").get<double>() - 2.0) <= 1e-6);
}

TEST_CASE("radial trajectory run reports the circle-crossing time") {
  const ScenarioConfig cfg = parse_scenario_json(parse_text(
      R"({"kind": "lk-ode", "t_end": 2.0, "zeta0": 2.0,
          "driving": {"constant": 1.0}})"));
  REQUIRE(validate_scenario(cfg).empty());
  const fs::path dir = fresh_dir("lk_ode");
  const RunArtifacts art = run_scenario(cfg, dir.string(), 0);
  CHECK(art.exit_code == 0);

  std::string header;
  const auto rows = read_csv_rows(dir / "trajectory.csv", &header);
  CHECK(header == "t,re_w,im_w,re_et_w,im_et_w,re_emt_w,im_emt_w");
  REQUIRE(rows.size() >= 2);
  // Constant driving, retracting direction: w(t) = e^{-t} zeta0, so the
  // e^{+t}-scaled column stays at zeta0 and the trajectory exits at log 2.
  for (const auto& row : rows) {
    CHECK(std::abs(row[3] - 2.0) <= 1e-9);
    CHECK(std::abs(row[4] - 0.0) <= 1e-9);
  }
  CHECK(std::abs(std::hypot(rows.back()[1], rows.back()[2]) - 1.0) <= 1e-9);

  const json man = json::parse(read_bytes(dir / "manifest.json"));
  CHECK(man.at("result").at("exited") == true);
  CHECK(std::abs(man.at("result").at("exit_time").get<double>() - std::log(2.0)) <= 1e-8);
  CHECK(json::parse(read_bytes(dir / "snapshots.json")).empty());
}

TEST_CASE("barycentric-extension run tabulates residuals and dilatation") {
  const ScenarioConfig cfg = parse_scenario_json(parse_text(
      R"({"kind": "douady-earle",
          "driving": {"mobius": {"a": {"re": 0.3, "im": 0.1}, "rot": 0.4}}})"));
  REQUIRE(validate_scenario(cfg).empty());
  const fs::path dir = fresh_dir("de_run");
  const RunArtifacts art = run_scenario(cfg, dir.string(), 0);
  CHECK(art.exit_code == 0);

  std::string header;
  const auto rows = read_csv_rows(dir / "trajectory.csv", &header);
  CHECK(header == "re_zeta,im_zeta,re_w,im_w,residual,iterations,abs_mu");
  CHECK(rows.size() == 20);  // two default radii, ten angles each
  for (const auto& row : rows) {
    REQUIRE(row.size() == 7);
    CHECK(std::hypot(row[2], row[3]) < 1.0);  // barycenter stays interior
    CHECK(row[4] <= 1e-10);                   // solver residual
    CHECK(row[5] >= 0.0);                     // iteration count (0 when the seed already solves)
    CHECK(row[6] <= 1e-8);                    // Mobius data extends conformally
  }
  const json man = json::parse(read_bytes(dir / "manifest.json"));
  CHECK(man.at("result").at("points") == 20);
  CHECK(man.at("result").at("max_abs_mu").get<double>() <= 1e-8);
  const json snaps = json::parse(read_bytes(dir / "snapshots.json"));
  REQUIRE(snaps.size() == 1);
  CHECK(snaps.front().at("boundary_map").at("values").size() == cfg.n);
}

TEST_CASE("field-report run evaluates the deformation and its bounds") {
  const char* text = R"({"kind": "%s",
      "driving": {"field": {"p0": 1.0, "harmonics": [{"m": 2, "cos": 1.0}]}}})";
  char buf[256];

  std::snprintf(buf, sizeof buf, text, "nu-from-field");
  const ScenarioConfig nf = parse_scenario_json(json::parse(buf));
  REQUIRE(validate_scenario(nf).empty());
  const fs::path dir1 = fresh_dir("nu_field");
  CHECK(run_scenario(nf, dir1.string(), 0).exit_code == 0);
  std::string header;
  const auto rows = read_csv_rows(dir1 / "trajectory.csv", &header);
  CHECK(header ==
        "re_zeta,im_zeta,re_nu,im_nu,abs_nu,cor1_bound,cor1_margin,cor2_ratio,cor2_margin");
  CHECK(rows.size() == 60);  // five default radii, twelve angles each
  for (const auto& row : rows) {
    // cos(2 theta) drives the closed-form deformation 1.5 (1 - r^2)^2.
    const double r2 = row[0] * row[0] + row[1] * row[1];
    CHECK(std::abs(row[4] - 1.5 * oracles::sq(1.0 - r2)) <= 1e-8);
    CHECK(row[6] >= 0.0);  // pointwise sup-bound margin
    CHECK(row[8] >= 0.0);  // pointwise ratio-bound margin
  }
  const json snaps = json::parse(read_bytes(dir1 / "snapshots.json"));
  REQUIRE(snaps.size() == 1);
  CHECK(snaps.front().contains("grid"));
  CHECK(snaps.front().contains("samples"));

  std::snprintf(buf, sizeof buf, text, "check-bounds");
  const ScenarioConfig cb = parse_scenario_json(json::parse(buf));
  REQUIRE(validate_scenario(cb).empty());
  const fs::path dir2 = fresh_dir("check_bounds");
  const RunArtifacts art = run_scenario(cb, dir2.string(), 0);
  CHECK(art.exit_code == 0);
  CHECK(art.status == "ok");
  const json man = json::parse(read_bytes(dir2 / "manifest.json"));
  CHECK(std::abs(man.at("result").at("field_max").get<double>() - 1.0) <= 1e-12);
  CHECK(std::abs(man.at("result").at("ratio_bound").get<double>() - 2.0) <= 1e-12);
  CHECK(man.at("result").at("sup_bound_margin").get<double>() >= -1e-9);
  CHECK(man.at("result").at("ratio_bound_margin").get<double>() >= -1e-9);
}
