#include "qcflow/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <string>

#include "qcflow/circle_field.hpp"
#include "qcflow/disk_quadrature.hpp"
#include "qcflow/douady_earle.hpp"
#include "qcflow/errors.hpp"
#include "qcflow/evolution.hpp"
#include "qcflow/heleshaw.hpp"
#include "qcflow/herglotz.hpp"
#include "qcflow/loewner.hpp"
#include "qcflow/parallel.hpp"

namespace qcflow {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw DomainError(path + ": " + msg);
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::size_t get_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

cplx get_complex(const json& j, const std::string& path) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_object()) {
    for (const auto& item : j.items())
      if (item.key() != "re" && item.key() != "im")
        fail(path + "." + item.key(), "unknown key in complex value");
    const double re = j.contains("re") ? get_number(j.at("re"), path + ".re") : 0.0;
    const double im = j.contains("im") ? get_number(j.at("im"), path + ".im") : 0.0;
    return cplx(re, im);
  }
  fail(path, "expected a number or an {re, im} object");
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (item.key() == a) {
        ok = true;
        break;
      }
    if (!ok) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
  }
}

json cxj(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

void parse_driving(const json& dr, ScenarioConfig& cfg) {
  if (!dr.is_object()) fail("driving", "expected an object");
  check_keys(dr, "driving", {"constant", "coefficients", "field", "mobius"});
  for (const char* key : {"constant", "coefficients", "field", "mobius"})
    if (dr.contains(key)) cfg.driving_keys.emplace_back(key);
  if (cfg.driving_keys.size() == 1) cfg.driving_kind = cfg.driving_keys.front();

  if (dr.contains("constant")) cfg.p_constant = get_number(dr.at("constant"), "driving.constant");
  if (dr.contains("coefficients")) {
    const json& arr = dr.at("coefficients");
    if (!arr.is_array()) fail("driving.coefficients", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      cfg.p_coefficients.push_back(
          get_complex(arr[i], "driving.coefficients[" + std::to_string(i) + "]"));
  }
  if (dr.contains("field")) {
    const json& fd = dr.at("field");
    if (!fd.is_object()) fail("driving.field", "expected an object");
    check_keys(fd, "driving.field", {"harmonics", "constant", "p0", "p1"});
    if (fd.contains("constant"))
      cfg.field_constant = get_number(fd.at("constant"), "driving.field.constant");
    if (fd.contains("p0")) cfg.p0 = get_number(fd.at("p0"), "driving.field.p0");
    if (fd.contains("p1")) cfg.p1 = get_complex(fd.at("p1"), "driving.field.p1");
    if (fd.contains("harmonics")) {
      const json& hs = fd.at("harmonics");
      if (!hs.is_array()) fail("driving.field.harmonics", "expected an array");
      for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::string hp = "driving.field.harmonics[" + std::to_string(i) + "]";
        const json& h = hs[i];
        if (!h.is_object()) fail(hp, "expected an object");
        check_keys(h, hp, {"m", "cos", "sin"});
        ScenarioConfig::Harmonic harm;
        if (!h.contains("m")) fail(hp + ".m", "required");
        harm.m = static_cast<int>(get_count(h.at("m"), hp + ".m"));
        if (h.contains("cos")) harm.cos_amp = get_number(h.at("cos"), hp + ".cos");
        if (h.contains("sin")) harm.sin_amp = get_number(h.at("sin"), hp + ".sin");
        cfg.harmonics.push_back(harm);
      }
    }
  }
  if (dr.contains("mobius")) {
    const json& mb = dr.at("mobius");
    if (!mb.is_object()) fail("driving.mobius", "expected an object");
    check_keys(mb, "driving.mobius", {"a", "rot"});
    if (mb.contains("a")) cfg.mobius_a = get_complex(mb.at("a"), "driving.mobius.a");
    if (mb.contains("rot")) cfg.mobius_rot = get_number(mb.at("rot"), "driving.mobius.rot");
  }
}

}  // namespace

ScenarioConfig parse_scenario_json(const json& doc) {
  if (!doc.is_object()) fail("(document)", "expected a JSON object");
  check_keys(doc, "",
             {"kind", "t_end", "initial_map", "numerics", "driving", "zeta0", "direction",
              "points", "output"});
  ScenarioConfig cfg;
  cfg.echo = doc;

  if (!doc.contains("kind")) fail("kind", "required");
  if (!doc.at("kind").is_string()) fail("kind", "expected a string");
  cfg.kind = doc.at("kind").get<std::string>();

  if (doc.contains("t_end")) cfg.t_end = get_number(doc.at("t_end"), "t_end");

  if (doc.contains("initial_map")) {
    cfg.has_initial_map = true;
    const json& im = doc.at("initial_map");
    if (!im.is_object()) fail("initial_map", "expected an object");
    check_keys(im, "initial_map", {"alpha", "a0", "tail"});
    if (im.contains("alpha")) cfg.alpha = get_number(im.at("alpha"), "initial_map.alpha");
    if (im.contains("a0")) cfg.a0 = get_complex(im.at("a0"), "initial_map.a0");
    if (im.contains("tail")) {
      const json& tl = im.at("tail");
      if (!tl.is_array()) fail("initial_map.tail", "expected an array");
      for (std::size_t i = 0; i < tl.size(); ++i)
        cfg.tail.push_back(get_complex(tl[i], "initial_map.tail[" + std::to_string(i) + "]"));
    }
  }

  if (doc.contains("numerics")) {
    const json& nm = doc.at("numerics");
    if (!nm.is_object()) fail("numerics", "expected an object");
    check_keys(nm, "numerics",
               {"N", "n", "n_r", "atol", "rtol", "dt_init", "cusp_tol", "tail_tol", "sign"});
    if (nm.contains("N")) cfg.N = get_count(nm.at("N"), "numerics.N");
    if (nm.contains("n")) cfg.n = get_count(nm.at("n"), "numerics.n");
    if (nm.contains("n_r")) cfg.n_r = get_count(nm.at("n_r"), "numerics.n_r");
    if (nm.contains("atol")) cfg.atol = get_number(nm.at("atol"), "numerics.atol");
    if (nm.contains("rtol")) cfg.rtol = get_number(nm.at("rtol"), "numerics.rtol");
    if (nm.contains("dt_init")) cfg.dt_init = get_number(nm.at("dt_init"), "numerics.dt_init");
    if (nm.contains("cusp_tol"))
      cfg.cusp_tol = get_number(nm.at("cusp_tol"), "numerics.cusp_tol");
    if (nm.contains("tail_tol"))
      cfg.tail_tol = get_number(nm.at("tail_tol"), "numerics.tail_tol");
    if (nm.contains("sign")) {
      if (!nm.at("sign").is_number_integer()) fail("numerics.sign", "expected an integer");
      cfg.sign = nm.at("sign").get<int>();
    }
  }

  if (doc.contains("driving")) parse_driving(doc.at("driving"), cfg);

  if (doc.contains("zeta0")) {
    cfg.has_zeta0 = true;
    cfg.zeta0 = get_complex(doc.at("zeta0"), "zeta0");
  }
  if (doc.contains("direction")) {
    cfg.has_direction = true;
    if (!doc.at("direction").is_string()) fail("direction", "expected a string");
    cfg.direction = doc.at("direction").get<std::string>();
  }
  if (doc.contains("points")) {
    cfg.points_given = true;
    const json& pts = doc.at("points");
    if (!pts.is_array()) fail("points", "expected an array");
    for (std::size_t i = 0; i < pts.size(); ++i)
      cfg.points.push_back(get_complex(pts[i], "points[" + std::to_string(i) + "]"));
  }
  if (doc.contains("output")) {
    const json& out = doc.at("output");
    if (!out.is_object()) fail("output", "expected an object");
    check_keys(out, "output", {"dir"});
    if (out.contains("dir")) {
      if (!out.at("dir").is_string()) fail("output.dir", "expected a string");
      cfg.out_dir = out.at("dir").get<std::string>();
    }
  }
  return cfg;
}

ScenarioConfig parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open config file");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(path, std::string("JSON parse error: ") + e.what());
  }
  return parse_scenario_json(doc);
}

std::vector<std::string> validate_scenario(const ScenarioConfig& cfg) {
  std::vector<std::string> v;
  auto bad = [&v](const std::string& path, const std::string& msg) {
    v.push_back(path + ": " + msg);
  };

  static const char* kinds[] = {"heleshaw",      "lk-pde",       "lk-ode",
                                "douady-earle",  "nu-from-field", "check-bounds"};
  const bool known_kind =
      std::find(std::begin(kinds), std::end(kinds), cfg.kind) != std::end(kinds);
  if (!known_kind) bad("kind", "unknown scenario kind '" + cfg.kind + "'");

  const bool evolution = cfg.kind == "heleshaw" || cfg.kind == "lk-pde" || cfg.kind == "lk-ode";
  const bool needs_map = cfg.kind == "heleshaw" || cfg.kind == "lk-pde";
  const bool pointwise = cfg.kind == "douady-earle" || cfg.kind == "nu-from-field" ||
                         cfg.kind == "check-bounds";

  if (evolution && !(cfg.t_end > 0.0)) bad("t_end", "must be positive for evolution runs");

  if (needs_map) {
    if (!cfg.has_initial_map) {
      bad("initial_map", "required for kind '" + cfg.kind + "'");
    } else {
      if (!(cfg.alpha > 0.0)) bad("initial_map.alpha", "must be positive");
      if (cfg.tail.size() > cfg.N)
        bad("initial_map.tail",
            "has " + std::to_string(cfg.tail.size()) + " coefficients, exceeding numerics.N = " +
                std::to_string(cfg.N));
    }
  }

  if (!is_power_of_two(cfg.N))
    bad("numerics.N", std::to_string(cfg.N) + " is not a power of two");
  if (!is_power_of_two(cfg.n) || cfg.n < 8)
    bad("numerics.n", std::to_string(cfg.n) + " is not a power of two >= 8");
  if (cfg.n_r < 2) bad("numerics.n_r", "must be at least 2");
  if (!(cfg.atol > 0.0)) bad("numerics.atol", "must be positive");
  if (!(cfg.rtol > 0.0)) bad("numerics.rtol", "must be positive");
  if (!(cfg.dt_init > 0.0)) bad("numerics.dt_init", "must be positive");
  if (!(cfg.cusp_tol > 0.0)) bad("numerics.cusp_tol", "must be positive");
  if (!(cfg.tail_tol > 0.0)) bad("numerics.tail_tol", "must be positive");
  if (cfg.sign != -1 && cfg.sign != 1) bad("numerics.sign", "must be -1 or +1");

  // Driving-block arity per kind.
  if (cfg.driving_keys.size() > 1)
    bad("driving", "exactly one driving block allowed, found " +
                       std::to_string(cfg.driving_keys.size()));
  if (cfg.kind == "heleshaw" && !cfg.driving_keys.empty())
    bad("driving", "heleshaw scenarios take no driving block (the interface drives itself)");
  if ((cfg.kind == "lk-pde" || cfg.kind == "lk-ode")) {
    if (cfg.driving_keys.empty())
      bad("driving", "kind '" + cfg.kind +
                         "' requires one driving block: constant, coefficients, or field");
    else if (cfg.driving_kind == "mobius")
      bad("driving.mobius", "not applicable to kind '" + cfg.kind + "'");
  }
  if (cfg.kind == "douady-earle") {
    if (cfg.driving_keys.empty())
      bad("driving", "kind 'douady-earle' requires a mobius boundary-map block");
    else if (cfg.driving_kind != "mobius" && cfg.driving_keys.size() == 1)
      bad("driving." + cfg.driving_kind, "not applicable to kind 'douady-earle'");
  }
  if (cfg.kind == "nu-from-field" || cfg.kind == "check-bounds") {
    if (cfg.driving_keys.empty())
      bad("driving", "kind '" + cfg.kind + "' requires a field block");
    else if (cfg.driving_kind != "field" && cfg.driving_keys.size() == 1)
      bad("driving." + cfg.driving_kind, "not applicable to kind '" + cfg.kind + "'");
  }
  if (cfg.driving_kind == "constant" && !(cfg.p_constant > 0.0))
    bad("driving.constant", "must be positive (Herglotz functions have Re p > 0)");
  if (cfg.driving_kind == "coefficients") {
    if (cfg.p_coefficients.empty()) {
      bad("driving.coefficients", "must be non-empty");
    } else if (!(cfg.p_coefficients[0].real() > 0.0) || cfg.p_coefficients[0].imag() != 0.0) {
      bad("driving.coefficients[0]", "leading coefficient must be real positive");
    }
  }
  if (cfg.driving_kind == "field" && !(cfg.p0 > 0.0))
    bad("driving.field.p0", "must be positive");
  if (cfg.driving_kind == "mobius" && !(std::abs(cfg.mobius_a) < 1.0))
    bad("driving.mobius.a", "must lie inside the open unit disk");

  if (cfg.kind == "lk-ode") {
    if (!(std::abs(cfg.zeta0) > 1.0)) bad("zeta0", "must lie outside the closed unit disk");
    if (cfg.direction != "retracting" && cfg.direction != "expanding")
      bad("direction", "must be 'retracting' or 'expanding'");
  } else {
    if (cfg.has_zeta0) bad("zeta0", "only applicable to kind 'lk-ode'");
    if (cfg.has_direction) bad("direction", "only applicable to kind 'lk-ode'");
  }

  if (cfg.points_given) {
    if (!pointwise) {
      bad("points", "only applicable to pointwise kinds");
    } else {
      if (cfg.points.empty()) bad("points", "must be non-empty when present");
      for (std::size_t i = 0; i < cfg.points.size(); ++i)
        if (!(std::abs(cfg.points[i]) < 1.0))
          bad("points[" + std::to_string(i) + "]", "must lie inside the open unit disk");
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Execution.

namespace {

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns) {
    f_ = std::fopen(path.c_str(), "wb");
    if (!f_) throw DomainError("output: cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < columns.size(); ++i)
      std::fprintf(f_, "%s%s", i ? "," : "", columns[i].c_str());
    std::fputc('\n', f_);
  }
  ~CsvWriter() {
    if (f_) std::fclose(f_);
  }
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
      std::fprintf(f_, "%s%.17g", i ? "," : "", values[i]);
    std::fputc('\n', f_);
  }

 private:
  std::FILE* f_ = nullptr;
};

void write_text(const std::string& path, const std::string& text) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw DomainError("output: cannot open '" + path + "' for writing");
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
}

LaurentMap make_initial_map(const ScenarioConfig& cfg) {
  std::vector<cplx> tail = cfg.tail;
  tail.resize(cfg.N, cplx(0.0));  // fixed coefficient budget for the whole run
  return LaurentMap(cfg.alpha, cfg.a0, std::move(tail));
}

CircleField make_field(const ScenarioConfig& cfg) {
  return CircleField::from_function(
      [&cfg](double theta) {
        double v = cfg.field_constant;
        for (const auto& h : cfg.harmonics)
          v += h.cos_amp * std::cos(h.m * theta) + h.sin_amp * std::sin(h.m * theta);
        return v;
      },
      cfg.n);
}

HerglotzFunction make_driving(const ScenarioConfig& cfg) {
  if (cfg.driving_kind == "constant") return HerglotzFunction::constant(cfg.p_constant);
  if (cfg.driving_kind == "coefficients")
    return HerglotzFunction::from_coefficients(cfg.p_coefficients);
  if (cfg.driving_kind == "field")
    return HerglotzFunction::from_field(make_field(cfg), cfg.p0, cfg.p1);
  throw DomainError("driving: no usable driving block");
}

std::vector<std::string> evolution_columns(std::size_t N) {
  std::vector<std::string> cols = {"t", "alpha", "re_a0", "im_a0"};
  for (std::size_t k = 1; k <= N; ++k) {
    cols.push_back("re_a" + std::to_string(k));
    cols.push_back("im_a" + std::to_string(k));
  }
  for (const char* c : {"area", "m1_re", "m1_im", "m2_re", "m2_im", "m3_re", "m3_im",
                        "min_df", "rep_margin"})
    cols.emplace_back(c);
  return cols;
}

void write_evolution_csv(const std::string& path, const std::vector<EvolutionState>& states,
                         std::size_t N) {
  CsvWriter csv(path, evolution_columns(N));
  std::vector<double> row;
  for (const EvolutionState& s : states) {
    row.clear();
    row.push_back(s.t);
    row.push_back(s.f.alpha());
    row.push_back(s.f.a0().real());
    row.push_back(s.f.a0().imag());
    for (std::size_t k = 1; k <= N; ++k) {
      const cplx a = k <= s.f.tail_size() ? s.f.a(k) : cplx(0.0);
      row.push_back(a.real());
      row.push_back(a.imag());
    }
    row.push_back(s.diag.area);
    for (const cplx& m : s.diag.moments) {
      row.push_back(m.real());
      row.push_back(m.imag());
    }
    row.push_back(s.diag.min_df);
    row.push_back(s.diag.rep_margin);
    csv.row(row);
  }
}

json snapshot_of_state(const EvolutionState& s, std::size_t n) {
  json snap;
  snap["t"] = s.t;
  snap["map"]["alpha"] = s.f.alpha();
  snap["map"]["a0"] = cxj(s.f.a0());
  json tail = json::array();
  for (std::size_t k = 1; k <= s.f.tail_size(); ++k) tail.push_back(cxj(s.f.a(k)));
  snap["map"]["tail"] = std::move(tail);
  const CircleGrid b = s.f.boundary(n);
  json vals = json::array();
  for (std::size_t j = 0; j < n; ++j) vals.push_back(cxj(b.value(j)));
  snap["boundary"]["n"] = n;
  snap["boundary"]["values"] = std::move(vals);
  snap["diagnostics"] = {{"area", s.diag.area},
                         {"min_df", s.diag.min_df},
                         {"min_df_theta", s.diag.min_df_theta},
                         {"rep_margin", s.diag.rep_margin},
                         {"tail_energy", s.diag.tail_energy}};
  return snap;
}

json evolution_snapshots(const std::vector<EvolutionState>& states, long every,
                         std::size_t n) {
  json arr = json::array();
  if (states.empty()) return arr;
  if (every <= 0) {
    arr.push_back(snapshot_of_state(states.front(), n));
    if (states.size() > 1) arr.push_back(snapshot_of_state(states.back(), n));
    return arr;
  }
  for (std::size_t i = 0; i < states.size(); i += static_cast<std::size_t>(every))
    arr.push_back(snapshot_of_state(states[i], n));
  if ((states.size() - 1) % static_cast<std::size_t>(every) != 0)
    arr.push_back(snapshot_of_state(states.back(), n));
  return arr;
}

struct KindOutput {
  std::vector<std::string> columns;
  json snapshots = json::array();
  json result;         // kind-specific summary for the manifest
  int exit_code = 0;
  std::string status = "ok";
  std::string message = "completed";
};

KindOutput run_evolution(const ScenarioConfig& cfg, const std::string& csv_path,
                         long snapshot_every) {
  KindOutput out;
  const LaurentMap f0 = make_initial_map(cfg);
  EvolutionResult res;
  if (cfg.kind == "heleshaw") {
    HsControls hc;
    hc.atol = cfg.atol;
    hc.rtol = cfg.rtol;
    hc.dt_init = cfg.dt_init;
    hc.n = cfg.n;
    hc.cusp_tol = cfg.cusp_tol;
    hc.tail_tol = cfg.tail_tol;
    hc.sign = cfg.sign;
    res = hs_evolve(f0, cfg.t_end, hc);
  } else {
    LkControls lc;
    lc.atol = cfg.atol;
    lc.rtol = cfg.rtol;
    lc.dt_init = cfg.dt_init;
    lc.n = cfg.n;
    lc.cusp_tol = cfg.cusp_tol;
    lc.tail_tol = cfg.tail_tol;
    res = lk_pde_evolve(f0, make_driving(cfg), cfg.t_end, lc);
  }

  write_evolution_csv(csv_path, res.states, cfg.N);
  out.columns = evolution_columns(cfg.N);
  out.snapshots = evolution_snapshots(res.states, snapshot_every, cfg.n);

  static const char* status_names[] = {"ok",            "cusp",
                                       "self_intersection", "tail_overflow",
                                       "positivity_failure", "area_depleted"};
  out.status = status_names[static_cast<int>(res.status)];
  out.message = res.message;
  out.exit_code = res.status == EvolutionStatus::reached_t_end ? 0 : 3;
  out.result["final_t"] = res.states.empty() ? 0.0 : res.states.back().t;
  out.result["steps"] = res.states.size();
  out.result["final_alpha"] = res.states.empty() ? 0.0 : res.states.back().f.alpha();
  if (res.blowup_estimate)
    out.result["blowup_estimate"] = *res.blowup_estimate;
  else
    out.result["blowup_estimate"] = nullptr;
  return out;
}

KindOutput run_lk_ode(const ScenarioConfig& cfg, const std::string& csv_path) {
  KindOutput out;
  const HerglotzFunction p = make_driving(cfg);
  const FlowDirection dir = cfg.direction == "expanding" ? FlowDirection::expanding
                                                         : FlowDirection::retracting;
  OdeOptions opt;
  opt.atol = cfg.atol;
  opt.rtol = cfg.rtol;
  opt.dt_init = cfg.dt_init;
  const LkOdeResult res = lk_ode_integrate(cfg.zeta0, p, cfg.t_end, dir, opt);

  out.columns = {"t", "re_w", "im_w", "re_et_w", "im_et_w", "re_emt_w", "im_emt_w"};
  CsvWriter csv(csv_path, out.columns);
  for (const auto& [t, w] : res.trajectory) {
    const cplx up = std::exp(t) * w;    // e^{+t} w: constant for p == 1 retracting
    const cplx down = std::exp(-t) * w; // e^{-t} w: constant for p == 1 expanding
    csv.row({t, w.real(), w.imag(), up.real(), up.imag(), down.real(), down.imag()});
  }
  out.result["exited"] = res.exited;
  if (res.exited)
    out.result["exit_time"] = res.exit_time;
  else
    out.result["exit_time"] = nullptr;
  out.result["w_end"] = cxj(res.w_end);
  out.message = res.exited ? "trajectory reached the unit circle" : "reached t_end";
  return out;
}

std::vector<cplx> default_points(const ScenarioConfig& cfg) {
  if (cfg.points_given) return cfg.points;
  std::vector<cplx> pts;
  if (cfg.kind == "douady-earle") {
    for (double r : {0.3, 0.6})
      for (int j = 0; j < 10; ++j) pts.push_back(r * unit(kTwoPi * j / 10.0 + 0.1));
  } else {
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9})
      for (int j = 0; j < 12; ++j) pts.push_back(r * unit(kTwoPi * j / 12.0));
  }
  return pts;
}

KindOutput run_douady_earle(const ScenarioConfig& cfg, const std::string& csv_path) {
  KindOutput out;
  const CircleHomeomorphism phi = CircleHomeomorphism::mobius(cfg.mobius_a, cfg.mobius_rot,
                                                              cfg.n);
  const std::vector<cplx> pts = default_points(cfg);
  struct Row {
    BarycenterSolve solve;
    cplx mu;
  };
  std::vector<Row> rows(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    rows[i].solve = extend(phi, pts[i]);
    rows[i].mu = beltrami_of_extension(phi, pts[i]);
  });

  out.columns = {"re_zeta", "im_zeta", "re_w", "im_w", "residual", "iterations", "abs_mu"};
  CsvWriter csv(csv_path, out.columns);
  double worst_mu = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    csv.row({pts[i].real(), pts[i].imag(), rows[i].solve.w.real(), rows[i].solve.w.imag(),
             rows[i].solve.residual, static_cast<double>(rows[i].solve.iterations),
             std::abs(rows[i].mu)});
    worst_mu = std::max(worst_mu, std::abs(rows[i].mu));
  }

  json vals = json::array();
  for (std::size_t j = 0; j < cfg.n; ++j) vals.push_back(cxj(phi.value(j)));
  json snap;
  snap["boundary_map"]["n"] = cfg.n;
  snap["boundary_map"]["values"] = std::move(vals);
  out.snapshots.push_back(std::move(snap));
  out.result["points"] = pts.size();
  out.result["max_abs_mu"] = worst_mu;
  return out;
}

KindOutput run_field_report(const ScenarioConfig& cfg, const std::string& csv_path) {
  KindOutput out;
  const CircleField d = make_field(cfg);
  const double q = d.max_abs();
  const double ratio_bound = 0.5 * nu_ratio_bound(d);
  const std::vector<cplx> pts = default_points(cfg);

  out.columns = {"re_zeta", "im_zeta",    "re_nu",      "im_nu",     "abs_nu",
                 "cor1_bound", "cor1_margin", "cor2_ratio", "cor2_margin"};
  CsvWriter csv(csv_path, out.columns);

  std::vector<cplx> nu_vals(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { nu_vals[i] = nu_from_field(d, pts[i]); });
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double r2 = std::norm(pts[i]);
    const double anu = std::abs(nu_vals[i]);
    const double cor1 = 3.0 * q * (1.0 + r2) / (1.0 - r2);
    const double ratio = anu * r2 / (1.0 - r2);
    csv.row({pts[i].real(), pts[i].imag(), nu_vals[i].real(), nu_vals[i].imag(), anu, cor1,
             cor1 - anu, ratio, ratio_bound - ratio});
  }

  // Dense margin scan, including radii close to the boundary.
  static const double scan_radii[] = {0.1, 0.2, 0.3, 0.4,  0.5,  0.6,
                                      0.7, 0.8, 0.9, 0.95, 0.99, 0.999};
  const std::size_t n_ang = 64;
  const std::size_t total = std::size(scan_radii) * n_ang;
  std::vector<double> margins1(total), margins2(total);
  parallel_for(total, [&](std::size_t idx) {
    const double r = scan_radii[idx / n_ang];
    const cplx z = r * unit(kTwoPi * static_cast<double>(idx % n_ang) / n_ang);
    const double anu = std::abs(nu_from_field(d, z));
    const double r2 = std::norm(z);
    margins1[idx] = 3.0 * q * (1.0 + r2) / (1.0 - r2) - anu;
    margins2[idx] = ratio_bound - anu * r2 / (1.0 - r2);
  });
  const double worst1 = *std::min_element(margins1.begin(), margins1.end());
  const double worst2 = *std::min_element(margins2.begin(), margins2.end());
  out.result["sup_bound_margin"] = worst1;
  out.result["ratio_bound_margin"] = worst2;
  out.result["field_max"] = q;
  out.result["ratio_bound"] = ratio_bound;

  if (cfg.kind == "check-bounds" && (worst1 < -1e-9 || worst2 < -1e-9)) {
    out.exit_code = 3;
    out.status = "bound_violation";
    out.message = "a harmonic-Beltrami bound failed on the scan grid";
  }

  if (cfg.kind == "nu-from-field") {
    // Field snapshot on a compact polar grid with the spec inline.
    const std::size_t snr = std::min<std::size_t>(cfg.n_r, 32);
    const std::size_t snt = std::min<std::size_t>(cfg.n, 64);
    auto grid = DiskQuadrature::make(snr, snt);
    std::vector<cplx> samples(grid->size());
    parallel_for(grid->size(), [&](std::size_t idx) {
      const std::size_t i = idx / snt, j = idx % snt;
      samples[idx] = nu_from_field(d, grid->point(i, j));
    });
    json snap;
    snap["grid"]["n_r"] = snr;
    snap["grid"]["n_theta"] = snt;
    json radii = json::array();
    for (std::size_t i = 0; i < snr; ++i) radii.push_back(grid->radius(i));
    snap["grid"]["radii"] = std::move(radii);
    json vals = json::array();
    for (const cplx& s : samples) vals.push_back(cxj(s));
    snap["samples"] = std::move(vals);
    out.snapshots.push_back(std::move(snap));
  }
  return out;
}

}  // namespace

std::string qcflow_version() { return "0.1.0"; }

RunArtifacts run_scenario(const ScenarioConfig& cfg, const std::string& out_dir,
                          long snapshot_every) {
  const auto t_start = std::chrono::steady_clock::now();
  std::filesystem::create_directories(out_dir);
  const std::string csv_path = out_dir + "/trajectory.csv";
  const std::string snap_path = out_dir + "/snapshots.json";
  const std::string manifest_path = out_dir + "/manifest.json";

  KindOutput ko;
  try {
    if (cfg.kind == "heleshaw" || cfg.kind == "lk-pde")
      ko = run_evolution(cfg, csv_path, snapshot_every);
    else if (cfg.kind == "lk-ode")
      ko = run_lk_ode(cfg, csv_path);
    else if (cfg.kind == "douady-earle")
      ko = run_douady_earle(cfg, csv_path);
    else
      ko = run_field_report(cfg, csv_path);
  } catch (const std::exception& e) {
    ko.exit_code = 3;
    ko.status = "numerical_failure";
    ko.message = e.what();
  }

  write_text(snap_path, json(ko.snapshots).dump(2) + "\n");

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  json manifest;
  manifest["tool"] = "qcflow";
  manifest["version"] = qcflow_version();
  manifest["compiler"] = __VERSION__;
  manifest["kind"] = cfg.kind;
  manifest["status"] = ko.status;
  manifest["message"] = ko.message;
  manifest["exit_code"] = ko.exit_code;
  manifest["wall_time_seconds"] = wall;  // informational; excluded from determinism checks
  manifest["columns"] = ko.columns;
  manifest["files"] = {"trajectory.csv", "snapshots.json", "manifest.json"};
  manifest["result"] = ko.result.is_null() ? json::object() : ko.result;
  manifest["config"] = cfg.echo;
  write_text(manifest_path, manifest.dump(2) + "\n");

  RunArtifacts art;
  art.exit_code = ko.exit_code;
  art.status = ko.status;
  art.message = ko.message;
  art.files = {csv_path, snap_path, manifest_path};
  return art;
}

}  // namespace qcflow
