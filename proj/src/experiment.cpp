#include "lzs/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lzs/io.hpp"
#include "lzs/presets.hpp"

namespace lzs {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path, msg);
}

const json* find(const json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double num_at(const json& j, const std::string& parent, const char* key) {
  const json* v = find(j, key);
  if (!v) fail(parent + "." + key, "required number missing");
  if (!v->is_number()) fail(parent + "." + key, "must be a number");
  return v->get<double>();
}

double num_or(const json& j, const std::string& parent, const char* key, double def) {
  const json* v = find(j, key);
  if (!v) return def;
  if (!v->is_number()) fail(parent + "." + key, "must be a number");
  return v->get<double>();
}

int int_at(const json& j, const std::string& parent, const char* key) {
  const json* v = find(j, key);
  if (!v) fail(parent + "." + key, "required integer missing");
  if (!v->is_number_integer()) fail(parent + "." + key, "must be an integer");
  return v->get<int>();
}

std::string string_or(const json& j, const std::string& parent, const char* key,
                      const std::string& def) {
  const json* v = find(j, key);
  if (!v) return def;
  if (!v->is_string()) fail(parent + "." + key, "must be a string");
  return v->get<std::string>();
}

bool bool_or(const json& j, const std::string& parent, const char* key, bool def) {
  const json* v = find(j, key);
  if (!v) return def;
  if (!v->is_boolean()) fail(parent + "." + key, "must be a boolean");
  return v->get<bool>();
}

ExperimentKind parse_kind(const std::string& s) {
  if (s == "trajectory") return ExperimentKind::Trajectory;
  if (s == "spectrum") return ExperimentKind::Spectrum;
  if (s == "gate") return ExperimentKind::Gate;
  if (s == "time_scan") return ExperimentKind::TimeScan;
  if (s == "grid_2d") return ExperimentKind::Grid2d;
  fail("kind", "unknown kind '" + s + "' (trajectory|spectrum|gate|time_scan|grid_2d)");
}

Metric parse_metric(const std::string& s) {
  if (s == "fidelity") return Metric::Fidelity;
  if (s == "p_g_final") return Metric::PgFinal;
  if (s == "phase_over_pi") return Metric::PhaseOverPi;
  fail("metric", "unknown metric '" + s + "' (fidelity|p_g_final|phase_over_pi)");
}

SchemeKind parse_scheme(const std::string& s) {
  if (s == "lzs") return SchemeKind::Lzs;
  if (s == "coherent") return SchemeKind::Coherent;
  if (s == "adiabatic") return SchemeKind::Adiabatic;
  fail("scheme", "unknown scheme '" + s + "' (lzs|coherent|adiabatic)");
}

DeviationAxis parse_axis(const std::string& s, const std::string& path) {
  if (s == "d_amplitude_rel") return DeviationAxis::AmplitudeRel;
  if (s == "d_detuning0_rel") return DeviationAxis::Detuning0Rel;
  if (s == "d_omega_rel") return DeviationAxis::OmegaRel;
  if (s == "d_phi_over_pi") return DeviationAxis::PhiOverPi;
  fail(path, "unknown axis '" + s +
                 "' (d_amplitude_rel|d_detuning0_rel|d_omega_rel|d_phi_over_pi)");
}

// Drive resolution order: preset fields, then channel coupling, then
// explicit drive overrides.
DriveParams resolve_drive(const json& doc, double* duration_out) {
  DriveParams p;
  bool have_base = false;
  if (const json* pre = find(doc, "preset")) {
    if (!pre->is_string()) fail("preset", "must be a string");
    const auto* dp = presets::find_drive_preset(pre->get<std::string>());
    if (!dp) fail("preset", "unknown preset '" + pre->get<std::string>() + "'");
    p = dp->drive;
    *duration_out = dp->duration;
    have_base = true;
  }
  if (const json* ch = find(doc, "channel")) {
    if (!ch->is_string()) fail("channel", "must be a string");
    if (ch->get<std::string>() != presets::cs_channel().name)
      fail("channel", "unknown channel '" + ch->get<std::string>() + "'");
    if (!have_base) {
      p.v_dd = vdd_from_channel(presets::cs_channel().channel);
      p.delta0 = presets::cs_channel().delta0;
      p.units = UnitSystem::RadPerMicrosecond;
      have_base = true;
    }
  }
  if (const json* d = find(doc, "drive")) {
    if (!d->is_object()) fail("drive", "must be an object");
    if (have_base) {
      p.v_dd = num_or(*d, "drive", "v_dd", p.v_dd);
      p.a = num_or(*d, "drive", "a", p.a);
      p.delta0 = num_or(*d, "drive", "delta0", p.delta0);
      p.omega = num_or(*d, "drive", "omega", p.omega);
      p.phi = num_or(*d, "drive", "phi", p.phi);
    } else {
      p.v_dd = num_at(*d, "drive", "v_dd");
      p.omega = num_at(*d, "drive", "omega");
      p.a = num_or(*d, "drive", "a", 0.0);
      p.delta0 = num_or(*d, "drive", "delta0", 0.0);
      p.phi = num_or(*d, "drive", "phi", 0.0);
    }
    const std::string units = string_or(*d, "drive", "units",
                                        p.units == UnitSystem::Dimensionless ? "dimensionless"
                                                                             : "rad_per_us");
    if (units == "dimensionless")
      p.units = UnitSystem::Dimensionless;
    else if (units == "rad_per_us")
      p.units = UnitSystem::RadPerMicrosecond;
    else
      fail("drive.units", "must be 'dimensionless' or 'rad_per_us'");
  } else if (!have_base) {
    fail("drive", "required (or reference a preset/channel)");
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    fail("drive", e.what());
  }
  return p;
}

std::optional<GateDecay> resolve_decay(const json& doc) {
  if (!bool_or(doc, "", "decay", false)) return std::nullopt;
  if (const json* dr = find(doc, "decay_rates")) {
    if (!dr->is_object()) fail("decay_rates", "must be an object");
    DecayRates pair{num_at(*dr, "decay_rates", "gamma_g"), num_at(*dr, "decay_rates", "gamma_e")};
    GateDecay d = GateDecay::from_pair(pair);
    d.gamma_single_01 = num_or(*dr, "decay_rates", "gamma_single_01", d.gamma_single_01);
    d.gamma_single_10 = num_or(*dr, "decay_rates", "gamma_single_10", d.gamma_single_10);
    return d;
  }
  if (find(doc, "channel")) return GateDecay::from_channel(presets::cs_channel().channel);
  fail("decay", "true requires 'channel' or 'decay_rates' for the rates");
}

IntegratorConfig resolve_integrator(const json& doc, const DriveParams& drive, double duration) {
  IntegratorConfig cfg = default_config_for(drive, duration);
  if (const json* ij = find(doc, "integrator")) {
    if (!ij->is_object()) fail("integrator", "must be an object");
    const std::string method = string_or(*ij, "integrator", "method", "rk45");
    if (method == "rk45")
      cfg.method = StepperMethod::Rk45Adaptive;
    else if (method == "rk4")
      cfg.method = StepperMethod::Rk4Fixed;
    else
      fail("integrator.method", "must be 'rk45' or 'rk4'");
    cfg.rel_tol = num_or(*ij, "integrator", "rel_tol", cfg.rel_tol);
    cfg.abs_tol = num_or(*ij, "integrator", "abs_tol", cfg.abs_tol);
    cfg.max_step = num_or(*ij, "integrator", "max_step", cfg.max_step);
    cfg.sample_interval = num_or(*ij, "integrator", "sample_interval", cfg.sample_interval);
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail("integrator", e.what());
  }
  return cfg;
}

AxisSpec parse_axis_spec(const json& a, const std::string& path) {
  if (!a.is_object()) fail(path, "must be an object");
  AxisSpec spec;
  const json* name = find(a, "axis");
  if (!name || !name->is_string()) fail(path + ".axis", "required string missing");
  spec.axis = parse_axis(name->get<std::string>(), path + ".axis");
  spec.lo = num_at(a, path, "lo");
  spec.hi = num_at(a, path, "hi");
  spec.count = int_at(a, path, "count");
  if (spec.count < 2) fail(path + ".count", "must be >= 2");
  return spec;
}

json canonical_config(const ExperimentConfig& c) {
  json doc;
  switch (c.kind) {
    case ExperimentKind::Trajectory: doc["kind"] = "trajectory"; break;
    case ExperimentKind::Spectrum: doc["kind"] = "spectrum"; break;
    case ExperimentKind::Gate: doc["kind"] = "gate"; break;
    case ExperimentKind::TimeScan: doc["kind"] = "time_scan"; break;
    case ExperimentKind::Grid2d: doc["kind"] = "grid_2d"; break;
  }
  doc["drive"] = io::drive_json(c.drive);
  doc["duration"] = c.duration;
  if (c.kind == ExperimentKind::Trajectory) {
    switch (c.frame.tag) {
      case FrameTag::Lab: doc["frame"] = "lab"; break;
      case FrameTag::Rotated: doc["frame"] = "rotated"; break;
      case FrameTag::Interaction: doc["frame"] = "interaction"; break;
      case FrameTag::FloquetTruncated:
        doc["frame"] = "floquet";
        doc["floquet_cutoff"] = c.frame.harmonic_cutoff;
        break;
    }
  }
  if (c.kind == ExperimentKind::Gate || c.kind == ExperimentKind::TimeScan) {
    switch (c.scheme) {
      case SchemeKind::Lzs: doc["scheme"] = "lzs"; break;
      case SchemeKind::Coherent: doc["scheme"] = "coherent"; break;
      case SchemeKind::Adiabatic: doc["scheme"] = "adiabatic"; break;
    }
    if (c.scheme == SchemeKind::Adiabatic)
      doc["pulse"] = {{"s1", c.pulse.s1}, {"s2", c.pulse.s2}, {"total_t", c.pulse.total_t},
                      {"t1", c.pulse.t1}, {"t2", c.pulse.t2}, {"v_dd", c.pulse_v_dd}};
  }
  doc["decay"] = c.decay.has_value();
  if (c.decay)
    doc["decay_rates"] = {{"gamma_g", c.decay->pair.gamma_g},
                          {"gamma_e", c.decay->pair.gamma_e},
                          {"gamma_single_01", c.decay->gamma_single_01},
                          {"gamma_single_10", c.decay->gamma_single_10}};
  doc["integrator"] = io::integrator_json(c.integrator);
  if (c.kind == ExperimentKind::TimeScan) doc["deviations"] = {{"values", c.deviations}};
  if (c.kind == ExperimentKind::Grid2d) {
    auto spec = [](const AxisSpec& s) {
      return json{{"axis", axis_name(s.axis)}, {"lo", s.lo}, {"hi", s.hi}, {"count", s.count}};
    };
    doc["axes"] = json::array({spec(c.ax1), spec(c.ax2)});
  }
  if (c.kind != ExperimentKind::Trajectory && c.kind != ExperimentKind::Spectrum &&
      c.kind != ExperimentKind::Gate)
    doc["metric"] = metric_name(c.metric);
  doc["output"] = {{"path", c.output_path},
                   {"format", c.format == OutputFormat::Csv ? "csv" : "json"}};
  return doc;
}

}  // namespace

ExperimentConfig parse_experiment(const json& doc) {
  if (!doc.is_object()) fail("(root)", "config must be a JSON object");
  static const std::vector<std::string> known = {
      "kind",   "preset",      "channel", "drive",  "duration", "frame",
      "floquet_cutoff", "scheme", "pulse", "decay",  "decay_rates", "integrator",
      "deviations", "axes", "metric", "output"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      fail(it.key(), "unknown field");
  }

  ExperimentConfig c;
  const json* kind = find(doc, "kind");
  if (!kind || !kind->is_string()) fail("kind", "required string missing");
  c.kind = parse_kind(kind->get<std::string>());

  double preset_duration = 0.0;
  c.drive = resolve_drive(doc, &preset_duration);
  c.duration = num_or(doc, "", "duration", preset_duration);

  c.decay = resolve_decay(doc);

  // scheme and pulse (gate / time_scan)
  if (c.kind == ExperimentKind::Gate || c.kind == ExperimentKind::TimeScan) {
    c.scheme = parse_scheme(string_or(doc, "", "scheme", "lzs"));
    if (c.scheme == SchemeKind::Adiabatic) {
      const auto& base = presets::adiabatic_beterov();
      c.pulse = base.pulse;
      c.pulse_v_dd = base.v_dd;
      if (const json* pj = find(doc, "pulse")) {
        if (!pj->is_object()) fail("pulse", "must be an object");
        c.pulse.s1 = num_or(*pj, "pulse", "s1", c.pulse.s1);
        c.pulse.s2 = num_or(*pj, "pulse", "s2", c.pulse.s2);
        c.pulse.total_t = num_or(*pj, "pulse", "total_t", c.pulse.total_t);
        c.pulse.t1 = num_or(*pj, "pulse", "t1", c.pulse.t1);
        c.pulse.t2 = num_or(*pj, "pulse", "t2", c.pulse.t2);
        c.pulse_v_dd = num_or(*pj, "pulse", "v_dd", c.pulse_v_dd);
      }
      try {
        c.pulse.validate();
      } catch (const std::invalid_argument& e) {
        fail("pulse", e.what());
      }
      c.duration = c.pulse.total_t;
    } else if (c.scheme == SchemeKind::Coherent && !find(doc, "duration") &&
               preset_duration == 0.0) {
      c.duration = two_pi / c.drive.v_dd;
    }
  }
  if (c.kind != ExperimentKind::Gate || c.scheme != SchemeKind::Adiabatic) {
    if (!(c.duration > 0.0)) fail("duration", "must be > 0 (set it or use a preset)");
  }

  // frame (trajectory)
  if (c.kind == ExperimentKind::Trajectory) {
    const std::string fr = string_or(doc, "", "frame", "lab");
    if (fr == "lab")
      c.frame = Frame::lab();
    else if (fr == "rotated")
      c.frame = Frame::rotated();
    else if (fr == "interaction")
      c.frame = Frame::interaction();
    else if (fr == "floquet") {
      int cutoff = default_harmonic_cutoff(c.drive);
      if (find(doc, "floquet_cutoff")) cutoff = int_at(doc, "", "floquet_cutoff");
      if (cutoff < 1) fail("floquet_cutoff", "must be >= 1");
      c.frame = Frame::floquet(cutoff);
    } else
      fail("frame", "unknown frame '" + fr + "' (lab|rotated|interaction|floquet)");
    if (c.frame.tag != FrameTag::Lab && c.drive.phi != 0.0)
      fail("frame", "frames other than 'lab' require drive.phi = 0");
  }

  c.integrator = resolve_integrator(doc, c.drive, c.duration);

  // deviations (time_scan)
  if (c.kind == ExperimentKind::TimeScan) {
    const json* dv = find(doc, "deviations");
    if (!dv) fail("deviations", "required for time_scan");
    if (const json* vals = find(*dv, "values")) {
      if (!vals->is_array()) fail("deviations.values", "must be an array of numbers");
      for (const auto& v : *vals) {
        if (!v.is_number()) fail("deviations.values", "must be an array of numbers");
        c.deviations.push_back(v.get<double>());
      }
    } else {
      const double lo = num_at(*dv, "deviations", "lo");
      const double hi = num_at(*dv, "deviations", "hi");
      const int count = int_at(*dv, "deviations", "count");
      if (count < 2) fail("deviations.count", "must be >= 2");
      c.deviations = SweepAxis::linspace("", lo, hi, count).values;
    }
    for (double d : c.deviations)
      if (!(d > -0.5 && d < 0.5)) fail("deviations", "values must lie in (-0.5, 0.5)");
  }

  // axes (grid_2d)
  if (c.kind == ExperimentKind::Grid2d) {
    const json* axes = find(doc, "axes");
    if (!axes || !axes->is_array() || axes->size() != 2)
      fail("axes", "grid_2d requires exactly two axis objects");
    c.ax1 = parse_axis_spec((*axes)[0], "axes[0]");
    c.ax2 = parse_axis_spec((*axes)[1], "axes[1]");
  }

  if (c.kind == ExperimentKind::TimeScan || c.kind == ExperimentKind::Grid2d)
    c.metric = parse_metric(string_or(doc, "", "metric", "fidelity"));

  // output
  const json* out = find(doc, "output");
  if (!out || !out->is_object()) fail("output", "required object missing");
  const json* path = find(*out, "path");
  if (!path || !path->is_string() || path->get<std::string>().empty())
    fail("output.path", "required string missing");
  c.output_path = path->get<std::string>();
  std::string fmt = string_or(*out, "output", "format", "");
  if (fmt.empty()) {
    const auto& p = c.output_path;
    fmt = p.size() >= 5 && p.substr(p.size() - 5) == ".json" ? "json" : "csv";
  }
  if (fmt == "csv")
    c.format = OutputFormat::Csv;
  else if (fmt == "json")
    c.format = OutputFormat::Json;
  else
    fail("output.format", "must be 'csv' or 'json'");
  if (c.kind == ExperimentKind::Gate && c.format != OutputFormat::Json)
    fail("output.format", "gate results serialize to json");

  c.resolved = canonical_config(c);
  return c;
}

ExperimentConfig load_experiment_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(path, "cannot open config file");
  json doc;
  try {
    f >> doc;
  } catch (const json::exception& e) {
    throw ConfigError(path, std::string("invalid JSON: ") + e.what());
  }
  return parse_experiment(doc);
}

namespace {

SchemeConfig scheme_config(const ExperimentConfig& c) {
  SchemeConfig s;
  s.kind = c.scheme;
  s.drive = c.drive;
  s.duration = c.duration;
  s.v_dd = c.scheme == SchemeKind::Adiabatic ? c.pulse_v_dd : c.drive.v_dd;
  s.pulse = c.pulse;
  return s;
}

}  // namespace

std::vector<std::string> run_experiment(const ExperimentConfig& cfg) {
  const auto t_start = std::chrono::steady_clock::now();
  std::optional<DecayRates> pair;
  if (cfg.decay) pair = cfg.decay->pair;

  std::string payload;
  switch (cfg.kind) {
    case ExperimentKind::Trajectory: {
      const PropagationResult res = propagate(cfg.drive, cfg.frame, pair,
                                              TwoLevelState::ground(), cfg.duration,
                                              cfg.integrator);
      payload = cfg.format == OutputFormat::Csv
                    ? io::trajectory_csv(res.trajectory)
                    : io::trajectory_json(res.trajectory).dump(2) + "\n";
      break;
    }
    case ExperimentKind::Spectrum: {
      std::vector<SpectralPoint> pts;
      const int n = std::max(2, static_cast<int>(std::ceil(cfg.duration /
                                                           cfg.integrator.sample_interval)));
      pts.reserve(n + 1);
      for (int i = 0; i <= n; ++i)
        pts.push_back(instantaneous_spectrum(cfg.drive, cfg.duration * i / n));
      payload = cfg.format == OutputFormat::Csv ? io::spectrum_csv(pts)
                                                : io::spectrum_json(pts).dump(2) + "\n";
      break;
    }
    case ExperimentKind::Gate: {
      GateResult r;
      if (cfg.scheme == SchemeKind::Lzs)
        r = run_cz_lzs(cfg.drive, cfg.decay, cfg.duration, cfg.integrator);
      else if (cfg.scheme == SchemeKind::Coherent)
        r = run_cz_coherent(cfg.drive.v_dd, cfg.decay, cfg.duration, cfg.integrator);
      else
        r = run_cz_adiabatic(cfg.pulse, cfg.pulse_v_dd, cfg.decay, cfg.integrator);
      payload = io::gate_json(r).dump(2) + "\n";
      break;
    }
    case ExperimentKind::TimeScan: {
      const SweepGrid grid = scan_time_deviation(scheme_config(cfg), cfg.decay, cfg.deviations,
                                                 cfg.metric, cfg.integrator);
      payload = cfg.format == OutputFormat::Csv ? io::grid_csv(grid)
                                                : io::grid_json(grid).dump(2) + "\n";
      break;
    }
    case ExperimentKind::Grid2d: {
      const SweepGrid grid = scan_2d(cfg.drive, cfg.duration, cfg.decay, cfg.ax1, cfg.ax2,
                                     cfg.metric, cfg.integrator);
      payload = cfg.format == OutputFormat::Csv ? io::grid_csv(grid)
                                                : io::grid_json(grid).dump(2) + "\n";
      break;
    }
  }

  io::atomic_write_file(cfg.output_path, payload);

  const auto t_end = std::chrono::steady_clock::now();
  nlohmann::json meta;
  meta["tool_version"] = tool_version;
  meta["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t_end - t_start).count();
  meta["resolved_config"] = cfg.resolved;
  const std::string meta_path = cfg.output_path + ".meta.json";
  io::atomic_write_file(meta_path, meta.dump(2) + "\n");

  return {cfg.output_path, meta_path};
}

std::string list_presets_text() {
  std::ostringstream out;
  out << "drive presets (v_dd, a, delta0, omega | duration):\n";
  for (const auto& p : presets::drive_presets()) {
    out << "  " << p.name << ": (" << io::format_number(p.drive.v_dd) << ", "
        << io::format_number(p.drive.a) << ", " << io::format_number(p.drive.delta0) << ", "
        << io::format_number(p.drive.omega) << ") | " << io::format_number(p.duration)
        << (p.drive.units == UnitSystem::Dimensionless ? "  [v_dd units]" : "  [rad/us, us]")
        << "  -- " << p.description << "\n";
  }
  const auto& ch = presets::cs_channel();
  out << "channels:\n";
  out << "  " << ch.name << ": " << ch.channel.label
      << ", c3 = " << io::format_number(ch.channel.c3)
      << " MHz um^3, r = " << io::format_number(ch.channel.r)
      << " um, delta0/2pi = " << io::format_number(ch.delta0 / two_pi)
      << " MHz, lifetimes (us) = {" << io::format_number(ch.channel.lifetimes[0]) << ", "
      << io::format_number(ch.channel.lifetimes[1]) << ", "
      << io::format_number(ch.channel.lifetimes[2]) << ", "
      << io::format_number(ch.channel.lifetimes[3]) << "}\n";
  const auto& ad = presets::adiabatic_beterov();
  out << "adiabatic pulses:\n";
  out << "  " << ad.name << ": s1/2pi = " << io::format_number(ad.pulse.s1 / two_pi)
      << " MHz/us, s2/2pi = " << io::format_number(ad.pulse.s2 / two_pi)
      << " MHz/us^5, T = " << io::format_number(ad.pulse.total_t)
      << " us, t1 = " << io::format_number(ad.pulse.t1)
      << " us, t2 = " << io::format_number(ad.pulse.t2)
      << " us, v_dd/2pi = " << io::format_number(ad.v_dd / two_pi) << " MHz\n";
  const auto& st = presets::rb_n37_stark();
  out << "stark presets:\n";
  out << "  " << st.name << ": e_dc = " << io::format_number(st.field.e_dc)
      << " V/cm, e_rf = " << io::format_number(st.field.e_rf)
      << " V/cm, kappa/2pi = " << io::format_number(st.field.kappa / two_pi)
      << " MHz/(V/cm)^2, delta0_bare/2pi = " << io::format_number(st.field.delta0_bare / two_pi)
      << " MHz, omega/2pi = " << io::format_number(st.omega / two_pi)
      << " MHz, v_dd/2pi = " << io::format_number(st.v_dd / two_pi) << " MHz\n";
  return out.str();
}

}  // namespace lzs
