// Copyright 2026 The crda Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "crda/error_analysis.hpp"
#include "crda/errors.hpp"
#include "crda/frames.hpp"
#include "crda/hamiltonians.hpp"
#include "crda/krylov.hpp"
#include "crda/schedule.hpp"

namespace crda::cli {

namespace {

using nlohmann::json;

json config_json(const ConfigMap& c) {
  json j = json::object();
  for (const auto& [k, v] : c) j[k] = v;
  return j;
}

bool config_flag(const ConfigMap& c, const std::string& key) {
  const std::string v = config_string(c, key, "false");
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw DomainError("config key '" + key + "' must be a boolean, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t config_seed(const ConfigMap& c) {
  const std::string s = config_string(c, "seed", "0");
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError("seed must be an unsigned 64-bit integer, got '" + s + "'");
  }
}

SpectralNormOptions norm_options(const ConfigMap& c) {
  SpectralNormOptions o;
  o.seed ^= config_seed(c);
  o.tolerance = config_double(c, "norm_tolerance", o.tolerance);
  o.max_iterations = config_int(c, "norm_max_iterations", o.max_iterations);
  o.dense_limit = config_int(c, "norm_dense_limit", o.dense_limit);
  if (o.tolerance <= 0.0 || o.max_iterations < 1) {
    throw DomainError("norm_tolerance must be positive and norm_max_iterations >= 1");
  }
  return o;
}

/// 1D chains default to open boundaries, 2D lattices to periodic ones.
Lattice lattice_from_config(const ConfigMap& c, bool two_d) {
  Lattice lat;
  if (two_d) {
    const int nx = config_int(c, "nx", 4);
    lat = Lattice::square(nx, config_int(c, "ny", nx),
                          boundary_from_string(config_string(c, "boundary", "periodic")));
  } else {
    lat = Lattice::chain(config_int(c, "n", 4),
                         boundary_from_string(config_string(c, "boundary", "open")));
  }
  lat.validate();
  return lat;
}

TargetModel target_from_config(const ConfigMap& c) {
  TargetModel m;
  m.kind = model_kind_from_string(config_string(c, "model", "ising"));
  m.lattice = lattice_from_config(c, m.kind == ModelKind::XY2D);
  const ModelParams mp = model_from_config(c);
  mp.validate();
  m.J = mp.J;
  m.tau = mp.tau;
  m.M = mp.M;
  return m;
}

CompileOptions compile_options(const ConfigMap& c, const TargetModel& m) {
  CompileOptions o;
  o.fuse = config_flag(c, "fuse");
  o.fuse_across_blocks = config_flag(c, "fuse_blocks");
  o.realistic = config_flag(c, "realistic");
  if (o.realistic) {
    ConfigMap dc = c;
    dc["n"] = std::to_string(m.lattice.size());
    o.device = device_from_config(dc);
  }
  return o;
}

// ---------------------------------------------------------------- hamiltonian

Output run_hamiltonian(const ConfigMap& c) {
  BuildRequest r;
  r.kind = hamiltonian_kind_from_string(config_string(c, "kind", "control"));
  r.J = config_double(c, "J", 1.0);
  r.t = config_double(c, "t", 0.0);
  r.lattice = lattice_from_config(c, is_two_dimensional(r.kind));
  r.from_device = config_flag(c, "from_device");
  const bool device_kind = r.kind == HamiltonianKind::LabFrame2Q ||
                           r.kind == HamiltonianKind::LabFrameNQ ||
                           is_time_dependent(r.kind);
  if (r.from_device || device_kind) {
    ConfigMap dc = c;
    if (r.kind == HamiltonianKind::LabFrame2Q && dc.count("n") == 0) dc["n"] = "2";
    if (dc.count("drive") == 0) {
      if (r.kind == HamiltonianKind::QF_EffectiveOdd) dc["drive"] = "odd";
      if (r.kind == HamiltonianKind::QF_EffectiveEven) dc["drive"] = "even";
    }
    r.device = device_from_config(dc);
  }
  const PauliSum h = build(r);
  Output o;
  o.json = {{"config", config_json(c)},
            {"kind", to_string(r.kind)},
            {"nqubits", h.nqubits()},
            {"terms", h.size()},
            {"hermitian", h.is_hermitian()},
            {"hamiltonian", to_json(h)}};
  o.table.columns = {"pauli", "re", "im"};
  for (const auto& [s, coeff] : h.terms()) {
    o.table.add_row({s.label(), coeff.real(), coeff.imag()});
  }
  return o;
}

// -------------------------------------------------------------- verify-frames

Output run_verify_frames(const ConfigMap& c) {
  ConfigMap dc = c;
  if (dc.count("n") == 0) dc["n"] = "2";
  const DeviceParams p = device_from_config(dc);
  const double delta = std::abs(p.delta(0));
  if (delta == 0.0) throw DomainError("verify-frames needs a detuned control qubit");
  const double t_final = config_double(c, "t_final", 20.0 * std::numbers::pi / delta);
  IntegratorOptions io;
  io.tolerance = config_double(c, "tolerance", io.tolerance);
  const RegimeReport regime = validate_regime(p);

  json regime_json = json::array();
  for (const auto& e : regime.entries) {
    regime_json.push_back({{"qubit", e.qubit},
                           {"omega_ratio", e.omega_ratio},
                           {"coupling_ratio", e.coupling_ratio},
                           {"ok", e.ok}});
  }
  Output o;
  o.json = {{"config", config_json(c)},
            {"device", to_json(p)},
            {"t_final", t_final},
            {"regime", regime_json},
            {"warnings", regime.warnings},
            {"frame_identity_residual", frame_identity_residual(p, t_final)},
            {"uqf_unitarity_defect", unitarity_defect(uqf_approx(p, t_final))}};
  o.table.columns = {"factor",         "distance_frame", "distance_lab",
                     "omega_ratio",    "coupling_ratio", "steps"};
  auto add_row = [&](double f, const FrameVerification& v) {
    o.table.add_row({f, v.distance_frame, v.distance_lab, v.omega_ratio,
                     v.coupling_ratio, v.steps});
  };
  const std::string factors = config_string(c, "factors", "");
  if (factors.empty()) {
    const FrameVerification v = verify_effective(p, t_final, io);
    o.json["verification"] = to_json(v);
    add_row(1.0, v);
  } else {
    std::vector<double> fs;
    for (const auto& f : split_list(factors)) {
      ConfigMap one{{"f", f}};
      fs.push_back(config_double(one, "f", 1.0));
    }
    const ScalingReport s = verify_effective_scaling(p, t_final, fs, io);
    o.json["scaling"] = to_json(s);
    for (const auto& pt : s.points) add_row(pt.factor, pt.result);
  }
  return o;
}

// ------------------------------------------------------------------- simulate

StateVector initial_state(const ConfigMap& c, int n) {
  const std::string init = config_string(c, "initial", "neel");
  if (init == "neel") {
    std::uint64_t idx = 0;
    for (int q = 1; q < n; q += 2) idx |= std::uint64_t{1} << q;
    return basis_state(n, idx);
  }
  if (init == "random") return random_state(n, config_seed(c));
  if (init.rfind("basis:", 0) == 0) {
    const std::string bits = init.substr(6);
    if (static_cast<int>(bits.size()) != n ||
        bits.find_first_not_of("01") != std::string::npos) {
      throw DomainError("initial state '" + init + "' needs " + std::to_string(n) +
                        " binary digits");
    }
    std::uint64_t idx = 0;
    for (int q = 0; q < n; ++q) {
      if (bits[static_cast<std::size_t>(q)] == '1') idx |= std::uint64_t{1} << q;
    }
    return basis_state(n, idx);
  }
  throw DomainError("unknown initial state '" + init +
                    "' (expected neel, random or basis:<bits>)");
}

Output run_simulate(const ConfigMap& c) {
  const TargetModel m = target_from_config(c);
  const Schedule s = compile(m, compile_options(c, m));
  const int n = s.nqubits;
  if (n > 24) throw ResourceError("simulate supports at most 24 qubits");
  const auto observables =
      parse_observables(split_list(config_string(c, "observable", "zk")), n);
  const StateVector psi0 = initial_state(c, n);
  const auto rows = simulate(s, psi0, observables);

  // Reference evolution under the target Hamiltonian of the compiled model.
  const double total = s.model.tau * s.model.M;
  const StateVector exact = expm_multiply(target_hamiltonian(s.model), total, psi0);
  StateVector last = psi0;
  for (int b = 0; b < s.repetitions; ++b) last = apply_block(s, last, b);
  const double fidelity = std::norm(exact.dot(last));

  Output o;
  o.table.columns = {"block", "time", "norm"};
  for (const auto& ob : observables) o.table.columns.push_back(ob.name);
  json jrows = json::array();
  for (const auto& r : rows) {
    std::vector<json> row{r.block, r.time, r.norm};
    json jr{{"block", r.block}, {"time", r.time}, {"norm", r.norm}};
    for (std::size_t k = 0; k < observables.size(); ++k) {
      row.emplace_back(r.values[k]);
      jr[observables[k].name] = r.values[k];
    }
    o.table.add_row(std::move(row));
    jrows.push_back(std::move(jr));
  }
  o.json = {{"config", config_json(c)},
            {"model", to_string(s.model.kind)},
            {"J", s.model.J},
            {"nqubits", n},
            {"realistic", s.realistic},
            {"rows", jrows},
            {"target_fidelity", fidelity}};
  return o;
}

// --------------------------------------------------------------------- errors

Output error_output(const ConfigMap& c, const ErrorReport& r) {
  Output o;
  o.json = to_json(r);
  o.json["config"] = config_json(c);
  o.table = error_table(r);
  return o;
}

Output run_errors(const ConfigMap& c) {
  const std::string which = config_string(c, "which", "synthesis");
  if (which == "synthesis" || which == "dyson") {
    const DeviceParams p = device_from_config(c);
    const double t = config_double(c, "t", 0.0);
    if (which == "dyson") return error_output(c, dyson_propagator_diff(p, t));
    const auto m = synthesis_model_from_string(config_string(c, "model", "control"));
    return error_output(c, synthesis_norm(m, p, t));
  }
  if (which == "table1") {
    return error_output(c, table1_check(lattice_from_config(c, true),
                                        config_double(c, "J", 1.0)));
  }
  if (which == "trotter") {
    const auto m = trotter_model_from_string(config_string(c, "model", "xy2d_da"));
    const bool two_d = m == TrotterModel::XY2D_DA || m == TrotterModel::XY2D_Digital;
    return error_output(c, trotter_commutator(m, lattice_from_config(c, two_d),
                                              config_double(c, "J", 1.0),
                                              norm_options(c)));
  }
  if (which == "comparison") {
    const std::string model = config_string(c, "model", "xy2d");
    if (model != "xy2d" && model != "heisenberg") {
      throw DomainError("comparison model must be xy2d or heisenberg");
    }
    const bool two_d = model == "xy2d";
    return error_output(c, trotter_comparison(two_d, lattice_from_config(c, two_d),
                                              config_double(c, "J", 1.0),
                                              norm_options(c)));
  }
  if (which == "unitcell") {
    return error_output(c, unit_cell_report(config_double(c, "J", 1.0), norm_options(c)));
  }
  if (which == "bounds") {
    const std::string model = config_string(c, "model", "all");
    const int N = config_int(c, "n", config_int(c, "nx", 4));
    return error_output(c, bound_table(model, N, config_double(c, "J", 1.0),
                                       config_double(c, "g", 1.0)));
  }
  throw DomainError("unknown --which '" + which +
                    "' (expected synthesis, dyson, table1, trotter, comparison, "
                    "unitcell or bounds)");
}

// -------------------------------------------------------------------- compile

Output run_compile(const ConfigMap& c) {
  const TargetModel m = target_from_config(c);
  const Schedule s = compile(m, compile_options(c, m));
  Output o;
  o.json = {{"config", config_json(c)}, {"schedule", to_json(s)}};
  if (!s.realistic) {
    json eff = json::array();
    for (const auto& h : segment_effective_hamiltonians(s)) eff.push_back(to_json(h));
    o.json["effective_hamiltonians"] = eff;
    o.json["target"] = to_json(target_hamiltonian(s.model));
  }
  o.table.columns = {"step", "type", "gate", "support", "duration", "label"};
  int index = 0;
  for (const auto& step : s.block) {
    ++index;
    if (const auto* g = std::get_if<GateLayer>(&step)) {
      o.table.add_row({index, "gate", to_string(g->kind), g->support.describe(),
                       nullptr, ""});
    } else if (const auto* f = std::get_if<FusedLayer>(&step)) {
      std::string parts;
      for (const auto& p : f->parts) {
        if (!parts.empty()) parts += ' ';
        parts += to_string(p.kind) + "@" + p.support.describe();
      }
      o.table.add_row({index, "fused", parts, "", nullptr, ""});
    } else if (const auto* a = std::get_if<AnalogSegment>(&step)) {
      o.table.add_row({index, "analog", "", to_string(a->drive.driven), a->duration,
                       a->label});
    } else if (const auto* d = std::get_if<DriveSwitch>(&step)) {
      o.table.add_row({index, "drive_switch", "", to_string(d->from) + "->" +
                       to_string(d->to), nullptr, ""});
    }
  }
  return o;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ResourceError*>(&e) != nullptr) return kResource;
  if (dynamic_cast<const ComputeError*>(&e) != nullptr) return kCompute;
  if (dynamic_cast<const DomainError*>(&e) != nullptr) return kUsage;
  return kFailure;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message,
                  int code) {
  err << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump()
      << '\n';
}

/// Flag name -> configuration key for the per-subcommand scalar options.
struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

}  // namespace

Output execute(const std::string& command, const ConfigMap& config) {
  if (command == "hamiltonian") return run_hamiltonian(config);
  if (command == "verify-frames") return run_verify_frames(config);
  if (command == "simulate") return run_simulate(config);
  if (command == "errors") return run_errors(config);
  if (command == "compile") return run_compile(config);
  throw DomainError("unknown command '" + command + "'");
}

SweepAxis parse_sweep(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw DomainError("sweep '" + spec + "' must look like key=start:stop:points");
  }
  SweepAxis axis;
  axis.key = spec.substr(0, eq);
  std::vector<std::string> parts;
  std::istringstream is(spec.substr(eq + 1));
  for (std::string item; std::getline(is, item, ':');) parts.push_back(item);
  if (parts.size() != 3) {
    throw DomainError("sweep '" + spec + "' must look like key=start:stop:points");
  }
  const ConfigMap tmp{{"a", parts[0]}, {"b", parts[1]}, {"n", parts[2]}};
  const double a = config_double(tmp, "a", 0.0);
  const double b = config_double(tmp, "b", 0.0);
  const int n = config_int(tmp, "n", 0);
  if (n < 1) throw DomainError("sweep '" + spec + "' needs at least one point");
  for (int k = 0; k < n; ++k) {
    axis.values.push_back(n == 1 ? a : a + (b - a) * k / static_cast<double>(n - 1));
  }
  return axis;
}

Output execute_sweep(const std::string& command, const ConfigMap& config,
                     const std::vector<SweepAxis>& axes, int threads) {
  std::vector<std::vector<double>> points{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<double>> next;
    for (const auto& p : points) {
      for (const double v : axis.values) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  std::vector<Output> results(points.size());
  std::vector<std::exception_ptr> failures(points.size());
  auto work = [&](std::size_t i) {
    try {
      ConfigMap c = config;
      for (std::size_t a = 0; a < axes.size(); ++a) {
        c[axes[a].key] = format_number(points[i][a]);
      }
      results[i] = execute(command, c);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1,
                              points.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < points.size(); i += workers) work(i);
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  Output o;
  json axes_json = json::array();
  for (const auto& a : axes) axes_json.push_back({{"key", a.key}, {"values", a.values}});
  json pts = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    json values = json::object();
    for (std::size_t a = 0; a < axes.size(); ++a) values[axes[a].key] = points[i][a];
    json result = results[i].json;
    result.erase("config");
    pts.push_back({{"values", values}, {"result", result}});
    if (o.table.columns.empty()) {
      for (const auto& a : axes) o.table.columns.push_back(a.key);
      for (const auto& col : results[i].table.columns) o.table.columns.push_back(col);
    }
    for (const auto& row : results[i].table.rows) {
      std::vector<json> full;
      for (std::size_t a = 0; a < axes.size(); ++a) full.emplace_back(points[i][a]);
      full.insert(full.end(), row.begin(), row.end());
      o.table.add_row(std::move(full));
    }
  }
  o.json = {{"config", config_json(config)}, {"sweep", axes_json}, {"points", pts}};
  return o;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital-analog compilation of spin models on cross-resonance devices",
               "crda"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string params_file, out_spec, format_name, seed_text = "0";
  int threads = 1;
  std::vector<std::string> sweeps;
  app.add_option("--params", params_file, "Configuration file (key=value or JSON)");
  app.add_option("--out", out_spec, "Output path, or json|csv for standard output");
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed_text, "Seed for randomized estimators");
  app.add_option("--sweep", sweeps, "Sweep axis key=start:stop:points (repeatable)");

  static const std::vector<FlagSpec> kLattice{
      {"--n", "n", "Number of qubits / chain length"},
      {"--nx", "nx", "2D lattice extent along i"},
      {"--ny", "ny", "2D lattice extent along j"},
      {"--boundary", "boundary", "open or periodic"},
      {"--j", "J", "Coupling J"},
  };
  static const std::vector<FlagSpec> kDevice{
      {"--omega-base", "omega_base", "Frequency of the first qubit"},
      {"--delta", "delta", "Detuning between neighbouring qubits"},
      {"--Omega", "Omega", "Drive amplitude"},
      {"--g", "g", "Static coupling"},
      {"--phi", "phi", "Drive phase"},
      {"--drive", "drive", "Driven controls: all, odd or even"},
  };
  static const std::vector<FlagSpec> kModel{
      {"--model", "model", "Model name"},
      {"--tau", "tau", "Analog time per segment"},
      {"--blocks", "M", "Number of blocks"},
  };

  std::map<std::string, std::string> values;
  std::vector<std::string> observables;
  std::map<std::string, CLI::Option*> options;
  std::map<std::string, CLI::App*> subs;
  auto add_flags = [&](CLI::App* sub, const std::vector<FlagSpec>& specs) {
    for (const auto& s : specs) {
      options[sub->get_name() + s.key] = sub->add_option(s.flag, values[s.key], s.help);
    }
  };
  auto add_switch = [&](CLI::App* sub, const char* flag, const char* key, const char* help) {
    options[sub->get_name() + key] = sub->add_flag(std::string(flag))->description(help);
  };

  auto* ham = app.add_subcommand("hamiltonian", "Build a Hamiltonian as a Pauli sum");
  add_flags(ham, kLattice);
  add_flags(ham, kDevice);
  add_flags(ham, {{"--kind", "kind", "Hamiltonian family"}, {"--t", "t", "Time"}});
  add_switch(ham, "--from-device", "from_device", "Use device parameters");

  auto* vf = app.add_subcommand("verify-frames", "Lab frame vs effective evolution");
  add_flags(vf, {{"--n", "n", "Number of qubits"}});
  add_flags(vf, kDevice);
  add_flags(vf, {{"--t-final", "t_final", "Final time"},
                 {"--factors", "factors", "Comma-separated scaling factors"},
                 {"--tolerance", "tolerance", "Integrator tolerance"}});

  auto* sim = app.add_subcommand("simulate", "Apply a compiled schedule to a state");
  add_flags(sim, kLattice);
  add_flags(sim, kModel);
  add_flags(sim, kDevice);
  add_flags(sim, {{"--initial", "initial", "neel, random or basis:<bits>"}});
  sim->add_option("--observable", observables, "zk, sz-total or pauli:<label>");
  add_switch(sim, "--fuse", "fuse", "Fuse adjacent gate layers");
  add_switch(sim, "--fuse-blocks", "fuse_blocks", "Fuse across block boundaries");
  add_switch(sim, "--realistic", "realistic", "Use the original Hamiltonians");

  auto* errs = app.add_subcommand("errors", "Error norms, bounds and structure checks");
  add_flags(errs, kLattice);
  add_flags(errs, kDevice);
  add_flags(errs, {{"--which", "which", "synthesis, dyson, table1, trotter, comparison, "
                                        "unitcell or bounds"},
                   {"--model", "model", "Model for the selected check"},
                   {"--t", "t", "Time"}});

  auto* comp = app.add_subcommand("compile", "Export a compiled block schedule");
  add_flags(comp, kLattice);
  add_flags(comp, kModel);
  add_flags(comp, kDevice);
  add_switch(comp, "--fuse", "fuse", "Fuse adjacent gate layers");
  add_switch(comp, "--fuse-blocks", "fuse_blocks", "Fuse across block boundaries");
  add_switch(comp, "--realistic", "realistic", "Use the original Hamiltonians");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what(), kUsage);
    return kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    ConfigMap config;
    if (!params_file.empty()) config = load_config_file(params_file);
    for (const auto& [id, opt] : options) {
      if (id.rfind(sub->get_name(), 0) != 0 || opt->count() == 0) continue;
      const std::string key = id.substr(sub->get_name().size());
      config[key] = opt->get_expected_max() == 0 ? "true" : values[key];
    }
    if (!observables.empty()) {
      std::string joined;
      for (const auto& ob : observables) joined += (joined.empty() ? "" : ",") + ob;
      config["observable"] = joined;
    }
    if (app.count("--seed") > 0 || config.count("seed") == 0) config["seed"] = seed_text;
    config_seed(config);

    OutputFormat format = OutputFormat::Json;
    std::string path;
    if (out_spec == "json" || out_spec == "csv") {
      format = output_format_from_string(out_spec);
    } else if (!out_spec.empty()) {
      path = out_spec;
      if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") {
        format = OutputFormat::Csv;
      }
    }
    if (!format_name.empty()) format = output_format_from_string(format_name);

    std::vector<SweepAxis> axes;
    for (const auto& s : sweeps) axes.push_back(parse_sweep(s));
    const Output result = axes.empty() ? execute(sub->get_name(), config)
                                       : execute_sweep(sub->get_name(), config, axes, threads);
    const std::string text =
        format == OutputFormat::Csv ? to_csv(result.table) : dump(result.json);
    if (path.empty()) {
      out << text;
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw Error("cannot open output file '" + path + "'");
      f << text;
      if (!f) throw Error("failed writing output file '" + path + "'");
    }
    return kOk;
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    report_error(err, e.kind(), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    report_error(err, "error", e.what(), kFailure);
    return kFailure;
  }
}

}  // namespace crda::cli
