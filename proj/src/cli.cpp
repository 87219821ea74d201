// Copyright 2026 The qkrt Authors
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

#include "qkrt/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qkrt/circuit.hpp"
#include "qkrt/deff.hpp"
#include "qkrt/error.hpp"
#include "qkrt/execsim.hpp"
#include "qkrt/generators.hpp"
#include "qkrt/model.hpp"
#include "qkrt/records.hpp"
#include "qkrt/registry.hpp"
#include "qkrt/statevector.hpp"
#include "qkrt/transpiler.hpp"

namespace qkrt {

namespace {

using json = nlohmann::ordered_json;

// Seed streams per subcommand.
constexpr std::uint64_t kDeffStream = 11;
constexpr std::uint64_t kGenStream = 12;
constexpr std::uint64_t kKernelStream = 13;
constexpr std::uint64_t kSweepStream = 14;

std::string num(double v) { return fmt::format("{:.17g}", v); }

struct Globals {
  std::uint64_t seed = 0;
  std::string registry_path;
  std::string config_path;

  BackendRegistry registry() const {
    return registry_path.empty() ? BackendRegistry::builtin() : BackendRegistry::from_json(read_file(registry_path));
  }
};

// Writes `contents` to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    write_file(path, contents);
  }
}

struct FamilyFlags {
  std::string family_json;
  int n = 4;
  int reps = 1;
  std::string entanglement = "linear";

  void add(CLI::App* app) {
    app->add_option("--family", family_json, R"(family descriptor JSON, e.g. {"n":4,"d":2,"entanglement":"linear"})");
    app->add_option("--n", n, "qubits per kernel circuit")->capture_default_str();
    app->add_option("--D", reps, "base-template repetitions")->capture_default_str();
    app->add_option("--entanglement", entanglement, "linear or full")->capture_default_str();
  }

  KernelFamily resolve() const {
    if (family_json.empty()) return KernelFamily(n, reps, entanglement_from_name(entanglement));
    json j;
    try {
      j = json::parse(family_json);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedJson, fmt::format("--family: {}", e.what()));
    }
    try {
      const int fn = j.at("n").get<int>();
      const int fd = j.contains("d") ? j.at("d").get<int>() : j.value("D", 1);
      const std::string fe = j.value("entanglement", std::string("linear"));
      return KernelFamily(fn, fd, entanglement_from_name(fe));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedJson, fmt::format("--family: {}", e.what()));
    }
  }
};

struct MapFlags {
  std::string backend;
  std::string topology;
  int qubits = 0;
  std::string coupling_map_path;

  void add(CLI::App* app) {
    app->add_option("--backend", backend, "use the backend's coupling map");
    app->add_option("--topology", topology, "line, ring, heavy_hex_like or all_to_all");
    app->add_option("--qubits", qubits, "coupling-map size for --topology (default: smallest that fits)");
    app->add_option("--coupling-map", coupling_map_path, "coupling map JSON file");
  }

  CouplingMap resolve(const Globals& g, int needed) const {
    if (!coupling_map_path.empty()) return coupling_map_from_json(read_file(coupling_map_path));
    if (!backend.empty()) return g.registry().find(backend).coupling_map();
    const Topology t = topology.empty() ? Topology::Line : topology_from_name(topology);
    return CouplingMap::make(t, qubits > 0 ? qubits : needed);
  }
};

double resolve_clops(const Globals& g, const std::string& backend, std::optional<double> clops) {
  if (clops) return *clops;
  if (backend.empty()) throw Error(ErrorCode::InvalidArgument, "need --backend or --clops");
  return g.registry().find(backend).clops;
}

// ---------------------------------------------------------------- predict

struct PredictCmd {
  std::string backend;
  std::optional<double> clops;
  std::uint64_t m = 1, s = 1, k = 1;
  std::optional<double> deff;
  std::string out_path;

  void add(CLI::App* app) {
    app->add_option("--backend", backend, "backend name from the registry");
    app->add_option("--clops", clops, "CLOPS, overrides the backend's value");
    app->add_option("--M", m, "circuits")->required();
    app->add_option("--S", s, "shots per circuit")->required();
    app->add_option("--K", k, "parameter updates")->capture_default_str();
    app->add_option("--deff", deff, "effective layers (default: log2 QV of the backend)");
    app->add_option("--out", out_path, "write the report as JSON");
  }

  int run(const Globals& g, std::ostream& out) const {
    const double c = resolve_clops(g, backend, clops);
    JobSpec job;
    job.circuits = m;
    job.shots = s;
    job.updates = k;
    if (deff) {
      job.d_eff = *deff;
    } else if (!backend.empty()) {
      job.d_eff = g.registry().find(backend).qv_layers();
    } else {
      throw Error(ErrorCode::InvalidArgument, "need --deff when no backend is given");
    }
    const double t = predict_runtime(job, c);
    out << fmt::format("predicted {} s ({}) for M={} S={} K={} d_eff={} at C={}{}\n", num(t), human_duration(t), m,
                       s, k, num(job.d_eff), num(c), backend.empty() ? "" : " on " + backend);
    if (!out_path.empty()) {
      json j;
      j["backend"] = backend;
      j["clops"] = c;
      j["M"] = m;
      j["S"] = s;
      j["K"] = k;
      j["d_eff"] = job.d_eff;
      j["T_pred"] = t;
      write_file(out_path, j.dump(2) + "\n");
    }
    return 0;
  }
};

// ---------------------------------------------------------------- score

struct ScoreCmd {
  std::string input;
  std::string out_path;

  void add(CLI::App* app) {
    app->add_option("--input", input, "CSV with T_pred,T columns or backend,M,S,K,deff,T_seconds records")
        ->required();
    app->add_option("--out", out_path, "report CSV path");
  }

  int run(const Globals& g, std::ostream& out) const {
    const std::string text = read_file(input);
    const CsvTable table = parse_csv(text);
    std::string csv;
    std::vector<RuntimeReport> reports;
    if (table.column("T_pred") != CsvTable::npos && table.column("T") != CsvTable::npos) {
      const auto ip = table.column("T_pred");
      const auto ia = table.column("T");
      csv = "T_pred,T,r,L\n";
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const double p = parse_double_field(table.rows[r][ip], table.lines[r], "T_pred");
        const double a = parse_double_field(table.rows[r][ia], table.lines[r], "T");
        if (!(p > 0.0) || !(a > 0.0)) {
          throw Error(ErrorCode::MalformedCsv, fmt::format("CSV line {}: runtimes must be positive", table.lines[r]));
        }
        const auto rep = score(p, a);
        reports.push_back(rep);
        csv += fmt::format("{},{},{},{}\n", num(p), num(a), num(rep.ratio), num(rep.loss));
      }
    } else {
      const auto recs = parse_runtime_records(text);
      const auto reg = g.registry();
      csv = "backend,M,S,K,deff,T_pred,T,r,L\n";
      for (const auto& rec : recs.records) {
        const double p = predict_runtime(rec.job, reg.find(rec.backend));
        const auto rep = score(p, rec.seconds);
        reports.push_back(rep);
        csv += fmt::format("{},{},{},{},{},{},{},{},{}\n", rec.backend, rec.job.circuits, rec.job.shots,
                           rec.job.updates, num(rec.job.d_eff), num(p), num(rec.seconds), num(rep.ratio),
                           num(rep.loss));
      }
    }
    double mean_loss = 0.0;
    std::size_t under = 0;
    for (const auto& r : reports) {
      mean_loss += r.loss;
      under += r.under_predicted() ? 1 : 0;
    }
    if (!reports.empty()) mean_loss /= static_cast<double>(reports.size());
    out << fmt::format("scored {} rows: mean L={:.4g}, {} under-predicted\n", reports.size(), mean_loss, under);
    emit(out_path, csv, out);
    return 0;
  }
};

// ---------------------------------------------------------------- deff

struct DeffCmd {
  FamilyFlags family;
  MapFlags map;
  int kernel_samples = 25;
  int qv_samples = 20;
  std::optional<int> qv_layers;
  std::string out_path;

  void add(CLI::App* app) {
    family.add(app);
    map.add(app);
    app->add_option("--kernel-samples", kernel_samples, "kernel circuits averaged")->capture_default_str();
    app->add_option("--qv-samples", qv_samples, "QV circuits averaged")->capture_default_str();
    app->add_option("--qv-layers", qv_layers, "QV job: d_eff is this layer count, no sampling");
    app->add_option("--out", out_path, "JSON output path");
  }

  int run(const Globals& g, std::ostream& out) const {
    DeffEstimate est;
    if (qv_layers) {
      est = qv_effective_layers(*qv_layers);
    } else {
      const KernelFamily fam = family.resolve();
      const int v = equivalent_qv_width(fam.n, fam.reps);
      const CouplingMap cm = map.resolve(g, std::max(fam.n, v));
      est = effective_layers(fam, cm, {kernel_samples, qv_samples, derive_seed(g.seed, {kDeffStream})});
    }
    out << fmt::format("d_eff={:.6g} (v={}, mean kernel depth {:.6g}, mean QV depth {:.6g})\n", est.d_eff, est.v,
                       est.mean_kernel_depth, est.mean_qv_depth);
    emit(out_path, to_json(est) + "\n", out);
    return 0;
  }
};

// ---------------------------------------------------------------- gen-circuits

struct GenCmd {
  std::string kind = "kernel";
  FamilyFlags family;
  int count = 1;
  int qv_qubits = 4;
  int qv_layers = 4;
  bool transpile_flag = false;
  MapFlags map;
  std::string out_path;

  void add(CLI::App* app) {
    app->add_option("--kind", kind, "kernel or qv")->capture_default_str();
    family.add(app);
    app->add_option("--count", count, "circuits to generate")->capture_default_str();
    app->add_option("--qv-qubits", qv_qubits, "QV width")->capture_default_str();
    app->add_option("--qv-layers", qv_layers, "QV layers")->capture_default_str();
    app->add_flag("--transpile", transpile_flag, "lower to the basis gates and route onto the map");
    map.add(app);
    app->add_option("--out", out_path, "circuit text output path");
  }

  int run(const Globals& g, std::ostream& out) const {
    if (count < 1) throw Error(ErrorCode::InvalidArgument, "--count must be at least 1");
    std::vector<Circuit> circuits;
    if (kind == "kernel") {
      const KernelFamily fam = family.resolve();
      for (int i = 0; i < count; ++i) {
        Rng rng = make_rng(g.seed, {kGenStream, static_cast<std::uint64_t>(i)});
        const auto x = random_features(fam.n, rng);
        const auto y = random_features(fam.n, rng);
        circuits.push_back(kernel_circuit(fam, x, y));
      }
    } else if (kind == "qv") {
      for (int i = 0; i < count; ++i) {
        circuits.push_back(qv_circuit(qv_qubits, qv_layers, derive_seed(g.seed, {kGenStream, static_cast<std::uint64_t>(i)})));
      }
    } else {
      throw Error(ErrorCode::InvalidArgument, fmt::format("unknown circuit kind '{}' (expected kernel or qv)", kind));
    }
    if (transpile_flag) {
      const CouplingMap cm = map.resolve(g, circuits.front().width());
      for (auto& c : circuits) c = transpile(c, cm);
    }
    std::string text;
    std::size_t gates = 0;
    int max_depth = 0;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      if (i > 0) text += "\n";
      text += to_text(circuits[i]);
      gates += circuits[i].size();
      max_depth = std::max(max_depth, depth(circuits[i]));
    }
    out << fmt::format("generated {} {} circuits ({} gates, max depth {})\n", circuits.size(), kind, gates,
                       max_depth);
    emit(out_path, text, out);
    return 0;
  }
};

// ---------------------------------------------------------------- simulate-kernel

struct SimKernelCmd {
  std::string dataset;
  int reps = 1;
  std::string entanglement = "linear";
  std::optional<std::uint64_t> shots;
  int max_qubits = 12;
  std::string out_path;
  std::string summary_path;

  void add(CLI::App* app) {
    app->add_option("--dataset", dataset, "CSV, one feature vector per row")->required();
    app->add_option("--D", reps, "base-template repetitions")->capture_default_str();
    app->add_option("--entanglement", entanglement, "linear or full")->capture_default_str();
    app->add_option("--shots", shots, "shots per pair (default: exact)");
    app->add_option("--max-qubits", max_qubits, "simulator width cap")->capture_default_str();
    app->add_option("--out", out_path, "kernel matrix CSV path");
    app->add_option("--summary", summary_path, "summary JSON path");
  }

  int run(const Globals& g, std::ostream& out) const {
    const auto data = parse_dataset(read_file(dataset));
    if (data.size() < 2) throw Error(ErrorCode::InvalidArgument, "dataset needs at least two rows");
    const KernelFamily fam(static_cast<int>(data.front().size()), reps, entanglement_from_name(entanglement));
    const auto km = kernel_matrix(fam, data, shots, derive_seed(g.seed, {kKernelStream}), SimOptions{max_qubits});
    const auto& m = km.values;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();

    std::string csv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) csv += (j ? "," : "") + num(m(i, j));
      csv += "\n";
    }
    json s;
    s["n"] = fam.n;
    s["D"] = fam.reps;
    s["entanglement"] = entanglement_name(fam.entanglement);
    s["N"] = data.size();
    s["shots"] = shots ? json(*shots) : json(nullptr);
    s["evaluations"] = km.evaluations;
    s["min"] = m.minCoeff();
    s["max"] = m.maxCoeff();
    s["mean"] = m.mean();
    s["min_eigenvalue"] = min_eig;
    s["psd"] = min_eig >= -1e-8;
    out << s.dump() << "\n";
    if (!summary_path.empty()) write_file(summary_path, s.dump(2) + "\n");
    emit(out_path, csv, out);
    return 0;
  }
};

// ---------------------------------------------------------------- extrapolate

struct ExtrapolateCmd {
  std::vector<std::uint64_t> n_values;
  std::uint64_t s = 4000;
  double deff = 2.0;
  std::vector<double> clops;
  std::string out_path;

  void add(CLI::App* app) {
    app->add_option("--N", n_values, "dataset sizes, comma separated")->required()->delimiter(',');
    app->add_option("--S", s, "shots per circuit")->capture_default_str();
    app->add_option("--deff", deff, "effective layers")->capture_default_str();
    app->add_option("--clops", clops, "CLOPS values, comma separated")->required()->delimiter(',');
    app->add_option("--out", out_path, "CSV path (N,C,seconds)");
  }

  int run(const Globals&, std::ostream& out) const {
    std::string csv = "N,C,seconds\n";
    double last = 0.0;
    for (auto n : n_values) {
      for (double c : clops) {
        last = extrapolate(n, s, deff, c);
        csv += fmt::format("{},{},{}\n", n, num(c), num(last));
      }
    }
    if (n_values.size() * clops.size() == 1) {
      out << fmt::format("N={} M={} S={} d_eff={} C={}: {:.4g} s {}\n", n_values[0], kernel_job_size(n_values[0]), s,
                         num(deff), num(clops[0]), last, human_duration(last));
    } else {
      out << fmt::format("extrapolated {} (N, C) points\n", n_values.size() * clops.size());
    }
    if (!out_path.empty()) write_file(out_path, csv);
    return 0;
  }
};

// ---------------------------------------------------------------- sweep

StackTimingParams params_from_flags(const std::string& path, std::optional<double> t_job, std::optional<double> t_circ,
                                    std::optional<double> t_ls, std::optional<double> jitter) {
  StackTimingParams p = path.empty() ? StackTimingParams{} : StackTimingParams::from_json(read_file(path));
  if (t_job) p.job_overhead = *t_job;
  if (t_circ) p.circuit_overhead = *t_circ;
  if (t_ls) p.layer_shot_time = *t_ls;
  if (jitter) p.jitter = *jitter;
  p.validate();
  return p;
}

struct SweepCmd {
  std::string backend;
  std::string params_path;
  std::optional<double> t_job, t_circ, t_ls, jitter;
  std::vector<std::uint64_t> m_values{100};
  std::vector<std::uint64_t> s_values{10, 50, 100, 500, 1000, 4000, 8000};
  std::vector<double> a_values{1.0};
  int n = 4;
  std::string entanglement = "linear";
  std::optional<double> deff;
  std::string out_path;

  void add(CLI::App* app) {
    app->add_option("--backend", backend, "backend name")->required();
    app->add_option("--params", params_path, "stack timing JSON (t_job, t_circ, t_layer_shot, jitter)");
    app->add_option("--t-job", t_job, "per-job overhead, seconds");
    app->add_option("--t-circ", t_circ, "per-circuit overhead, seconds");
    app->add_option("--t-layer-shot", t_ls, "seconds per layer per shot");
    app->add_option("--jitter", jitter, "relative noise");
    app->add_option("--M", m_values, "circuit counts")->delimiter(',')->capture_default_str();
    app->add_option("--S", s_values, "shot counts")->delimiter(',')->capture_default_str();
    app->add_option("--a", a_values, "aspect ratios 2D/n")->delimiter(',')->capture_default_str();
    app->add_option("--n", n, "kernel width used to turn a into D")->capture_default_str();
    app->add_option("--entanglement", entanglement, "linear or full")->capture_default_str();
    app->add_option("--deff", deff, "fixed d_eff instead of computing it per aspect ratio");
    app->add_option("--out", out_path, "sweep CSV path");
  }

  int run(const Globals& g, std::ostream& out) const {
    const BackendSpec b = g.registry().find(backend);
    const StackTimingParams p = params_from_flags(params_path, t_job, t_circ, t_ls, jitter);
    std::map<double, double> deff_by_a;
    for (double a : a_values) {
      if (deff) {
        deff_by_a[a] = *deff;
        continue;
      }
      const double reps = a * n / 2.0;
      if (reps < 1.0 || reps != std::floor(reps)) {
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("aspect ratio {} with n={} does not give a whole number of repetitions", a, n));
      }
      const KernelFamily fam(n, static_cast<int>(reps), entanglement_from_name(entanglement));
      deff_by_a[a] = effective_layers(fam, b.coupling_map(), {25, 20, derive_seed(g.seed, {kDeffStream})}).d_eff;
    }
    std::vector<SweepJob> jobs;
    for (double a : a_values) {
      for (auto m : m_values) {
        for (auto s : s_values) {
          JobSpec j;
          j.circuits = m;
          j.shots = s;
          j.d_eff = deff_by_a[a];
          jobs.push_back({j, a});
        }
      }
    }
    const auto rows = sweep(jobs, p, b, derive_seed(g.seed, {kSweepStream}));
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    double mean_loss = 0.0;
    for (const auto& r : rows) mean_loss += r.loss;
    mean_loss /= static_cast<double>(rows.size());
    out << fmt::format("swept {} jobs on {}: mean L={:.4g}\n", rows.size(), b.name, mean_loss);
    emit(out_path, csv.str(), out);
    return 0;
  }
};

// ---------------------------------------------------------------- fit

struct FitCmd {
  std::string records;
  std::string backend;
  std::optional<double> fixed_job;
  std::string out_path;

  void add(CLI::App* app) {
    app->add_option("--records", records, "runtime records CSV")->required();
    app->add_option("--backend", backend, "only use rows for this backend");
    app->add_option("--fix-job-overhead", fixed_job, "pin t_job instead of fitting it");
    app->add_option("--out", out_path, "parameter JSON path");
  }

  int run(const Globals&, std::ostream& out) const {
    const auto recs = load_runtime_records(records);
    std::vector<Observation> obs;
    for (const auto& r : recs.records) {
      if (backend.empty() || r.backend == backend) obs.push_back({r.job, r.seconds});
    }
    FitOptions opts;
    opts.fixed_job_overhead = fixed_job;
    const auto p = fit_params(obs, opts);
    out << fmt::format("fitted {} observations: t_job={:.6g} s, t_circ={:.6g} s, t_layer_shot={:.6g} s, jitter={:.4g}\n",
                       obs.size(), p.job_overhead, p.circuit_overhead, p.layer_shot_time, p.jitter);
    emit(out_path, p.to_json(), out);
    return 0;
  }
};

// ---------------------------------------------------------------- backends

struct BackendsCmd {
  std::string out_path;
  CLI::App* list = nullptr;
  CLI::App* exp = nullptr;

  void add(CLI::App* app) {
    app->require_subcommand(1);
    list = app->add_subcommand("list", "print the registry");
    exp = app->add_subcommand("export", "write the registry as JSON");
    exp->add_option("--out", out_path, "JSON path");
  }

  int run(const Globals& g, std::ostream& out) const {
    const auto reg = g.registry();
    if (list->parsed()) {
      for (const auto& b : reg.backends()) {
        out << fmt::format("{:<16} qubits={:<4} QV={:<5} CLOPS={:<7} {}\n", b.name, b.num_qubits, b.quantum_volume,
                           num(b.clops), topology_name(b.topology));
      }
      return 0;
    }
    emit(out_path, reg.to_json(), out);
    if (!out_path.empty()) out << fmt::format("exported {} backends to {}\n", reg.backends().size(), out_path);
    return 0;
  }
};

std::string error_json(std::string_view code, std::string_view message) {
  json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  return j.dump();
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

std::optional<std::string> flag_value(const std::vector<std::string>& args, const std::string& flag) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == flag && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind(flag + "=", 0) == 0) return args[i].substr(flag.size() + 1);
  }
  return std::nullopt;
}

std::string config_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return num(v.get<double>());
  return v.dump();
}

// Appends config-file entries for flags the command line did not set.
std::vector<std::string> merge_config(std::vector<std::string> args, const std::string& path, CLI::App& app) {
  json cfg;
  try {
    cfg = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedJson, fmt::format("config {}: {}", path, e.what()));
  }
  if (!cfg.is_object()) throw Error(ErrorCode::MalformedJson, fmt::format("config {}: expected an object", path));

  std::vector<CLI::App*> scopes{&app};
  for (const auto& a : args) {
    CLI::App* sub = nullptr;
    try {
      sub = scopes.back()->get_subcommand(a);
    } catch (const CLI::OptionNotFound&) {
    }
    if (sub) scopes.push_back(sub);
  }
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (key == "config" || has_flag(args, flag)) continue;
    const bool known = std::any_of(scopes.begin(), scopes.end(),
                                   [&](CLI::App* s) { return s->get_option_no_throw(flag) != nullptr; });
    if (!known) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& v : value) joined += (joined.empty() ? "" : ",") + config_scalar(v);
      args.push_back(flag);
      args.push_back(joined);
    } else if (value.is_null()) {
      continue;
    } else {
      args.push_back(flag);
      args.push_back(config_scalar(value));
    }
  }
  return args;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum kernel job runtime prediction"};
  app.name("qkrt");
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "root seed for every random stream")->capture_default_str();
  app.add_option("--registry", g.registry_path, "backend registry JSON (default: built-in)");
  app.add_option("--config", g.config_path, "JSON of flag defaults; explicit flags win");

  PredictCmd predict;
  ScoreCmd score_cmd;
  DeffCmd deff;
  GenCmd gen;
  SimKernelCmd simk;
  ExtrapolateCmd extra;
  SweepCmd sweep_cmd;
  FitCmd fit;
  BackendsCmd backends;

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto reg = [&](const char* name, const char* help, auto& cmd) {
    CLI::App* sub = app.add_subcommand(name, help);
    cmd.add(sub);
    commands.emplace_back(sub, [&cmd, &g, &out] { return cmd.run(g, out); });
  };
  reg("predict", "predict a job's runtime from CLOPS", predict);
  reg("score", "score predictions against measured runtimes", score_cmd);
  reg("deff", "effective quantum volume layers of a kernel family", deff);
  reg("gen-circuits", "emit kernel or QV circuits as text", gen);
  reg("simulate-kernel", "exact or shot-based kernel matrix of a dataset", simk);
  reg("extrapolate", "runtime of the full kernel matrix for dataset size N", extra);
  reg("sweep", "predicted vs simulated runtimes over an (M, S, a) grid", sweep_cmd);
  reg("fit", "fit stack timing parameters to runtime records", fit);
  reg("backends", "list or export the backend registry", backends);

  try {
    std::vector<std::string> argv = args;
    if (auto cfg = flag_value(argv, "--config")) argv = merge_config(argv, *cfg, app);
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << error_json("USAGE", e.what()) << "\n";
      return kUsageExitCode;
    }
    for (auto& [sub, run] : commands) {
      if (sub->parsed()) return run();
    }
    err << error_json("USAGE", "no subcommand given") << "\n";
    return kUsageExitCode;
  } catch (const Error& e) {
    err << error_json(error_code_name(e.code()), e.what()) << "\n";
    return static_cast<int>(e.code());
  } catch (const json::exception& e) {
    err << error_json(error_code_name(ErrorCode::MalformedJson), e.what()) << "\n";
    return static_cast<int>(ErrorCode::MalformedJson);
  }
}

}  // namespace qkrt
