#include "entgeo/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "entgeo/clifford_maps.hpp"
#include "entgeo/report.hpp"
#include "entgeo/states.hpp"

namespace entgeo::cli {

namespace {

// Carries the exit code decided at throw site: 2 for flag/spec problems,
// 1 for file and computation problems.
struct CommandError : std::runtime_error {
  CommandError(int exit_code_, const std::string& what)
      : std::runtime_error(what), exit_code(exit_code_) {}
  int exit_code;
};

struct InputOpts {
  std::string spec;
  std::string file;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  auto* spec = cmd->add_option("--state", in.spec,
                               "named state spec, e.g. ghz:4, w:3, mems:0.9, werner:0.5");
  auto* file = cmd->add_option("--state-file", in.file,
                               "path to state or density-matrix JSON");
  spec->excludes(file);
  file->excludes(spec);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(1, "--state-file: cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

StateOrDensity load_input(const InputOpts& in) {
  if (!in.spec.empty()) {
    try {
      return resolve_spec(in.spec);
    } catch (const std::exception& e) {
      throw CommandError(2, std::string("--state: ") + e.what());
    }
  }
  if (!in.file.empty()) {
    const std::string text = read_file(in.file);
    try {
      return parse_state(text);
    } catch (const std::exception& e) {
      throw CommandError(1, std::string("--state-file: ") + e.what());
    }
  }
  throw CommandError(2, "exactly one of --state or --state-file is required");
}

StateVector require_pure(StateOrDensity input, const char* command) {
  if (std::holds_alternative<DensityMatrix>(input))
    throw CommandError(2, std::string("--state: ") + command + " requires a pure state");
  return std::get<StateVector>(std::move(input));
}

DensityMatrix as_density(StateOrDensity input) {
  if (std::holds_alternative<DensityMatrix>(input))
    return std::get<DensityMatrix>(std::move(input));
  return projector(std::get<StateVector>(input));
}

HopfImage image_of(const StateVector& psi, const Permutation& perm) {
  HopfImage img;
  std::string label;
  for (int v : perm.one_line()) label += static_cast<char>('0' + v);
  img.perm = label;
  if (psi.n_qubits() == 2) {
    const bool swapped = perm.one_line() == std::vector<int>{2, 1};
    const MapImage2 m = swapped ? two_qubit_map_swapped(psi) : two_qubit_map(psi);
    img.components = {m.c_off, m.c_conc};
    img.z = m.z;
    img.k = k_invariant(m);
  } else {
    const MapImage3 m = permuted_three_qubit_map(psi, perm);
    img.components = {m.c1, m.c2, m.c3, m.c4};
    img.z = m.z;
    img.k = k_invariant(m);
  }
  return img;
}

struct SweepRange {
  double start, stop, step;
};

SweepRange parse_range(const std::string& text) {
  const auto bad = [&] {
    return CommandError(2, "--param: expected start:stop:step, got '" + text + "'");
  };
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw bad();
  SweepRange r{};
  try {
    r.start = std::stod(parts[0]);
    r.stop = std::stod(parts[1]);
    r.step = std::stod(parts[2]);
  } catch (const std::exception&) {
    throw bad();
  }
  if (r.step <= 0.0 || r.stop < r.start) throw bad();
  return r;
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"geometric multipartite entanglement measures"};
  app.name("entgeo");
  app.require_subcommand(1);

  InputOpts in;
  std::string probe_name_ = "fr";
  std::string format_name = "json";
  std::string average_name_ = "arithmetic";
  std::string family;
  std::string param_range;
  double tol = 1e-9;
  int scott_m = 1;
  long long budget = 20000;
  int restarts = 8;
  int k_max = 0;
  std::uint64_t seed = 0;
  bool all_perms = false;
  bool emit_amplitudes = false;

  auto add_probe = [&](CLI::App* cmd) {
    cmd->add_option("--probe", probe_name_, "pair probe: fr or qc")
        ->check(CLI::IsMember({"fr", "qc"}));
  };
  auto add_format = [&](CLI::App* cmd) {
    return cmd->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* measure = app.add_subcommand("measure", "arithmetic/geometric pair measures");
  add_input_flags(measure, in);
  add_probe(measure);
  measure->add_option("--tol", tol, "classification tolerance");
  add_format(measure);

  auto* hopf = app.add_subcommand("hopf", "Clifford/Hopf map images and K-invariants");
  add_input_flags(hopf, in);
  hopf->add_flag("--all-perms", all_perms, "emit the image for every qubit relabeling");
  add_format(hopf);

  auto* scott = app.add_subcommand("scott", "Scott subset measure Q_m");
  add_input_flags(scott, in);
  scott->add_option("--m", scott_m, "subset size")->required();
  add_format(scott);

  auto* roof = app.add_subcommand("roof", "convex-roof extension for mixed states");
  add_input_flags(roof, in);
  add_probe(roof);
  roof->add_option("--average", average_name_, "arithmetic or geometric")
      ->check(CLI::IsMember({"arithmetic", "geometric"}));
  roof->add_option("--budget", budget, "objective evaluation budget");
  roof->add_option("--restarts", restarts, "independent optimizer restarts");
  roof->add_option("--k-max", k_max, "decomposition size cap (0: min(2r, r^2))");
  roof->add_option("--seed", seed, "optimizer seed");
  add_format(roof);

  auto* state = app.add_subcommand("state", "resolve and print a state");
  add_input_flags(state, in);
  state->add_flag("--emit", emit_amplitudes, "print the full interchange JSON");

  auto* sweep = app.add_subcommand("sweep", "measure a one-parameter family");
  sweep->add_option("--family", family, "mems or werner")
      ->required()
      ->check(CLI::IsMember({"mems", "werner"}));
  sweep->add_option("--param", param_range, "start:stop:step")->required();
  add_probe(sweep);
  sweep->add_option("--tol", tol, "classification tolerance");
  auto* sweep_format = add_format(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  // Sweep output is row-oriented, so its format defaults to CSV.
  if (*sweep && sweep_format->count() == 0) format_name = "csv";

  const ProbeKind probe = probe_from_name(probe_name_);
  const ReportFormat format = format_from_name(format_name);

  if (*measure) {
    const StateOrDensity input = load_input(in);
    const MeasureReport report =
        std::holds_alternative<StateVector>(input)
            ? measure_report(std::get<StateVector>(input), probe, tol)
            : measure_report(std::get<DensityMatrix>(input), probe, tol);
    std::cout << emit_report(report, format);
    return 0;
  }

  if (*hopf) {
    const StateVector psi = require_pure(load_input(in), "hopf");
    if (psi.n_qubits() != 2 && psi.n_qubits() != 3)
      throw CommandError(2, "--state: hopf maps are defined for 2- or 3-qubit states");
    HopfReport report;
    report.n_qubits = psi.n_qubits();
    if (all_perms) {
      for (const auto& perm : symmetric_group(psi.n_qubits()))
        report.images.push_back(image_of(psi, perm));
    } else {
      report.images.push_back(image_of(psi, Permutation::identity(psi.n_qubits())));
    }
    std::cout << emit_report(report, format);
    return 0;
  }

  if (*scott) {
    const StateVector psi = require_pure(load_input(in), "scott");
    ScottReport report;
    report.n_qubits = psi.n_qubits();
    report.m = scott_m;
    report.q = scott_q(psi, scott_m);
    std::cout << emit_report(report, format);
    return 0;
  }

  if (*roof) {
    const DensityMatrix rho = as_density(load_input(in));
    RoofOptions options;
    options.budget = budget;
    options.restarts = restarts;
    options.k_max = k_max;
    options.seed = seed;
    const RoofResult result =
        roof_measure(rho, probe, average_from_name(average_name_), options);
    std::cout << emit_report(result, format);
    return 0;
  }

  if (*state) {
    const StateOrDensity input = load_input(in);
    if (emit_amplitudes) {
      if (std::holds_alternative<StateVector>(input))
        std::cout << to_json(std::get<StateVector>(input)) << "\n";
      else
        std::cout << to_json(std::get<DensityMatrix>(input)) << "\n";
      return 0;
    }
    if (std::holds_alternative<StateVector>(input)) {
      const auto& psi = std::get<StateVector>(input);
      std::cout << "{\"kind\":\"state\",\"n_qubits\":" << psi.n_qubits()
                << ",\"dim\":" << psi.dim() << "}\n";
    } else {
      const auto& rho = std::get<DensityMatrix>(input);
      std::cout << "{\"kind\":\"density\",\"n_qubits\":" << rho.n_qubits()
                << ",\"dim\":" << rho.dim() << "}\n";
    }
    return 0;
  }

  // sweep
  const SweepRange range = parse_range(param_range);
  SweepReport report;
  report.family = family;
  report.probe = probe;
  report.n_qubits = family == "werner" ? 2 : 4;
  const long n_steps =
      std::lround(std::floor((range.stop - range.start) / range.step + 1e-9));
  for (long i = 0; i <= n_steps; ++i) {
    const double x = std::min(range.start + static_cast<double>(i) * range.step, range.stop);
    MeasureReport mr = family == "werner"
                           ? measure_report(make_werner(x), probe, tol)
                           : measure_report(make_mems_purification(x), probe, tol);
    SweepRow row;
    row.param = x;
    row.pair_values = mr.pairs.values;
    row.m = mr.m;
    row.g = mr.g;
    report.rows.push_back(std::move(row));
  }
  std::cout << emit_report(report, format);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  try {
    return dispatch(args);
  } catch (const CommandError& e) {
    std::cerr << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace entgeo::cli
