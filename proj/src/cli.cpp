// Copyright 2026 The gmsforge Authors
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

#include "gmsforge/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmsforge/constructions.hpp"
#include "gmsforge/fourier.hpp"
#include "gmsforge/gf2.hpp"
#include "gmsforge/registry.hpp"
#include "gmsforge/rewrites.hpp"
#include "gmsforge/serialize.hpp"
#include "gmsforge/simulator.hpp"
#include "gmsforge/table1.hpp"
#include "json.hpp"

namespace gmsforge {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  std::string outcome;
  std::optional<double> deviation;
};

struct Manifest {
  std::string command;
  std::vector<std::string> arguments;
  std::vector<Check> checks;
};

std::string fmt(double v, int precision = 12) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

struct SynthFlags {
  std::optional<std::size_t> n, control, target, hub;
  std::optional<double> chi, theta;
  std::string profile = "exponential";
  std::string terms, adder_terms;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "Register size");
    app->add_option("--control", control, "Control qubit");
    app->add_option("--target", target, "Target qubit");
    app->add_option("--hub", hub, "Hub qubit");
    app->add_option("--chi", chi, "Coupling angle");
    app->add_option("--theta", theta, "Rotation angle");
    app->add_option("--profile", profile, "exponential or power_law")
        ->check(CLI::IsMember({"exponential", "power_law"}));
    app->add_option("--terms", terms, "Power-law terms b:p,b:p");
    app->add_option("--adder-terms", adder_terms, "Adder power-law terms b:p,b:p");
  }

  SynthOptions options() const {
    SynthOptions o;
    o.n = n;
    o.control = control;
    o.target = target;
    o.hub = hub;
    o.chi = chi;
    o.theta = theta;
    o.profile = profile;
    if (!terms.empty()) o.terms = parse_terms(terms);
    if (!adder_terms.empty()) o.adder_terms = parse_terms(adder_terms);
    return o;
  }
};

bool is_circuit_file(const std::string& operand) {
  std::error_code ec;
  return std::filesystem::exists(operand, ec) && !std::filesystem::is_directory(operand, ec);
}

NamedCircuit resolve(const std::string& operand, const SynthFlags& flags) {
  if (is_circuit_file(operand)) {
    return NamedCircuit{deserialize(read_file(operand)), std::nullopt};
  }
  return build_named(operand, flags.options());
}

Circuit max_gms_only(const Circuit& c) { return cancel_inverse_pairs(gms_shrink(c)); }

std::string unitary_csv(const UnitaryMatrix& u) {
  std::ostringstream os;
  os << std::setprecision(17) << "re,im\n";
  for (const Complex& z : u.entries()) os << z.real() << "," << z.imag() << "\n";
  return os.str();
}

std::string names_list() {
  std::string s;
  for (const std::string& name : construction_names()) s += (s.empty() ? "" : ", ") + name;
  return s + ", linear";
}

// synth linear: matrix to fan layers of GMS gates.
json synth_linear(const std::string& matrix_text, Circuit& out) {
  json doc;
  try {
    doc = json::parse(matrix_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("matrix is not JSON: ") + e.what());
  }
  std::vector<std::vector<int>> rows;
  try {
    rows = doc.get<std::vector<std::vector<int>>>();
  } catch (const json::exception&) {
    throw UsageError("matrix must be an array of 0/1 rows");
  }
  const Gf2Matrix m = Gf2Matrix::from_rows(rows);
  const PluDecomposition plu = plu_decompose(m);
  const std::vector<FanLayer> fans = linear_fans(plu);
  out = constructions::fans_to_gms(m.size(), fans);
  return json(plu.permutation);
}

int cmd_synth(
    const std::string& name, const SynthFlags& flags, bool shrink, const std::string& matrix,
    const std::string& matrix_file, const std::string& output, std::ostream& out) {
  Circuit circuit;
  std::optional<json> permutation;
  if (name == "linear") {
    if (matrix.empty() == matrix_file.empty()) {
      throw UsageError("synth linear needs exactly one of --matrix or --matrix-file");
    }
    permutation = synth_linear(matrix.empty() ? read_file(matrix_file) : matrix, circuit);
  } else {
    circuit = build_named(name, flags.options()).generated;
  }
  if (shrink) circuit = max_gms_only(circuit);
  json doc = to_json(circuit);
  if (permutation) doc["output_permutation"] = *permutation;
  const std::string text = doc.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
  return kExitPass;
}

int cmd_verify(
    const std::string& file, const std::string& against, const SynthFlags& flags, double tol,
    const std::string& emit, bool as_json, std::ostream& out, Manifest& manifest) {
  const Circuit circuit = deserialize(read_file(file));
  const bool from_file = is_circuit_file(against);
  NamedCircuit target = resolve(against, flags);
  if (!from_file && !target.reference) {
    throw UsageError("construction '" + against + "' has no reference circuit");
  }
  const Circuit reference = from_file ? target.generated : *target.reference;
  if (!emit.empty()) {
    if (circuit.n_qubits() > 6) throw UsageError("--emit-unitary supports at most 6 qubits");
    write_file(emit, unitary_csv(unitary_of(circuit)));
  }
  const VerificationResult r = verify_against(circuit, reference, tol);
  const std::string verdict = r.passed ? "PASS" : "FAIL";
  manifest.checks.push_back({"verify " + file + " against " + against, verdict, r.max_deviation});
  if (as_json) {
    json doc = {{"result", verdict},
                {"method", r.method},
                {"phase", {r.phase.real(), r.phase.imag()}},
                {"max_deviation", r.max_deviation},
                {"leakage", r.leakage},
                {"failure", r.failure},
                {"tolerance", tol}};
    out << doc.dump(2) << "\n";
  } else {
    out << verdict << " method=" << r.method << " phase=(" << fmt(r.phase.real()) << ","
        << fmt(r.phase.imag()) << ") max_deviation=" << fmt(r.max_deviation, 6);
    if (r.method == "ancilla") out << " leakage=" << fmt(r.leakage, 6);
    if (!r.failure.empty()) out << " failure=" << r.failure;
    out << "\n";
  }
  return r.passed ? kExitPass : kExitFail;
}

int cmd_count(
    const std::string& operand, const SynthFlags& flags, bool shrink, bool as_json,
    std::ostream& out) {
  Circuit circuit = resolve(operand, flags).generated;
  if (shrink) circuit = max_gms_only(circuit);
  const CostReport c = cost(circuit);
  if (as_json) {
    json sizes = json::object();
    for (const auto& [size, count] : c.gms_by_size) sizes[std::to_string(size)] = count;
    json doc = {{"gms_pulses", c.gms_pulses}, {"gms_by_size", sizes},
                {"xx", c.xx},                 {"cnot", c.cnot},
                {"cp", c.cp},                 {"single_qubit", c.single_qubit},
                {"qubits", c.qubits},         {"ancillas", c.ancillas},
                {"entangling_pulses", c.entangling_pulses()}};
    out << doc.dump(2) << "\n";
  } else {
    out << "qubits " << c.qubits << "\n"
        << "ancillas " << c.ancillas << "\n"
        << "gms_pulses " << c.gms_pulses << "\n";
    for (const auto& [size, count] : c.gms_by_size) out << "gms_size_" << size << " " << count << "\n";
    out << "xx " << c.xx << "\n"
        << "cnot " << c.cnot << "\n"
        << "cp " << c.cp << "\n"
        << "single_qubit " << c.single_qubit << "\n"
        << "entangling_pulses " << c.entangling_pulses() << "\n";
  }
  return kExitPass;
}

const char* check_name(CellCheck check) {
  switch (check) {
    case CellCheck::kAtMost:
      return "at_most";
    case CellCheck::kExcluded:
      return "excluded";
    default:
      return "exact";
  }
}

int cmd_table1(bool as_json, std::ostream& out, Manifest& manifest) {
  const std::vector<Table1Cell> cells = table1_cells();
  for (const Table1Cell& c : cells) {
    manifest.checks.push_back({c.row + " " + c.column,
                               c.check == CellCheck::kExcluded ? "SKIPPED" : c.status(),
                               std::nullopt});
  }
  if (as_json) {
    json rows = json::array();
    for (const Table1Cell& c : cells) {
      rows.push_back({{"row", c.row},
                      {"column", c.column},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"check", check_name(c.check)},
                      {"status", c.status()}});
    }
    out << json{{"cells", rows}, {"passed", table1_passed(cells)}}.dump(2) << "\n";
  } else {
    out << std::left << std::setw(16) << "row" << std::setw(9) << "column" << std::setw(10)
        << "expected" << std::setw(8) << "actual" << "status\n";
    for (const Table1Cell& c : cells) {
      const std::string expected =
          (c.check == CellCheck::kAtMost ? "<=" : "") + std::to_string(c.expected);
      out << std::left << std::setw(16) << c.row << std::setw(9) << c.column << std::setw(10)
          << expected << std::setw(8) << c.actual << c.status() << "\n";
    }
  }
  return table1_passed(cells) ? kExitPass : kExitFail;
}

std::string params_text(const PowerLawParams& p) {
  std::string s;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    s += (i ? " " : "") + std::string("b") + std::to_string(i + 1) + "=" + fmt(p.terms[i].b) +
         " p" + std::to_string(i + 1) + "=" + fmt(p.terms[i].p);
  }
  return s;
}

std::string scan_csv(const FidelityScan& scan) {
  std::ostringstream os;
  os << "value,fidelity\n";
  for (const auto& [v, f] : scan.grid) os << fmt(v, 15) << "," << fmt(f, 17) << "\n";
  return os.str();
}

int cmd_optimize(
    std::size_t n, std::size_t m, double step, const SearchBox& box, const std::string& out_dir,
    bool serial, bool as_json, std::ostream& out) {
  const OptimizationResult r =
      optimize_powerlaw(n, m, step, box, serial ? Execution::kSerial : Execution::kParallel);
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> files;
  for (const FidelityScan& scan : r.scans) {
    const std::string path = (std::filesystem::path(out_dir) / ("scan_" + scan.axis + ".csv")).string();
    write_file(path, scan_csv(scan));
    files.push_back(path);
  }
  if (as_json) {
    json terms = json::array();
    for (const PowerLawTerm& t : r.params.terms) terms.push_back({t.b, t.p});
    out << json{{"n", n},           {"m", m},
                {"step", step},     {"terms", terms},
                {"fidelity", r.fidelity}, {"evaluations", r.evaluations},
                {"scans", files}}
               .dump(2)
        << "\n";
  } else {
    out << params_text(r.params) << " fidelity=" << fmt(r.fidelity) << " evaluations="
        << r.evaluations << "\n";
    for (const std::string& f : files) out << "wrote " << f << "\n";
  }
  return kExitPass;
}

int cmd_scan(
    std::size_t n, const std::string& params, int offset, const std::string& axis, double step,
    const SearchBox& box, const std::string& output, std::ostream& out) {
  PowerLawParams center{parse_terms(params), offset};
  const std::string csv = scan_csv(fidelity_scan(n, center, axis, step, box));
  if (output.empty()) {
    out << csv;
  } else {
    write_file(output, csv);
  }
  return kExitPass;
}

void write_manifest(const std::string& path, const Manifest& m, double seconds) {
  json checks = json::array();
  for (const Check& c : m.checks) {
    json entry = {{"name", c.name}, {"outcome", c.outcome}};
    entry["deviation"] = c.deviation ? json(*c.deviation) : json(nullptr);
    checks.push_back(entry);
  }
  const json doc = {{"command", m.command},
                    {"parameters", m.arguments},
                    {"tool_version", kToolVersion},
                    {"wall_time_s", seconds},
                    {"checks", checks}};
  write_file(path, doc.dump(2) + "\n");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Synthesize and verify circuits built from global entangling gates", "gmsforge"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string manifest_path;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--manifest", manifest_path, "Write a run manifest to this file");

  SynthFlags flags;
  bool shrink = false;
  std::string name, matrix, matrix_file, output;
  auto* synth = app.add_subcommand("synth", "Emit a generated circuit as JSON");
  synth->add_option("name", name, "Construction name or 'linear'")->required();
  flags.attach(synth);
  synth->add_flag("--max-gms-only", shrink, "Use only full-register GMS pulses");
  synth->add_option("--matrix", matrix, "GF(2) matrix as JSON rows (synth linear)");
  synth->add_option("--matrix-file", matrix_file, "File with the GF(2) matrix");
  synth->add_option("-o,--output", output, "Output file");

  std::string file, against, emit;
  double tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "Check a circuit file against a reference");
  verify->add_option("file", file, "Circuit JSON file")->required();
  verify->add_option("--against", against, "Construction name or circuit file")->required();
  verify->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--emit-unitary", emit, "Write the circuit unitary as re,im CSV");
  flags.attach(verify);

  std::string operand;
  auto* count = app.add_subcommand("count", "Gate counts of a circuit file or construction");
  count->add_option("operand", operand, "Circuit file or construction name")->required();
  flags.attach(count);
  count->add_flag("--max-gms-only", shrink, "Use only full-register GMS pulses");

  auto* table = app.add_subcommand("table1", "Recompute the gate-count table");

  std::size_t n = 10, m = 2;
  double step = 0.1;
  SearchBox box;
  std::string out_dir = ".";
  bool serial = false;
  auto* opt = app.add_subcommand("optimize-powerlaw", "Grid search of power-law parameters");
  opt->add_option("--n", n, "QFT size")->check(CLI::Range(2, 64));
  opt->add_option("--m", m, "Number of power-law terms")->check(CLI::Range(1, 3));
  opt->add_option("--step", step, "Grid step")->check(CLI::PositiveNumber);
  opt->add_option("--b-min", box.b_min);
  opt->add_option("--b-max", box.b_max);
  opt->add_option("--p-min", box.p_min);
  opt->add_option("--p-max", box.p_max);
  opt->add_option("--out-dir", out_dir, "Directory for scan CSVs");
  opt->add_flag("--serial", serial, "Single-threaded search");

  std::string params = "0.4:2.5,-0.5:3.4", axis = "b1";
  int offset = 0;
  auto* scan = app.add_subcommand("fidelity-scan", "One-axis scan of the fidelity formula");
  scan->add_option("--n", n, "QFT size")->check(CLI::Range(2, 64));
  scan->add_option("--params", params, "Center as b:p,b:p");
  scan->add_option("--offset", offset, "Distance offset")->check(CLI::IsMember({0, 1}));
  scan->add_option("--axis", axis, "b1, p1, b2, ...");
  scan->add_option("--step", step, "Grid step")->check(CLI::PositiveNumber);
  scan->add_option("--b-min", box.b_min);
  scan->add_option("--b-max", box.b_max);
  scan->add_option("--p-min", box.p_min);
  scan->add_option("--p-max", box.p_max);
  scan->add_option("-o,--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Manifest manifest;
  manifest.command = app.get_subcommands().front()->get_name();
  for (int i = 1; i < argc; ++i) manifest.arguments.emplace_back(argv[i]);

  int code = kExitUsage;
  try {
    if (synth->parsed()) {
      code = cmd_synth(name, flags, shrink, matrix, matrix_file, output, out);
    } else if (verify->parsed()) {
      code = cmd_verify(file, against, flags, tol, emit, as_json, out, manifest);
    } else if (count->parsed()) {
      code = cmd_count(operand, flags, shrink, as_json, out);
    } else if (table->parsed()) {
      code = cmd_table1(as_json, out, manifest);
    } else if (opt->parsed()) {
      code = cmd_optimize(n, m, step, box, out_dir, serial, as_json, out);
    } else if (scan->parsed()) {
      code = cmd_scan(n, params, offset, axis, step, box, output, out);
    }
  } catch (const UnknownConstruction& e) {
    err << "error: " << e.what() << "\nvalid names: " << names_list() << "\n";
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << " (set GMSFORGE_MAX_DENSE_QUBITS to raise it)\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SingularMatrix& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!manifest_path.empty()) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    try {
      write_manifest(manifest_path, manifest, seconds);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace gmsforge
