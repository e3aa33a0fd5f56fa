#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcuforge/experiments.hpp"
#include "mcuforge/ldd.hpp"
#include "mcuforge/rng.hpp"
#include "mcuforge/serialize.hpp"
#include "mcuforge/sim.hpp"
#include "mcuforge/su2.hpp"
#include "mcuforge/verify.hpp"

namespace {

using namespace mcuforge;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Named gate, rx:θ / ry:θ / rz:θ, random:SEED, or a literal 2x2 matrix as
// JSON (either {"matrix": [...]} or the bare four-pair array).
Unitary2 parse_unitary_spec(const std::string& spec) {
  if (spec == "x") return Unitary2::pauli_x();
  if (spec == "y") return Unitary2::pauli_y();
  if (spec == "z") return Unitary2::pauli_z();
  if (spec == "h") return Unitary2::hadamard();
  auto angle_arg = [&](const std::string& prefix) -> std::optional<double> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    return std::stod(spec.substr(prefix.size()));
  };
  if (auto t = angle_arg("rx:")) return make_rx(*t);
  if (auto t = angle_arg("ry:")) return make_ry(*t);
  if (auto t = angle_arg("rz:")) return make_rz(*t);
  if (spec.rfind("random:", 0) == 0)
    return random_su2(std::stoull(spec.substr(std::string("random:").size())));
  if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) {
    nlohmann::json j = nlohmann::json::parse(spec);
    if (j.is_array()) j = nlohmann::json{{"matrix", j}};
    return unitary_from_json(j);
  }
  throw std::invalid_argument("unrecognized unitary spec: " + spec);
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << "\n";
    return kExitIo;
  }
  out << text;
  if (!out.good()) {
    std::cerr << "error: failed writing output path: " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

void print_summary(std::ostream& os, const Circuit& c) {
  DepthReport r = schedule_asap(c);
  os << "label=" << c.label() << " width=" << c.width() << " gates=" << c.size()
     << " controlled=" << r.count_controlled << " depth_controlled=" << r.depth_controlled
     << " depth_lowered=" << r.depth_lowered << " cx=" << r.count_cx << " oneq=" << r.count_1q
     << "\n";
}

int cmd_decompose(int n, const std::string& uspec, bool lower, const std::string& out_path,
                  const std::string& format) {
  Unitary2 u = Unitary2::identity();
  try {
    u = parse_unitary_spec(uspec);
  } catch (const std::exception& e) {
    std::cerr << "error: invalid unitary spec: " << e.what() << "\n";
    return kExitUsage;
  }
  if (format == "qasm" && !lower) {
    std::cerr << "error: lowering required for qasm output (pass --lower)\n";
    return kExitUsage;
  }
  Circuit c = build_cnu({n, u});
  if (lower) c = lower_controlled(c);
  const std::string text = format == "qasm" ? to_qasm(c) : circuit_to_json_string(c) + "\n";
  int rc = write_output(text, out_path);
  if (rc != kExitOk) return rc;
  print_summary(out_path.empty() ? std::cerr : std::cout, c);
  return kExitOk;
}

int cmd_verify(int n_max, int trials, std::uint64_t seed, bool wrong_branch) {
  VerifyOptions options;
  options.n_max = n_max;
  options.trials = trials;
  options.seed = seed;
  options.branch = wrong_branch ? RootBranch::kWrapped : RootBranch::kPrincipal;
  VerifyReport report = verify_decomposition(options);
  for (const auto& [n, err] : report.worst_error_by_n) {
    std::printf("n=%-2d worst_error=%.3e (%s)\n", n, err,
                n <= 9 ? "full unitary vs oracle" : "statevector vs oracle");
  }
  if (!report.passed) {
    for (const VerifyFailure& f : report.failures)
      std::printf("FAIL n=%d u_seed=%llu stage=%s error=%.3e\n", f.n,
                  static_cast<unsigned long long>(f.u_seed), f.stage.c_str(), f.error);
    std::printf("verify: FAILED (%zu failing checks)\n", report.failures.size());
    return kExitVerifyFailed;
  }
  std::printf("verify: OK (n <= %d, %d random targets per n plus X)\n", n_max, trials);
  return kExitOk;
}

int cmd_bench(int n_min, int n_max, int trials, std::uint64_t seed, const std::string& out_path) {
  std::vector<BenchRow> rows;
  try {
    rows = depth_scaling_table(n_min, n_max, trials, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  int rc = write_output(bench_csv(rows), out_path);
  if (rc != kExitOk) return rc;
  if (!out_path.empty())
    std::cout << "wrote " << rows.size() << " rows to " << out_path
              << " (depths are raw lowered/controlled ASAP depths; no optimizer pass)\n";
  return kExitOk;
}

int cmd_experiment(const std::string& kind, int n, double noise_p, std::uint64_t shots,
                   std::uint64_t seed, const std::string& uspec, const std::string& out_path) {
  ExperimentResult result;
  try {
    NoiseSpec noise{noise_p, seed};
    if (kind == "a") {
      result = run_experiment_a(n, noise, shots == 0 ? kDefaultShotsA : shots);
    } else {
      Unitary2 u = uspec.empty() ? random_su2(mix_seed(seed, 0xb)) : parse_unitary_spec(uspec);
      result = run_experiment_b(n, u, noise, shots == 0 ? kDefaultShotsB : shots);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string csv = experiments_csv({result});
  int rc = write_output(csv, out_path);
  if (rc != kExitOk) return rc;
  std::ostream& os = out_path.empty() ? std::cerr : std::cout;
  os << "experiment " << kind << ": n=" << n << " p=" << noise_p << " shots=" << result.shots
     << " p_ones=" << result.p_ones
     << " (raw lowered depth, no transpiler optimization applied)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mcuforge: ancilla-free linear-depth synthesis of multi-controlled gates"};
  app.require_subcommand(1);

  // decompose
  auto* dec = app.add_subcommand("decompose", "Synthesize C^nU and emit QASM or JSON");
  int dec_n = 0;
  std::string dec_u, dec_out, dec_format = "json";
  bool dec_lower = false;
  dec->add_option("-n,--controls", dec_n, "number of control qubits")
      ->required()
      ->check(CLI::NonNegativeNumber);
  dec->add_option("-u,--unitary", dec_u,
                  "target unitary: x|y|z|h, rx:θ|ry:θ|rz:θ, random:SEED, or 2x2 matrix JSON")
      ->required();
  dec->add_flag("--lower", dec_lower, "lower controlled gates to {CX, one-qubit}");
  dec->add_option("-o,--out", dec_out, "output path (stdout when omitted)");
  dec->add_option("-f,--format", dec_format, "output format")
      ->check(CLI::IsMember({"qasm", "json"}));

  // verify
  auto* ver = app.add_subcommand("verify", "Check the decomposition against the brute-force oracle");
  int ver_nmax = 12, ver_trials = 50;
  std::uint64_t ver_seed = 11;
  bool ver_wrong_branch = false;
  ver->add_option("--n-max", ver_nmax, "largest control count to check")->check(CLI::Range(1, 20));
  ver->add_option("--trials", ver_trials, "random targets per n")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", ver_seed, "RNG seed");
  ver->add_flag("--wrong-root-branch", ver_wrong_branch)->group("");  // mutation hook for tests

  // bench
  auto* ben = app.add_subcommand("bench", "Depth-scaling table over a range of control counts");
  int ben_min = 3, ben_max = 12, ben_trials = 3;
  std::uint64_t ben_seed = 7;
  std::string ben_out;
  ben->add_option("n_min", ben_min, "smallest n")->required();
  ben->add_option("n_max", ben_max, "largest n")->required();
  ben->add_option("--trials", ben_trials, "random targets per n");
  ben->add_option("--seed", ben_seed, "RNG seed");
  ben->add_option("-o,--out", ben_out, "CSV output path (stdout when omitted)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a proof-of-principle circuit with noise");
  std::string exp_kind, exp_u, exp_out;
  int exp_n = 3;
  double exp_p = 0.0;
  std::uint64_t exp_shots = 0, exp_seed = 123;
  exp->add_option("kind", exp_kind, "experiment kind")
      ->required()
      ->check(CLI::IsMember({"a", "b"}));
  exp->add_option("-n,--controls", exp_n, "number of control qubits")
      ->required()
      ->check(CLI::PositiveNumber);
  exp->add_option("-p,--noise-p", exp_p, "depolarizing probability per gate-wire touch")
      ->check(CLI::Range(0.0, 1.0));
  exp->add_option("--shots", exp_shots, "samples (0 = experiment default)");
  exp->add_option("--seed", exp_seed, "RNG seed");
  exp->add_option("-u,--unitary", exp_u, "target for experiment b (default: seeded random SU(2))");
  exp->add_option("-o,--out", exp_out, "CSV output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dec->parsed()) return cmd_decompose(dec_n, dec_u, dec_lower, dec_out, dec_format);
    if (ver->parsed()) return cmd_verify(ver_nmax, ver_trials, ver_seed, ver_wrong_branch);
    if (ben->parsed()) return cmd_bench(ben_min, ben_max, ben_trials, ben_seed, ben_out);
    if (exp->parsed())
      return cmd_experiment(exp_kind, exp_n, exp_p, exp_shots, exp_seed, exp_u, exp_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
