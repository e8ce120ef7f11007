#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sectorlab/collapse.hpp"
#include "sectorlab/harness.hpp"
#include "sectorlab/inequalities.hpp"
#include "sectorlab/matrix_io.hpp"
#include "sectorlab/sector.hpp"

namespace sectorlab {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double snap(double x) { return std::abs(x) < 5e-12 ? 0.0 : x; }

std::string num(double x, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << snap(x);
  return os.str();
}

std::string complex_str(cdouble z) {
  const double re = snap(z.real()), im = snap(z.imag());
  std::ostringstream os;
  os << num(re) << (std::signbit(im) ? "-" : "+") << num(std::abs(im)) << "i";
  return os.str();
}

void print_matrix(std::ostream& out, const std::string& label, const Matrix& m) {
  out << label << " =\n";
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      cells.push_back(complex_str(m(i, j)));
      width = std::max(width, cells.back().size());
    }
  for (Index i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (Index j = 0; j < m.cols(); ++j) out << ' ' << std::setw(static_cast<int>(width)) << cells[i * m.cols() + j];
    out << " ]\n";
  }
}

std::string spectrum_str(const Hermitian& h) {
  const HermitianEigen e = eig_hermitian(h);
  std::ostringstream os;
  os << '{';
  for (Index i = 0; i < e.values.size(); ++i) os << (i ? ", " : "") << num(e.values(i));
  os << '}';
  return os.str();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SECTORLAB_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("SECTORLAB_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct CampaignFlags {
  int trials = 100;
  std::optional<int> dim;
  std::optional<double> theta;
  bool degrees = false;
  std::optional<std::uint64_t> seed;
  std::string map;
  std::vector<std::string> means;
  std::string function;
  std::optional<double> tol;
  std::string out;
  bool json = false;
  int threads = 1;
};

CampaignConfig build_config(const std::string& id, const CampaignFlags& f) {
  CampaignConfig cfg = make_campaign(id, f.trials, resolve_seed(f.seed));
  if (f.dim) cfg.generator.dim = *f.dim;
  if (f.theta) cfg.generator.theta = f.degrees ? *f.theta * std::numbers::pi / 180.0 : *f.theta;
  if (!f.map.empty()) cfg.map_id = f.map;
  if (!f.function.empty()) cfg.function_id = f.function;
  if (!f.means.empty()) cfg.mean_ids = split_commas(f.means);
  if (f.tol) cfg.tolerance.rel_tol = *f.tol;
  cfg.threads = f.threads;
  cfg.validate();
  return cfg;
}

void print_summary(std::ostream& out, const TrialReport& r) {
  const TheoremEntry& e = find_theorem(r.config.theorem_id);
  out << "theorem   " << e.id << "  (" << e.title << ")\n";
  out << "trials    " << r.trials_run << "\n";
  out << "hits      " << r.hypothesis_hits << "  (filter rate " << num(100.0 * r.filter_rate(), 4) << "%)\n";
  out << "passes    " << r.passes << "\n";
  if (!r.filter_reasons.empty()) {
    out << "filters  ";
    for (const auto& [reason, count] : r.filter_reasons) out << ' ' << reason << '=' << count;
    out << "\n";
  }
  if (r.has_worst) {
    out << "worst     residual " << std::setprecision(6) << r.worst_residual << "  (tolerance " << r.worst_tolerance
        << ") at trial " << r.worst_trial << "\n";
  }
  out << "verdict   " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
}

void print_counterexample(std::ostream& out, const TrialReport& r) {
  if (r.counterexamples.empty()) return;
  const Counterexample& c = r.counterexamples.front();
  out << "counterexample at trial " << c.trial << " (" << r.counterexample_count << " failing trials)\n";
  out << "  residual " << c.outcome.residual << ", tolerance " << c.outcome.tolerance << "\n";
  out << "  shrunk witness (dim " << c.shrunk.max_dim() << "): " << c.shrunk.to_json().dump() << "\n";
}

int cmd_verify(const std::string& id, const CampaignFlags& f, std::ostream& out) {
  const CampaignConfig cfg = build_config(id, f);
  const TrialReport r = run_campaign(cfg);
  if (!f.out.empty()) write_json_file(f.out, r.to_json());
  if (f.json) {
    out << r.to_json().dump(2) << "\n";
  } else {
    print_summary(out, r);
    print_counterexample(out, r);
  }
  return r.all_pass() ? kExitPass : kExitFail;
}

int cmd_verify_all(const CampaignFlags& f, std::ostream& out) {
  const std::filesystem::path dir = f.out.empty() ? std::filesystem::path("reports") : std::filesystem::path(f.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw UsageError("cannot create output directory '" + dir.string() + "'");
  std::ofstream csv(dir / "summary.csv");
  if (!csv) throw UsageError("output directory '" + dir.string() + "' is not writable");
  csv << TrialReport::csv_header() << "\n";

  const std::uint64_t seed = resolve_seed(f.seed);
  int code = kExitPass;
  nlohmann::json all = nlohmann::json::array();
  for (const std::string& id : theorem_ids()) {
    CampaignConfig cfg = make_campaign(id, f.trials, seed);
    cfg.threads = f.threads;
    if (f.tol) cfg.tolerance.rel_tol = *f.tol;
    const TrialReport r = run_campaign(cfg);
    write_json_file(dir / (id + ".json"), r.to_json());
    csv << r.csv_row() << "\n";
    if (!r.all_pass()) code = kExitFail;
    if (f.json) {
      all.push_back(r.to_json());
    } else {
      out << std::left << std::setw(14) << id << std::right << " trials " << std::setw(6) << r.trials_run << "  hits "
          << std::setw(6) << r.hypothesis_hits << "  passes " << std::setw(6) << r.passes << "  "
          << (r.all_pass() ? "PASS" : "FAIL") << "\n";
    }
  }
  if (f.json) out << all.dump(2) << "\n";
  if (!csv) throw UsageError("failed writing summary.csv");
  return code;
}

int cmd_angle(const std::string& path, bool json, std::ostream& out) {
  Matrix a;
  try {
    a = read_matrix_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (a.rows() != a.cols()) throw UsageError("matrix must be square");
  double theta = 0.0;
  try {
    theta = sector_angle(a);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAccretive) throw;
    out << "not accretive\n";
    return kExitFail;
  }
  const double deg = theta * 180.0 / std::numbers::pi;
  if (json) {
    out << nlohmann::json{{"radians", theta}, {"degrees", deg}}.dump() << "\n";
  } else {
    out << std::setprecision(12) << theta << " rad  (" << std::setprecision(10) << deg << " deg)\n";
  }
  return kExitPass;
}

struct GenFlags {
  int dim = 3;
  double theta = 0.5;
  bool degrees = false;
  std::optional<std::uint64_t> seed;
  std::string im_sign = "indefinite";
  std::optional<double> m;
  std::optional<double> M;
  std::string out;
};

int cmd_gen(const GenFlags& f, std::ostream& out) {
  GeneratorConfig g;
  g.dim = f.dim;
  g.theta = f.degrees ? f.theta * std::numbers::pi / 180.0 : f.theta;
  g.seed = resolve_seed(f.seed);
  if (f.m.has_value() != f.M.has_value()) throw UsageError("--m and --M must be given together");
  if (f.m) g.re_bounds = std::make_pair(*f.m, *f.M);
  ImSign sign = ImSign::Indefinite;
  if (f.im_sign == "nonneg") sign = ImSign::Nonneg;
  else if (f.im_sign == "nonpos") sign = ImSign::Nonpos;
  else if (f.im_sign != "indefinite") throw UsageError("--im-sign must be indefinite, nonneg or nonpos");
  g.validate();
  Rng rng(g.seed);
  const SectorMatrix a = random_sector(g, rng, sign);
  if (f.out.empty()) {
    out << matrix_to_json(a.matrix()).dump(2) << "\n";
  } else {
    write_matrix_file(f.out, a.matrix());
    out << "wrote " << f.out << " (sector angle " << num(a.theta(), 9) << " rad)\n";
  }
  return kExitPass;
}

int demo_remark(std::ostream& out) {
  const RemarkMatrices rm = remark_matrices();
  out << "Fixed 2x2 pair, Phi = identity\n";
  print_matrix(out, "A", rm.a);
  print_matrix(out, "B", rm.b);
  const Hermitian ra = re_part(rm.a), rb = re_part(rm.b);
  print_matrix(out, "Re A", ra.matrix());
  print_matrix(out, "Re B", rb.matrix());
  const Matrix ab = hadamard(rm.a, rm.b);
  print_matrix(out, "A o B", ab);
  const Hermitian lhs = re_part(ab);
  const Hermitian rhs = hadamard(ra, rb);
  print_matrix(out, "Re(A o B)", lhs.matrix());
  out << "spectrum of Re(A o B): " << spectrum_str(lhs) << "\n";
  print_matrix(out, "Re A o Re B", rhs.matrix());
  const Hermitian diff = lhs - rhs;
  out << "spectrum of Re(A o B) - Re A o Re B: " << spectrum_str(diff) << "\n";
  out << "spectral norm of the difference: " << num(spectral_norm(diff)) << "\n";
  const CheckOutcome o = check_remark();
  out << "verdict: equality fails; the difference is indefinite, so neither side dominates\n";
  return o.pass ? kExitPass : kExitFail;
}

int demo_one_dim(std::ostream& out) {
  Matrix a(1, 1);
  a(0, 0) = cdouble(1.0, 1.0);
  out << "A = B = " << complex_str(a(0, 0)) << " (1x1)\n";
  const double theta = sector_angle(a);
  out << "sector angle of A: " << num(theta) << " rad (" << num(theta * 180.0 / std::numbers::pi) << " deg)\n";
  const Matrix ab = hadamard(a, a);
  out << "A o B = " << complex_str(ab(0, 0)) << "\n";
  out << "Re(A o B) = " << num(ab(0, 0).real()) << ", so A o B is not accretive\n";
  const bool inside = in_sector(ab, 1.5).inside;
  out << "A o B in S_theta for theta = 1.5: " << (inside ? "yes" : "no") << "\n";
  return inside ? kExitFail : kExitPass;
}

int demo_collapse(std::uint64_t seed, std::ostream& out) {
  out << "theta = 0: sector statements on Hermitian positive definite inputs (seed " << seed << ")\n";
  out << std::left << std::setw(8) << "sector" << std::setw(18) << "ancestor" << std::right << std::setw(16)
      << "residual" << std::setw(16) << "ancestor" << std::setw(12) << "|delta|" << "  agree\n";
  bool all = true;
  for (const CollapseRow& r : collapse_rows(seed)) {
    const double delta = std::abs(r.sector_residual - r.ancestor_residual);
    all = all && r.agrees();
    out << std::left << std::setw(8) << r.sector_id << std::setw(18) << r.ancestor_id << std::right
        << std::setw(16) << std::setprecision(8) << r.sector_residual << std::setw(16) << r.ancestor_residual
        << std::setw(12) << std::setprecision(2) << delta << "  " << (r.agrees() ? "yes" : "NO") << "\n";
  }
  return all ? kExitPass : kExitFail;
}

int cmd_replay(const std::string& path, int threads, std::ostream& out) {
  ReplayResult r;
  try {
    r = replay(path, threads);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw UsageError(e.what());
    throw;
  }
  out << "theorem   " << r.original.config.theorem_id << "\n";
  out << "counters  " << (r.counters_match ? "match" : "DIFFER") << "  (" << r.replayed.trials_run << " trials, "
      << r.replayed.hypothesis_hits << " hits, " << r.replayed.passes << " passes)\n";
  out << "digest    " << (r.digest_match ? "match" : "DIFFER") << "  (" << r.replayed.sample_digest << ")\n";
  out << "worst     " << (r.worst_match ? "match" : "DIFFER") << "\n";
  return r.matches() ? kExitPass : kExitFail;
}

void add_campaign_flags(CLI::App* cmd, CampaignFlags& f, bool single) {
  cmd->add_option("--trials", f.trials, "Number of trials")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Base seed (falls back to SECTORLAB_SEED)");
  cmd->add_option("--tol", f.tol, "Relative tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", f.json, "Machine-readable output");
  if (single) {
    cmd->add_option("--dim", f.dim, "Matrix dimension");
    cmd->add_option("--theta", f.theta, "Target sector angle (radians unless --degrees)");
    cmd->add_flag("--degrees", f.degrees, "Read --theta in degrees");
    cmd->add_option("--map", f.map, "Positive map id");
    cmd->add_option("--mean", f.means, "Mean ids sigma,sigma1,sigma2 (comma separated or repeated)");
    cmd->add_option("--function", f.function, "Scalar function id");
    cmd->add_option("--out", f.out, "Write the JSON report to this path");
  } else {
    cmd->add_option("--out", f.out, "Output directory for reports");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sector matrix inequality verifier"};
  app.require_subcommand(1);

  CampaignFlags verify_flags;
  std::string theorem_id;
  CLI::App* verify = app.add_subcommand("verify", "Run a seeded campaign for one statement");
  verify->add_option("theorem_id", theorem_id, "Statement id")->required();
  add_campaign_flags(verify, verify_flags, true);

  CampaignFlags all_flags;
  all_flags.trials = 200;
  CLI::App* verify_all = app.add_subcommand("verify-all", "Run every statement with default samplers");
  add_campaign_flags(verify_all, all_flags, false);

  std::string angle_path;
  bool angle_json = false;
  CLI::App* angle = app.add_subcommand("angle", "Print the certified sector angle of a matrix file");
  angle->add_option("matrix_file", angle_path, "JSON matrix file")->required();
  angle->add_flag("--json", angle_json, "Machine-readable output");

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random sector matrix");
  gen->add_option("--dim", gen_flags.dim, "Matrix dimension");
  gen->add_option("--theta", gen_flags.theta, "Target sector angle");
  gen->add_flag("--degrees", gen_flags.degrees, "Read --theta in degrees");
  gen->add_option("--seed", gen_flags.seed, "Seed (falls back to SECTORLAB_SEED)");
  gen->add_option("--im-sign", gen_flags.im_sign, "indefinite, nonneg or nonpos");
  gen->add_option("--m", gen_flags.m, "Lower spectral bound of the real part");
  gen->add_option("--M", gen_flags.M, "Upper spectral bound of the real part");
  gen->add_option("--out", gen_flags.out, "Output file (stdout when omitted)");

  std::string demo_name;
  std::optional<std::uint64_t> demo_seed;
  CLI::App* demo = app.add_subcommand("demo", "Narrated fixed computations: remark, one-dim, collapse");
  demo->add_option("name", demo_name, "Demo name")->required();
  demo->add_option("--seed", demo_seed, "Seed for the collapse demo");

  std::string replay_path;
  int replay_threads = 1;
  CLI::App* rep = app.add_subcommand("replay", "Re-run a report and compare counters and digest");
  rep->add_option("report", replay_path, "Report JSON file")->required();
  rep->add_option("--threads", replay_threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(theorem_id, verify_flags, out);
    if (verify_all->parsed()) return cmd_verify_all(all_flags, out);
    if (angle->parsed()) return cmd_angle(angle_path, angle_json, out);
    if (gen->parsed()) return cmd_gen(gen_flags, out);
    if (demo->parsed()) {
      if (demo_name == "remark") return demo_remark(out);
      if (demo_name == "one-dim") return demo_one_dim(out);
      if (demo_name == "collapse") return demo_collapse(resolve_seed(demo_seed), out);
      err << "unknown demo '" << demo_name << "'; known: remark, one-dim, collapse\n";
      return kExitUsage;
    }
    if (rep->parsed()) return cmd_replay(replay_path, replay_threads, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sectorlab
