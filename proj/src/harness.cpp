#include "sectorlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "sectorlab/functions.hpp"
#include "sectorlab/maps.hpp"

namespace sectorlab {

using nlohmann::json;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

bool fails(const CheckOutcome& o) { return o.hypotheses_ok && !o.pass; }

json tolerance_to_json(const TolerancePolicy& t) {
  return {{"abs_tol", t.abs_tol}, {"rel_tol", t.rel_tol}, {"eig_condition_cap", t.eig_condition_cap}};
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(seed ^ splitmix64(trial)); }

// ---------------------------------------------------------------------------

void CampaignConfig::validate() const {
  const TheoremEntry& entry = find_theorem(theorem_id);
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "campaign: trials must be >= 1");
  if (threads < 1) throw Error(ErrorKind::InvalidArgument, "campaign: threads must be >= 1");
  generator.validate();
  tolerance.validate();
  if (!map_id.empty()) (void)parse_map(map_id, generator.dim);
  if (!function_id.empty()) (void)make_function(function_id);
  for (const std::string& id : mean_ids) (void)make_mean(id);
  if (!entry.default_means.empty() && mean_ids.size() != 3) {
    throw Error(ErrorKind::InvalidArgument, "campaign: " + theorem_id + " needs three means (sigma, sigma1, sigma2)");
  }
}

json CampaignConfig::to_json() const {
  json j;
  j["theorem_id"] = theorem_id;
  j["trials"] = trials;
  j["generator"] = generator.to_json();
  j["map"] = map_id;
  j["means"] = mean_ids;
  j["function"] = function_id;
  j["tolerance"] = tolerance_to_json(tolerance);
  return j;
}

CampaignConfig CampaignConfig::from_json(const json& j) {
  CampaignConfig c;
  try {
    c.theorem_id = j.at("theorem_id").get<std::string>();
    c.trials = j.at("trials").get<int>();
    c.generator = GeneratorConfig::from_json(j.at("generator"));
    c.map_id = j.value("map", std::string());
    c.mean_ids = j.value("means", std::vector<std::string>{});
    c.function_id = j.value("function", std::string());
    const json& t = j.at("tolerance");
    c.tolerance.abs_tol = t.at("abs_tol").get<double>();
    c.tolerance.rel_tol = t.at("rel_tol").get<double>();
    c.tolerance.eig_condition_cap = t.at("eig_condition_cap").get<double>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("campaign config: ") + e.what());
  }
  return c;
}

CampaignConfig make_campaign(const std::string& theorem_id, int trials, std::uint64_t seed) {
  const TheoremEntry& e = find_theorem(theorem_id);
  CampaignConfig c;
  c.theorem_id = e.id;
  c.trials = trials;
  c.generator.dim = e.default_dim;
  c.generator.theta = e.default_theta;
  c.generator.re_bounds = e.default_bounds;
  c.generator.seed = seed;
  c.map_id = e.default_map;
  c.function_id = e.default_function;
  c.mean_ids = e.default_means;
  return c;
}

// ---------------------------------------------------------------------------

json TrialReport::to_json(bool include_wall_time) const {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["theorem_id"] = config.theorem_id;
  j["config"] = config.to_json();
  j["counters"] = {{"trials_run", trials_run},
                   {"hypothesis_hits", hypothesis_hits},
                   {"passes", passes},
                   {"failures", hypothesis_hits - passes}};
  j["filter_reasons"] = filter_reasons;
  j["filter_rate"] = filter_rate();
  if (has_worst) {
    j["worst_residual"] = {{"residual", worst_residual},
                           {"tolerance", worst_tolerance},
                           {"trial", worst_trial},
                           {"witness", worst_witness}};
  } else {
    j["worst_residual"] = nullptr;
  }
  json w = json::array();
  for (const Counterexample& c : counterexamples) {
    w.push_back({{"trial", c.trial},
                 {"outcome", c.outcome.to_json()},
                 {"shrunk", c.shrunk.to_json()},
                 {"shrunk_outcome", c.shrunk_outcome.to_json()},
                 {"shrunk_dim", c.shrunk.max_dim()}});
  }
  j["witnesses"] = std::move(w);
  j["counterexample_count"] = counterexample_count;
  j["sample_digest"] = sample_digest;
  if (include_wall_time) j["wall_time"] = wall_time;
  return j;
}

std::string TrialReport::csv_header() { return "theorem_id,trials,hits,passes,worst_residual"; }

std::string TrialReport::csv_row() const {
  std::ostringstream os;
  os << config.theorem_id << ',' << trials_run << ',' << hypothesis_hits << ',' << passes << ',';
  if (has_worst) {
    os << std::setprecision(17) << worst_residual;
  }
  return os.str();
}

TrialReport report_from_json(const json& j) {
  if (!j.is_object() || j.empty()) throw Error(ErrorKind::Parse, "report: empty or not an object");
  TrialReport r;
  try {
    const int version = j.at("schema_version").get<int>();
    if (version != kReportSchemaVersion) {
      throw Error(ErrorKind::Parse, "report: schema version " + std::to_string(version) + " does not match " +
                                        std::to_string(kReportSchemaVersion));
    }
    r.config = CampaignConfig::from_json(j.at("config"));
    const json& c = j.at("counters");
    r.trials_run = c.at("trials_run").get<std::uint64_t>();
    r.hypothesis_hits = c.at("hypothesis_hits").get<std::uint64_t>();
    r.passes = c.at("passes").get<std::uint64_t>();
    r.filter_reasons = j.value("filter_reasons", std::map<std::string, std::uint64_t>{});
    const json& w = j.at("worst_residual");
    if (!w.is_null()) {
      r.has_worst = true;
      r.worst_residual = w.at("residual").get<double>();
      r.worst_tolerance = w.at("tolerance").get<double>();
      r.worst_trial = w.at("trial").get<std::uint64_t>();
      r.worst_witness = w.at("witness");
    }
    r.counterexample_count = j.value("counterexample_count", std::uint64_t{0});
    r.sample_digest = j.at("sample_digest").get<std::string>();
    r.wall_time = j.value("wall_time", 0.0);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("report: ") + e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct TrialResult {
  bool sampled = false;
  CheckOutcome outcome;
  Instance instance;
  std::uint64_t digest = 0;
};

TrialResult run_trial(const TheoremEntry& entry, const SampleSpec& base, const CampaignConfig& cfg,
                      std::uint64_t index) {
  TrialResult t;
  Rng rng(trial_seed(cfg.generator.seed, index));
  try {
    t.instance = entry.sample(base, rng);
    t.sampled = true;
  } catch (const Error& e) {
    t.outcome.theorem_id = entry.id;
    t.outcome.filter_reason = filter_reason_for(e.kind());
    t.outcome.notes.push_back(std::string("sampling: ") + e.what());
    t.digest = fnv1a(t.outcome.filter_reason.data(), t.outcome.filter_reason.size());
    return t;
  }
  t.digest = t.instance.digest();
  t.outcome = evaluate_instance(entry, t.instance, cfg.tolerance);
  return t;
}

}  // namespace

TrialReport run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  const TheoremEntry& entry = find_theorem(cfg.theorem_id);
  const auto started = std::chrono::steady_clock::now();

  SampleSpec spec;
  spec.generator = cfg.generator;
  spec.map_id = cfg.map_id;
  spec.function_id = cfg.function_id;
  spec.mean_ids = cfg.mean_ids;

  const auto n = static_cast<std::size_t>(cfg.trials);
  std::vector<TrialResult> results(n);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(cfg.threads, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = run_trial(entry, spec, cfg, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) results[i] = run_trial(entry, spec, cfg, i);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  TrialReport r;
  r.config = cfg;
  std::uint64_t digest = fnv1a(nullptr, 0);
  for (std::size_t i = 0; i < n; ++i) {
    TrialResult& t = results[i];
    digest = fnv1a(&t.digest, sizeof t.digest, digest);
    ++r.trials_run;
    const CheckOutcome& o = t.outcome;
    if (!o.hypotheses_ok) {
      ++r.filter_reasons[o.filter_reason.empty() ? filter::kNumerical : o.filter_reason];
      continue;
    }
    ++r.hypothesis_hits;
    if (o.pass) ++r.passes;
    if (!r.has_worst || o.residual < r.worst_residual) {
      r.has_worst = true;
      r.worst_residual = o.residual;
      r.worst_tolerance = o.tolerance;
      r.worst_trial = i;
      r.worst_witness = o.witness;
    }
    if (!o.pass) {
      ++r.counterexample_count;
      if (r.counterexamples.size() < kMaxStoredCounterexamples) {
        Counterexample c;
        c.trial = i;
        c.outcome = o;
        c.instance = t.instance;
        ShrinkResult s = shrink_counterexample(cfg.theorem_id, t.instance, cfg.tolerance);
        c.shrunk = std::move(s.instance);
        c.shrunk_outcome = std::move(s.outcome);
        r.counterexamples.push_back(std::move(c));
      }
    }
  }
  r.sample_digest = hex64(digest);
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

bool deletable(const Instance& inst) {
  static const std::vector<std::string> agnostic = {"", "identity", "trace", "cyclic"};
  if (std::find(agnostic.begin(), agnostic.end(), inst.map_id) == agnostic.end()) return false;
  Index n = -1;
  for (const auto& [name, m] : inst.matrices) {
    if (m.rows() != m.cols()) return false;
    if (n >= 0 && m.rows() != n) return false;
    n = m.rows();
  }
  return n > 1;
}

Matrix drop_index(const Matrix& m, Index k) {
  const Index n = m.rows();
  Matrix out(n - 1, n - 1);
  for (Index i = 0, oi = 0; i < n; ++i) {
    if (i == k) continue;
    for (Index j = 0, oj = 0; j < n; ++j) {
      if (j == k) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

double round_to(double x, int digits) {
  const double s = std::pow(10.0, digits);
  return std::round(x * s) / s;
}

}  // namespace

ShrinkResult shrink_counterexample(const std::string& theorem_id, const Instance& witness,
                                   const TolerancePolicy& tol) {
  const TheoremEntry& entry = find_theorem(theorem_id);
  ShrinkResult res;
  res.instance = witness;
  res.outcome = evaluate_instance(entry, witness, tol);
  if (!fails(res.outcome)) return res;

  auto attempt = [&](Instance candidate) {
    if (res.steps_tried >= kMaxShrinkSteps) return false;
    ++res.steps_tried;
    CheckOutcome o = evaluate_instance(entry, candidate, tol);
    if (!fails(o)) return false;
    res.instance = std::move(candidate);
    res.outcome = std::move(o);
    ++res.steps_accepted;
    return true;
  };

  bool progress = true;
  while (progress && res.steps_tried < kMaxShrinkSteps) {
    progress = false;

    if (deletable(res.instance)) {
      const Index n = res.instance.max_dim();
      for (Index k = 0; k < n && !progress; ++k) {
        Instance c = res.instance;
        for (auto& [name, m] : c.matrices) m = drop_index(m, k);
        progress = attempt(std::move(c));
      }
      if (progress) continue;
    }

    {
      Instance c = res.instance;
      bool changed = false;
      for (auto& [name, m] : c.matrices) {
        if (m.rows() != m.cols()) continue;
        for (Index i = 0; i < m.rows(); ++i)
          for (Index j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != cdouble(0.0, 0.0)) {
              m(i, j) *= 0.5;
              changed = true;
            }
      }
      if (changed && attempt(std::move(c))) {
        progress = true;
        continue;
      }
    }

    for (int digits : {1, 2, 3, 4, 6}) {
      Instance c = res.instance;
      bool changed = false;
      for (auto& [name, m] : c.matrices) {
        for (Index i = 0; i < m.rows(); ++i)
          for (Index j = 0; j < m.cols(); ++j) {
            const cdouble v = m(i, j);
            const cdouble rv(round_to(v.real(), digits), round_to(v.imag(), digits));
            if (rv != v) {
              m(i, j) = rv;
              changed = true;
            }
          }
      }
      if (changed && attempt(std::move(c))) {
        progress = true;
        break;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, "'" + path.string() + "': " + e.what());
  }
}

ReplayResult replay(const std::filesystem::path& report_path, int threads) {
  ReplayResult out;
  out.original = report_from_json(read_json_file(report_path));
  CampaignConfig cfg = out.original.config;
  cfg.threads = threads;
  out.replayed = run_campaign(cfg);
  const TrialReport& a = out.original;
  const TrialReport& b = out.replayed;
  out.counters_match = a.trials_run == b.trials_run && a.hypothesis_hits == b.hypothesis_hits &&
                       a.passes == b.passes && a.filter_reasons == b.filter_reasons;
  out.digest_match = a.sample_digest == b.sample_digest;
  out.worst_match = a.has_worst == b.has_worst && (!a.has_worst || (a.worst_residual == b.worst_residual &&
                                                                      a.worst_trial == b.worst_trial));
  return out;
}

}  // namespace sectorlab
