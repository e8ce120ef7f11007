#include "sectorlab/theorems.hpp"

#include <array>
#include <random>
#include <sstream>

#include "sectorlab/functions.hpp"
#include "sectorlab/maps.hpp"

namespace sectorlab {

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// A quarter of the sector draws ignore the side conditions so that the
// hypothesis filters are exercised.
bool off_hypothesis(Rng& rng) { return coin(rng, 0.25); }

double weight(Rng& rng) { return uniform(rng, 0.1, 2.0); }
double unit_exponent(Rng& rng) { return uniform(rng, 0.05, 0.95); }
double reverse_exponent(Rng& rng) {
  return coin(rng) ? uniform(rng, -0.975, -0.025) : uniform(rng, 1.025, 1.975);
}

ImSign definite_sign(Rng& rng) { return coin(rng) ? ImSign::Nonneg : ImSign::Nonpos; }

Instance base(const SampleSpec& s) {
  Instance i;
  i.map_id = s.map_id;
  i.function_id = s.function_id;
  i.mean_ids = s.mean_ids;
  return i;
}

Matrix pd(const SampleSpec& s, Rng& rng) { return random_pd(s.generator.dim, rng).matrix(); }
Matrix sector(const SampleSpec& s, Rng& rng, ImSign sign = ImSign::Indefinite) {
  return random_sector(s.generator, rng, sign).matrix();
}

void put_pair(Instance& inst, const SampleSpec& s, Rng& rng, SignCondition sign, bool off) {
  if (off) {
    inst.matrices["A"] = sector(s, rng);
    inst.matrices["B"] = sector(s, rng);
    return;
  }
  GeneratorConfig g = s.generator;
  g.sign = sign;
  auto [a, b] = random_sector_pair_signed(g, rng);
  inst.matrices["A"] = a.matrix();
  inst.matrices["B"] = b.matrix();
}

void put_pd_quadruple(Instance& inst, const SampleSpec& s, Rng& rng) {
  for (const char* name : {"A", "B", "C", "D"}) inst.matrices[name] = pd(s, rng);
  inst.scalars["alpha"] = weight(rng);
  inst.scalars["beta"] = weight(rng);
}

SectorMatrix sec(const Instance& i, const char* name) { return SectorMatrix::certify(i.matrix(name)); }

Hermitian herm(const Instance& i, const char* name) {
  const Matrix& m = i.matrix(name);
  if (m.rows() != m.cols() || !is_hermitian(m)) {
    throw Error(ErrorKind::InvalidArgument, std::string("input ") + name + " must be Hermitian");
  }
  return Hermitian(m);
}

MeanTriple means_of(const Instance& i) {
  if (i.mean_ids.size() != 3) throw Error(ErrorKind::InvalidArgument, "three mean ids are required");
  return MeanTriple{make_mean(i.mean_ids[0]), make_mean(i.mean_ids[1]), make_mean(i.mean_ids[2])};
}

PositiveMap map_of(const Instance& i, Index n) { return parse_map(i.map_id.empty() ? "identity" : i.map_id, n); }

std::vector<TheoremEntry> build_registry() {
  std::vector<TheoremEntry> r;
  auto add = [&r](TheoremEntry e) { r.push_back(std::move(e)); };

  {
    TheoremEntry e;
    e.id = "power_bounds";
    e.title = "Real part of a principal power against the power of the real part";
    e.sector_inputs = true;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      static constexpr std::array<double, 6> ts = {-1.0, -0.5, 0.25, 0.5, 0.75, 1.0};
      Instance i = base(s);
      i.matrices["A"] = sector(s, rng);
      i.scalars["t"] = ts[std::uniform_int_distribution<std::size_t>(0, ts.size() - 1)(rng)];
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_power_bounds(sec(i, "A"), i.scalar("t"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "le17";
    e.title = "Re(A o B) against Re A o Re B under a sign condition on Im A o Im B";
    e.sector_inputs = true;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      const bool off = off_hypothesis(rng);
      put_pair(i, s, rng, coin(rng) ? SignCondition::ImHadamardNonneg : SignCondition::ImHadamardNonpos, off);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_le17(sec(i, "A"), sec(i, "B"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "neg_le17";
    e.title = "Negative control: Re(A o B) <= Re A o Re B without the sign condition";
    e.sector_inputs = true;
    e.control = true;
    e.default_theta = 1.0;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      i.matrices["A"] = sector(s, rng);
      i.matrices["B"] = sector(s, rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_le17_unsigned(sec(i, "A"), sec(i, "B"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "chan301";
    e.title = "Concavity of weighted Hadamard products of complementary powers";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      put_pd_quadruple(i, s, rng);
      i.scalars["r"] = unit_exponent(rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_chan301(herm(i, "A"), herm(i, "B"), herm(i, "C"), herm(i, "D"), i.scalar("alpha"),
                           i.scalar("beta"), i.scalar("r"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "t0_303";
    e.title = "Sector version of the complementary-power concavity";
    e.sector_inputs = true;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      const bool off = off_hypothesis(rng);
      // Im A >= 0 forces Im A^r >= 0 for r in (0,1); same-sign pairs keep
      // the Hadamard product of the imaginary parts nonnegative.
      const ImSign sac = off ? ImSign::Indefinite : definite_sign(rng);
      const ImSign sbd = off ? ImSign::Indefinite : definite_sign(rng);
      i.matrices["A"] = sector(s, rng, sac);
      i.matrices["C"] = sector(s, rng, sac);
      i.matrices["B"] = sector(s, rng, sbd);
      i.matrices["D"] = sector(s, rng, sbd);
      i.scalars["alpha"] = weight(rng);
      i.scalars["beta"] = weight(rng);
      i.scalars["r"] = unit_exponent(rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_t0_303(sec(i, "A"), sec(i, "B"), sec(i, "C"), sec(i, "D"), i.scalar("alpha"),
                          i.scalar("beta"), i.scalar("r"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "p1_321";
    e.title = "Reverse convexity of Kronecker products of complementary powers";
    e.default_dim = 2;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      put_pd_quadruple(i, s, rng);
      i.scalars["r"] = reverse_exponent(rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_p1_321(herm(i, "A"), herm(i, "B"), herm(i, "C"), herm(i, "D"), i.scalar("alpha"),
                          i.scalar("beta"), i.scalar("r"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "t1_308";
    e.title = "Reverse convexity of Hadamard products of complementary powers";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      put_pd_quadruple(i, s, rng);
      i.scalars["r"] = reverse_exponent(rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_t1_308(herm(i, "A"), herm(i, "B"), herm(i, "C"), herm(i, "D"), i.scalar("alpha"),
                          i.scalar("beta"), i.scalar("r"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "e305";
    e.title = "Sector version of the reverse Hadamard power convexity";
    e.sector_inputs = true;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      const bool off = off_hypothesis(rng);
      // With Im A, Im C of one sign, the negative exponent flips the sign of
      // one factor while the other usually keeps it; the condition is then
      // verified on the computed powers.
      const ImSign sac = off ? ImSign::Indefinite : definite_sign(rng);
      const ImSign sbd = off ? ImSign::Indefinite : definite_sign(rng);
      i.matrices["A"] = sector(s, rng, sac);
      i.matrices["C"] = sector(s, rng, sac);
      i.matrices["B"] = sector(s, rng, sbd);
      i.matrices["D"] = sector(s, rng, sbd);
      i.scalars["alpha"] = weight(rng);
      i.scalars["beta"] = weight(rng);
      i.scalars["r"] = reverse_exponent(rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_305(sec(i, "A"), sec(i, "B"), sec(i, "C"), sec(i, "D"), i.scalar("alpha"), i.scalar("beta"),
                       i.scalar("r"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "jc_L1";
    e.title = "Joint convexity of (X, Y) -> Y X^-1 Y";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      const Index n = s.generator.dim;
      i.matrices["X1"] = pd(s, rng);
      i.matrices["Y1"] = random_hermitian(n, rng).matrix();
      i.matrices["X2"] = pd(s, rng);
      i.matrices["Y2"] = random_hermitian(n, rng).matrix();
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_joint_convexity(ConvexityKind::BAinvB, 0.0, herm(i, "X1"), herm(i, "Y1"), herm(i, "X2"),
                                   herm(i, "Y2"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "jc_p1";
    e.title = "Joint convexity of (X, Y) -> X^r (x) Y^(1-r) outside [0,1]";
    e.default_dim = 2;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      for (const char* name : {"X1", "Y1", "X2", "Y2"}) i.matrices[name] = pd(s, rng);
      i.scalars["r"] = reverse_exponent(rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_joint_convexity(ConvexityKind::KronPower, i.scalar("r"), herm(i, "X1"), herm(i, "Y1"),
                                   herm(i, "X2"), herm(i, "Y2"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "remark";
    e.title = "Fixed 2x2 pair where Re(A o B) differs from Re A o Re B";
    e.default_dim = 2;
    e.sample = [](const SampleSpec& s, Rng&) { return base(s); };
    e.evaluate = [](const Instance&, const TolerancePolicy& tol) { return check_remark(tol); };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "e62";
    e.title = "Hadamard-multiplicative maps and real parts under a nonpositive sign condition";
    e.sector_inputs = true;
    e.default_map = "cyclic";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      put_pair(i, s, rng, SignCondition::ImHadamardNonpos, off_hypothesis(rng));
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      const SectorMatrix a = sec(i, "A"), b = sec(i, "B");
      return check_62(map_of(i, a.dim()), a, b, tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "e24";
    e.title = "Operator monotone function of a sector matrix against its real part";
    e.sector_inputs = true;
    e.default_function = "power:0.5";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      // Off-hypothesis draws are unstructured Gaussian matrices, usually not accretive.
      i.matrices["A"] = off_hypothesis(rng) ? random_gaussian(s.generator.dim, s.generator.dim, rng) : sector(s, rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_24(make_function(i.function_id), sec(i, "A"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "e39";
    e.title = "Supermultiplicative concave functions through a Hadamard-multiplicative map";
    e.default_function = "power:0.5";
    e.default_map = "submatrix:0,1";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      i.matrices["A"] = pd(s, rng);
      // Off-hypothesis draws replace B by an indefinite Hermitian matrix.
      i.matrices["B"] = off_hypothesis(rng) ? random_hermitian(s.generator.dim, rng).matrix() : pd(s, rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      const Hermitian a = herm(i, "A"), b = herm(i, "B");
      return check_39(make_function(i.function_id), map_of(i, a.dim()), a, b, tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "t4";
    e.title = "Sector version of the supermultiplicative function inequality";
    e.sector_inputs = true;
    e.default_function = "power:0.5";
    e.default_map = "cyclic";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      put_pair(i, s, rng, SignCondition::ImHadamardNonpos, off_hypothesis(rng));
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      const SectorMatrix a = sec(i, "A"), b = sec(i, "B");
      return check_t4(make_function(i.function_id), map_of(i, a.dim()), a, b, tol);
    };
    add(std::move(e));
  }

  auto mean_sampler = [](SignCondition sign) {
    return [sign](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      const auto bounds = s.generator.re_bounds.value_or(std::make_pair(1.0, 2.0));
      i.scalars["m"] = bounds.first;
      i.scalars["M"] = bounds.second;
      SampleSpec draw = s;
      draw.generator.re_bounds = bounds;
      const bool off = off_hypothesis(rng);
      // Off-hypothesis draws drop the spectral bounds on the real parts.
      if (off) draw.generator.re_bounds.reset();
      if (sign == SignCondition::None) {
        i.matrices["A"] = sector(draw, rng);
        i.matrices["B"] = sector(draw, rng);
      } else {
        put_pair(i, draw, rng, sign, false);
      }
      return i;
    };
  };
  {
    TheoremEntry e;
    e.id = "m1";
    e.title = "Kantorovich-type bound for real parts of means between a mean and its adjoint";
    e.sector_inputs = true;
    e.default_bounds = std::make_pair(1.0, 2.0);
    e.default_map = "identity";
    e.default_means = {"arithmetic", "geometric", "geometric"};
    e.sample = mean_sampler(SignCondition::None);
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      const SectorMatrix a = sec(i, "A"), b = sec(i, "B");
      return check_m1(map_of(i, a.dim()), a, b, i.scalar("m"), i.scalar("M"), means_of(i), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "e25";
    e.title = "Norm chain for Hadamard products of complementary powers";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      i.matrices["A"] = pd(s, rng);
      i.matrices["B"] = pd(s, rng);
      i.scalars["t"] = uniform(rng, 0.0, 1.0);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      static constexpr std::array<NormKind, 3> kinds = {NormKind::Spectral, NormKind::Frobenius, NormKind::Trace};
      return check_25(herm(i, "A"), herm(i, "B"), i.scalar("t"), kinds, tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "thmK";
    e.title = "Spectral norm bound for Hadamard products of mean powers";
    e.sector_inputs = true;
    e.default_bounds = std::make_pair(1.0, 3.0);
    e.default_map = "identity";
    e.default_means = {"arithmetic", "geometric", "geometric"};
    e.sample = mean_sampler(SignCondition::ImHadamardNonpos);
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      const SectorMatrix a = sec(i, "A"), b = sec(i, "B");
      return check_K(map_of(i, a.dim()), a, b, i.scalar("m"), i.scalar("M"), means_of(i), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "e41";
    e.title = "Inverse of a Hadamard product against the product of inverses";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      i.matrices["A"] = pd(s, rng);
      i.matrices["B"] = pd(s, rng);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_41(herm(i, "A"), herm(i, "B"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "e41_0";
    e.title = "Inverse of a compression against the compression of the inverse";
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      const Index n = s.generator.dim;
      i.matrices["A"] = pd(s, rng);
      const Index m = std::uniform_int_distribution<Index>(1, n)(rng);
      i.matrices["X"] = random_unitary(n, rng).leftCols(m);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_41_0(herm(i, "A"), i.matrix("X"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "t2";
    e.title = "Sector version of the Hadamard inverse lower bound";
    e.sector_inputs = true;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      put_pair(i, s, rng, SignCondition::ImHadamardNonpos, off_hypothesis(rng));
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_t2(sec(i, "A"), sec(i, "B"), tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "t3v1";
    e.title = "Sector reverse Hadamard inverse bound, sign condition on the inverses";
    e.sector_inputs = true;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      // Inversion negates the sign of the imaginary part, so a nonpositive
      // pair of inverses is drawn and then inverted.
      put_pair(i, s, rng, SignCondition::ImHadamardNonpos, off_hypothesis(rng));
      i.matrices["A"] = checked_inverse(i.matrices["A"]);
      i.matrices["B"] = checked_inverse(i.matrices["B"]);
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_t3(sec(i, "A"), sec(i, "B"), T3Variant::One, tol);
    };
    add(std::move(e));
  }
  {
    TheoremEntry e;
    e.id = "t3v2";
    e.title = "Sector reverse Hadamard inverse bound, nonnegative sign condition";
    e.sector_inputs = true;
    e.sample = [](const SampleSpec& s, Rng& rng) {
      Instance i = base(s);
      put_pair(i, s, rng, SignCondition::ImHadamardNonneg, off_hypothesis(rng));
      return i;
    };
    e.evaluate = [](const Instance& i, const TolerancePolicy& tol) {
      return check_t3(sec(i, "A"), sec(i, "B"), T3Variant::Two, tol);
    };
    add(std::move(e));
  }
  return r;
}

}  // namespace

const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> registry = build_registry();
  return registry;
}

const TheoremEntry& find_theorem(std::string_view id) {
  for (const TheoremEntry& e : theorem_registry())
    if (e.id == id) return e;
  std::ostringstream os;
  os << "unknown theorem id '" << id << "'; known ids:";
  for (const std::string& k : theorem_ids(true)) os << ' ' << k;
  throw Error(ErrorKind::InvalidArgument, os.str());
}

std::vector<std::string> theorem_ids(bool include_controls) {
  std::vector<std::string> ids;
  for (const TheoremEntry& e : theorem_registry())
    if (include_controls || !e.control) ids.push_back(e.id);
  return ids;
}

const char* filter_reason_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAccretive: return filter::kNotAccretive;
    case ErrorKind::NotPositiveDefinite: return filter::kNotPositiveDefinite;
    case ErrorKind::IllConditioned: return filter::kIllConditioned;
    case ErrorKind::Singular: return filter::kSingularProduct;
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::Parse: return filter::kInvalidInput;
    case ErrorKind::NonFinite:
    case ErrorKind::Convergence: return filter::kNumerical;
  }
  return filter::kNumerical;
}

CheckOutcome evaluate_instance(const TheoremEntry& entry, const Instance& inst, const TolerancePolicy& tol) {
  CheckOutcome o;
  try {
    o = entry.evaluate(inst, tol);
  } catch (const Error& e) {
    o = CheckOutcome{};
    o.theorem_id = entry.id;
    o.hypotheses_ok = false;
    o.pass = false;
    o.filter_reason = filter_reason_for(e.kind());
    o.notes.push_back(e.what());
  }
  o.witness = inst.to_json();
  return o;
}

}  // namespace sectorlab
