#include "cli.hpp"

#include "checks.hpp"
#include "eurbound/bounds.hpp"
#include "eurbound/maxprob.hpp"
#include "eurbound/oracle.hpp"
#include "eurbound/quantum.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace eur::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_triplet(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + item + "' in triplet");
    }
  }
  if (v.size() != 3) throw UsageError("--triplet expects cA,cB,cAB");
  return v;
}

OverlapTriplet triplet_from(const std::optional<double>& c, const std::string& triplet) {
  if (c && !triplet.empty()) throw UsageError("give either --c or --triplet, not both");
  if (c) return OverlapTriplet::nondegenerate(*c);
  if (triplet.empty()) throw UsageError("one of --c or --triplet is required");
  const auto v = parse_triplet(triplet);
  return OverlapTriplet(v[0], v[1], v[2]);
}

// Overlaps computed from matrices can land an ulp above one.
double clamp_overlap(double c) { return std::min(c, 1.0); }

std::string csv_row(std::initializer_list<double> values) {
  std::string line;
  for (double v : values) {
    if (!line.empty()) line += ',';
    line += format_number(v);
  }
  return line + '\n';
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open output file '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// Renyi-type specs (Shannon included) report their index for the log-family references.
std::optional<EntropicIndex> renyi_index(const EntropySpec& s) {
  if (s.family() == Family::Shannon) return EntropicIndex(1.0);
  if (s.family() == Family::Renyi) return s.index();
  return std::nullopt;
}

std::optional<EntropicIndex> tsallis_index(const EntropySpec& s) {
  if (s.family() == Family::Shannon) return EntropicIndex(1.0);
  if (s.family() == Family::Tsallis) return s.index();
  return std::nullopt;
}

double rastegin_or_nan(FTag f, const EntropicIndex& a, const EntropicIndex& b, double c) {
  if (conjugacy_region(a, b) == ConjugacyRegion::Above) return kNaN;
  return rastegin_f(f, a, b, c);
}

// ---- bound ----

struct BoundArgs {
  std::string ea, eb, triplet;
  std::optional<double> c;
};

int cmd_bound(const BoundArgs& args, std::ostream& out) {
  const auto a = parse_entropy_spec(args.ea);
  const auto b = parse_entropy_spec(args.eb);
  const auto t = triplet_from(args.c, args.triplet);
  const BoundResult r = proposition_bound(a, b, t);
  out << "value=" << format_number(r.value) << " branch="
      << (r.branch == BoundBranch::AnalyticCorner ? "corner" : "minimized")
      << " theta=" << format_number(r.minimizer_theta.value_or(kNaN)) << '\n';
  return kExitOk;
}

// ---- sweep ----

struct SweepArgs {
  std::string ref, family = "renyi", region = "auto", alpha = "0:3:0.05", beta = "0:3:0.05";
  double c = 0.5;
  int n = 3;
};

bool in_region(const std::string& region, ConjugacyRegion where) {
  if (region == "all") return true;
  if (region == "conj") return where == ConjugacyRegion::Curve;
  if (region == "below") return where == ConjugacyRegion::Below;
  if (region == "above") return where == ConjugacyRegion::Above;
  return where != ConjugacyRegion::Above;  // conj-below
}

int cmd_sweep(SweepArgs args, std::ostream& out) {
  const auto alphas = parse_grid(args.alpha);
  const auto betas = parse_grid(args.beta);
  const bool riesz_thorin = args.ref == "mu" || args.ref == "rastegin";
  if (args.region == "auto") args.region = riesz_thorin ? "conj-below" : "all";
  if (riesz_thorin && (args.region == "all" || args.region == "above"))
    throw UsageError("--ref " + args.ref + " only holds on or below the conjugacy curve");
  const auto in_unit_square = [&] {
    for (double v : alphas)
      if (v > 1.0) return false;
    for (double v : betas)
      if (v > 1.0) return false;
    return true;
  };
  const bool shannon_type_ref = args.ref == "cp_star" || (args.family == "tsallis" && args.ref != "rastegin");
  if (shannon_type_ref && !in_unit_square())
    throw UsageError("--ref " + args.ref + " with --family " + args.family +
                     " needs alpha and beta grids inside [0, 1]");
  if (!(args.c > 0.0 && args.c <= 1.0)) throw UsageError("--c must lie in (0, 1]");
  if (args.ref == "cp_star" && args.n < 2) throw UsageError("--n must be at least 2");

  const bool tsallis = args.family == "tsallis";
  const auto make = [&](double index) {
    return tsallis ? EntropySpec::tsallis(index) : EntropySpec::renyi(index);
  };
  const OverlapTriplet t = OverlapTriplet::nondegenerate(args.c);

  out << "alpha,beta,B,Bref,reldiff\n";
  for (double alpha : alphas) {
    for (double beta : betas) {
      const EntropicIndex ia(alpha), ib(beta);
      if (!in_region(args.region, conjugacy_region(ia, ib))) continue;
      const double bound = proposition_bound(make(alpha), make(beta), t).value;
      double ref = 0.0;
      if (args.ref == "mu") ref = maassen_uffink(args.c);
      if (args.ref == "deutsch") ref = deutsch(args.c);
      if (args.ref == "cp_star") ref = coles_piani_star(args.c, args.n);
      if (args.ref == "rastegin")
        ref = rastegin_f(tsallis ? FTag::IdMinusOne : FTag::Log, ia, ib, args.c);
      const double rel = bound == 0.0 ? kNaN : (bound - ref) / bound;
      out << csv_row({alpha, beta, bound, ref, rel});
    }
  }
  return kExitOk;
}

// ---- perm ----

struct PermArgs {
  int n = 3;
  double alpha = 1.4;
  std::string s = "0:0.5:0.005";
};

int cmd_perm(const PermArgs& args, std::ostream& out) {
  if (args.n < 2) throw UsageError("--n must be at least 2");
  const EntropicIndex alpha(args.alpha);
  const auto spec = EntropySpec::renyi(alpha);
  out << "s,c,B,B_deutsch,B_mu,B_rastegin,B_prz_worst\n";
  for (double s : parse_grid(args.s)) {
    if (s < 0.0 || s > 1.0) throw UsageError("s values must lie in [0, 1]");
    const double c = clamp_overlap(overlap_of_unitary(permutation_power(args.n, s)));
    const double bound = proposition_bound(spec, spec, OverlapTriplet::nondegenerate(c)).value;
    out << csv_row({s, c, bound, deutsch(c), maassen_uffink(c),
                    rastegin_or_nan(FTag::Log, alpha, alpha, c), prz_worst(alpha, c)});
  }
  return kExitOk;
}

// ---- haar ----

struct HaarArgs {
  int n = 3;
  std::optional<double> alpha;
  std::string ea, eb;
  long samples = 10000;
  std::uint64_t seed = 0;
};

int cmd_haar(const HaarArgs& args, std::ostream& out) {
  if (args.n < 1) throw UsageError("--n must be positive");
  if (args.samples < 1) throw UsageError("--samples must be positive");
  if (args.alpha && (!args.ea.empty() || !args.eb.empty()))
    throw UsageError("give either --alpha or --ea/--eb");
  if (!args.alpha && (args.ea.empty() || args.eb.empty()))
    throw UsageError("one of --alpha or both --ea and --eb is required");
  const auto a = args.alpha ? EntropySpec::renyi(*args.alpha) : parse_entropy_spec(args.ea);
  const auto b = args.alpha ? EntropySpec::renyi(*args.alpha) : parse_entropy_spec(args.eb);

  const auto ra = renyi_index(a), rb = renyi_index(b);
  const auto ta = tsallis_index(a), tb = tsallis_index(b);
  out << "sample,c,B,B_mu,B_deutsch,B_rastegin,B_prz_worst\n";
  for (long k = 0; k < args.samples; ++k) {
    QuantumSampler sampler(args.seed, static_cast<std::uint64_t>(k));
    const double c = clamp_overlap(overlap_of_unitary(sampler.haar_unitary(args.n)));
    const double bound = proposition_bound(a, b, OverlapTriplet::nondegenerate(c)).value;
    double rastegin = kNaN, prz = kNaN;
    if (ra && rb) {
      rastegin = rastegin_or_nan(FTag::Log, *ra, *rb, c);
      if (*ra == *rb) prz = prz_worst(*ra, c);
    } else if (ta && tb) {
      rastegin = rastegin_or_nan(FTag::IdMinusOne, *ta, *tb, c);
    }
    out << csv_row({static_cast<double>(k), c, bound, maassen_uffink(c), deutsch(c), rastegin, prz});
  }
  return kExitOk;
}

// ---- oracle ----

struct OracleArgs {
  std::string kind = "states", e, ea, eb, triplet, purity = "pure";
  std::optional<double> c;
  double p = 0.5;
  int n = 2;
  long budget = 10000;
  int grid = 10000;
  std::uint64_t seed = 0;
};

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  OracleReport rep;
  double reference = kNaN;
  if (args.kind == "fixed-max") {
    if (args.e.empty()) throw UsageError("--e is required for fixed-max");
    const auto spec = parse_entropy_spec(args.e);
    rep = min_entropy_fixed_max(spec, args.p, args.n, args.budget, args.seed);
    reference = h_min(spec, args.p);
  } else if (args.kind == "states" || args.kind == "lp-grid") {
    if (args.ea.empty() || args.eb.empty()) throw UsageError("--ea and --eb are required");
    const auto a = parse_entropy_spec(args.ea);
    const auto b = parse_entropy_spec(args.eb);
    if (args.kind == "states") {
      if (!args.c) throw UsageError("--c is required for states");
      if (args.purity != "pure" && args.purity != "mixed")
        throw UsageError("--purity must be pure or mixed");
      const auto t = unitary_with_overlap(args.n, *args.c);
      rep = min_entropy_sum_states(a, b, t, args.purity == "pure" ? Purity::Pure : Purity::Mixed,
                                   args.budget, args.seed);
      reference = proposition_bound(a, b, OverlapTriplet::nondegenerate(*args.c)).value;
    } else {
      const auto t = triplet_from(args.c, args.triplet);
      rep = min_sum_lp_grid(a, b, t, args.grid);
      reference = proposition_bound(a, b, t).value;
    }
  } else {
    throw UsageError("--kind must be fixed-max, states or lp-grid");
  }
  out << "minimum=" << format_number(rep.minimum_value) << " reference=" << format_number(reference)
      << " gap=" << format_number(rep.minimum_value - reference) << " samples=" << rep.samples_used
      << " iterations=" << rep.refinement_iterations << '\n';
  return kExitOk;
}

// ---- check ----

struct CheckArgs {
  std::vector<std::string> suites;
  CheckOptions options;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const auto names = args.suites.empty() ? suite_names() : args.suites;
  bool ok = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, args.options);
    ok = ok && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases
        << " violations=" << r.violations << " worst=" << format_number(r.worst);
    if (!r.passed) out << " at " << r.worst_case;
    out << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v + 0.0);  // no "-0"
  return buf;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(v))
      throw UsageError("bad grid value '" + s + "' in '" + text + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("grid ranges are lo:hi:step, got '" + text + "'");
    const double lo = number(parts[0]), hi = number(parts[1]), step = number(parts[2]);
    if (!(step > 0.0) || hi < lo) throw UsageError("empty or ill-formed grid '" + text + "'");
    const long count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long k = 0; k < count; ++k) out.push_back(std::round((lo + k * step) * 1e12) / 1e12);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(number(item));
  }
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic uncertainty bounds from the overlap of two measurements", "eurbound"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::string out_path;
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--out", out_path, "Write output here instead of stdout");
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed")->capture_default_str();
    sub->add_option("--out", out_path, "Write output here instead of stdout");
  };

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Lower bound for one spec pair and overlap");
  bound_cmd->add_option("--ea", bound.ea, "Entropy of A: shannon | renyi:<l|inf> | tsallis:<l>")->required();
  bound_cmd->add_option("--eb", bound.eb, "Entropy of B")->required();
  bound_cmd->add_option("--c", bound.c, "Overlap of two nondegenerate observables");
  bound_cmd->add_option("--triplet", bound.triplet, "cA,cB,cAB for general POVMs");
  common(bound_cmd);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Relative difference to a reference bound over an index grid");
  sweep_cmd->add_option("--ref", sweep.ref, "Reference bound")
      ->required()
      ->check(CLI::IsMember({"mu", "rastegin", "cp_star", "deutsch"}));
  sweep_cmd->add_option("--c", sweep.c, "Overlap")->capture_default_str();
  sweep_cmd->add_option("--family", sweep.family, "Entropy family")
      ->check(CLI::IsMember({"renyi", "tsallis"}))
      ->capture_default_str();
  sweep_cmd->add_option("--region", sweep.region, "Index region filter")
      ->check(CLI::IsMember({"auto", "all", "conj", "below", "above", "conj-below"}))
      ->capture_default_str();
  sweep_cmd->add_option("--alpha", sweep.alpha, "alpha grid lo:hi:step or list")->capture_default_str();
  sweep_cmd->add_option("--beta", sweep.beta, "beta grid lo:hi:step or list")->capture_default_str();
  sweep_cmd->add_option("--n", sweep.n, "Dimension for cp_star")->capture_default_str();
  common(sweep_cmd);

  PermArgs perm;
  auto* perm_cmd = app.add_subcommand("perm", "Bounds along powers of the cyclic permutation");
  perm_cmd->add_option("--n", perm.n, "Dimension")->capture_default_str();
  perm_cmd->add_option("--alpha", perm.alpha, "Renyi index used for both observables")->capture_default_str();
  perm_cmd->add_option("--s", perm.s, "s grid lo:hi:step or list")->capture_default_str();
  common(perm_cmd);

  HaarArgs haar;
  auto* haar_cmd = app.add_subcommand("haar", "Bounds for Haar-random transformation matrices");
  haar_cmd->add_option("--n", haar.n, "Dimension")->capture_default_str();
  haar_cmd->add_option("--alpha", haar.alpha, "Renyi index used for both observables");
  haar_cmd->add_option("--ea", haar.ea, "Entropy of A");
  haar_cmd->add_option("--eb", haar.eb, "Entropy of B");
  haar_cmd->add_option("--samples", haar.samples, "Number of unitaries")->capture_default_str();
  common(haar_cmd);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimum next to its closed form");
  oracle_cmd->add_option("--kind", oracle.kind, "fixed-max | states | lp-grid")
      ->check(CLI::IsMember({"fixed-max", "states", "lp-grid"}))
      ->capture_default_str();
  oracle_cmd->add_option("--e", oracle.e, "Entropy for fixed-max");
  oracle_cmd->add_option("--ea", oracle.ea, "Entropy of A");
  oracle_cmd->add_option("--eb", oracle.eb, "Entropy of B");
  oracle_cmd->add_option("--p", oracle.p, "Maximal probability for fixed-max")->capture_default_str();
  oracle_cmd->add_option("--n", oracle.n, "Dimension")->capture_default_str();
  oracle_cmd->add_option("--c", oracle.c, "Overlap");
  oracle_cmd->add_option("--triplet", oracle.triplet, "cA,cB,cAB for lp-grid");
  oracle_cmd->add_option("--purity", oracle.purity, "pure | mixed")->capture_default_str();
  oracle_cmd->add_option("--budget", oracle.budget, "Sample budget")->capture_default_str();
  oracle_cmd->add_option("--grid", oracle.grid, "Grid size for lp-grid")->capture_default_str();
  common(oracle_cmd);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run the invariant suites");
  check_cmd->add_option("--suite", check.suites, "Suite name, repeatable (default: all)")
      ->check(CLI::IsMember(suite_names()));
  check_cmd->add_option("--budget", check.options.budget, "Oracle budget")->capture_default_str();
  check_cmd->add_option("--c", check.options.overlaps, "Overlaps for qubit-optimal");
  check_cmd->add_option("--n", check.options.n, "Dimension for lp-domain")->capture_default_str();
  check_cmd->add_option("--samples", check.options.samples, "Sample count")->capture_default_str();
  common(check_cmd);

  std::vector<std::string> storage{"eurbound"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Output sink(out_path, out);
    if (bound_cmd->parsed()) return cmd_bound(bound, *sink);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, *sink);
    if (perm_cmd->parsed()) return cmd_perm(perm, *sink);
    if (haar_cmd->parsed()) {
      haar.seed = seed;
      return cmd_haar(haar, *sink);
    }
    if (oracle_cmd->parsed()) {
      oracle.seed = seed;
      return cmd_oracle(oracle, *sink);
    }
    check.options.seed = seed;
    return cmd_check(check, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace eur::cli
