#include "qac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "qac/channels.hpp"
#include "qac/duality.hpp"
#include "qac/error.hpp"
#include "qac/galois.hpp"
#include "qac/haar.hpp"
#include "qac/measures.hpp"
#include "qac/parallel.hpp"
#include "qac/tolerance.hpp"

namespace qac {

namespace {

constexpr double kNotApplicable = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxSuiteDimA = 13;
constexpr int kMaxSuiteTotal = 64;

struct Check {
  std::string name;
  double tolerance;
  Bound bound = Bound::AtMost;
};

using Row = std::vector<double>;
using Trial = std::function<void(std::uint64_t, Substream&, Row&)>;

// Runs `n` independent trials (possibly in parallel) and folds each check's
// residuals in trial order. A NaN entry means the check did not apply.
void run_battery(VerifyReport& report, const std::vector<Check>& checks, std::uint64_t n,
                 const VerifyOptions& options, const Trial& trial) {
  std::vector<Row> rows(n, Row(checks.size(), kNotApplicable));
  const SeededSampler sampler(options.seed);
  parallel_for(n, options.workers, [&](std::uint64_t i) {
    Substream s = sampler.at(i);
    trial(i, s, rows[i]);
  });
  for (std::size_t c = 0; c < checks.size(); ++c) {
    CheckRecord rec;
    rec.name = checks[c].name;
    rec.tolerance = tol(checks[c].tolerance);
    rec.bound = checks[c].bound;
    bool seen = false;
    for (const Row& row : rows) {
      const double r = row[c];
      if (std::isnan(r)) continue;
      rec.max_residual = seen ? std::max(rec.max_residual, r) : r;
      seen = true;
      ++rec.trials;
    }
    rec.pass = seen && (rec.bound == Bound::AtMost ? rec.max_residual <= rec.tolerance
                                                   : rec.max_residual >= rec.tolerance);
    report.checks.push_back(rec);
  }
}

// |estimate - expected| in standard errors; exact agreement counts as zero.
double sigmas(double mean, double std_error, double expected) {
  const double diff = std::abs(mean - expected);
  if (diff <= tolerances::kExact) return 0.0;
  return std_error > 0.0 ? diff / std_error : std::numeric_limits<double>::infinity();
}

double sigmas(const McEstimate& est, double expected) {
  return sigmas(est.mean, est.std_error, expected);
}

double matrix_sigmas(const MatrixEstimate& est, const ComplexMatrix& expected) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < expected.rows(); ++i) {
    for (Eigen::Index j = 0; j < expected.cols(); ++j) {
      worst = std::max(worst, sigmas(est.mean(i, j).real(), est.std_error_re(i, j),
                                     expected(i, j).real()));
      worst = std::max(worst, sigmas(est.mean(i, j).imag(), est.std_error_im(i, j),
                                     expected(i, j).imag()));
    }
  }
  return worst;
}

McOptions mc_for_trial(const VerifyOptions& options, std::uint64_t trial) {
  return McOptions{options.samples, derive_seed(options.seed, trial), 1};
}

std::string tag(int d) { return "[d=" + std::to_string(d) + "]"; }

void fail_dims(const std::string& why) { throw Error(ErrorCode::InvalidArgument, why); }

Dims bipartite_dims(const VerifyOptions& options, bool needs_mub) {
  if (options.dims.size() != 2) fail_dims(options.suite + " needs --dims d_A,d_B");
  const Dims dims{options.dims[0], options.dims[1]};
  if (dims.a < 2 || dims.b < 1) fail_dims("dimensions must satisfy d_A >= 2, d_B >= 1");
  if (dims.a > kMaxSuiteDimA || dims.total() > kMaxSuiteTotal) {
    fail_dims("dims exceed caps d_A <= 13, d_A * d_B <= 64");
  }
  if (needs_mub && !prime_power(dims.a)) {
    fail_dims(options.suite + " needs a prime-power d_A for the MUB average");
  }
  return dims;
}

std::vector<int> single_dims(const VerifyOptions& options, int cap, bool needs_mub) {
  if (options.dims.empty()) fail_dims(options.suite + " needs --dims d[,d...]");
  for (int d : options.dims) {
    if (d < 2 || d > cap) fail_dims("dimension " + std::to_string(d) + " outside [2, " +
                                    std::to_string(cap) + "]");
    if (needs_mub && !prime_power(d)) fail_dims(std::to_string(d) + " is not a prime power");
  }
  return options.dims;
}

ComplexMatrix ginibre(Substream& s, int d) { return sample_ginibre(s, d, d); }

// ---------------------------------------------------------------------------

void suite_prop1a(const VerifyOptions& o, VerifyReport& r) {
  const Dims dims = bipartite_dims(o, true);
  const MubSet mubs = mub_construct(dims.a);
  run_battery(r,
              {{"q-mub-nonnegative", tolerances::kExact},
               {"q-closed-nonnegative", tolerances::kExact},
               {"product-q-mub-zero", tolerances::kExact},
               {"product-q-closed-zero", tolerances::kExact},
               {"partial-coherence-dominates-local", tolerances::kExact}},
              o.trials, o, [&](std::uint64_t, Substream& s, Row& row) {
                const BipartiteDensityMatrix rho(sample_density_hs(s, dims.total()), dims);
                const BipartiteDensityMatrix product =
                    product_state(sample_density_hs(s, dims.a), sample_density_hs(s, dims.b));
                row[0] = std::max(0.0, -avg_correlation_mub(rho, mubs));
                row[1] = std::max(0.0, -avg_correlation_closed(rho));
                row[2] = std::abs(avg_correlation_mub(product, mubs));
                row[3] = std::abs(avg_correlation_closed(product));
                const DensityMatrix rho_a = reduced(rho, Party::A);
                double worst = 0.0;
                for (const auto& basis : mubs.bases()) {
                  worst = std::max(worst, coherence(rho_a, basis) - partial_coherence(rho, basis));
                }
                row[4] = worst;
              });
}

void suite_prop1b(const VerifyOptions& o, VerifyReport& r) {
  const Dims dims = bipartite_dims(o, true);
  const MubSet mubs = mub_construct(dims.a);
  constexpr int kEnvDim = 2;
  run_battery(r,
              {{"contractivity-q-mub", tolerances::kMeasure},
               {"contractivity-q-closed", tolerances::kMeasure},
               {"reduced-a-unchanged", tolerances::kState},
               {"trace-preserved", tolerances::kExact}},
              o.trials, o, [&](std::uint64_t i, Substream& s, Row& row) {
                const BipartiteDensityMatrix rho(sample_density_hs(s, dims.total()), dims);
                const KrausChannel channel =
                    random_channel(dims.b, kEnvDim, derive_seed(o.seed, i));
                const BipartiteDensityMatrix out = apply_on_B(channel, rho);
                row[0] = std::max(0.0, avg_correlation_mub(out, mubs) - avg_correlation_mub(rho, mubs));
                row[1] = std::max(0.0, avg_correlation_closed(out) - avg_correlation_closed(rho));
                row[2] = max_norm(reduced(out, Party::A).matrix() - reduced(rho, Party::A).matrix());
                row[3] = std::abs(out.matrix().trace() - Complex(1.0, 0.0));
              });
}

void suite_prop1c(const VerifyOptions& o, VerifyReport& r) {
  const Dims dims = bipartite_dims(o, true);
  const MubSet mubs = mub_construct(dims.a);
  run_battery(r,
              {{"local-unitary-invariance-q-mub", tolerances::kMeasure},
               {"local-unitary-invariance-q-closed", tolerances::kMeasure}},
              o.trials, o, [&](std::uint64_t, Substream& s, Row& row) {
                const BipartiteDensityMatrix rho(sample_density_hs(s, dims.total()), dims);
                const ComplexMatrix ua = sample_unitary(s, dims.a);
                const ComplexMatrix ub = sample_unitary(s, dims.b);
                const BipartiteDensityMatrix moved = conjugated(rho, ua, ub);
                row[0] = std::abs(avg_correlation_mub(moved, mubs) - avg_correlation_mub(rho, mubs));
                row[1] = std::abs(avg_correlation_closed(moved) - avg_correlation_closed(rho));
              });
}

void suite_prop2(const VerifyOptions& o, VerifyReport& r) {
  const Dims dims = bipartite_dims(o, false);
  run_battery(r, {{"haar-mc-vs-closed-sigmas", tolerances::kSigmas}}, o.trials, o,
              [&](std::uint64_t i, Substream& s, Row& row) {
                const BipartiteDensityMatrix rho(sample_density_hs(s, dims.total()), dims);
                row[0] = sigmas(avg_correlation_mc(rho, mc_for_trial(o, i)),
                                avg_correlation_closed(rho));
              });
}

void suite_prop3(const VerifyOptions& o, VerifyReport& r) {
  const Dims dims = bipartite_dims(o, true);
  const MubSet mubs = mub_construct(dims.a);
  const HermitianOperatorBasis g = operator_basis(dims.a);
  run_battery(r,
              {{"q-mub-vs-closed", tolerances::kMeasure},
               {"q-ob-vs-closed", tolerances::kMeasure},
               {"local-skew-sum-identity", tolerances::kMeasure},
               {"haar-mc-vs-closed-sigmas", tolerances::kSigmas}},
              o.trials, o, [&](std::uint64_t i, Substream& s, Row& row) {
                const BipartiteDensityMatrix rho(sample_density_hs(s, dims.total()), dims);
                const double closed = avg_correlation_closed(rho);
                row[0] = std::abs(avg_correlation_mub(rho, mubs) - closed);
                row[1] = std::abs(correlation_operator_basis(rho, g) - closed);
                const DensityMatrix rho_a = reduced(rho, Party::A);
                const double t = trace_sqrt(rho_a);
                row[2] = std::abs(local_skew_sum(rho_a, g) - (dims.a - t * t));
                if (i < o.mc_states) row[3] = sigmas(avg_correlation_mc(rho, mc_for_trial(o, i)), closed);
              });
}

void suite_prop4(const VerifyOptions& o, VerifyReport& r) {
  const Dims dims = bipartite_dims(o, false);
  run_battery(r,
              {{"complementarity-pure", tolerances::kMeasure},
               {"wave-particle-identity", tolerances::kExact},
               {"schmidt-form-vs-closed", tolerances::kMeasure},
               {"mixed-state-counterexample", 1e-3, Bound::AtLeast}},
              o.trials, o, [&](std::uint64_t, Substream& s, Row& row) {
                const PureState psi = sample_pure(s, dims.total());
                const ProjectiveBasis basis = ProjectiveBasis::validate(sample_unitary(s, dims.a));
                row[0] = complementarity_residual(psi, dims, basis);
                const DensityMatrix mixed_a = sample_density_hs(s, dims.a);
                row[1] = duality_identity_residual(mixed_a, basis);
                const BipartiteDensityMatrix rho(from_pure(psi), dims);
                row[2] = std::abs(schmidt_avg_correlation(schmidt_decompose(psi.amplitudes(), dims), dims.a) -
                                  avg_correlation_closed(rho));
                const BipartiteDensityMatrix mixed(sample_density_hs(s, dims.total()), dims);
                row[3] = complementarity(mixed, basis).residual;
              });
  if (dims.b < 2) return;
  // cos t |00> + sin t |11>: correlation rises while W + P falls on (0, pi/4].
  run_battery(r, {{"trade-off-monotone-violations", 0.0}}, 1, o,
              [&](std::uint64_t, Substream&, Row& row) {
                constexpr int kGrid = 50;
                const ProjectiveBasis path = standard_basis(dims.a);
                double prev_q = -1.0;
                double prev_wp = 2.0;
                int violations = 0;
                for (int k = 1; k <= kGrid; ++k) {
                  const double theta = std::numbers::pi / 4.0 * k / kGrid;
                  ComplexVector v = ComplexVector::Zero(dims.total());
                  v[0] = std::cos(theta);
                  v[dims.b + 1] = std::sin(theta);
                  const BipartiteDensityMatrix rho(from_pure(PureState::validate(v)), dims);
                  const ComplementarityTerms t = complementarity(rho, path);
                  const double wp = t.wave + t.particle;
                  if (!(t.average_correlation > prev_q) || !(wp < prev_wp)) ++violations;
                  prev_q = t.average_correlation;
                  prev_wp = wp;
                }
                row[0] = violations;
              });
}

void suite_eq1(const VerifyOptions& o, VerifyReport& r) {
  for (int d : single_dims(o, kMaxSuiteDimA, true)) {
    const MubSet mubs = mub_construct(d);
    const double top = (d - 1.0) / (d + 1.0);
    run_battery(r,
                {{"mub-vs-closed" + tag(d), tolerances::kMeasure},
                 {"haar-mc-vs-closed-sigmas" + tag(d), tolerances::kSigmas},
                 {"mub-set-independence" + tag(d), tolerances::kMeasure},
                 {"closed-form-range" + tag(d), tolerances::kExact},
                 {"pure-state-maximum" + tag(d), tolerances::kExact}},
                o.trials, o, [&](std::uint64_t i, Substream& s, Row& row) {
                  const DensityMatrix rho = sample_density_hs(s, d);
                  const double closed = avg_coherence_closed(rho);
                  const double direct = avg_coherence_mub(rho, mubs);
                  row[0] = std::abs(direct - closed);
                  if (i < o.mc_states) row[1] = sigmas(avg_coherence_mc(rho, mc_for_trial(o, i)), closed);
                  const MubSet moved = conjugate_basis_set(mubs, sample_unitary(s, d));
                  row[2] = std::abs(avg_coherence_mub(rho, moved) - direct);
                  row[3] = std::max({0.0, -closed, closed - top});
                  row[4] = std::abs(avg_coherence_closed(from_pure(sample_pure(s, d))) - top);
                });
  }
}

void suite_haar_moment(const VerifyOptions& o, VerifyReport& r) {
  for (int d : single_dims(o, kMaxSuiteDimA, false)) {
    run_battery(r,
                {{"second-moment-mc-vs-closed-sigmas" + tag(d), tolerances::kSigmas},
                 {"first-moment-twirl-sigmas" + tag(d), tolerances::kSigmas}},
                o.trials, o, [&](std::uint64_t i, Substream& s, Row& row) {
                  const ComplexMatrix a = ginibre(s, d);
                  const ComplexMatrix b = ginibre(s, d);
                  const ComplexMatrix x = ginibre(s, d);
                  const McOptions mc = mc_for_trial(o, i);
                  row[0] = matrix_sigmas(second_moment_mc(a, b, x, mc), second_moment_closed(a, b, x));
                  const ComplexMatrix id = identity(d);
                  row[1] = matrix_sigmas(second_moment_mc(x, id, id, mc),
                                         x.trace() / static_cast<double>(d) * id);
                });
    run_battery(r, {{"constant-integrand-exact" + tag(d), tolerances::kExact}}, 1, o,
                [&](std::uint64_t, Substream&, Row& row) {
                  const ComplexMatrix id = identity(d);
                  const McOptions mc{std::max<std::uint64_t>(o.samples, 100), o.seed, 1};
                  row[0] = std::max(max_norm(second_moment_closed(id, id, id) - id),
                                    max_norm(second_moment_mc(id, id, id, mc).mean - id));
                });
  }
  run_battery(r, {{"analytic-sigma-z[d=2]", tolerances::kExact}}, 1, o,
              [&](std::uint64_t, Substream&, Row& row) {
                ComplexMatrix z = ComplexMatrix::Zero(2, 2);
                z(0, 0) = 1.0;
                z(1, 1) = -1.0;
                row[0] = max_norm(second_moment_closed(z, z, z) + z / 3.0);
              });
}

void suite_mub_identities(const VerifyOptions& o, VerifyReport& r) {
  for (int d : single_dims(o, kMaxMubDim, true)) {
    const MubSet mubs = mub_construct(d);
    const MubCertificate& c = mubs.certificate();
    run_battery(r,
                {{"basis-count" + tag(d), 0.0},
                 {"orthonormality" + tag(d), tolerances::kIdentity},
                 {"unbiasedness" + tag(d), tolerances::kIdentity},
                 {"completeness-identity" + tag(d), tolerances::kIdentity},
                 {"swap-identity" + tag(d), tolerances::kIdentity}},
                1, o, [&](std::uint64_t, Substream&, Row& row) {
                  row[0] = std::abs(c.num_bases - (d + 1));
                  row[1] = c.orthonormality;
                  row[2] = c.unbiasedness;
                  row[3] = c.completeness;
                  row[4] = c.swap_identity;
                });
    constexpr std::uint64_t kConjugations = 20;
    run_battery(r, {{"conjugated-set-certifies" + tag(d), tolerances::kIdentity}},
                std::min(o.trials, kConjugations), o, [&](std::uint64_t, Substream& s, Row& row) {
                  const MubCertificate cc = mub_certify(
                      conjugate_basis_set(mubs, sample_unitary(s, d)).bases());
                  row[0] = std::max({cc.orthonormality, cc.unbiasedness, cc.completeness,
                                     cc.swap_identity});
                });
  }
}

void suite_channel_eq(const VerifyOptions& o, VerifyReport& r) {
  const Dims dims = bipartite_dims(o, false);
  const HermitianOperatorBasis g = operator_basis(dims.a);
  const KrausChannel depolarizing = depolarizing_kraus(dims.a, g);
  run_battery(r, {{"depolarizing-completeness", tolerances::kExact}}, 1, o,
              [&](std::uint64_t, Substream&, Row& row) {
                row[0] = completeness_residual(depolarizing.kraus());
              });
  const double ratio = dims.a / (dims.a + 1.0);
  run_battery(r,
              {{"q-ob-vs-depolarizing", tolerances::kMeasure},
               {"q-ob-vs-twirling-relation", tolerances::kExact},
               {"twirling-mc-vs-closed-sigmas", tolerances::kSigmas}},
              o.trials, o, [&](std::uint64_t i, Substream& s, Row& row) {
                const BipartiteDensityMatrix rho(sample_density_hs(s, dims.total()), dims);
                const double q_ob = correlation_operator_basis(rho, g);
                const double twirl = twirling_correlation_closed(rho);
                row[0] = std::abs(q_ob - depolarizing_correlation(rho, depolarizing));
                row[1] = std::abs(q_ob - ratio * twirl);
                if (i < o.mc_states) row[2] = sigmas(twirling_correlation_mc(rho, mc_for_trial(o, i)), twirl);
              });
}

using SuiteFn = void (*)(const VerifyOptions&, VerifyReport&);

std::optional<SuiteFn> find_suite(const std::string& name) {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"prop1a", suite_prop1a},       {"prop1b", suite_prop1b},
      {"prop1c", suite_prop1c},       {"prop2", suite_prop2},
      {"prop3", suite_prop3},         {"prop4", suite_prop4},
      {"eq1", suite_eq1},             {"haar-moment", suite_haar_moment},
      {"mub-identities", suite_mub_identities}, {"channel-eq", suite_channel_eq},
  };
  for (const auto& [n, fn] : table) {
    if (n == name) return fn;
  }
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "prop1a", "prop1b", "prop1c", "prop2", "prop3", "prop4",
      "eq1", "haar-moment", "mub-identities", "channel-eq"};
  return names;
}

VerifyReport run_suite(const VerifyOptions& options) {
  const auto fn = find_suite(options.suite);
  if (!fn) throw Error(ErrorCode::InvalidArgument, "unknown suite \"" + options.suite + "\"");
  if (options.trials < 1) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
  if (options.samples < 100) {
    throw Error(ErrorCode::InvalidArgument, "Monte-Carlo needs at least 100 samples");
  }
  VerifyReport report;
  report.suite = options.suite;
  report.dims = options.dims;
  report.trials = options.trials;
  report.seed = options.seed;
  report.samples = options.samples;
  (*fn)(options, report);
  report.pass = !report.checks.empty() &&
                std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckRecord& c) { return c.pass; });
  return report;
}

io::json report_to_json(const VerifyReport& report) {
  io::json checks = io::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"trials", c.trials},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"bound", c.bound == Bound::AtMost ? "at_most" : "at_least"},
                      {"pass", c.pass}});
  }
  return {{"schema_version", io::kSchemaVersion},
          {"suite", report.suite},
          {"dims", report.dims},
          {"trials", report.trials},
          {"samples", report.samples},
          {"seed", report.seed},
          {"checks", std::move(checks)},
          {"pass", report.pass},
          {"versions",
           {{"qac", QAC_VERSION},
            {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                          std::to_string(EIGEN_MAJOR_VERSION) + "." +
                          std::to_string(EIGEN_MINOR_VERSION)}}}};
}

}  // namespace qac
