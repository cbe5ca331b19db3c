// qac: command-line front end for the skew-information coherence and
// average-correlation library.
//
// Exit codes: 0 success; 1 invalid object or dimension mismatch; 2 unknown
// measure or failed verification; 64 usage, file or parse errors.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qac/bases.hpp"
#include "qac/channels.hpp"
#include "qac/duality.hpp"
#include "qac/error.hpp"
#include "qac/haar.hpp"
#include "qac/io.hpp"
#include "qac/measures.hpp"
#include "qac/verify.hpp"

namespace {

using qac::io::json;

constexpr int kExitInvalid = 1;
constexpr int kExitFailed = 2;
constexpr int kExitUsage = 64;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

qac::ProjectiveBasis load_basis(const std::optional<std::string>& path, int d) {
  if (!path) return qac::standard_basis(d);
  const json j = qac::io::read_json(*path);
  return qac::ProjectiveBasis::validate(
      qac::io::matrix_from_json(j.contains("matrix") ? j.at("matrix") : j));
}

qac::MubSet load_mubs(const std::optional<std::string>& path, int d) {
  if (!path) return qac::mub_construct(d);
  return qac::MubSet::from_bases(qac::io::bases_from_json(qac::io::read_json(*path)));
}

// ---------------------------------------------------------------------------

struct ValidateArgs {
  std::string path;
};

int cmd_validate(const ValidateArgs& args) {
  const qac::io::StateFile file = qac::io::state_from_json(qac::io::read_json(args.path));
  try {
    const qac::DensityMatrix rho = file.bipartite() ? file.bipartite_state().state() : file.density();
    std::cout << "valid: dim " << rho.dim() << ", purity " << fmt12(rho.purity()) << '\n';
    return 0;
  } catch (const qac::Error& e) {
    std::cout << "invalid: " << qac::to_string(e.code()) << " residual " << fmt12(e.residual())
              << '\n'
              << e.what() << '\n';
    return kExitInvalid;
  }
}

// ---------------------------------------------------------------------------

struct MeasureArgs {
  std::string path;
  std::string name;
  std::optional<std::string> basis;
  std::optional<std::string> mubs;
  std::optional<std::string> observable;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
  int workers = 0;
  bool json_out = false;
};

struct MeasureValue {
  MeasureValue() = default;
  MeasureValue(double v) : value(v) {}
  MeasureValue(double v, const qac::McEstimate& e) : value(v), estimate(e) {}

  double value = 0.0;
  std::optional<qac::McEstimate> estimate;
};

const std::vector<std::string>& measure_names() {
  static const std::vector<std::string> names = {
      "skew",        "coherence",    "avg-coherence", "avg-coherence-mub", "avg-coherence-mc",
      "partial-coherence", "correlation", "avg-correlation", "avg-correlation-mub",
      "avg-correlation-mc", "qob",   "depolarizing",  "twirling",          "twirling-mc",
      "wave",        "particle",     "wp-residual"};
  return names;
}

MeasureValue evaluate(const MeasureArgs& a, const qac::io::StateFile& file) {
  const std::string& m = a.name;
  const qac::McOptions mc{a.samples, a.seed, resolve_workers(a.workers)};
  const qac::DensityMatrix rho = file.density();
  auto mc_value = [](const qac::McEstimate& e) { return MeasureValue{e.mean, e}; };

  if (m == "skew") {
    if (!a.observable) throw qac::Error(qac::ErrorCode::InvalidArgument, "skew needs --observable");
    const json j = qac::io::read_json(*a.observable);
    const auto o = qac::Observable::validate(
        qac::io::matrix_from_json(j.contains("matrix") ? j.at("matrix") : j));
    return {qac::skew_information(rho, o)};
  }
  if (m == "coherence") return {qac::coherence(rho, load_basis(a.basis, rho.dim()))};
  if (m == "avg-coherence") return {qac::avg_coherence_closed(rho)};
  if (m == "avg-coherence-mub") return {qac::avg_coherence_mub(rho, load_mubs(a.mubs, rho.dim()))};
  if (m == "avg-coherence-mc") return mc_value(qac::avg_coherence_mc(rho, mc));

  if (m == "wave" || m == "particle" || m == "wp-residual") {
    const qac::DensityMatrix rho_a =
        file.bipartite() ? qac::reduced(file.bipartite_state(), qac::Party::A) : rho;
    const qac::ProjectiveBasis basis = load_basis(a.basis, rho_a.dim());
    if (m == "wave") return {qac::wave_feature(rho_a, basis)};
    if (m == "particle") return {qac::particle_feature(rho_a, basis)};
    return {qac::duality_identity_residual(rho_a, basis)};
  }

  const qac::BipartiteDensityMatrix ab = file.bipartite_state();
  const int da = ab.dims().a;
  if (m == "partial-coherence") return {qac::partial_coherence(ab, load_basis(a.basis, da))};
  if (m == "correlation") return {qac::correlation(ab, load_basis(a.basis, da))};
  if (m == "avg-correlation") return {qac::avg_correlation_closed(ab)};
  if (m == "avg-correlation-mub") return {qac::avg_correlation_mub(ab, load_mubs(a.mubs, da))};
  if (m == "avg-correlation-mc") return mc_value(qac::avg_correlation_mc(ab, mc));
  if (m == "qob") return {qac::correlation_operator_basis(ab, qac::operator_basis(da))};
  if (m == "depolarizing") {
    return {qac::depolarizing_correlation(ab, qac::depolarizing_kraus(da, qac::operator_basis(da)))};
  }
  if (m == "twirling") return {qac::twirling_correlation_closed(ab)};
  return mc_value(qac::twirling_correlation_mc(ab, mc));  // twirling-mc
}

int cmd_measure(const MeasureArgs& a) {
  const auto& names = measure_names();
  if (std::find(names.begin(), names.end(), a.name) == names.end()) {
    std::cerr << "unknown measure \"" << a.name << "\"\n";
    return kExitFailed;
  }
  const qac::io::StateFile file = qac::io::state_from_json(qac::io::read_json(a.path));
  MeasureValue v;
  try {
    v = evaluate(a, file);
  } catch (const qac::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitInvalid;
  }
  if (a.json_out) {
    json out{{"schema_version", qac::io::kSchemaVersion}, {"measure", a.name}, {"value", v.value}};
    if (v.estimate) {
      out["std_error"] = v.estimate->std_error;
      out["samples"] = v.estimate->n;
      out["seed"] = a.seed;
    }
    std::cout << out.dump(2) << '\n';
  } else if (v.estimate) {
    std::cout << a.name << ' ' << fmt12(v.value) << " +- " << fmt12(v.estimate->std_error)
              << " (n=" << v.estimate->n << ")\n";
  } else {
    std::cout << a.name << ' ' << fmt12(v.value) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct MubArgs {
  std::optional<int> dim;
  std::optional<std::string> out;
  std::optional<std::string> certify;
  bool json_out = false;
};

void print_certificate(const qac::MubCertificate& c, bool as_json) {
  if (as_json) {
    const json j{{"dim", c.dim},
                 {"num_bases", c.num_bases},
                 {"orthonormality", c.orthonormality},
                 {"unbiasedness", c.unbiasedness},
                 {"completeness", c.completeness},
                 {"swap_identity", c.swap_identity},
                 {"pass", c.pass}};
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "dim " << c.dim << ", " << c.num_bases << " bases\n"
            << "unbiasedness  " << fmt12(c.unbiasedness) << '\n'
            << "completeness  " << fmt12(c.completeness) << '\n'
            << "swap-identity " << fmt12(c.swap_identity) << '\n'
            << (c.pass ? "pass" : "fail") << '\n';
}

int cmd_mub(const MubArgs& a) {
  if (a.certify) {
    const auto bases = qac::io::bases_from_json(qac::io::read_json(*a.certify));
    const qac::MubCertificate c = qac::mub_certify(bases);
    print_certificate(c, a.json_out);
    return c.pass ? 0 : kExitInvalid;
  }
  if (!a.dim) {
    std::cerr << "mub needs --dim or --certify\n";
    return kExitUsage;
  }
  try {
    const qac::MubSet mubs = qac::mub_construct(*a.dim);
    if (a.out) qac::io::write_json(*a.out, qac::io::bases_to_json(mubs.bases()));
    print_certificate(mubs.certificate(), a.json_out);
    return 0;
  } catch (const qac::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitInvalid;
  }
}

// ---------------------------------------------------------------------------

struct RandomArgs {
  std::string kind;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  int env_dim = 2;
  std::optional<std::string> out;
};

int cmd_random(const RandomArgs& a) {
  int total = 1;
  for (int d : a.dims) total *= d;
  if (a.dims.empty() || a.dims.size() > 2 || total < 1) {
    std::cerr << "--dims takes one or two positive dimensions\n";
    return kExitUsage;
  }
  qac::Substream s = qac::SeededSampler(a.seed).at(0);
  json out;
  if (a.kind == "state" || a.kind == "bipartite") {
    if (a.kind == "bipartite" && a.dims.size() != 2) {
      std::cerr << "bipartite states need --dims d_A,d_B\n";
      return kExitUsage;
    }
    out = qac::io::state_to_json(qac::io::make_state_file(qac::sample_density_hs(s, total), a.dims));
  } else if (a.kind == "pure") {
    out = qac::io::state_to_json(qac::io::make_state_file(qac::sample_pure(s, total), a.dims));
  } else if (a.kind == "unitary") {
    out = qac::io::matrix_to_json(qac::sample_unitary(s, total));
    out["schema_version"] = qac::io::kSchemaVersion;
  } else if (a.kind == "channel") {
    out = qac::io::channel_to_json(qac::random_channel(total, a.env_dim, a.seed));
  } else {
    std::cerr << "unknown kind \"" << a.kind << "\"\n";
    return kExitUsage;
  }
  if (a.out) {
    qac::io::write_json(*a.out, out);
  } else {
    std::cout << out.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  qac::VerifyOptions options;
  std::optional<std::string> out;
  bool json_out = false;
};

int cmd_verify(VerifyArgs a) {
  a.options.workers = resolve_workers(a.options.workers);
  qac::VerifyReport report;
  try {
    report = qac::run_suite(a.options);
  } catch (const qac::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  const json j = qac::report_to_json(report);
  if (a.out) qac::io::write_json(*a.out, j);
  if (a.json_out) {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  trials=" << c.trials
                << "  max_residual=" << fmt12(c.max_residual)
                << (c.bound == qac::Bound::AtMost ? "  <= " : "  >= ") << fmt12(c.tolerance)
                << '\n';
    }
    std::cout << "suite " << report.suite << ": " << (report.pass ? "PASS" : "FAIL") << '\n';
  }
  return report.pass ? 0 : kExitFailed;
}

// ---------------------------------------------------------------------------

struct WpArgs {
  std::string path;
  std::optional<std::string> basis;
  bool json_out = false;
};

int cmd_wp(const WpArgs& a) {
  const qac::io::StateFile file = qac::io::state_from_json(qac::io::read_json(a.path));
  qac::ComplementarityTerms t;
  try {
    const qac::BipartiteDensityMatrix rho = file.bipartite_state();
    t = qac::complementarity(rho, load_basis(a.basis, rho.dims().a));
  } catch (const qac::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitInvalid;
  }
  if (a.json_out) {
    const json j{{"schema_version", qac::io::kSchemaVersion},
                 {"wave", t.wave},
                 {"particle", t.particle},
                 {"avg_correlation", t.average_correlation},
                 {"lhs", t.lhs},
                 {"rhs", t.rhs},
                 {"residual", t.residual}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "W        " << fmt12(t.wave) << '\n'
              << "P        " << fmt12(t.particle) << '\n'
              << "Q_U      " << fmt12(t.average_correlation) << '\n'
              << "lhs      " << fmt12(t.lhs) << "  (W + P + (d_A+1) Q_U)\n"
              << "rhs      " << fmt12(t.rhs) << "  ((tr sqrt rho_A)^2)\n"
              << "residual " << fmt12(t.residual) << '\n';
  }
  return 0;
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int d = std::stoi(item, &used);
    if (used != item.size()) throw CLI::ValidationError("--dims", "not an integer list");
    dims.push_back(d);
  }
  if (dims.empty()) throw CLI::ValidationError("--dims", "empty list");
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew-information coherence and average-correlation toolkit"};
  app.require_subcommand(1);

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "Check a state file against the density-matrix invariants");
  v->add_option("path", validate.path, "State JSON file")->required();

  MeasureArgs measure;
  auto* m = app.add_subcommand("measure", "Evaluate a measure on a state file");
  m->add_option("path", measure.path, "State JSON file")->required();
  m->add_option("measure", measure.name, "Measure name")->required();
  m->add_option("--basis", measure.basis, "Basis file (unitary matrix, vectors as columns)");
  m->add_option("--mubs", measure.mubs, "MUB set file (default: constructed)");
  m->add_option("--observable", measure.observable, "Observable matrix file (for skew)");
  m->add_option("--seed", measure.seed, "Monte-Carlo seed");
  m->add_option("-n,--samples", measure.samples, "Monte-Carlo sample count");
  m->add_option("--workers", measure.workers, "Worker threads (0 = all cores)");
  m->add_flag("--json", measure.json_out, "Emit JSON");

  MubArgs mub;
  auto* u = app.add_subcommand("mub", "Construct or certify a complete MUB set");
  u->add_option("--dim", mub.dim, "Prime-power dimension <= 64");
  u->add_option("--out", mub.out, "Write the set to this file");
  u->add_option("--certify", mub.certify, "Certify the set stored in this file");
  u->add_flag("--json", mub.json_out, "Emit JSON");

  RandomArgs random;
  std::string random_dims;
  auto* r = app.add_subcommand("random", "Generate a random state, unitary or channel");
  r->add_option("--kind", random.kind, "state | pure | bipartite | unitary | channel")->required();
  r->add_option("--dims", random_dims, "d or d_A,d_B")->required();
  r->add_option("--seed", random.seed, "Seed");
  r->add_option("--env-dim", random.env_dim, "Environment dimension for channels");
  r->add_option("--out", random.out, "Output file (default: stdout)");

  VerifyArgs verify;
  std::string verify_dims;
  auto* f = app.add_subcommand("verify", "Run a verification suite");
  f->add_option("--suite", verify.options.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(qac::suite_names()));
  f->add_option("--dims", verify_dims, "d_A,d_B or a list of single dimensions")->required();
  f->add_option("--trials", verify.options.trials, "Random trials per check");
  f->add_option("--seed", verify.options.seed, "Seed");
  f->add_option("-n,--samples", verify.options.samples, "Monte-Carlo samples per estimate");
  f->add_option("--mc-states", verify.options.mc_states, "Trials that also run Monte-Carlo");
  f->add_option("--workers", verify.options.workers, "Worker threads (0 = all cores)");
  f->add_option("--out", verify.out, "Write the JSON report here");
  f->add_flag("--json", verify.json_out, "Print the JSON report");

  WpArgs wp;
  auto* w = app.add_subcommand("wp", "Wave/particle features and the complementarity relation");
  w->add_option("path", wp.path, "Bipartite state JSON file")->required();
  w->add_option("--basis", wp.basis, "Path basis file (default: computational)");
  w->add_flag("--json", wp.json_out, "Emit JSON");

  try {
    app.parse(argc, argv);
    if (*r) random.dims = parse_dims(random_dims);
    if (*f) verify.options.dims = parse_dims(verify_dims);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument&) {
    std::cerr << "--dims must be a comma-separated list of integers\n";
    return kExitUsage;
  }

  try {
    if (*v) return cmd_validate(validate);
    if (*m) return cmd_measure(measure);
    if (*u) return cmd_mub(mub);
    if (*r) return cmd_random(random);
    if (*f) return cmd_verify(verify);
    if (*w) return cmd_wp(wp);
  } catch (const qac::io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qac::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
