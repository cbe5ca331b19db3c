#include "qac/haar.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qac/error.hpp"
#include "qac/parallel.hpp"

namespace qac {

namespace {

void require_samples(std::uint64_t n) {
  if (n < 100) {
    throw Error(ErrorCode::InvalidArgument,
                "Monte-Carlo needs at least 100 samples, got " + std::to_string(n));
  }
}

}  // namespace

Substream::Substream(std::uint64_t seed, std::uint64_t index)
    : engine_(derive_seed(derive_seed(seed, 0x5EED), index)) {}

double Substream::uniform() {
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

Complex Substream::normal() {
  const double r = std::sqrt(-std::log(uniform()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  return {r * std::cos(theta), r * std::sin(theta)};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

McEstimate summarize(std::span<const double> values) {
  McEstimate est;
  est.n = values.size();
  if (values.empty()) return est;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    const double n = static_cast<double>(values.size());
    est.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return est;
}

ComplexMatrix sample_ginibre(Substream& s, int rows, int cols) {
  ComplexMatrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = s.normal();
  }
  return g;
}

ComplexMatrix sample_unitary(Substream& s, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  const ComplexMatrix g = sample_ginibre(s, d, d);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

DensityMatrix sample_density_hs(Substream& s, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  const ComplexMatrix g = sample_ginibre(s, d, d);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::validate(0.5 * (m + m.adjoint()));
}

PureState sample_pure(Substream& s, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  ComplexVector v = sample_ginibre(s, d, 1).col(0);
  v.normalize();
  return PureState::validate(v);
}

ComplexMatrix second_moment_closed(const ComplexMatrix& a, const ComplexMatrix& b,
                                   const ComplexMatrix& x) {
  const auto d = a.rows();
  for (const ComplexMatrix* m : {&a, &b, &x}) {
    if (m->rows() != d || m->cols() != d) {
      throw Error(ErrorCode::DimensionMismatch, "second moment needs three d x d matrices");
    }
  }
  if (d < 1) throw Error(ErrorCode::DimensionTooSmall, "empty matrices");
  if (d == 1) return a * x * b;
  const double dd = static_cast<double>(d);
  const Complex tr_ab = (a * b).trace();
  const Complex tr_a = a.trace();
  const Complex tr_b = b.trace();
  const double denom = dd * (dd * dd - 1.0);
  const Complex c_identity = (dd * tr_ab - tr_a * tr_b) / denom;
  const Complex c_x = (dd * tr_a * tr_b - tr_ab) / denom;
  return c_identity * x.trace() * ComplexMatrix::Identity(d, d) + c_x * x;
}

MatrixEstimate second_moment_mc(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ComplexMatrix& x, const McOptions& options) {
  require_samples(options.samples);
  const auto d = static_cast<int>(a.rows());
  if (b.rows() != d || x.rows() != d || a.cols() != d || b.cols() != d || x.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "second moment needs three d x d matrices");
  }
  const SeededSampler sampler(options.seed);
  std::vector<ComplexMatrix> draws(options.samples);
  parallel_for(options.samples, options.workers, [&](std::uint64_t i) {
    Substream s = sampler.at(i);
    const ComplexMatrix u = sample_unitary(s, d);
    draws[i] = u.adjoint() * a * u * x * u.adjoint() * b * u;
  });

  const double n = static_cast<double>(options.samples);
  MatrixEstimate est;
  est.n = options.samples;
  est.mean = ComplexMatrix::Zero(d, d);
  for (const auto& m : draws) est.mean += m;
  est.mean /= n;
  Eigen::MatrixXd ss_re = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd ss_im = Eigen::MatrixXd::Zero(d, d);
  for (const auto& m : draws) {
    const ComplexMatrix dev = m - est.mean;
    ss_re += dev.real().cwiseAbs2();
    ss_im += dev.imag().cwiseAbs2();
  }
  est.std_error_re = (ss_re / ((n - 1.0) * n)).cwiseSqrt();
  est.std_error_im = (ss_im / ((n - 1.0) * n)).cwiseSqrt();
  return est;
}

McEstimate mc_average(const BasisFunctional& f, int d, const McOptions& options) {
  require_samples(options.samples);
  const SeededSampler sampler(options.seed);
  std::vector<double> values(options.samples);
  parallel_for(options.samples, options.workers, [&](std::uint64_t i) {
    Substream s = sampler.at(i);
    values[i] = f(ProjectiveBasis::validate(sample_unitary(s, d)));
  });
  return summarize(values);
}

}  // namespace qac
