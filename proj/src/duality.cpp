#include "qac/duality.hpp"

#include <cmath>
#include <string>

#include "qac/error.hpp"
#include "qac/measures.hpp"
#include "qac/tolerance.hpp"

namespace qac {

namespace {

ComplexMatrix in_basis(const DensityMatrix& rho, const ProjectiveBasis& basis) {
  if (rho.dim() != basis.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "path basis of dimension " +
                                                  std::to_string(basis.dim()) + " for state of " +
                                                  std::to_string(rho.dim()));
  }
  return basis.vectors().adjoint() * rho.matrix() * basis.vectors();
}

}  // namespace

double wave_feature(const DensityMatrix& rho_a, const ProjectiveBasis& basis) {
  const ComplexMatrix m = in_basis(rho_a, basis);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j) sum += std::norm(m(i, j));
    }
  }
  return sum;
}

double particle_feature(const DensityMatrix& rho_a, const ProjectiveBasis& basis) {
  const ComplexMatrix m = in_basis(rho_a, basis);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) sum += std::norm(m(i, i));
  return sum;
}

double duality_identity_residual(const DensityMatrix& rho_a, const ProjectiveBasis& basis) {
  return std::abs(wave_feature(rho_a, basis) + particle_feature(rho_a, basis) - rho_a.purity());
}

ComplementarityTerms complementarity(const BipartiteDensityMatrix& rho,
                                     const ProjectiveBasis& basis_a) {
  const DensityMatrix rho_a = reduced(rho, Party::A);
  ComplementarityTerms t;
  t.wave = wave_feature(rho_a, basis_a);
  t.particle = particle_feature(rho_a, basis_a);
  t.average_correlation = avg_correlation_closed(rho);
  t.lhs = t.wave + t.particle + (rho.dims().a + 1.0) * t.average_correlation;
  const double root_trace = trace_sqrt(rho_a);
  t.rhs = root_trace * root_trace;
  t.residual = std::abs(t.lhs - t.rhs);
  return t;
}

double complementarity_residual(const PureState& psi, Dims dims, const ProjectiveBasis& basis_a) {
  if (psi.dim() != dims.total()) {
    throw Error(ErrorCode::DimensionMismatch, "state length does not match dims");
  }
  const BipartiteDensityMatrix rho(from_pure(psi), dims);
  return complementarity(rho, basis_a).residual;
}

double schmidt_avg_correlation(const SchmidtDecomposition& sd, int d_a) {
  const double total = sd.coefficients.sum();
  if (std::abs(total - 1.0) > tol(tolerances::kState)) {
    throw Error(ErrorCode::NotNormalized, "Schmidt weights sum to " + std::to_string(total),
                std::abs(total - 1.0));
  }
  const double root_sum = sd.coefficients.cwiseSqrt().sum();
  const double square_sum = sd.coefficients.squaredNorm();
  return (root_sum * root_sum - square_sum) / (d_a + 1.0);
}

}  // namespace qac
