#pragma once

#include "qac/bases.hpp"
#include "qac/linalg.hpp"
#include "qac/states.hpp"

namespace qac {

// W = sum_{i != j} |<i|rho|j>|^2 in the given path basis.
double wave_feature(const DensityMatrix& rho_a, const ProjectiveBasis& basis);
// P = sum_i |<i|rho|i>|^2.
double particle_feature(const DensityMatrix& rho_a, const ProjectiveBasis& basis);
// |W + P - tr(rho^2)|
double duality_identity_residual(const DensityMatrix& rho_a, const ProjectiveBasis& basis);

struct ComplementarityTerms {
  double wave = 0.0;
  double particle = 0.0;
  double average_correlation = 0.0;  // closed form
  double lhs = 0.0;                  // W + P + (d_A + 1) Q
  double rhs = 0.0;                  // (tr sqrt(rho^A))^2
  double residual = 0.0;             // |lhs - rhs|
};

// Evaluated for any bipartite state; the relation is an identity only for
// pure rho^AE.
ComplementarityTerms complementarity(const BipartiteDensityMatrix& rho, const ProjectiveBasis& basis_a);

// Throws NotNormalized / DimensionMismatch.
double complementarity_residual(const PureState& psi, Dims dims, const ProjectiveBasis& basis_a);

// [(sum_mu sqrt(lambda_mu))^2 - sum_mu lambda_mu^2] / (d_A + 1)
double schmidt_avg_correlation(const SchmidtDecomposition& sd, int d_a);

}  // namespace qac
