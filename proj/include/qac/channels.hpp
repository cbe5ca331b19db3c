#pragma once

#include <cstdint>
#include <vector>

#include "qac/bases.hpp"
#include "qac/linalg.hpp"
#include "qac/states.hpp"

namespace qac {

// CPTP map rho -> sum_k K rho K^dagger with sum_k K^dagger K = I.
class KrausChannel {
 public:
  // Throws DimensionMismatch for inconsistent shapes and
  // CompletenessViolated when the completeness residual exceeds 1e-10.
  static KrausChannel validate(std::vector<ComplexMatrix> kraus);

  int dim_in() const { return static_cast<int>(kraus_.front().cols()); }
  int dim_out() const { return static_cast<int>(kraus_.front().rows()); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

 private:
  explicit KrausChannel(std::vector<ComplexMatrix> k) : kraus_(std::move(k)) {}
  std::vector<ComplexMatrix> kraus_;
};

double completeness_residual(const std::vector<ComplexMatrix>& kraus);

// Kraus set {I / sqrt(d+1)} u {G_i / sqrt(d+1)} from an operator basis.
KrausChannel depolarizing_kraus(int d, const HermitianOperatorBasis& g);

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

// (id_A (x) channel)(rho); the output's B dimension is channel.dim_out().
BipartiteDensityMatrix apply_on_B(const KrausChannel& channel, const BipartiteDensityMatrix& rho);

// Stinespring blocks of the first d columns of a Haar unitary on
// C^{d * env_dim}: K_e = rows [e d, (e+1) d). Deterministic in seed.
KrausChannel random_channel(int d, int env_dim, std::uint64_t seed);

}  // namespace qac
