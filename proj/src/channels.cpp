#include "qac/channels.hpp"

#include <cmath>
#include <string>

#include "qac/error.hpp"
#include "qac/haar.hpp"
#include "qac/tolerance.hpp"

namespace qac {

double completeness_residual(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) return 1.0;
  const auto d = kraus.front().cols();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  return max_norm(sum - ComplexMatrix::Identity(d, d));
}

KrausChannel KrausChannel::validate(std::vector<ComplexMatrix> kraus) {
  if (kraus.empty()) throw Error(ErrorCode::InvalidArgument, "channel needs a Kraus operator");
  const auto rows = kraus.front().rows();
  const auto cols = kraus.front().cols();
  if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "empty Kraus operator");
  for (const auto& k : kraus) {
    if (k.rows() != rows || k.cols() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators of different shapes");
    }
    if (!all_finite(k)) throw Error(ErrorCode::InvalidArgument, "non-finite Kraus entry");
  }
  const double residual = completeness_residual(kraus);
  if (residual > tol(tolerances::kIdentity)) {
    throw Error(ErrorCode::CompletenessViolated, "residual " + std::to_string(residual), residual);
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel depolarizing_kraus(int d, const HermitianOperatorBasis& g) {
  if (g.dim != d || static_cast<int>(g.operators.size()) != d * d) {
    throw Error(ErrorCode::DimensionMismatch, "operator basis does not match dimension");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(d + 1));
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(g.operators.size() + 1);
  kraus.push_back(scale * identity(d));
  for (const auto& op : g.operators) kraus.push_back(scale * op);
  return KrausChannel::validate(std::move(kraus));
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim_in() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "channel input dimension " +
                                                  std::to_string(channel.dim_in()) + " vs state " +
                                                  std::to_string(rho.dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(channel.dim_out(), channel.dim_out());
  for (const auto& k : channel.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix::validate(0.5 * (out + out.adjoint()));
}

BipartiteDensityMatrix apply_on_B(const KrausChannel& channel, const BipartiteDensityMatrix& rho) {
  const Dims dims = rho.dims();
  if (channel.dim_in() != dims.b) {
    throw Error(ErrorCode::DimensionMismatch, "channel input dimension " +
                                                  std::to_string(channel.dim_in()) + " vs d_B " +
                                                  std::to_string(dims.b));
  }
  const Dims out_dims{dims.a, channel.dim_out()};
  const ComplexMatrix id_a = identity(dims.a);
  ComplexMatrix out = ComplexMatrix::Zero(out_dims.total(), out_dims.total());
  for (const auto& k : channel.kraus()) {
    const ComplexMatrix local = tensor_product(id_a, k);
    out += local * rho.matrix() * local.adjoint();
  }
  return BipartiteDensityMatrix::validate(0.5 * (out + out.adjoint()), out_dims);
}

KrausChannel random_channel(int d, int env_dim, std::uint64_t seed) {
  if (d < 1 || env_dim < 1) {
    throw Error(ErrorCode::InvalidArgument, "random channel needs d >= 1 and env_dim >= 1");
  }
  Substream s = SeededSampler(seed).at(0);
  const ComplexMatrix u = sample_unitary(s, d * env_dim);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(env_dim));
  for (int e = 0; e < env_dim; ++e) kraus.push_back(u.block(e * d, 0, d, d));
  return KrausChannel::validate(std::move(kraus));
}

}  // namespace qac
