#include "qac/measures.hpp"

#include <cassert>
#include <algorithm>
#include <cmath>
#include <string>

#include "qac/error.hpp"
#include "qac/tolerance.hpp"

namespace qac {

namespace {

void require_dim(int expected, int actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected dimension " +
                                                  std::to_string(expected) + ", got " +
                                                  std::to_string(actual));
  }
}

// sum_i [<b_i|rho|b_i> - <b_i|sqrt(rho)|b_i>^2] for the rank-1 projectors.
double coherence_from(const ComplexMatrix& rho, const ComplexMatrix& root,
                      const ComplexMatrix& vectors) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < vectors.cols(); ++i) {
    const auto b = vectors.col(i);
    const double population = b.dot(rho * b).real();
    const double overlap = b.dot(root * b).real();
    sum += population - overlap * overlap;
  }
  return sum;
}

// Block sum_{a,a'} conj(b_a) b_a' S[a, a'] = (<b| (x) 1) S (|b> (x) 1).
ComplexMatrix compress(const ComplexMatrix& s, const ComplexVector& b, Dims dims) {
  ComplexMatrix y = ComplexMatrix::Zero(dims.b, dims.b);
  for (int a = 0; a < dims.a; ++a) {
    for (int a2 = 0; a2 < dims.a; ++a2) {
      y += std::conj(b[a]) * b[a2] * s.block(a * dims.b, a2 * dims.b, dims.b, dims.b);
    }
  }
  return y;
}

double partial_coherence_from(const BipartiteDensityMatrix& rho, const ComplexMatrix& rho_a,
                              const ComplexMatrix& vectors) {
  const ComplexMatrix& root = rho.sqrt();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < vectors.cols(); ++i) {
    const ComplexVector b = vectors.col(i);
    const double population = b.dot(rho_a * b).real();
    const ComplexMatrix y = compress(root, b, rho.dims());
    sum += population - (y * y).trace().real();
  }
  return sum;
}

double correlation_from(const BipartiteDensityMatrix& rho, const DensityMatrix& rho_a,
                        const ProjectiveBasis& basis) {
  return partial_coherence_from(rho, rho_a.matrix(), basis.vectors()) -
         coherence_from(rho_a.matrix(), rho_a.sqrt(), basis.vectors());
}

}  // namespace

Observable Observable::validate(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "observable must be square");
  }
  const double residual = hermiticity_residual(m);
  if (residual > tol(tolerances::kState) * std::max(1.0, max_norm(m))) {
    throw Error(ErrorCode::NotHermitian, "residual " + std::to_string(residual), residual);
  }
  return Observable(0.5 * (m + m.adjoint()));
}

double skew_information(const DensityMatrix& rho, const Observable& o) {
  require_dim(rho.dim(), o.dim(), "skew information");
  const ComplexMatrix& root = rho.sqrt();
  const ComplexMatrix commutator = root * o.matrix() - o.matrix() * root;
  return -0.5 * (commutator * commutator).trace().real();
}

double skew_information_general(const DensityMatrix& rho, const ComplexMatrix& k) {
  if (k.rows() != rho.dim() || k.cols() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "skew information: operator has wrong shape");
  }
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix& root = rho.sqrt();
  const Complex kk = (r * k * k.adjoint()).trace();
  const Complex kdk = (r * k.adjoint() * k).trace();
  const Complex cross = (root * k.adjoint() * root * k).trace();
  return 0.5 * (kk.real() + kdk.real()) - cross.real();
}

double coherence(const DensityMatrix& rho, const ProjectiveBasis& basis) {
  require_dim(rho.dim(), basis.dim(), "coherence");
  return coherence_from(rho.matrix(), rho.sqrt(), basis.vectors());
}

double partial_coherence(const BipartiteDensityMatrix& rho, const ProjectiveBasis& basis_a) {
  require_dim(rho.dims().a, basis_a.dim(), "partial coherence");
  const ComplexMatrix rho_a = partial_trace(rho.matrix(), rho.dims(), Party::B);
  return partial_coherence_from(rho, rho_a, basis_a.vectors());
}

double correlation(const BipartiteDensityMatrix& rho, const ProjectiveBasis& basis_a) {
  require_dim(rho.dims().a, basis_a.dim(), "correlation");
  return correlation_from(rho, reduced(rho, Party::A), basis_a);
}

double avg_coherence_mub(const DensityMatrix& rho, const MubSet& mubs) {
  require_dim(rho.dim(), mubs.dim(), "MUB average coherence");
  double sum = 0.0;
  for (const auto& basis : mubs.bases()) sum += coherence(rho, basis);
  return sum / static_cast<double>(mubs.bases().size());
}

double trace_sqrt(const DensityMatrix& rho) { return rho.sqrt().trace().real(); }

double avg_coherence_closed(const DensityMatrix& rho) {
  const double d = rho.dim();
  const double t = trace_sqrt(rho);
  return std::max(0.0, (d - t * t) / (d + 1.0));
}

McEstimate avg_coherence_mc(const DensityMatrix& rho, const McOptions& options) {
  rho.sqrt();
  return mc_average([&](const ProjectiveBasis& b) { return coherence(rho, b); }, rho.dim(),
                    options);
}

double avg_correlation_mub(const BipartiteDensityMatrix& rho, const MubSet& mubs) {
  require_dim(rho.dims().a, mubs.dim(), "MUB average correlation");
  const DensityMatrix rho_a = reduced(rho, Party::A);
  double sum = 0.0;
  for (const auto& basis : mubs.bases()) sum += correlation_from(rho, rho_a, basis);
  return sum / static_cast<double>(mubs.bases().size());
}

double reduced_root_purity(const BipartiteDensityMatrix& rho) {
  const ComplexMatrix m = partial_trace(rho.sqrt(), rho.dims(), Party::A);
  return (m * m).trace().real();
}

double avg_correlation_closed(const BipartiteDensityMatrix& rho) {
  // sum_uv tr(X_uv X_vu) = tr((sqrt rho)^2) = 1.
  assert(std::abs((rho.sqrt() * rho.sqrt()).trace().real() - 1.0) < 1e-9);
  const double local = trace_sqrt(reduced(rho, Party::A));
  return (local * local - reduced_root_purity(rho)) / (rho.dims().a + 1.0);
}

McEstimate avg_correlation_mc(const BipartiteDensityMatrix& rho, const McOptions& options) {
  const DensityMatrix rho_a = reduced(rho, Party::A);
  rho.sqrt();
  rho_a.sqrt();
  return mc_average([&](const ProjectiveBasis& b) { return correlation_from(rho, rho_a, b); },
                    rho.dims().a, options);
}

double local_skew_sum(const DensityMatrix& rho, const HermitianOperatorBasis& g) {
  require_dim(rho.dim(), g.dim, "operator-basis skew sum");
  double sum = 0.0;
  for (const auto& op : g.operators) sum += skew_information(rho, Observable::validate(op));
  return sum;
}

double correlation_operator_basis(const BipartiteDensityMatrix& rho,
                                  const HermitianOperatorBasis& g) {
  require_dim(rho.dims().a, g.dim, "operator-basis correlation");
  const DensityMatrix rho_a = reduced(rho, Party::A);
  const ComplexMatrix id_b = identity(rho.dims().b);
  double sum = 0.0;
  for (const auto& op : g.operators) {
    sum += skew_information(rho.state(), Observable::validate(tensor_product(op, id_b))) -
           skew_information(rho_a, Observable::validate(op));
  }
  return sum / (rho.dims().a + 1.0);
}

double depolarizing_correlation(const BipartiteDensityMatrix& rho, const KrausChannel& channel) {
  require_dim(rho.dims().a, channel.dim_in(), "channel correlation");
  require_dim(rho.dims().a, channel.dim_out(), "channel correlation");
  const DensityMatrix rho_a = reduced(rho, Party::A);
  const ComplexMatrix id_b = identity(rho.dims().b);
  double global = 0.0;
  double local = 0.0;
  for (const auto& k : channel.kraus()) {
    global += skew_information_general(rho.state(), tensor_product(k, id_b));
    local += skew_information_general(rho_a, k);
  }
  return global - local;
}

double twirling_correlation_closed(const BipartiteDensityMatrix& rho) {
  const double local = trace_sqrt(reduced(rho, Party::A));
  return (local * local - reduced_root_purity(rho)) / rho.dims().a;
}

McEstimate twirling_correlation_mc(const BipartiteDensityMatrix& rho, const McOptions& options) {
  if (options.samples < 100) {
    throw Error(ErrorCode::InvalidArgument, "Monte-Carlo needs at least 100 samples");
  }
  const DensityMatrix rho_a = reduced(rho, Party::A);
  rho.sqrt();
  rho_a.sqrt();
  const ComplexMatrix id_b = identity(rho.dims().b);
  return mc_average(
      [&](const ProjectiveBasis& b) {
        const ComplexMatrix& u = b.vectors();
        return skew_information_general(rho.state(), tensor_product(u, id_b)) -
               skew_information_general(rho_a, u);
      },
      rho.dims().a, options);
}

}  // namespace qac
