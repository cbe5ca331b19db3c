#include "qac/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qac/error.hpp"
#include "qac/tolerance.hpp"

namespace qac {

DensityMatrix::DensityMatrix(ComplexMatrix m)
    : matrix_(std::move(m)), cache_(std::make_shared<SqrtCache>()) {}

DensityMatrix DensityMatrix::validate(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and non-empty");
  }
  if (!all_finite(m)) throw Error(ErrorCode::InvalidArgument, "non-finite entry");

  const double limit = tol(tolerances::kState);
  const double herm = hermiticity_residual(m);
  if (herm > limit) {
    throw Error(ErrorCode::NotHermitian, "residual " + std::to_string(herm), herm);
  }
  const double trace_residual = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_residual > limit) {
    throw Error(ErrorCode::TraceNotOne, "residual " + std::to_string(trace_residual),
                trace_residual);
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  const double smallest = solver.eigenvalues().minCoeff();
  if (smallest < -limit) {
    throw Error(ErrorCode::NotPositive, "eigenvalue " + std::to_string(smallest), -smallest);
  }
  return DensityMatrix(sym);
}

const ComplexMatrix& DensityMatrix::sqrt() const {
  std::call_once(cache_->once, [this] {
    cache_->value = psd_sqrt(matrix_);
    cache_->ready.store(true, std::memory_order_release);
  });
  return cache_->value;
}

bool DensityMatrix::sqrt_cached() const {
  return cache_->ready.load(std::memory_order_acquire);
}

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

PureState PureState::validate(const ComplexVector& amplitudes) {
  if (amplitudes.size() == 0) throw Error(ErrorCode::DimensionMismatch, "empty state vector");
  const double residual = std::abs(amplitudes.norm() - 1.0);
  if (!std::isfinite(residual) || residual > tol(tolerances::kState)) {
    throw Error(ErrorCode::NotNormalized, "norm residual " + std::to_string(residual), residual);
  }
  return PureState(amplitudes);
}

DensityMatrix from_pure(const PureState& psi) {
  DensityMatrix rho(projector(psi.amplitudes()));
  // A rank-1 projector is its own square root.
  ComplexMatrix root = rho.matrix_;
  std::call_once(rho.cache_->once, [&] {
    rho.cache_->value = std::move(root);
    rho.cache_->ready.store(true, std::memory_order_release);
  });
  return rho;
}

BipartiteDensityMatrix::BipartiteDensityMatrix(DensityMatrix state, Dims dims)
    : dims_(dims), state_(std::move(state)) {
  if (dims.a < 1 || dims.b < 1 || dims.total() != state_.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dims (" + std::to_string(dims.a) + "," + std::to_string(dims.b) +
                    ") do not match state dimension " + std::to_string(state_.dim()));
  }
}

BipartiteDensityMatrix BipartiteDensityMatrix::validate(const ComplexMatrix& m, Dims dims) {
  return BipartiteDensityMatrix(DensityMatrix::validate(m), dims);
}

DensityMatrix reduced(const BipartiteDensityMatrix& rho, Party party) {
  const Party over = party == Party::A ? Party::B : Party::A;
  return DensityMatrix::validate(partial_trace(rho.matrix(), rho.dims(), over));
}

BipartiteDensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  return BipartiteDensityMatrix::validate(tensor_product(a.matrix(), b.matrix()),
                                          Dims{a.dim(), b.dim()});
}

DensityMatrix conjugated(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "conjugating unitary has wrong size");
  }
  const ComplexMatrix out = u * rho.matrix() * u.adjoint();
  return DensityMatrix::validate(0.5 * (out + out.adjoint()));
}

BipartiteDensityMatrix conjugated(const BipartiteDensityMatrix& rho, const ComplexMatrix& ua,
                                  const ComplexMatrix& ub) {
  return BipartiteDensityMatrix(conjugated(rho.state(), tensor_product(ua, ub)), rho.dims());
}

}  // namespace qac
