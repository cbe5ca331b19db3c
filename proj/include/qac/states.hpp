#pragma once

#include <atomic>
#include <memory>
#include <mutex>

#include "qac/linalg.hpp"

namespace qac {

class PureState;

// Hermitian, unit-trace, PSD matrix. The square root is computed on first
// use and shared by all copies; concurrent readers either trigger the single
// initialization or wait for it.
class DensityMatrix {
 public:
  // Throws NotHermitian, TraceNotOne or NotPositive with the measured residual.
  static DensityMatrix validate(const ComplexMatrix& m);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const ComplexMatrix& sqrt() const;
  bool sqrt_cached() const;
  double purity() const;

 private:
  struct SqrtCache {
    std::once_flag once;
    ComplexMatrix value;
    std::atomic<bool> ready{false};
  };

  explicit DensityMatrix(ComplexMatrix m);

  ComplexMatrix matrix_;
  std::shared_ptr<SqrtCache> cache_;

  friend DensityMatrix from_pure(const PureState&);
};

class PureState {
 public:
  // Throws NotNormalized.
  static PureState validate(const ComplexVector& amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  explicit PureState(ComplexVector v) : amplitudes_(std::move(v)) {}
  ComplexVector amplitudes_;
};

DensityMatrix from_pure(const PureState& psi);

class BipartiteDensityMatrix {
 public:
  BipartiteDensityMatrix(DensityMatrix state, Dims dims);
  static BipartiteDensityMatrix validate(const ComplexMatrix& m, Dims dims);

  Dims dims() const { return dims_; }
  const DensityMatrix& state() const { return state_; }
  const ComplexMatrix& matrix() const { return state_.matrix(); }
  const ComplexMatrix& sqrt() const { return state_.sqrt(); }

 private:
  Dims dims_;
  DensityMatrix state_;
};

DensityMatrix reduced(const BipartiteDensityMatrix& rho, Party party);

BipartiteDensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

// u rho u^dagger
DensityMatrix conjugated(const DensityMatrix& rho, const ComplexMatrix& u);
BipartiteDensityMatrix conjugated(const BipartiteDensityMatrix& rho, const ComplexMatrix& ua,
                                  const ComplexMatrix& ub);

}  // namespace qac
