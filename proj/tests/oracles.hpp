#pragma once

// Reference implementations used only by the tests. Each one avoids the
// library routine it is compared against.

#include <cmath>
#include <cstdint>
#include <vector>

#include "qac/galois.hpp"
#include "qac/haar.hpp"
#include "qac/linalg.hpp"
#include "qac/states.hpp"

namespace oracle {

using qac::Complex;
using qac::ComplexMatrix;
using qac::ComplexVector;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& m, int da, int db, bool over_b) {
  if (over_b) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

// Denman-Beavers iteration; converges for positive definite input.
inline ComplexMatrix sqrt_db(const ComplexMatrix& m) {
  ComplexMatrix y = m;
  ComplexMatrix z = ComplexMatrix::Identity(m.rows(), m.cols());
  for (int it = 0; it < 100; ++it) {
    const ComplexMatrix yi = y.inverse();
    const ComplexMatrix zi = z.inverse();
    const ComplexMatrix y_next = 0.5 * (y + zi);
    z = 0.5 * (z + yi);
    const double step = (y_next - y).cwiseAbs().maxCoeff();
    y = y_next;
    if (step < 1e-15) break;
  }
  return 0.5 * (y + y.adjoint());
}

// -1/2 tr([s, o]^2) with s a supplied square root.
inline double skew(const ComplexMatrix& s, const ComplexMatrix& o) {
  const ComplexMatrix c = s * o - o * s;
  return -0.5 * (c * c).trace().real();
}

inline double coherence(const ComplexMatrix& s, const ComplexMatrix& basis) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    const ComplexVector v = basis.col(i);
    sum += skew(s, v * v.adjoint());
  }
  return sum;
}

// Closed-form average correlation from an independently computed root.
inline double avg_correlation(const ComplexMatrix& rho, int da, int db) {
  const ComplexMatrix s = sqrt_db(rho);
  const ComplexMatrix sa = sqrt_db(partial_trace(rho, da, db, true));
  const ComplexMatrix mb = partial_trace(s, da, db, false);
  const double t = sa.trace().real();
  return (t * t - (mb * mb).trace().real()) / (da + 1);
}

// Absolute trace as the trace of the GF(p)-linear map y -> x*y.
inline int gf_trace(const qac::GaloisField& f, int x) {
  const int k = f.degree();
  const int p = f.characteristic();
  int t = 0;
  for (int c = 0; c < k; ++c) {
    std::vector<int> unit(static_cast<std::size_t>(k), 0);
    unit[static_cast<std::size_t>(c)] = 1;
    const auto column = f.coefficients(f.mul(x, f.encode(unit)));
    t += column[static_cast<std::size_t>(c)];
  }
  return t % p;
}

inline ComplexMatrix random_hermitian(qac::Substream& s, int d) {
  const ComplexMatrix g = qac::sample_ginibre(s, d, d);
  return 0.5 * (g + g.adjoint());
}

inline qac::DensityMatrix random_state(std::uint64_t seed, int d) {
  qac::Substream s(seed, 7);
  return qac::sample_density_hs(s, d);
}

inline qac::BipartiteDensityMatrix random_bipartite(std::uint64_t seed, int da, int db) {
  return qac::BipartiteDensityMatrix(random_state(seed, da * db), qac::Dims{da, db});
}

inline ComplexMatrix random_unitary(std::uint64_t seed, int d) {
  qac::Substream s(seed, 11);
  return qac::sample_unitary(s, d);
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline ComplexVector ket(int d, int i) {
  ComplexVector v = ComplexVector::Zero(d);
  v(i) = 1.0;
  return v;
}

inline ComplexVector bell() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

inline double maxabs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
