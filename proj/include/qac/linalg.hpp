#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qac {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Subsystem dimensions of H^A (x) H^B. A is the major index everywhere:
// composite index = a * b_dim + b.
struct Dims {
  int a = 1;
  int b = 1;

  int total() const { return a * b; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Party { A, B };

// Eigenvalues ascending; eigenvector columns orthonormal.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

// Squared Schmidt weights lambda_mu in descending order, with the matching
// local bases as columns: psi = sum_mu sqrt(lambda_mu) |a_mu> (x) |b_mu>.
struct SchmidtDecomposition {
  RealVector coefficients;
  ComplexMatrix basis_a;
  ComplexMatrix basis_b;
};

ComplexMatrix identity(int d);
ComplexMatrix projector(const ComplexVector& v);

double max_norm(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);
double unitarity_residual(const ComplexMatrix& u);
bool all_finite(const ComplexMatrix& m);

// Throws NotHermitian when |m - m^dagger|_max exceeds
// tol(1e-10) * max(1, |m|_max).
EigenDecomposition eigh(const ComplexMatrix& m);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-tol, 0) are clamped to zero; anything more negative throws NotPositive.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Traces out `over`; the remaining factor keeps its own dimension.
ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Party over);

// F = sum_kl |k><l| (x) |l><k| on C^d (x) C^d.
ComplexMatrix swap_operator(int d);

SchmidtDecomposition schmidt_decompose(const ComplexVector& psi, Dims dims);

}  // namespace qac
