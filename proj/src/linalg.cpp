#include "qac/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "qac/error.hpp"
#include "qac/tolerance.hpp"

namespace qac {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " requires a square matrix, got " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
}

}  // namespace

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

double max_norm(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "hermiticity check");
  return max_norm(m - m.adjoint());
}

double unitarity_residual(const ComplexMatrix& u) {
  require_square(u, "unitarity check");
  return max_norm(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

EigenDecomposition eigh(const ComplexMatrix& m) {
  require_square(m, "eigh");
  const double scale = std::max(1.0, max_norm(m));
  const double residual = hermiticity_residual(m);
  if (residual > tol(tolerances::kState) * scale) {
    throw Error(ErrorCode::NotHermitian, "residual " + std::to_string(residual), residual);
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument, "eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const EigenDecomposition eig = eigh(m);
  const RealVector& lambda = eig.eigenvalues;
  const double scale = lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0;
  const double floor = -tol(tolerances::kState) * std::max(1.0, scale);
  // Eigenvalues at the solver's rounding level are zeros of a rank-deficient input.
  const double noise = 8.0 * static_cast<double>(lambda.size()) *
                       std::numeric_limits<double>::epsilon() * scale;
  RealVector root(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < floor) {
      throw Error(ErrorCode::NotPositive, "eigenvalue " + std::to_string(lambda[i]), -lambda[i]);
    }
    root[i] = lambda[i] > noise ? std::sqrt(lambda[i]) : 0.0;
  }
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix r = v * root.asDiagonal() * v.adjoint();
  return 0.5 * (r + r.adjoint());
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Party over) {
  if (dims.a < 1 || dims.b < 1 || m.rows() != dims.total() || m.cols() != dims.total()) {
    throw Error(ErrorCode::DimensionMismatch,
                "partial trace of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    " with dims (" + std::to_string(dims.a) + "," + std::to_string(dims.b) + ")");
  }
  const int da = dims.a;
  const int db = dims.b;
  if (over == Party::B) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        out(i, j) = m.block(i * db, j * db, db, db).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int a = 0; a < da; ++a) out += m.block(a * db, a * db, db, db);
  return out;
}

ComplexMatrix swap_operator(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "swap operator needs d >= 1");
  ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) f(k * d + l, l * d + k) = 1.0;
  }
  return f;
}

SchmidtDecomposition schmidt_decompose(const ComplexVector& psi, Dims dims) {
  if (psi.size() != dims.total()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state of length " + std::to_string(psi.size()) + " vs dims product " +
                    std::to_string(dims.total()));
  }
  const double norm_residual = std::abs(psi.norm() - 1.0);
  if (norm_residual > tol(tolerances::kState)) {
    throw Error(ErrorCode::NotNormalized, "norm residual " + std::to_string(norm_residual),
                norm_residual);
  }
  // Row-major reshape: M(a, b) = psi[a * d_B + b].
  ComplexMatrix m(dims.a, dims.b);
  for (int a = 0; a < dims.a; ++a) {
    for (int b = 0; b < dims.b; ++b) m(a, b) = psi[a * dims.b + b];
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(s.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return s[x] > s[y]; });
  // Singular values at rounding level are not part of the Schmidt rank.
  const auto rank = std::count_if(order.begin(), order.end(),
                                  [&](Eigen::Index i) { return s[i] > 1e-12; });

  SchmidtDecomposition out;
  out.coefficients.resize(rank);
  out.basis_a.resize(dims.a, rank);
  out.basis_b.resize(dims.b, rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    const Eigen::Index i = order[static_cast<std::size_t>(k)];
    out.coefficients[k] = s[i] * s[i];
    out.basis_a.col(k) = svd.matrixU().col(i);
    out.basis_b.col(k) = svd.matrixV().col(i).conjugate();
  }
  return out;
}

}  // namespace qac
