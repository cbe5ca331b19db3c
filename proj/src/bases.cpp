#include "qac/bases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qac/error.hpp"
#include "qac/galois.hpp"
#include "qac/tolerance.hpp"

namespace qac {

namespace {

constexpr Complex kI(0.0, 1.0);

ComplexMatrix odd_characteristic_basis(const GaloisField& field, int b) {
  const int d = field.order();
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  const double angle = 2.0 * std::numbers::pi / field.characteristic();
  ComplexMatrix v(d, d);
  for (int a = 0; a < d; ++a) {
    for (int x = 0; x < d; ++x) {
      const int arg = field.add(field.mul(b, field.mul(x, x)), field.mul(a, x));
      v(x, a) = std::polar(norm, angle * field.trace(arg));
    }
  }
  return v;
}

ComplexMatrix even_characteristic_basis(const GaloisField& field, const GaloisRing4& ring, int b) {
  const int d = field.order();
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  static const Complex powers_of_i[4] = {1.0, kI, -1.0, -kI};
  ComplexMatrix v(d, d);
  for (int a = 0; a < d; ++a) {
    const auto shift = ring.add(ring.teichmuller(b), ring.scale(ring.teichmuller(a), 2));
    for (int x = 0; x < d; ++x) {
      v(x, a) = norm * powers_of_i[ring.trace(ring.mul(shift, ring.teichmuller(x)))];
    }
  }
  return v;
}

std::vector<ProjectiveBasis> pauli_bases() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix x(2, 2), y(2, 2);
  x << s, s, s, -s;
  y << s, s, s * kI, -s * kI;
  return {standard_basis(2), ProjectiveBasis::validate(x), ProjectiveBasis::validate(y)};
}

double swap_identity_residual(std::span<const ProjectiveBasis> bases, int d) {
  // Sum_v |v><v| (x) |v><v| and I (x) I + F are both invariant under swapping
  // the tensor factors on either side, so symmetric index pairs k <= l suffice.
  const int pairs = d * (d + 1) / 2;
  std::vector<std::pair<int, int>> index;
  index.reserve(static_cast<std::size_t>(pairs));
  for (int k = 0; k < d; ++k) {
    for (int l = k; l < d; ++l) index.emplace_back(k, l);
  }
  Eigen::Index columns = 0;
  for (const auto& b : bases) columns += b.vectors().cols();
  ComplexMatrix w(pairs, columns);
  Eigen::Index c = 0;
  for (const auto& b : bases) {
    for (Eigen::Index j = 0; j < b.vectors().cols(); ++j, ++c) {
      for (int r = 0; r < pairs; ++r) {
        w(r, c) = b.vectors()(index[static_cast<std::size_t>(r)].first, j) *
                  b.vectors()(index[static_cast<std::size_t>(r)].second, j);
      }
    }
  }
  ComplexMatrix s = ComplexMatrix::Zero(pairs, pairs);
  s.selfadjointView<Eigen::Lower>().rankUpdate(w);
  double worst = 0.0;
  for (int col = 0; col < pairs; ++col) {
    const auto& [k, l] = index[static_cast<std::size_t>(col)];
    worst = std::max(worst, std::abs(s(col, col) - (k == l ? 2.0 : 1.0)));
    for (int r = col + 1; r < pairs; ++r) worst = std::max(worst, std::abs(s(r, col)));
  }
  return worst;
}

}  // namespace

ProjectiveBasis ProjectiveBasis::validate(const ComplexMatrix& vectors) {
  if (vectors.rows() != vectors.cols() || vectors.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "a basis of C^d needs exactly d vectors");
  }
  const double residual = unitarity_residual(vectors);
  if (!std::isfinite(residual) || residual > tol(tolerances::kIdentity)) {
    throw Error(ErrorCode::NotUnitary, "Gram residual " + std::to_string(residual), residual);
  }
  return ProjectiveBasis(vectors);
}

void normalize_phases(ComplexMatrix& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    const Complex first = vectors(0, j);
    if (std::abs(first) > 1e-14) vectors.col(j) *= std::conj(first) / std::abs(first);
    vectors(0, j) = Complex(vectors(0, j).real(), 0.0);
  }
}

ProjectiveBasis standard_basis(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  return ProjectiveBasis::validate(identity(d));
}

ProjectiveBasis fourier_basis(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  ComplexMatrix v(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) v(j, k) = std::polar(norm, 2.0 * std::numbers::pi * j * k / d);
  }
  return ProjectiveBasis::validate(v);
}

MubCertificate mub_certify(std::span<const ProjectiveBasis> bases) {
  MubCertificate cert;
  if (bases.empty()) return cert;
  const int d = bases.front().dim();
  for (const auto& b : bases) {
    if (b.dim() != d) throw Error(ErrorCode::DimensionMismatch, "bases of different dimension");
  }
  cert.dim = d;
  cert.num_bases = static_cast<int>(bases.size());

  ComplexMatrix frame = ComplexMatrix::Zero(d, d);
  for (std::size_t t = 0; t < bases.size(); ++t) {
    const ComplexMatrix& bt = bases[t].vectors();
    cert.orthonormality = std::max(cert.orthonormality, unitarity_residual(bt));
    frame += bt * bt.adjoint();
    for (std::size_t s = t + 1; s < bases.size(); ++s) {
      const Eigen::MatrixXd overlaps = (bt.adjoint() * bases[s].vectors()).cwiseAbs2();
      cert.unbiasedness =
          std::max(cert.unbiasedness, (overlaps.array() - 1.0 / d).abs().maxCoeff());
    }
  }
  cert.completeness = max_norm(frame - static_cast<double>(d + 1) * identity(d));
  cert.swap_identity = swap_identity_residual(bases, d);

  const double limit = tol(tolerances::kIdentity);
  cert.pairwise_pass = cert.orthonormality < limit && cert.unbiasedness < limit;
  cert.completeness_pass = cert.completeness < limit;
  cert.swap_pass = cert.swap_identity < limit;
  cert.pass = cert.pairwise_pass && cert.completeness_pass && cert.swap_pass;
  return cert;
}

MubSet MubSet::from_bases(std::vector<ProjectiveBasis> bases) {
  if (bases.empty()) throw Error(ErrorCode::NotMub, "empty basis list");
  MubCertificate cert = mub_certify(bases);
  if (!cert.pass) {
    const double worst = std::max({cert.orthonormality, cert.unbiasedness, cert.completeness,
                                   cert.swap_identity});
    throw Error(ErrorCode::NotMub, "certification residual " + std::to_string(worst), worst);
  }
  return MubSet(std::move(bases), cert);
}

MubSet mub_construct(int d) {
  const auto pk = prime_power(d);
  if (!pk) throw Error(ErrorCode::NotPrimePower, std::to_string(d) + " is not a prime power");
  if (d > kMaxMubDim) {
    throw Error(ErrorCode::InvalidArgument,
                "dimension " + std::to_string(d) + " exceeds cap " + std::to_string(kMaxMubDim));
  }
  if (d == 2) return MubSet::from_bases(pauli_bases());

  const GaloisField field = GaloisField::create(d);
  std::vector<ProjectiveBasis> bases{standard_basis(d)};
  if (field.characteristic() == 2) {
    const GaloisRing4 ring(field);
    for (int b = 0; b < d; ++b) {
      ComplexMatrix v = even_characteristic_basis(field, ring, b);
      normalize_phases(v);
      bases.push_back(ProjectiveBasis::validate(v));
    }
  } else {
    for (int b = 0; b < d; ++b) {
      ComplexMatrix v = odd_characteristic_basis(field, b);
      normalize_phases(v);
      bases.push_back(ProjectiveBasis::validate(v));
    }
  }
  return MubSet::from_bases(std::move(bases));
}

HermitianOperatorBasis operator_basis(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  HermitianOperatorBasis g{d, {}};
  g.operators.reserve(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(i, i) = 1.0;
    g.operators.push_back(std::move(e));
  }
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(i, j) = s;
      sym(j, i) = s;
      g.operators.push_back(std::move(sym));
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(i, j) = s * kI;
      anti(j, i) = -s * kI;
      g.operators.push_back(std::move(anti));
    }
  }
  return g;
}

MubSet conjugate_basis_set(const MubSet& mubs, const ComplexMatrix& u) {
  if (u.rows() != mubs.dim() || u.cols() != mubs.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "unitary does not match MUB dimension");
  }
  const double residual = unitarity_residual(u);
  if (residual > tol(tolerances::kIdentity)) {
    throw Error(ErrorCode::NotUnitary, "residual " + std::to_string(residual), residual);
  }
  std::vector<ProjectiveBasis> out;
  out.reserve(mubs.bases().size());
  for (const auto& b : mubs.bases()) {
    ComplexMatrix v = u.adjoint() * b.vectors();
    normalize_phases(v);
    out.push_back(ProjectiveBasis::validate(v));
  }
  return MubSet::from_bases(std::move(out));
}

}  // namespace qac
