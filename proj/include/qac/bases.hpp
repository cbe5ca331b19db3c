#pragma once

#include <span>
#include <vector>

#include "qac/linalg.hpp"

namespace qac {

// Orthonormal basis of C^d stored as the columns of a unitary matrix.
class ProjectiveBasis {
 public:
  // Throws NotUnitary when the Gram matrix deviates from I by more than 1e-10.
  static ProjectiveBasis validate(const ComplexMatrix& vectors);

  int dim() const { return static_cast<int>(vectors_.rows()); }
  const ComplexMatrix& vectors() const { return vectors_; }
  ComplexVector vector(int i) const { return vectors_.col(i); }

 private:
  explicit ProjectiveBasis(ComplexMatrix v) : vectors_(std::move(v)) {}
  ComplexMatrix vectors_;
};

struct MubCertificate {
  int dim = 0;
  int num_bases = 0;
  double orthonormality = 0.0;   // max |B^dagger B - I|
  double unbiasedness = 0.0;     // max | |<b_tj|b_sk>|^2 - 1/d |, t != s
  double completeness = 0.0;     // max | sum_ti |b><b| - (d+1) I |
  double swap_identity = 0.0;    // max | sum_ti |b><b| (x) |b><b| - I (x) I - F |
  bool pairwise_pass = false;
  bool completeness_pass = false;
  bool swap_pass = false;
  bool pass = false;
};

// A certified complete set of d+1 mutually unbiased bases.
class MubSet {
 public:
  // Certifies the candidate; throws NotMub with the certificate's worst residual.
  static MubSet from_bases(std::vector<ProjectiveBasis> bases);

  int dim() const { return bases_.front().dim(); }
  const std::vector<ProjectiveBasis>& bases() const { return bases_; }
  const MubCertificate& certificate() const { return certificate_; }

 private:
  MubSet(std::vector<ProjectiveBasis> bases, MubCertificate cert)
      : bases_(std::move(bases)), certificate_(cert) {}
  std::vector<ProjectiveBasis> bases_;
  MubCertificate certificate_;
};

// Orthonormal Hermitian basis {G_i} of L(C^d) under tr(G_i G_j) = delta_ij:
// the d diagonal units, then S_ij and T_ij for i < j.
struct HermitianOperatorBasis {
  int dim = 0;
  std::vector<ComplexMatrix> operators;
};

inline constexpr int kMaxMubDim = 64;

ProjectiveBasis standard_basis(int d);
ProjectiveBasis fourier_basis(int d);

// Complete MUB family for prime-power d <= 64. The computational basis comes
// first. d = 2 uses the Pauli eigenbases; odd characteristic uses
// omega^{tr(b x^2 + a x)} / sqrt(d), omega = exp(2 pi i / p); characteristic 2
// (d >= 4) uses i^{Tr((b + 2a) x)} / sqrt(d) over the Teichmuller set of
// GR(4, k). Throws NotPrimePower.
MubSet mub_construct(int d);

// Throws DimensionMismatch when the bases disagree on dimension.
MubCertificate mub_certify(std::span<const ProjectiveBasis> bases);

HermitianOperatorBasis operator_basis(int d);

// Maps every vector b to u^dagger b and re-certifies. Throws NotUnitary.
MubSet conjugate_basis_set(const MubSet& mubs, const ComplexMatrix& u);

// Rotates each column so its first component is real and non-negative.
void normalize_phases(ComplexMatrix& vectors);

}  // namespace qac
