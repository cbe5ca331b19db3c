#pragma once

#include "qac/bases.hpp"
#include "qac/channels.hpp"
#include "qac/haar.hpp"
#include "qac/linalg.hpp"
#include "qac/states.hpp"

namespace qac {

class Observable {
 public:
  // Throws NotHermitian.
  static Observable validate(const ComplexMatrix& m);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit Observable(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

// Wigner-Yanase skew information -1/2 tr([sqrt(rho), O]^2).
double skew_information(const DensityMatrix& rho, const Observable& o);

// Extension to arbitrary K:
//   1/2 [tr(rho K K^dag) + tr(rho K^dag K)] - tr(sqrt(rho) K^dag sqrt(rho) K),
// which equals 1/2 |[sqrt(rho), K]|_HS^2 and reduces to the Hermitian case.
double skew_information_general(const DensityMatrix& rho, const ComplexMatrix& k);

// C(rho | Pi) = sum_i I(rho, |b_i><b_i|).
double coherence(const DensityMatrix& rho, const ProjectiveBasis& basis);

// sum_i I(rho^AB, |b_i><b_i| (x) 1_B).
double partial_coherence(const BipartiteDensityMatrix& rho, const ProjectiveBasis& basis_a);

// Partial coherence minus the coherence of the reduced state on A.
double correlation(const BipartiteDensityMatrix& rho, const ProjectiveBasis& basis_a);

double avg_coherence_mub(const DensityMatrix& rho, const MubSet& mubs);
// (d - (tr sqrt(rho))^2) / (d + 1)
double avg_coherence_closed(const DensityMatrix& rho);
McEstimate avg_coherence_mc(const DensityMatrix& rho, const McOptions& options);

double avg_correlation_mub(const BipartiteDensityMatrix& rho, const MubSet& mubs);
// [(tr sqrt(rho^A))^2 - tr((tr_A sqrt(rho^AB))^2)] / (d_A + 1)
double avg_correlation_closed(const BipartiteDensityMatrix& rho);
McEstimate avg_correlation_mc(const BipartiteDensityMatrix& rho, const McOptions& options);

// (1/(d_A+1)) sum_i [I(rho^AB, G_i (x) 1_B) - I(rho^A, G_i)]
double correlation_operator_basis(const BipartiteDensityMatrix& rho,
                                  const HermitianOperatorBasis& g);
// sum_i I(rho, G_i); equals d - (tr sqrt(rho))^2.
double local_skew_sum(const DensityMatrix& rho, const HermitianOperatorBasis& g);

// Correlation relative to a channel acting on A:
//   sum_K I(rho^AB, K (x) 1_B) - sum_K I(rho^A, K).
double depolarizing_correlation(const BipartiteDensityMatrix& rho, const KrausChannel& channel);

// [(tr sqrt(rho^A))^2 - tr((tr_A sqrt(rho^AB))^2)] / d_A
double twirling_correlation_closed(const BipartiteDensityMatrix& rho);
// Haar average of I(rho^AB, U (x) 1_B) - I(rho^A, U).
McEstimate twirling_correlation_mc(const BipartiteDensityMatrix& rho, const McOptions& options);

// tr sqrt(rho)
double trace_sqrt(const DensityMatrix& rho);
// tr((tr_A sqrt(rho^AB))^2)
double reduced_root_purity(const BipartiteDensityMatrix& rho);

}  // namespace qac
