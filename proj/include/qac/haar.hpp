#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "qac/bases.hpp"
#include "qac/linalg.hpp"
#include "qac/states.hpp"

namespace qac {

// SplitMix64 (Steele, Lea, Flood 2014). O(1) seeding, so every sample can own
// a stream. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Random stream for one sample. Its contents depend only on (seed, index).
class Substream {
 public:
  Substream(std::uint64_t seed, std::uint64_t index);

  // Uniform on (0, 1] with 53 random bits.
  double uniform();
  // Standard complex normal, E|z|^2 = 1, by Box-Muller.
  Complex normal();

 private:
  SplitMix64 engine_;
};

class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  Substream at(std::uint64_t index) const { return Substream(seed_, index); }
  Substream next() { return Substream(seed_, counter_++); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

// Derives an independent seed for a nested stream, e.g. per verification trial.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n)
  std::uint64_t n = 0;
};

struct MatrixEstimate {
  ComplexMatrix mean;
  Eigen::MatrixXd std_error_re;
  Eigen::MatrixXd std_error_im;
  std::uint64_t n = 0;
};

struct McOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
};

// Sequential reduction in index order.
McEstimate summarize(std::span<const double> values);

ComplexMatrix sample_ginibre(Substream& s, int rows, int cols);
// Ginibre -> QR -> multiply column j by the phase of R_jj, which makes the
// distribution exactly Haar.
ComplexMatrix sample_unitary(Substream& s, int d);
// G G^dagger / tr(G G^dagger) with square Ginibre G (Hilbert-Schmidt measure).
DensityMatrix sample_density_hs(Substream& s, int d);
PureState sample_pure(Substream& s, int d);

// Right-hand side of
//   int U^dag A U X U^dag B U dU
//     = [d tr(AB) - tr A tr B] / [d(d^2-1)] tr(X) I
//     + [d tr A tr B - tr(AB)] / [d(d^2-1)] X.
// For d = 1 the integrand is the constant AXB, which is returned.
ComplexMatrix second_moment_closed(const ComplexMatrix& a, const ComplexMatrix& b,
                                   const ComplexMatrix& x);

// Sample mean of U^dag A U X U^dag B U over Haar U, with per-entry standard
// errors of the real and imaginary parts. Requires samples >= 100.
MatrixEstimate second_moment_mc(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ComplexMatrix& x, const McOptions& options);

// Average of f over Haar-conjugated computational bases U Pi U^dagger.
using BasisFunctional = std::function<double(const ProjectiveBasis&)>;
McEstimate mc_average(const BasisFunctional& f, int d, const McOptions& options);

}  // namespace qac
