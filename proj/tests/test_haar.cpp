#include <doctest.h>

#include "oracles.hpp"
#include "qac/bases.hpp"
#include "qac/error.hpp"
#include "qac/haar.hpp"
#include "qac/measures.hpp"

using namespace qac;
using oracle::maxabs;

namespace {

double sigma_deviation(const MatrixEstimate& est, const ComplexMatrix& exact) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < exact.rows(); ++i)
    for (Eigen::Index j = 0; j < exact.cols(); ++j) {
      const double dr = std::abs(est.mean(i, j).real() - exact(i, j).real());
      const double di = std::abs(est.mean(i, j).imag() - exact(i, j).imag());
      if (dr > 1e-12) worst = std::max(worst, dr / est.std_error_re(i, j));
      if (di > 1e-12) worst = std::max(worst, di / est.std_error_im(i, j));
    }
  return worst;
}

}  // namespace

TEST_CASE("substreams are addressed by index") {
  Substream a(5, 3);
  Substream b(5, 3);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  SeededSampler s(5);
  Substream first = s.next();
  Substream again = SeededSampler(5).at(0);
  CHECK(first.normal() == again.normal());
  CHECK(s.counter() == 1);
  CHECK(Substream(5, 4).uniform() != Substream(5, 3).uniform());
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}

TEST_CASE("uniform range and normal moments") {
  Substream s(1, 0);
  double second = 0.0;
  Complex mean = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    CHECK((u > 0.0 && u <= 1.0));
    const Complex z = s.normal();
    second += std::norm(z);
    mean += z;
  }
  CHECK(std::abs(second / n - 1.0) < 0.05);
  CHECK(std::abs(mean / static_cast<double>(n)) < 0.05);
}

TEST_CASE("sample_unitary") {
  Substream s(2, 0);
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix u1 = sample_unitary(s, 1);
    CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-12);
  }
  for (int d = 2; d <= 16; ++d) CHECK(unitarity_residual(sample_unitary(s, d)) < 1e-12);

  ComplexMatrix mean = ComplexMatrix::Zero(2, 2);
  const int n = 10000;
  for (int i = 0; i < n; ++i) mean += sample_unitary(s, 2);
  mean /= static_cast<double>(n);
  CHECK(maxabs(mean) < 0.04);
}

TEST_CASE("sample_unitary is Haar: |U_00|^2 is Beta(1, d-1)") {
  // For Haar U on C^d, E|U_00|^2 = 1/d and E|U_00|^4 = 2/(d(d+1)).
  Substream s(3, 0);
  const int d = 3;
  const int n = 20000;
  double m2 = 0.0;
  double m4 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double p = std::norm(sample_unitary(s, d)(0, 0));
    m2 += p;
    m4 += p * p;
  }
  CHECK(std::abs(m2 / n - 1.0 / d) < 0.01);
  CHECK(std::abs(m4 / n - 2.0 / (d * (d + 1))) < 0.01);
}

TEST_CASE("sample_density_hs") {
  Substream s(4, 0);
  CHECK(maxabs(sample_density_hs(s, 1).matrix() - identity(1)) < 1e-15);
  for (int i = 0; i < 1000; ++i) CHECK_NOTHROW(DensityMatrix::validate(sample_density_hs(s, 3).matrix()));
  Substream a(4, 9);
  Substream b(4, 9);
  CHECK(maxabs(sample_density_hs(a, 4).matrix() - sample_density_hs(b, 4).matrix()) == 0.0);
}

TEST_CASE("second_moment_closed examples") {
  for (int d : {2, 3, 5}) CHECK(maxabs(second_moment_closed(identity(d), identity(d), identity(d)) - identity(d)) < 1e-15);
  const ComplexMatrix z = oracle::pauli_z();
  CHECK(maxabs(second_moment_closed(z, z, z) + z / 3.0) < 1e-12);

  ComplexMatrix a(1, 1), b(1, 1), x(1, 1);
  a << Complex(2, 1);
  b << Complex(0.5, 0);
  x << Complex(3, -1);
  CHECK(std::abs(second_moment_closed(a, b, x)(0, 0) - a(0, 0) * x(0, 0) * b(0, 0)) < 1e-15);
  CHECK_THROWS_AS(second_moment_closed(identity(2), identity(3), identity(2)), Error);
}

TEST_CASE("second_moment_mc") {
  const McOptions opts{200, 1, 1};
  const auto c = second_moment_mc(identity(3), identity(3), identity(3), opts);
  CHECK(maxabs(c.mean - identity(3)) < 1e-12);
  CHECK_THROWS_AS(second_moment_mc(identity(2), identity(2), identity(2), McOptions{99, 1, 1}), Error);

  Substream s(6, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = sample_ginibre(s, 3, 3);
    const ComplexMatrix b = sample_ginibre(s, 3, 3);
    const ComplexMatrix x = sample_ginibre(s, 3, 3);
    const auto est = second_moment_mc(a, b, x, McOptions{20000, static_cast<std::uint64_t>(trial), 2});
    CHECK(sigma_deviation(est, second_moment_closed(a, b, x)) < 5.0);
  }
}

TEST_CASE("second_moment_mc is deterministic across worker counts") {
  Substream s(7, 0);
  const ComplexMatrix a = sample_ginibre(s, 2, 2);
  const ComplexMatrix x = sample_ginibre(s, 2, 2);
  const auto one = second_moment_mc(a, a, x, McOptions{1000, 3, 1});
  const auto four = second_moment_mc(a, a, x, McOptions{1000, 3, 4});
  CHECK(maxabs(one.mean - four.mean) == 0.0);
  CHECK((one.std_error_re - four.std_error_re).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("first-moment twirl") {
  Substream s(8, 0);
  for (int d : {2, 3, 4}) {
    const ComplexMatrix x = sample_ginibre(s, d, d);
    const auto est = second_moment_mc(x, identity(d), identity(d), McOptions{20000, 5, 2});
    CHECK(sigma_deviation(est, x.trace() / static_cast<double>(d) * identity(d)) < 5.0);
  }
}

TEST_CASE("standard error shrinks like 1/sqrt(n)") {
  Substream s(9, 0);
  const ComplexMatrix a = sample_ginibre(s, 2, 2);
  const ComplexMatrix x = sample_ginibre(s, 2, 2);
  double ratio_sum = 0.0;
  const int reps = 50;
  for (int r = 0; r < reps; ++r) {
    const auto small = second_moment_mc(a, a, x, McOptions{1000, static_cast<std::uint64_t>(r), 1});
    const auto large = second_moment_mc(a, a, x, McOptions{2000, static_cast<std::uint64_t>(r + 1000), 1});
    ratio_sum += large.std_error_re(0, 0) / small.std_error_re(0, 0);
  }
  CHECK(std::abs(ratio_sum / reps - 1.0 / std::sqrt(2.0)) < 0.2 / std::sqrt(2.0));
}

TEST_CASE("summarize") {
  const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  const auto e = summarize(v);
  CHECK(e.n == 4);
  CHECK(e.mean == doctest::Approx(2.5));
  CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
  const std::vector<double> flat(10, 0.25);
  CHECK(summarize(flat).std_error == 0.0);
}

TEST_CASE("mc_average examples") {
  const McOptions opts{10000, 12, 2};
  const DensityMatrix mixed = DensityMatrix::validate(identity(3) / 3.0);
  const auto zero = mc_average([&](const ProjectiveBasis& b) { return coherence(mixed, b); }, 3, opts);
  CHECK(std::abs(zero.mean) < 1e-12);

  const DensityMatrix pure = from_pure(PureState::validate(oracle::ket(2, 0)));
  const auto third = mc_average([&](const ProjectiveBasis& b) { return coherence(pure, b); }, 2, opts);
  CHECK(std::abs(third.mean - 1.0 / 3.0) < 5.0 * third.std_error);

  const BipartiteDensityMatrix bell(from_pure(PureState::validate(oracle::bell())), {2, 2});
  const auto half = mc_average([&](const ProjectiveBasis& b) { return correlation(bell, b); }, 2, opts);
  CHECK(std::abs(half.mean - 0.5) < 5.0 * half.std_error + 1e-12);
  CHECK(half.n == 10000);

  const auto again = mc_average([&](const ProjectiveBasis& b) { return coherence(pure, b); }, 2, McOptions{10000, 12, 7});
  CHECK(again.mean == third.mean);
  CHECK(again.std_error == third.std_error);
}
