#include <doctest.h>

#include "oracles.hpp"
#include "qac/error.hpp"
#include "qac/linalg.hpp"

using namespace qac;
using oracle::maxabs;

TEST_CASE("psd_sqrt examples") {
  CHECK(maxabs(psd_sqrt(identity(4)) - identity(4)) < 1e-12);

  ComplexMatrix half = ComplexMatrix::Zero(2, 2);
  half(0, 0) = half(1, 1) = 0.5;
  const ComplexMatrix r = psd_sqrt(half);
  CHECK(std::abs(r(0, 0) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(r(1, 1) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(r(0, 1)) < 1e-12);

  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const ComplexMatrix p = projector(plus);
  CHECK(maxabs(psd_sqrt(p) - p) < 1e-10);
}

TEST_CASE("psd_sqrt clamps noise and rejects negative spectra") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -5e-11;
  const ComplexMatrix r = psd_sqrt(m);
  CHECK(std::abs(r(1, 1)) == 0.0);

  m(1, 1) = -1e-6;
  try {
    psd_sqrt(m);
    FAIL("expected NotPositive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositive);
    CHECK(std::abs(e.residual() - 1e-6) < 1e-12);
  }

  ComplexMatrix skewed = identity(2);
  skewed(0, 1) = 0.3;
  CHECK_THROWS_AS(psd_sqrt(skewed), Error);
}

TEST_CASE("psd_sqrt agrees with Denman-Beavers and squares back") {
  for (int d = 1; d <= 20; ++d) {
    Substream s(100, static_cast<std::uint64_t>(d));
    const ComplexMatrix g = sample_ginibre(s, d, d);
    const ComplexMatrix m = g * g.adjoint();
    const ComplexMatrix r = psd_sqrt(m);
    CHECK(maxabs(r * r - m) <= 1e-9 * std::max(1.0, maxabs(m)));
    CHECK(hermiticity_residual(r) < 1e-10);
    CHECK(maxabs(r - oracle::sqrt_db(m)) < 1e-8 * std::max(1.0, maxabs(m)));
    const auto eig = eigh(r);
    CHECK(eig.eigenvalues.minCoeff() >= 0.0);
  }
}

TEST_CASE("eigh reconstruction and orthonormality") {
  for (int d : {1, 2, 5, 17, 40}) {
    Substream s(3, static_cast<std::uint64_t>(d));
    const ComplexMatrix h = oracle::random_hermitian(s, d);
    const auto e = eigh(h);
    const ComplexMatrix v = e.eigenvectors;
    const ComplexMatrix back = v * e.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
    CHECK(maxabs(back - h) < 1e-10 * std::max(1.0, maxabs(h)));
    CHECK(maxabs(v.adjoint() * v - identity(d)) < 1e-10);
    for (int i = 1; i < d; ++i) CHECK(e.eigenvalues(i - 1) <= e.eigenvalues(i));
  }
}

TEST_CASE("tensor_product examples and index convention") {
  const ComplexMatrix zi = tensor_product(oracle::pauli_z(), identity(2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  CHECK(maxabs(zi - expected) == 0.0);

  CHECK(maxabs(tensor_product(identity(2), identity(3)) - identity(6)) == 0.0);

  const ComplexMatrix p = tensor_product(projector(oracle::ket(2, 0)), projector(oracle::ket(2, 1)));
  CHECK(p(1, 1) == Complex(1.0));
  CHECK(maxabs(p) == 1.0);
  CHECK(std::abs(p.sum() - Complex(1.0)) == 0.0);
}

TEST_CASE("tensor_product matches index loops") {
  Substream s(8, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = sample_ginibre(s, 3, 2);
    const ComplexMatrix b = sample_ginibre(s, 2, 4);
    CHECK(maxabs(tensor_product(a, b) - oracle::kron(a, b)) < 1e-15);
  }
}

TEST_CASE("partial_trace examples") {
  const DensityMatrix a = oracle::random_state(1, 2);
  const DensityMatrix b = oracle::random_state(2, 3);
  const ComplexMatrix ab = tensor_product(a.matrix(), b.matrix());
  CHECK(maxabs(partial_trace(ab, {2, 3}, Party::B) - a.matrix()) < 1e-12);
  CHECK(maxabs(partial_trace(ab, {2, 3}, Party::A) - b.matrix()) < 1e-12);

  const ComplexMatrix bell = projector(oracle::bell());
  CHECK(maxabs(partial_trace(bell, {2, 2}, Party::A) - 0.5 * identity(2)) < 1e-15);
  CHECK(maxabs(partial_trace(identity(4) / 4.0, {2, 2}, Party::B) - 0.5 * identity(2)) < 1e-15);
}

TEST_CASE("partial_trace matches index loops and preserves trace") {
  Substream s(9, 1);
  for (auto [da, db] : {std::pair{2, 3}, {3, 2}, {4, 4}, {1, 5}, {5, 1}}) {
    const ComplexMatrix m = sample_ginibre(s, da * db, da * db);
    const ComplexMatrix tb = partial_trace(m, {da, db}, Party::B);
    const ComplexMatrix ta = partial_trace(m, {da, db}, Party::A);
    CHECK(tb.rows() == da);
    CHECK(ta.rows() == db);
    CHECK(maxabs(tb - oracle::partial_trace(m, da, db, true)) < 1e-13);
    CHECK(maxabs(ta - oracle::partial_trace(m, da, db, false)) < 1e-13);
    CHECK(std::abs(tb.trace() - m.trace()) < 1e-12);
    CHECK(std::abs(ta.trace() - m.trace()) < 1e-12);
  }
}

TEST_CASE("partial_trace of tensor product scales by the traced factor") {
  Substream s(10, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = sample_ginibre(s, 3, 3);
    const ComplexMatrix b = sample_ginibre(s, 2, 2);
    CHECK(maxabs(partial_trace(tensor_product(a, b), {3, 2}, Party::B) - a * b.trace()) < 1e-12);
  }
}

TEST_CASE("partial_trace dimension mismatch") {
  try {
    partial_trace(identity(5), {2, 3}, Party::B);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("swap_operator examples") {
  CHECK(swap_operator(1)(0, 0) == Complex(1.0));
  const ComplexMatrix f = swap_operator(2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = expected(1, 2) = expected(2, 1) = 1.0;
  CHECK(maxabs(f - expected) == 0.0);
}

TEST_CASE("swap_operator properties") {
  for (int d = 1; d <= 6; ++d) {
    const ComplexMatrix f = swap_operator(d);
    CHECK(maxabs(f - f.adjoint()) == 0.0);
    CHECK(maxabs(f * f - identity(d * d)) == 0.0);
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      const Complex z = f.data()[i];
      CHECK((z == Complex(0.0) || z == Complex(1.0)));
    }
  }
  for (std::uint64_t t = 0; t < 100; ++t) {
    const int d = 2 + static_cast<int>(t % 3);
    const ComplexMatrix rho = oracle::random_state(200 + t, d).matrix();
    const ComplexMatrix sigma = oracle::random_state(900 + t, d).matrix();
    const Complex lhs = (swap_operator(d) * tensor_product(rho, sigma)).trace();
    const Complex rhs = (rho * sigma).trace();
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("schmidt_decompose examples") {
  const auto p = schmidt_decompose(oracle::ket(4, 0), {2, 2});
  REQUIRE(p.coefficients.size() == 1);
  CHECK(std::abs(p.coefficients(0) - 1.0) < 1e-12);

  const auto b = schmidt_decompose(oracle::bell(), {2, 2});
  REQUIRE(b.coefficients.size() == 2);
  CHECK(std::abs(b.coefficients(0) - 0.5) < 1e-12);
  CHECK(std::abs(b.coefficients(1) - 0.5) < 1e-12);

  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = std::sqrt(3.0) / 2.0;
  psi(3) = 0.5;
  const auto u = schmidt_decompose(psi, {2, 2});
  REQUIRE(u.coefficients.size() == 2);
  CHECK(std::abs(u.coefficients(0) - 0.75) < 1e-12);
  CHECK(std::abs(u.coefficients(1) - 0.25) < 1e-12);

  ComplexVector swapped = ComplexVector::Zero(4);
  swapped(0) = 0.5;
  swapped(3) = std::sqrt(3.0) / 2.0;
  CHECK(std::abs(schmidt_decompose(swapped, {2, 2}).coefficients(0) - 0.75) < 1e-12);
}

TEST_CASE("schmidt_decompose reconstruction") {
  for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 4}, {5, 2}}) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      Substream s(40 + t, static_cast<std::uint64_t>(da * 10 + db));
      const ComplexVector psi = sample_pure(s, da * db).amplitudes();
      const auto sd = schmidt_decompose(psi, {da, db});
      CHECK(std::abs(sd.coefficients.sum() - 1.0) < 1e-10);
      ComplexVector back = ComplexVector::Zero(da * db);
      for (Eigen::Index mu = 0; mu < sd.coefficients.size(); ++mu) {
        const ComplexVector a = sd.basis_a.col(mu);
        const ComplexVector b = sd.basis_b.col(mu);
        back += std::sqrt(sd.coefficients(mu)) * oracle::kron(a, b);
      }
      const Complex phase = back.dot(psi);
      CHECK((back * (phase / std::abs(phase)) - psi).cwiseAbs().maxCoeff() < 1e-10);
      for (Eigen::Index mu = 1; mu < sd.coefficients.size(); ++mu)
        CHECK(sd.coefficients(mu - 1) >= sd.coefficients(mu));
      const ComplexMatrix ga = sd.basis_a.adjoint() * sd.basis_a;
      CHECK(maxabs(ga - identity(static_cast<int>(ga.rows()))) < 1e-10);
    }
  }
}

TEST_CASE("schmidt_decompose errors") {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = 0.9;
  try {
    schmidt_decompose(v, {2, 2});
    FAIL("expected NotNormalized");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalized);
  }
  CHECK_THROWS_AS(schmidt_decompose(oracle::ket(5, 0), {2, 2}), Error);
}
