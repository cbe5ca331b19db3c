#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qac/bases.hpp"
#include "qac/error.hpp"
#include "qac/galois.hpp"

using namespace qac;
using oracle::maxabs;

namespace {

const std::vector<int> kPrimePowers = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};

// Worst deviation of |<b_tj|b_sk>|^2 from 1/d, recomputed entry by entry.
double overlap_deviation(const std::vector<ProjectiveBasis>& bases) {
  const int d = bases.front().dim();
  double worst = 0.0;
  for (std::size_t t = 0; t < bases.size(); ++t)
    for (std::size_t s = t + 1; s < bases.size(); ++s)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          const double o = std::norm(bases[t].vector(j).dot(bases[s].vector(k)));
          worst = std::max(worst, std::abs(o - 1.0 / d));
        }
  return worst;
}

ComplexMatrix frame_sum(const std::vector<ProjectiveBasis>& bases) {
  const int d = bases.front().dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& b : bases)
    for (int i = 0; i < d; ++i) sum += projector(b.vector(i));
  return sum;
}

ComplexMatrix tensor_frame_sum(const std::vector<ProjectiveBasis>& bases) {
  const int d = bases.front().dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& b : bases)
    for (int i = 0; i < d; ++i) {
      const ComplexMatrix p = projector(b.vector(i));
      sum += oracle::kron(p, p);
    }
  return sum;
}

}  // namespace

TEST_CASE("prime_power") {
  CHECK(prime_power(2) == std::pair{2, 1});
  CHECK(prime_power(27) == std::pair{3, 3});
  CHECK(prime_power(64) == std::pair{2, 6});
  CHECK_FALSE(prime_power(1).has_value());
  CHECK_FALSE(prime_power(6).has_value());
  CHECK_FALSE(prime_power(12).has_value());
}

TEST_CASE("Galois fields: axioms and trace oracle") {
  for (int q = 2; q <= GaloisField::kMaxOrder; ++q) {
    if (!prime_power(q)) continue;
    CAPTURE(q);
    const GaloisField f = GaloisField::create(q);
    CHECK(f.order() == q);
    std::set<int> traces;
    for (int x = 0; x < q; ++x) {
      CHECK(f.trace(x) == oracle::gf_trace(f, x));
      traces.insert(f.trace(x));
      CHECK(f.add(x, f.neg(x)) == 0);
      CHECK(f.mul(x, 1) == x);
      if (x != 0) {
        CHECK(f.mul(x, f.inv(x)) == 1);
        CHECK(f.exp(f.log(x)) == x);
      }
      CHECK(f.pow(x, q) == x);
    }
    CHECK(static_cast<int>(traces.size()) == f.characteristic());
    std::set<int> powers;
    for (int j = 0; j < q - 1; ++j) powers.insert(f.exp(j));
    CHECK(static_cast<int>(powers.size()) == q - 1);
  }
}

TEST_CASE("Galois field moduli") {
  CHECK(GaloisField::create(4).modulus() == std::vector<int>{1, 1});
  CHECK(GaloisField::create(8).modulus() == std::vector<int>{1, 0, 1});
  CHECK(GaloisField::create(9).modulus() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(GaloisField::create(6), Error);
  CHECK_THROWS_AS(GaloisField::create(81), Error);
}

TEST_CASE("Galois ring lift") {
  for (int q : {4, 8, 16, 32, 64}) {
    CAPTURE(q);
    const GaloisField f = GaloisField::create(q);
    const GaloisRing4 r(f);
    for (int x = 0; x < q; ++x) {
      const auto& t = r.teichmuller(x);
      // Teichmuller elements satisfy t^q = t and reduce mod 2 to the field element.
      auto power = t;
      for (int i = 1; i < q; ++i) power = r.mul(power, t);
      CHECK(power == t);
      std::vector<int> reduced(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) reduced[i] = t[i] % 2;
      CHECK(f.encode(reduced) == x);
      CHECK(r.trace(t) % 2 == f.trace(x));
    }
  }
}

TEST_CASE("standard and Fourier bases") {
  CHECK(standard_basis(1).vectors()(0, 0) == Complex(1.0));
  CHECK(maxabs(standard_basis(3).vectors() - identity(3)) == 0.0);
  const ComplexMatrix f = fourier_basis(4).vectors();
  CHECK(maxabs(f.adjoint() * f - identity(4)) < 1e-12);
}

TEST_CASE("ProjectiveBasis rejects non-orthonormal input") {
  ComplexMatrix m = identity(2);
  m(0, 1) = 0.1;
  try {
    ProjectiveBasis::validate(m);
    FAIL("expected NotUnitary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnitary);
  }
}

TEST_CASE("mub_construct d=2 overlaps") {
  const MubSet m = mub_construct(2);
  REQUIRE(m.bases().size() == 3);
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t s = t + 1; s < 3; ++s)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          CHECK(std::abs(std::abs(m.bases()[t].vector(j).dot(m.bases()[s].vector(k))) -
                         1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("mub_construct certifies for prime powers") {
  for (int d : kPrimePowers) {
    CAPTURE(d);
    const MubSet m = mub_construct(d);
    REQUIRE(static_cast<int>(m.bases().size()) == d + 1);
    const auto& c = m.certificate();
    CHECK(c.pass);
    CHECK(c.unbiasedness < 1e-10);
    CHECK(c.completeness < 1e-10);
    CHECK(c.swap_identity < 1e-10);
    CHECK(overlap_deviation(m.bases()) < 1e-10);
    CHECK(maxabs(frame_sum(m.bases()) - (d + 1) * identity(d)) < 1e-10);
    if (d <= 13) {
      const ComplexMatrix rhs = identity(d * d) + swap_operator(d);
      CHECK(maxabs(tensor_frame_sum(m.bases()) - rhs) < 1e-10);
    }
    CHECK(maxabs(m.bases().front().vectors() - identity(d)) == 0.0);
    for (const auto& b : m.bases())
      for (int i = 0; i < d; ++i) {
        const Complex first = b.vectors()(0, i);
        CHECK(first.imag() == 0.0);
        CHECK(first.real() >= 0.0);
      }
  }
}

TEST_CASE("mub_construct rejects non-prime-powers") {
  for (int d : {1, 6, 10, 12, 65}) {
    CAPTURE(d);
    CHECK_THROWS_AS(mub_construct(d), Error);
  }
  try {
    mub_construct(6);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrimePower);
  }
}

TEST_CASE("mub_certify examples") {
  const MubSet five = mub_construct(5);
  CHECK(mub_certify(five.bases()).pass);

  const std::vector<ProjectiveBasis> twice = {standard_basis(3), standard_basis(3)};
  const auto bad = mub_certify(twice);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.pairwise_pass);
  CHECK(std::abs(bad.unbiasedness - (1.0 - 1.0 / 3.0)) < 1e-12);
  CHECK_THROWS_AS(MubSet::from_bases(twice), Error);

  const std::vector<ProjectiveBasis> pair = {standard_basis(4), fourier_basis(4)};
  const auto partial = mub_certify(pair);
  CHECK(partial.pairwise_pass);
  CHECK_FALSE(partial.completeness_pass);
  CHECK_FALSE(partial.swap_pass);
  CHECK_FALSE(partial.pass);
  CHECK(std::abs(partial.completeness - maxabs(frame_sum(pair) - 5.0 * identity(4))) < 1e-12);

  const std::vector<ProjectiveBasis> mixed = {standard_basis(2), standard_basis(3)};
  try {
    mub_certify(mixed);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("operator_basis") {
  const auto g2 = operator_basis(2);
  REQUIRE(g2.operators.size() == 4);
  CHECK(maxabs(g2.operators[0] - projector(oracle::ket(2, 0))) == 0.0);
  CHECK(maxabs(g2.operators[1] - projector(oracle::ket(2, 1))) == 0.0);
  CHECK(maxabs(g2.operators[2] - oracle::pauli_x() / std::sqrt(2.0)) < 1e-15);
  CHECK(maxabs(g2.operators[3] + oracle::pauli_y() / std::sqrt(2.0)) < 1e-15);

  for (int d = 1; d <= 7; ++d) {
    const auto g = operator_basis(d);
    REQUIRE(static_cast<int>(g.operators.size()) == d * d);
    double tr_sq = 0.0;
    double sq_tr = 0.0;
    for (std::size_t i = 0; i < g.operators.size(); ++i) {
      CHECK(hermiticity_residual(g.operators[i]) == 0.0);
      for (std::size_t j = 0; j < g.operators.size(); ++j) {
        const Complex ip = (g.operators[i] * g.operators[j]).trace();
        CHECK(std::abs(ip - Complex(i == j ? 1.0 : 0.0)) < 1e-12);
      }
      sq_tr += std::norm(g.operators[i].trace());
      tr_sq += (g.operators[i] * g.operators[i]).trace().real();
    }
    CHECK(std::abs(sq_tr - d) < 1e-10);
    CHECK(std::abs(tr_sq - d * d) < 1e-10);
  }
}

TEST_CASE("conjugate_basis_set") {
  const MubSet m2 = mub_construct(2);
  const MubSet same = conjugate_basis_set(m2, identity(2));
  for (std::size_t t = 0; t < 3; ++t)
    CHECK(maxabs(same.bases()[t].vectors() - m2.bases()[t].vectors()) == 0.0);

  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const MubSet hm = conjugate_basis_set(m2, h);
  CHECK(hm.certificate().pass);
  CHECK(maxabs(hm.bases()[0].vectors() - h.adjoint()) < 1e-15);

  for (int d : {2, 3, 4, 5}) {
    const MubSet m = mub_construct(d);
    for (std::uint64_t t = 0; t < 20; ++t) {
      const MubSet c = conjugate_basis_set(m, oracle::random_unitary(t, d));
      CHECK(c.certificate().pass);
      CHECK(overlap_deviation(c.bases()) < 1e-10);
    }
  }

  ComplexMatrix not_unitary = identity(2);
  not_unitary(0, 0) = 1.1;
  try {
    conjugate_basis_set(m2, not_unitary);
    FAIL("expected NotUnitary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnitary);
  }
}
