#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qchan/rng.hpp"
#include "qchan/states.hpp"

using namespace qchan;

namespace {

DensityMatrix random_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  Mat g = ginibre(n, n, rng);
  Mat rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(rho);
}

Mat diag2(double a, double b) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("density matrix validation") {
  DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  CHECK(mixed.eigenvalues()[0] == doctest::Approx(0.5));
  CHECK(mixed.eigenvalues()[1] == doctest::Approx(0.5));

  CHECK_NOTHROW(DensityMatrix(diag2(0.75, 0.25)));

  // trace 1 but not positive
  CHECK_THROWS_WITH_AS(DensityMatrix(diag2(1.5, -0.5)),
                       doctest::Contains("positive semidefiniteness"),
                       std::invalid_argument);
  // non-unit trace
  CHECK_THROWS_WITH_AS(DensityMatrix(diag2(1.0, 1.0)),
                       doctest::Contains("unit trace"), std::invalid_argument);
  // non-Hermitian
  Mat nh = Mat::Zero(2, 2);
  nh(0, 0) = 0.5;
  nh(1, 1) = 0.5;
  nh(0, 1) = 0.3;
  CHECK_THROWS_WITH_AS((void)DensityMatrix(nh),
                       doctest::Contains("hermiticity"),
                       std::invalid_argument);
}

TEST_CASE("tensor products") {
  DensityMatrix m2 = DensityMatrix::maximally_mixed(2);
  DensityMatrix m4 = tensor(m2, m2);
  CHECK((m4.matrix() - Mat::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <
        1e-15);

  // diag(1,0) (x) diag(1/2,1/2) = diag(1/2,1/2,0,0): direct Kronecker oracle
  DensityMatrix t = tensor(DensityMatrix(diag2(1, 0)),
                           DensityMatrix(diag2(0.5, 0.5)));
  Mat expect = Mat::Zero(4, 4);
  expect(0, 0) = 0.5;
  expect(1, 1) = 0.5;
  CHECK((t.matrix() - expect).cwiseAbs().maxCoeff() < 1e-15);

  // pure (x) pure stays pure
  CVec a(2), b(2);
  a << 1, 0;
  b << std::sqrt(0.5), std::sqrt(0.5);
  DensityMatrix pp = tensor(PureState(a).projector(), PureState(b).projector());
  double purity = (pp.matrix() * pp.matrix()).trace().real();
  CHECK(purity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial trace") {
  DensityMatrix m4 = DensityMatrix::maximally_mixed(4);
  for (Factor f : {Factor::first, Factor::second}) {
    DensityMatrix red = partial_trace(m4, f, 2, 2);
    CHECK((red.matrix() - Mat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
          1e-14);
  }

  // maximally entangled state has maximally mixed marginals
  DensityMatrix bell = maximally_entangled(2).projector();
  DensityMatrix red = partial_trace(bell, Factor::second, 2, 2);
  CHECK((red.matrix() - Mat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
        1e-14);

  // dimension mismatch
  CHECK_THROWS_AS(partial_trace(m4, Factor::first, 3, 2),
                  std::invalid_argument);

  // ptrace(tensor(r1, r2), second) == r1
  DensityMatrix r1 = random_state(3, 11);
  DensityMatrix r2 = random_state(2, 12);
  DensityMatrix back = partial_trace(tensor(r1, r2), Factor::second, 3, 2);
  CHECK((back.matrix() - r1.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("renyi entropy values") {
  DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  for (double q : {0.5, 2.0, 3.0, 7.0})
    CHECK(renyi_entropy(mixed, {q, LogBase::natural}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));

  CVec a(2);
  a << 1, 0;
  DensityMatrix pure = PureState(a).projector();
  CHECK(renyi_entropy(pure, {2.0, LogBase::natural}) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // diag(3/4, 1/4), q=2: oracle -ln(9/16 + 1/16)
  DensityMatrix d = DensityMatrix(diag2(0.75, 0.25));
  CHECK(renyi_entropy(d, {2.0, LogBase::natural}) ==
        doctest::Approx(-std::log(10.0 / 16.0)).epsilon(1e-12));
}

TEST_CASE("von Neumann entropy values") {
  for (int n : {2, 3, 5})
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(n)) ==
          doctest::Approx(std::log(double(n))).epsilon(1e-12));

  DensityMatrix d = DensityMatrix(diag2(0.75, 0.25));
  const double oracle = -0.75 * std::log(0.75) - 0.25 * std::log(0.25);
  CHECK(von_neumann_entropy(d) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("tsallis entropy") {
  CVec a(2);
  a << 1, 0;
  CHECK(tsallis_entropy(PureState(a).projector(), 2.0) ==
        doctest::Approx(0.0));
  CHECK(tsallis_entropy(DensityMatrix::maximally_mixed(2), 2.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(tsallis_entropy(DensityMatrix::maximally_mixed(2), 1.0),
                  std::invalid_argument);

  // T2 = 1 - e^{-S2} on random states
  for (std::uint64_t s = 0; s < 10; ++s) {
    DensityMatrix rho = random_state(4, 100 + s);
    const double t2 = tsallis_entropy(rho, 2.0);
    const double s2 = renyi_entropy(rho, {2.0, LogBase::natural});
    CHECK(t2 == doctest::Approx(1.0 - std::exp(-s2)).epsilon(1e-10));
  }
}

TEST_CASE("renyi monotonicity in q and continuity at q=1") {
  const double qs[] = {0.3, 0.7, 1.0, 1.5, 2.0, 3.0, 5.0};
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int n = 2 + static_cast<int>(s % 5);
    DensityMatrix rho = random_state(n, 1000 + s);
    double prev = 1e300;
    for (double q : qs) {
      const double cur = renyi_entropy(rho, {q, LogBase::natural});
      CHECK(cur <= prev + 1e-10);
      prev = cur;
    }
    const double vn = von_neumann_entropy(rho);
    for (double q : {1.0 - 1e-6, 1.0 + 1e-6})
      CHECK(std::abs(renyi_entropy(rho, {q, LogBase::natural}) - vn) <= 1e-4);
  }
}

TEST_CASE("base conversion") {
  DensityMatrix rho = random_state(3, 7);
  const double nats = renyi_entropy(rho, {2.0, LogBase::natural});
  const double bits = renyi_entropy(rho, {2.0, LogBase::two});
  CHECK(bits == doctest::Approx(nats / M_LN2).epsilon(1e-15));
  CHECK(von_neumann_entropy(rho, LogBase::two) ==
        doctest::Approx(von_neumann_entropy(rho) / M_LN2).epsilon(1e-15));
}

TEST_CASE("maximally entangled states") {
  PureState bell = maximally_entangled(2);
  CVec expect(4);
  expect << M_SQRT1_2, 0, 0, M_SQRT1_2;
  CHECK((bell.amplitudes() - expect).norm() < 1e-14);

  for (int n : {2, 3, 4}) {
    DensityMatrix red =
        partial_trace(maximally_entangled(n).projector(), Factor::first, n, n);
    CHECK((red.matrix() - Mat::Identity(n, n) / double(n)).cwiseAbs()
              .maxCoeff() < 1e-13);
  }

  // local sigma_x rotation: (|10> + |01>)/sqrt(2)
  Mat sx(2, 2);
  sx << 0, 1, 1, 0;
  PureState rotated = maximally_entangled(2, sx);
  CVec expect2(4);
  expect2 << 0, M_SQRT1_2, M_SQRT1_2, 0;
  CHECK((rotated.amplitudes() - expect2).norm() < 1e-14);

  Mat notu(2, 2);
  notu << 1, 1, 0, 1;
  CHECK_THROWS_AS(maximally_entangled(2, notu), std::invalid_argument);
}
