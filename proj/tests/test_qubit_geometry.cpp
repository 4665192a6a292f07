#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>

#include "qchan/min_output.hpp"
#include "qchan/qubit_geometry.hpp"
#include "qchan/rng.hpp"

using namespace qchan;

namespace {
constexpr double kLn2 = 0.69314718055994531;

std::array<double, 4> sorted4(std::array<double, 4> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("choi_qubit landmark points") {
  // identity: projector on |phi+>
  QubitChoiResult id = choi_qubit({{1, 1, 1}, {0, 0, 0}});
  CHECK(id.cp);
  PureState plus = maximally_entangled(2);
  CHECK((id.sigma - plus.amplitudes() * plus.amplitudes().adjoint())
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  // (1,1,-1) is not completely positive, eigenvalue -1/2
  QubitChoiResult bad = choi_qubit({{1, 1, -1}, {0, 0, 0}});
  CHECK_FALSE(bad.cp);
  CHECK(bad.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));

  // (0,0,1): coarse graining, diag(1/2,0,0,1/2)
  QubitChoiResult cg = choi_qubit({{0, 0, 1}, {0, 0, 0}});
  CHECK(cg.cp);
  Mat expect = Mat::Zero(4, 4);
  expect(0, 0) = expect(3, 3) = 0.5;
  CHECK((cg.sigma - expect).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("spectrum_from_lambda") {
  auto v = spectrum_from_lambda({1, 1, 1}).v;
  CHECK(v[0] == doctest::Approx(1.0));
  CHECK(v[1] + v[2] + v[3] == doctest::Approx(0.0));

  v = spectrum_from_lambda({0, 0, 1}).v;
  CHECK(v[0] == doctest::Approx(0.5));
  CHECK(v[1] == doctest::Approx(0.5));
  CHECK(v[2] == doctest::Approx(0.0));
  CHECK(v[3] == doctest::Approx(0.0));

  v = spectrum_from_lambda({-1.0 / 3, 1.0 / 3, 1.0 / 3}).v;
  CHECK(v[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(v[1] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(v[2] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(v[3] == doctest::Approx(0.0).epsilon(1e-14));

  // sums to one identically
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    std::array<double, 3> l = {2 * rng.uniform() - 1, 2 * rng.uniform() - 1,
                               2 * rng.uniform() - 1};
    auto w = spectrum_from_lambda(l).v;
    CHECK(w[0] + w[1] + w[2] + w[3] == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("weights <-> lambda") {
  CHECK(weights_from_lambda({1, 1, 1}).a ==
        std::array<double, 4>{1, 0, 0, 0});
  CHECK(weights_from_lambda({0, 0, 1}).a ==
        std::array<double, 4>{0, 1, 0, 0});
  auto c = weights_from_lambda({-1.0 / 3, 1.0 / 3, 1.0 / 3}).a;
  CHECK(c[0] == doctest::Approx(0.0));
  CHECK(c[1] == doctest::Approx(0.0));
  CHECK(c[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c[3] == doctest::Approx(0.0));

  auto l = lambda_from_weights(TetraWeights{{0, 0, 0, 1}});
  CHECK(l == std::array<double, 3>{0, 0, 0});
  l = lambda_from_weights(TetraWeights{{1, 0, 0, 0}});
  CHECK(l == std::array<double, 3>{1, 1, 1});
  // confirmed by round-trip: a=(1/2,1/2,0,0) -> lambda=(1/2,1/2,1)
  l = lambda_from_weights(TetraWeights{{0.5, 0.5, 0, 0}});
  CHECK(l[0] == doctest::Approx(0.5));
  CHECK(l[1] == doctest::Approx(0.5));
  CHECK(l[2] == doctest::Approx(1.0));
  auto rt = weights_from_lambda(l).a;
  CHECK(rt[0] == doctest::Approx(0.5));
  CHECK(rt[1] == doctest::Approx(0.5));
  CHECK(rt[2] == doctest::Approx(0.0));
  CHECK(rt[3] == doctest::Approx(0.0));

  CHECK_THROWS_AS(weights_from_lambda({1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(weights_from_lambda({1.0, 1.0, -1.0}),
                  std::invalid_argument);  // a4 = -1/2, outside K

  // random round trips and simplex consistency with the vertex expansion
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    Eigen::VectorXd aw = dirichlet_flat(4, rng);
    TetraWeights w{{aw(0), aw(1), aw(2), aw(3)}};
    auto lam = lambda_from_weights(w);
    auto back = weights_from_lambda(lam).a;
    for (int i = 0; i < 4; ++i) CHECK(std::abs(back[i] - w.a[i]) < 1e-12);

    // spectrum equals sum a_i W_i entrywise
    static const double kW[4][4] = {{1, 0, 0, 0},
                                    {0.5, 0.5, 0, 0},
                                    {1.0 / 3, 1.0 / 3, 1.0 / 3, 0},
                                    {0.25, 0.25, 0.25, 0.25}};
    auto v = spectrum_from_lambda(lam).v;
    for (int i = 0; i < 4; ++i) {
      double expect = 0;
      for (int j = 0; j < 4; ++j) expect += w.a[j] * kW[j][i];
      CHECK(std::abs(v[i] - expect) < 1e-12);
    }
  }
}

TEST_CASE("choi consistency with the spectrum formulas") {
  Rng rng(29);
  for (int k = 0; k < 100; ++k) {
    Eigen::VectorXd aw = dirichlet_flat(4, rng);
    auto lam = lambda_from_weights(TetraWeights{{aw(0), aw(1), aw(2), aw(3)}});
    QubitChoiResult c = choi_qubit({lam, {0, 0, 0}});
    CHECK(c.cp);
    auto numeric = hermitian_spectrum(c.sigma);
    auto analytic = sorted4(spectrum_from_lambda(lam).v);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(numeric[i] - analytic[i]) < 1e-10);
  }
}

TEST_CASE("pauli and bloch parametrizations agree") {
  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    Eigen::VectorXd bw = dirichlet_flat(4, rng);
    std::array<double, 4> b = {bw(0), bw(1), bw(2), bw(3)};
    auto lam = lambda_from_spectrum(ChoiSpectrumQubit{b});
    auto from_bloch = hermitian_spectrum(choi_qubit({lam, {0, 0, 0}}).sigma);
    auto from_pauli = choi(pauli_channel(b)).sigma().eigenvalues();
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(from_bloch[i] - from_pauli[i]) < 1e-10);
  }
}

TEST_CASE("ordering normalization: permutations and sign flips") {
  // weights of (0.2, -0.3, 0.4) are (0.325, 0.275, 0.025, 0.375): interior
  const std::array<double, 3> base = {0.2, -0.3, 0.4};
  auto canon = canonicalize_lambda(base);
  const double s_min_ref =
      qubit_pauli_min_output_q2(canon[0], canon[1], canon[2]);
  auto v_ref = sorted4(spectrum_from_lambda(canon).v);

  int perm[3] = {0, 1, 2};
  std::sort(perm, perm + 3);
  std::array<double, 3> l{};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      for (int i = 0; i < 3; ++i)
        l[i] = base[perm[i]] * ((signs >> i) & 1 ? -1.0 : 1.0);
      // only even sign flips are rotations of the same channel; odd flips
      // (partial transposes) can still be valid but are different maps
      if (std::popcount(static_cast<unsigned>(signs)) % 2 != 0) continue;
      auto c = canonicalize_lambda(l);
      CHECK(std::abs(qubit_pauli_min_output_q2(c[0], c[1], c[2]) - s_min_ref) <
            1e-12);
      auto vs = sorted4(spectrum_from_lambda(c).v);
      for (int i = 0; i < 4; ++i) CHECK(std::abs(vs[i] - v_ref[i]) < 1e-12);
    }
  } while (std::next_permutation(perm, perm + 3));
}

TEST_CASE("min_output_from_weights") {
  CHECK(min_output_from_weights(TetraWeights{{1, 0, 0, 0}}) ==
        doctest::Approx(0.0));
  CHECK(min_output_from_weights(TetraWeights{{0, 0, 0, 1}}) ==
        doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(min_output_from_weights(TetraWeights{{0, 1, 0, 0}}) ==
        doctest::Approx(0.0));

  // agrees with the closed form through lambda
  Rng rng(37);
  for (int k = 0; k < 100; ++k) {
    Eigen::VectorXd aw = dirichlet_flat(4, rng);
    TetraWeights w{{aw(0), aw(1), aw(2), aw(3)}};
    auto lam = canonicalize_lambda(lambda_from_weights(w));
    CHECK(std::abs(min_output_from_weights(w) -
                   qubit_pauli_min_output_q2(lam[0], lam[1], lam[2])) < 1e-12);
  }
}

TEST_CASE("boundary curves") {
  auto curves = boundary_curves(11);
  CHECK(curves.size() == 33);
  auto find = [&](const std::string& edge, double s) -> const BoundaryPoint& {
    for (const auto& p : curves)
      if (p.edge == edge && std::abs(p.s_map - s) < 1e-9) return p;
    REQUIRE(false);
    return curves.front();
  };
  // AB endpoints (0,0) and (ln 2, 0)
  CHECK(find("AB", 0.0).s_min == doctest::Approx(0.0));
  CHECK(find("AB", kLn2).s_min == doctest::Approx(0.0).epsilon(1e-12));
  // AD endpoints (0,0) and (2 ln 2, ln 2)
  CHECK(find("AD", 0.0).s_min == doctest::Approx(0.0));
  CHECK(find("AD", 2 * kLn2).s_min == doctest::Approx(kLn2).epsilon(1e-12));
  // BD ends at D = (2 ln 2, ln 2)
  CHECK(find("BD", 2 * kLn2).s_min == doctest::Approx(kLn2).epsilon(1e-12));

  CHECK_THROWS_AS(boundary_curves(1), std::invalid_argument);
}

TEST_CASE("tetrahedron sampling: renyi2 containment") {
  auto samples = sample_tetrahedron(500, 99, EntropyKind::renyi2);
  CHECK(samples.size() == 500);
  for (const auto& s : samples) {
    // below the depolarizing curve
    CHECK(s.s_min <= depolarizing_curve(2, s.s_map) + 1e-10);
    // left of the classical boundary: S2(sigma) <= S2(diag sigma)
    SlackReport rep = classical_bound_check(pauli_channel(s.b), 2.0);
    CHECK(rep.ok);
  }
  // determinism
  auto again = sample_tetrahedron(5, 99, EntropyKind::renyi2);
  for (int i = 0; i < 5; ++i) {
    CHECK(again[i].s_map == samples[i].s_map);
    CHECK(again[i].s_min == samples[i].s_min);
  }
}

TEST_CASE("tetrahedron sampling: von Neumann kind") {
  auto samples = sample_tetrahedron(20, 7, EntropyKind::von_neumann);
  for (const auto& s : samples) {
    CHECK(s.s_min >= -1e-9);
    CHECK(s.s_min <= kLn2 + 1e-9);  // qubit outputs
    CHECK(s.s_map <= 2 * kLn2 + 1e-12);
  }
}

TEST_CASE("classical bound check") {
  // classical channel: sigma already diagonal, slack 0
  SlackReport cls = classical_bound_check(pauli_channel({0.5, 0, 0, 0.5}), 2.0);
  CHECK(cls.ok);
  CHECK(cls.slack == doctest::Approx(0.0).epsilon(1e-12));

  // identity: slack ln 2 at q = 2? diag of |phi+><phi+| is (1/2,0,0,1/2)
  SlackReport id = classical_bound_check(identity_channel(2), 2.0);
  CHECK(id.slack == doctest::Approx(kLn2).epsilon(1e-12));

  Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    Eigen::VectorXd bw = dirichlet_flat(4, rng);
    SlackReport rep = classical_bound_check(
        pauli_channel({bw(0), bw(1), bw(2), bw(3)}), 2.0);
    CHECK(rep.slack >= -1e-12);
  }
}
