#include "qchan/qubit_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qchan/min_output.hpp"
#include "qchan/rng.hpp"

namespace qchan {

namespace {
constexpr double kGeomTol = 1e-12;

// vertices of K as Choi spectra
constexpr std::array<std::array<double, 4>, 4> kVertices = {{
    {1.0, 0.0, 0.0, 0.0},
    {0.5, 0.5, 0.0, 0.0},
    {1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0},
    {0.25, 0.25, 0.25, 0.25},
}};

double spectrum_renyi2(const std::array<double, 4>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return -std::log(s);
}
}  // namespace

QubitChoiResult choi_qubit(const BlochParams& p) {
  const double l1 = p.lambda[0], l2 = p.lambda[1], l3 = p.lambda[2];
  const Complex tp(p.t[0], p.t[1]);
  const Complex tm(p.t[0], -p.t[1]);
  const double t3 = p.t[2];
  Mat sigma(4, 4);
  sigma << 1 + l3 + t3, 0, tp, l1 + l2,
           0, 1 - l3 + t3, l1 - l2, tp,
           tm, l1 - l2, 1 - l3 - t3, 0,
           l1 + l2, tm, 0, 1 + l3 - t3;
  sigma *= 0.25;
  QubitChoiResult res{sigma, false, 0.0};
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (sigma + sigma.adjoint()),
                                        Eigen::EigenvaluesOnly);
  res.min_eigenvalue = es.eigenvalues().minCoeff();
  res.cp = res.min_eigenvalue >= -tol::psd;
  return res;
}

ChoiSpectrumQubit spectrum_from_lambda(const std::array<double, 3>& l) {
  return ChoiSpectrumQubit{{0.25 * (1 + l[0] + l[1] + l[2]),
                            0.25 * (1 - l[0] - l[1] + l[2]),
                            0.25 * (1 - l[0] + l[1] - l[2]),
                            0.25 * (1 + l[0] - l[1] - l[2])}};
}

std::array<double, 3> lambda_from_spectrum(const ChoiSpectrumQubit& s) {
  const auto& v = s.v;
  return {v[0] - v[1] - v[2] + v[3], v[0] - v[1] + v[2] - v[3],
          v[0] + v[1] - v[2] - v[3]};
}

TetraWeights weights_from_lambda(const std::array<double, 3>& l) {
  if (!(std::abs(l[0]) <= std::abs(l[1]) + kGeomTol &&
        std::abs(l[1]) <= std::abs(l[2]) + kGeomTol))
    throw std::invalid_argument(
        "weights_from_lambda: axes must be ordered |l1|<=|l2|<=|l3|");
  std::array<double, 4> a = {0.5 * (l[0] + l[1]), l[2] - l[1],
                             1.5 * (l[1] - l[0]), 1 + l[0] - l[1] - l[2]};
  for (double& x : a) {
    if (x < -1e-9)
      throw std::invalid_argument("weights_from_lambda: point outside K");
    if (x < 0.0) x = 0.0;
  }
  return TetraWeights{a};
}

std::array<double, 3> lambda_from_weights(const TetraWeights& w) {
  const auto& a = w.a;
  // lambda at the vertices: A (1,1,1), B (0,0,1), C (-1/3,1/3,1/3), D 0
  return {a[0] - a[2] / 3.0, a[0] + a[2] / 3.0, a[0] + a[1] + a[2] / 3.0};
}

std::array<double, 3> canonicalize_lambda(std::array<double, 3> l) {
  std::sort(l.begin(), l.end(),
            [](double x, double y) { return std::abs(x) < std::abs(y); });
  // flipping the sign of any two axes is a unitary rotation; use that freedom
  // to make l2 and l3 nonnegative (the sign of the product is invariant)
  if (l[1] < 0 && l[2] < 0) {
    l[1] = -l[1];
    l[2] = -l[2];
  } else if (l[2] < 0) {
    l[2] = -l[2];
    l[0] = -l[0];
  } else if (l[1] < 0) {
    l[1] = -l[1];
    l[0] = -l[0];
  }
  if (std::abs(l[0]) == std::abs(l[1]) && l[0] > l[1]) std::swap(l[0], l[1]);
  return l;
}

double min_output_from_weights(const TetraWeights& w) {
  const double c = 1 + 2 * w.a[0] + 2 * w.a[1] - w.a[3];
  return -std::log((9.0 + c * c) / 18.0);
}

std::vector<BoundaryPoint> boundary_curves(int samples_per_edge) {
  if (samples_per_edge < 2)
    throw std::invalid_argument("boundary_curves: samples_per_edge >= 2");
  std::vector<BoundaryPoint> out;
  auto emit = [&](const std::string& edge, int from, int to, double s) {
    TetraWeights w{};
    w.a[from] = 1.0 - s;
    w.a[to] = s;
    std::array<double, 4> v{};
    for (int i = 0; i < 4; ++i)
      v[i] = (1 - s) * kVertices[from][i] + s * kVertices[to][i];
    BoundaryPoint p{edge, v, spectrum_renyi2(v), 0.0};
    if (edge == "AD")
      p.s_min = depolarizing_curve(2, p.s_map);
    else
      p.s_min = min_output_from_weights(w);
    out.push_back(std::move(p));
  };
  for (int k = 0; k < samples_per_edge; ++k) {
    const double s = static_cast<double>(k) / (samples_per_edge - 1);
    emit("AB", 0, 1, s);
    emit("AD", 0, 3, s);
    emit("BD", 1, 3, s);
  }
  return out;
}

std::vector<TetraSample> sample_tetrahedron(int count, std::uint64_t seed,
                                            EntropyKind kind) {
  if (count < 1) throw std::invalid_argument("sample_tetrahedron: count >= 1");
  std::vector<TetraSample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Eigen::VectorXd bw = dirichlet_flat(4, rng);
    std::array<double, 4> b = {bw(0), bw(1), bw(2), bw(3)};
    TetraSample s{b, 0.0, 0.0};
    if (kind == EntropyKind::renyi2) {
      s.s_map = spectrum_renyi2(b);
      auto l = canonicalize_lambda(lambda_from_spectrum(ChoiSpectrumQubit{b}));
      s.s_min = qubit_pauli_min_output_q2(l[0], l[1], l[2]);
    } else {
      std::vector<double> p(b.begin(), b.end());
      for (double& x : p)
        if (x < 0) x = 0;
      s.s_map = von_neumann_from_spectrum(p);
      MinOutOptions opts;
      opts.seed = derive_seed(seed, 0x5eedULL + i);
      opts.starts = 8;
      s.s_min = min_output_entropy(pauli_channel(b),
                                   EntropyOrder{1.0, LogBase::natural}, opts)
                    .value;
    }
    out.push_back(s);
  }
  return out;
}

SlackReport classical_bound_check(const KrausChannel& phi, double q) {
  const JamiolkowskiState state = choi(phi);
  const DensityMatrix& sigma = state.sigma();
  const double s_full = renyi_from_spectrum(sigma.eigenvalues(), q);
  std::vector<double> diag(sigma.dim());
  for (int i = 0; i < sigma.dim(); ++i) {
    diag[i] = sigma.matrix()(i, i).real();
    if (diag[i] < 0) diag[i] = 0;
  }
  const double s_diag = renyi_from_spectrum(diag, q);
  SlackReport rep;
  rep.slack = s_diag - s_full;
  rep.ok = rep.slack >= -1e-9;
  return rep;
}

}  // namespace qchan
