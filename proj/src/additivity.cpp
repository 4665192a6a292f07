#include "qchan/additivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qchan {

double verify_map_additivity(const KrausChannel& phi1, const KrausChannel& phi2,
                             double q) {
  const EntropyOrder order{q, LogBase::natural};
  const double lhs = map_entropy(tensor_channels(phi1, phi2), order);
  return std::abs(lhs - map_entropy(phi1, order) - map_entropy(phi2, order));
}

SpectralEquivalence permutation_equivalence(const KrausChannel& phi1,
                                            const KrausChannel& phi2) {
  const int n = phi1.dim(), m = phi2.dim();
  Mat d12 = choi(tensor_channels(phi1, phi2)).choi();
  Mat dprod = kron(choi(phi1).choi(), choi(phi2).choi());

  std::vector<double> s1 = hermitian_spectrum(d12);
  std::vector<double> s2 = hermitian_spectrum(dprod);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  SpectralEquivalence res;
  for (size_t i = 0; i < s1.size(); ++i)
    res.spectral_distance = std::max(res.spectral_distance,
                                     std::abs(s1[i] - s2[i]));

  if (n * m <= 16) {
    // D1 x D2 lives on (out1, ref1, out2, ref2); D^{Phi1 x Phi2} on
    // (out1, out2, ref1, ref2).  U permutes the middle factors.
    const int dim = n * n * m * m;
    auto idx_prod = [&](int a, int c, int b, int d) {
      return ((a * n + c) * m + b) * m + d;
    };
    auto idx_joint = [&](int a, int b, int c, int d) {
      return ((a * m + b) * n + c) * m + d;
    };
    Mat u = Mat::Zero(dim, dim);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < m; ++d)
            u(idx_joint(a, b, c, d), idx_prod(a, c, b, d)) = 1.0;
    res.entrywise_distance =
        (u * dprod * u.adjoint() - d12).cwiseAbs().maxCoeff();
  }
  return res;
}

namespace {
DensityMatrix product_channel_output(const KrausChannel& phi1,
                                     const KrausChannel& phi2,
                                     const PureState& psi) {
  const int n = phi1.dim();
  if (phi2.dim() != n || psi.dim() != n * n)
    throw std::invalid_argument("expected two channels on D_n and a state "
                                "on n^2 dimensions");
  // validate maximal entanglement of the input
  Mat proj = psi.amplitudes() * psi.amplitudes().adjoint();
  for (Factor f : {Factor::first, Factor::second}) {
    Mat red = partial_trace(proj, f, n, n);
    const double res =
        (red - Mat::Identity(n, n) / double(n)).cwiseAbs().maxCoeff();
    if (res > 1e-8)
      throw std::invalid_argument(
          "input state is not maximally entangled (marginal residual " +
          std::to_string(res) + ")");
  }
  return apply(tensor_channels(phi1, phi2), DensityMatrix(proj));
}
}  // namespace

BoundReport lindblad_bounds(const KrausChannel& phi1, const KrausChannel& phi2,
                            const PureState& psi) {
  const EntropyOrder q1{1.0, LogBase::natural};
  BoundReport rep;
  rep.value = von_neumann_entropy(product_channel_output(phi1, phi2, psi));
  const double m1 = map_entropy(phi1, q1);
  const double m2 = map_entropy(phi2, q1);
  rep.lower = std::abs(m1 - m2);
  rep.upper = m1 + m2;
  rep.slack_low = rep.value - rep.lower;
  rep.slack_high = rep.upper - rep.value;
  return rep;
}

BoundReport tsallis_lower_bound(const KrausChannel& phi1,
                                const KrausChannel& phi2,
                                const PureState& psi) {
  const EntropyOrder q2{2.0, LogBase::natural};
  BoundReport rep;
  rep.value = renyi_entropy(product_channel_output(phi1, phi2, psi), q2);
  rep.lower = -std::log(1.0 - std::abs(std::exp(-map_entropy(phi1, q2)) -
                                       std::exp(-map_entropy(phi2, q2))));
  rep.upper = std::numeric_limits<double>::infinity();
  rep.slack_low = rep.value - rep.lower;
  rep.slack_high = std::numeric_limits<double>::infinity();
  return rep;
}

bool region_condition(double s1, double s2, int n, int m) {
  if (s1 < -1e-12 || s1 > 2 * std::log(double(n)) + 1e-12 || s2 < -1e-12 ||
      s2 > 2 * std::log(double(m)) + 1e-12)
    throw std::invalid_argument("region_condition: entropy out of range");
  const double nm = double(n) * m;
  const double lhs =
      1.0 - (nm + 1.0) / nm * std::abs(std::exp(-s1) - std::exp(-s2));
  return lhs <= std::exp(-(s1 + s2)) + 1e-15;
}

double alpha(int n) {
  if (n < 2) throw std::invalid_argument("alpha: n >= 2");
  const double n2 = double(n) * n;
  return std::log(n2 * (n2 + 2.0) / (n2 * (n2 + 1.0) + 1.0)) /
         (2.0 * std::log(double(n)));
}

std::vector<RegionPoint> region_scan(int n, int m, int grid) {
  if (grid < 2) throw std::invalid_argument("region_scan: grid >= 2");
  const double hi1 = 2.0 * std::log(double(n));
  const double hi2 = 2.0 * std::log(double(m));
  std::vector<RegionPoint> out;
  out.reserve(static_cast<size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i) {
    const double s1 = hi1 * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double s2 = hi2 * j / (grid - 1);
      out.push_back({s1, s2, n, m, region_condition(s1, s2, n, m)});
    }
  }
  return out;
}

}  // namespace qchan
