#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>

namespace qchan {

// Deterministic RNG with a fixed bit-level contract.  std::normal_distribution
// is implementation-defined, so Gaussian draws go through an explicit
// Box-Muller transform to keep outputs byte-stable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // splitmix64 step
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform on (0,1)
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * M_PI * v);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * v);
  }

  std::complex<double> complex_gaussian() {
    return {gaussian() * M_SQRT1_2, gaussian() * M_SQRT1_2};
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stable per-index seed derivation for ensembles.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  Rng mix(seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  return mix.next_u64();
}

// Complex standard-Gaussian (Ginibre) matrix, entries of unit variance.
inline Eigen::MatrixXcd ginibre(int rows, int cols, Rng& rng) {
  Eigen::MatrixXcd g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

// Haar-distributed isometry: QR of a Ginibre matrix with the phase fixed so
// that the diagonal of R is positive.
inline Eigen::MatrixXcd haar_isometry(int rows, int cols, Rng& rng) {
  Eigen::MatrixXcd g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
  Eigen::MatrixXcd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int j = 0; j < cols; ++j) {
    std::complex<double> d = r(j, j);
    double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

inline Eigen::MatrixXcd haar_unitary(int n, Rng& rng) {
  return haar_isometry(n, n, rng);
}

// Haar-uniform pure state amplitudes.
inline Eigen::VectorXcd haar_state_vector(int n, Rng& rng) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.complex_gaussian();
  v.normalize();
  return v;
}

// Flat Dirichlet(1,...,1) sample on the (k-1)-simplex.
inline Eigen::VectorXd dirichlet_flat(int k, Rng& rng) {
  Eigen::VectorXd w(k);
  for (int i = 0; i < k; ++i) w(i) = -std::log(rng.uniform());
  w /= w.sum();
  return w;
}

}  // namespace qchan
