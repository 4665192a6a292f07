#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

namespace qchan {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double norm = 1e-10;
inline constexpr double psd = 1e-9;
inline constexpr double rank = 1e-9;
inline constexpr double completeness = 1e-9;
}  // namespace tol

enum class LogBase { natural, two };

inline double to_base(double nats, LogBase base) {
  return base == LogBase::natural ? nats : nats / M_LN2;
}

// Renyi order q; q == 1 is always routed to the von Neumann limit.
struct EntropyOrder {
  double q = 2.0;
  LogBase base = LogBase::natural;
};

// Hermitian, unit-trace, positive semidefinite matrix.  Validated on
// construction; violations throw std::invalid_argument naming the invariant
// and its residual.
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& matrix() const { return m_; }

  // Ascending eigenvalues of the symmetrized matrix, tiny negatives clamped
  // to zero.
  const std::vector<double>& eigenvalues() const { return eigs_; }

  static DensityMatrix maximally_mixed(int n);

 private:
  Mat m_;
  std::vector<double> eigs_;
};

class PureState {
 public:
  explicit PureState(CVec amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const CVec& amplitudes() const { return amps_; }
  DensityMatrix projector() const;

 private:
  CVec amps_;
};

enum class Factor { first, second };

Mat kron(const Mat& a, const Mat& b);

DensityMatrix tensor(const DensityMatrix& rho1, const DensityMatrix& rho2);

// Partial trace of a matrix on C^n (x) C^m over the chosen factor.
Mat partial_trace(const Mat& m, Factor which, int n, int sub_m);
DensityMatrix partial_trace(const DensityMatrix& rho, Factor which, int n,
                            int sub_m);

// Eigenvalues of (m + m^dagger)/2, ascending, negatives in [-tol_psd, 0)
// clamped to zero.
std::vector<double> hermitian_spectrum(const Mat& m);

// Entropies of a probability vector (need not be normalized checks; callers
// pass density-matrix spectra).  All internal values are in nats.
double renyi_from_spectrum(const std::vector<double>& p, double q);
double von_neumann_from_spectrum(const std::vector<double>& p);
double tsallis_from_spectrum(const std::vector<double>& p, double q);

double renyi_entropy(const DensityMatrix& rho, const EntropyOrder& order);
double von_neumann_entropy(const DensityMatrix& rho,
                           LogBase base = LogBase::natural);
double tsallis_entropy(const DensityMatrix& rho, double q);

// (U (x) 1)|phi+> with |phi+> = n^{-1/2} sum_i |ii>.
PureState maximally_entangled(int n,
                              const std::optional<Mat>& local_unitary = {});

}  // namespace qchan
