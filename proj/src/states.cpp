#include "qchan/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qchan {

namespace {

[[noreturn]] void fail(const std::string& invariant, double residual) {
  std::ostringstream os;
  os << "invariant violated: " << invariant << " (residual " << residual
     << ")";
  throw std::invalid_argument(os.str());
}

}  // namespace

std::vector<double> hermitian_spectrum(const Mat& m) {
  Mat h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> p(es.eigenvalues().data(),
                        es.eigenvalues().data() + es.eigenvalues().size());
  for (double& x : p)
    if (x < 0.0 && x >= -tol::psd) x = 0.0;
  // zero out eigensolver noise: values this far below the top are
  // indistinguishable from exact zeros but distort entropies for q < 1
  const double cutoff = 1e-13 * std::max(p.back(), 0.0);
  for (double& x : p)
    if (x > 0.0 && x < cutoff) x = 0.0;
  return p;
}

DensityMatrix::DensityMatrix(Mat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw std::invalid_argument("density matrix must be square, dim >= 1");
  const double herm_res = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_res > tol::herm) fail("hermiticity", herm_res);
  const double tr_res = std::abs(m_.trace() - Complex(1.0));
  if (tr_res > tol::trace) fail("unit trace", tr_res);
  eigs_ = hermitian_spectrum(m_);
  if (eigs_.front() < 0.0) fail("positive semidefiniteness", -eigs_.front());
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  return DensityMatrix(Mat::Identity(n, n) / static_cast<double>(n));
}

PureState::PureState(CVec amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 1) throw std::invalid_argument("empty state vector");
  const double res = std::abs(amps_.norm() - 1.0);
  if (res > tol::norm) fail("unit norm", res);
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(amps_ * amps_.adjoint());
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix tensor(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  return DensityMatrix(kron(rho1.matrix(), rho2.matrix()));
}

Mat partial_trace(const Mat& m, Factor which, int n, int sub_m) {
  if (m.rows() != static_cast<Eigen::Index>(n) * sub_m || m.rows() != m.cols())
    throw std::invalid_argument("partial_trace: dimension mismatch");
  if (which == Factor::first) {
    Mat out = Mat::Zero(sub_m, sub_m);
    for (int j = 0; j < sub_m; ++j)
      for (int l = 0; l < sub_m; ++l)
        for (int i = 0; i < n; ++i) out(j, l) += m(i * sub_m + j, i * sub_m + l);
    return out;
  }
  Mat out = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < sub_m; ++j) out(i, k) += m(i * sub_m + j, k * sub_m + j);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Factor which, int n,
                            int sub_m) {
  return DensityMatrix(partial_trace(rho.matrix(), which, n, sub_m));
}

double renyi_from_spectrum(const std::vector<double>& p, double q) {
  if (q == 1.0) return von_neumann_from_spectrum(p);
  if (q == 0.0) {
    int rank = 0;
    for (double x : p)
      if (x > 0.0) ++rank;
    return std::log(static_cast<double>(rank));
  }
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s += std::pow(x, q);
  return std::log(s) / (1.0 - q);
}

double von_neumann_from_spectrum(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log(x);
  return s;
}

double tsallis_from_spectrum(const std::vector<double>& p, double q) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s += std::pow(x, q);
  return (s - 1.0) / (1.0 - q);
}

double renyi_entropy(const DensityMatrix& rho, const EntropyOrder& order) {
  return to_base(renyi_from_spectrum(rho.eigenvalues(), order.q), order.base);
}

double von_neumann_entropy(const DensityMatrix& rho, LogBase base) {
  return to_base(von_neumann_from_spectrum(rho.eigenvalues()), base);
}

double tsallis_entropy(const DensityMatrix& rho, double q) {
  if (q <= 0.0 || q == 1.0)
    throw std::invalid_argument(
        "tsallis_entropy: q must be positive and != 1 (use von Neumann at 1)");
  return tsallis_from_spectrum(rho.eigenvalues(), q);
}

PureState maximally_entangled(int n, const std::optional<Mat>& local_unitary) {
  if (n < 1) throw std::invalid_argument("maximally_entangled: n >= 1");
  Mat u = Mat::Identity(n, n);
  if (local_unitary) {
    u = *local_unitary;
    if (u.rows() != n || u.cols() != n)
      throw std::invalid_argument("local unitary: wrong dimension");
    const double res =
        (u.adjoint() * u - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (res > tol::herm)
      throw std::invalid_argument("local unitary: not unitary, residual " +
                                  std::to_string(res));
  }
  CVec psi = CVec::Zero(static_cast<Eigen::Index>(n) * n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) psi(k * n + i) += a * u(k, i);
  return PureState(psi);
}

}  // namespace qchan
