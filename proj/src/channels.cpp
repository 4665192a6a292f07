#include "qchan/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qchan/rng.hpp"

namespace qchan {

KrausChannel::KrausChannel(int dim, std::vector<Mat> operators)
    : dim_(dim), ops_(std::move(operators)) {
  if (dim_ < 1) throw std::invalid_argument("channel dimension must be >= 1");
  if (ops_.empty()) throw std::invalid_argument("at least one Kraus operator");
  Mat sum = Mat::Zero(dim_, dim_);
  for (const Mat& k : ops_) {
    if (k.rows() != dim_ || k.cols() != dim_)
      throw std::invalid_argument("Kraus operator has wrong dimension");
    sum += k.adjoint() * k;
  }
  const double res = (sum - Mat::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  if (res > tol::completeness) {
    std::ostringstream os;
    os << "invariant violated: Kraus completeness sum K^t K = 1 (residual "
       << res << ")";
    throw std::invalid_argument(os.str());
  }
}

JamiolkowskiState::JamiolkowskiState(int dim, DensityMatrix sigma)
    : dim_(dim), sigma_(std::move(sigma)) {
  if (sigma_.dim() != dim_ * dim_)
    throw std::invalid_argument("Jamiolkowski state: dimension mismatch");
  // TP witness: tracing the output factor must leave the maximally mixed
  // reference marginal.
  Mat ref = partial_trace(sigma_.matrix(), Factor::first, dim_, dim_);
  const double res =
      (ref - Mat::Identity(dim_, dim_) / static_cast<double>(dim_))
          .cwiseAbs()
          .maxCoeff();
  if (res > tol::completeness) {
    std::ostringstream os;
    os << "invariant violated: trace preservation tr_out sigma = 1/n "
          "(residual "
       << res << ")";
    throw std::invalid_argument(os.str());
  }
}

Mat apply_raw(const KrausChannel& phi, const Mat& m) {
  if (m.rows() != phi.dim() || m.cols() != phi.dim())
    throw std::invalid_argument("apply: dimension mismatch");
  Mat out = Mat::Zero(phi.dim(), phi.dim());
  for (const Mat& k : phi.operators()) out += k * m * k.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho) {
  return DensityMatrix(apply_raw(phi, rho.matrix()));
}

Mat adjoint_apply(const KrausChannel& phi, const Mat& m) {
  Mat out = Mat::Zero(phi.dim(), phi.dim());
  for (const Mat& k : phi.operators()) out += k.adjoint() * m * k;
  return out;
}

JamiolkowskiState choi(const KrausChannel& phi) {
  const int n = phi.dim();
  // sigma = sum_a (K_a (x) 1)|phi+><phi+|(K_a (x) 1)^dagger;
  // (K (x) 1)|phi+> has amplitude K_ab/sqrt(n) at |ab>.
  Mat sigma = Mat::Zero(n * n, n * n);
  for (const Mat& k : phi.operators()) {
    CVec v(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) v(a * n + b) = k(a, b);
    sigma += v * v.adjoint();
  }
  sigma /= static_cast<double>(n);
  return JamiolkowskiState(n, DensityMatrix(sigma));
}

SuperoperatorMatrix superoperator(const KrausChannel& phi) {
  const int n = phi.dim();
  // Phi_hat = sum_a K_a (x) conj(K_a) in the row-major vectorization.
  Mat m = Mat::Zero(n * n, n * n);
  for (const Mat& k : phi.operators()) m += kron(k, k.conjugate());
  return SuperoperatorMatrix{n, std::move(m)};
}

Mat reshuffle(const Mat& m) {
  const auto n2 = m.rows();
  if (n2 != m.cols()) throw std::invalid_argument("reshuffle: square input");
  const int n = static_cast<int>(std::llround(std::sqrt(double(n2))));
  if (static_cast<Eigen::Index>(n) * n != n2)
    throw std::invalid_argument("reshuffle: dimension not a perfect square");
  Mat out(n2, n2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          out(a * n + b, c * n + d) = m(a * n + c, b * n + d);
  return out;
}

KrausChannel kraus_from_choi(const JamiolkowskiState& sigma) {
  const int n = sigma.dim();
  Mat d = sigma.choi();
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (d + d.adjoint()));
  std::vector<Mat> ops;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double mu = es.eigenvalues()(i);
    if (mu <= tol::rank) continue;
    CVec v = es.eigenvectors().col(i);
    Mat k(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) k(a, b) = std::sqrt(mu) * v(a * n + b);
    ops.push_back(std::move(k));
  }
  return KrausChannel(n, std::move(ops));
}

KrausChannel tensor_channels(const KrausChannel& phi1,
                             const KrausChannel& phi2) {
  std::vector<Mat> ops;
  ops.reserve(phi1.operators().size() * phi2.operators().size());
  for (const Mat& k : phi1.operators())
    for (const Mat& l : phi2.operators()) ops.push_back(kron(k, l));
  return KrausChannel(phi1.dim() * phi2.dim(), std::move(ops));
}

KrausChannel compose(const KrausChannel& phi2, const KrausChannel& phi1) {
  if (phi1.dim() != phi2.dim())
    throw std::invalid_argument("compose: dimension mismatch");
  std::vector<Mat> ops;
  ops.reserve(phi1.operators().size() * phi2.operators().size());
  for (const Mat& l : phi2.operators())
    for (const Mat& k : phi1.operators()) ops.push_back(l * k);
  return KrausChannel(phi1.dim(), std::move(ops));
}

KrausChannel identity_channel(int n) {
  return KrausChannel(n, {Mat::Identity(n, n)});
}

KrausChannel depolarizing(int n, double lambda) {
  const double lo = -1.0 / (static_cast<double>(n) * n - 1.0);
  if (lambda < lo - 1e-15 || lambda > 1.0 + 1e-15) {
    std::ostringstream os;
    os << "depolarizing: lambda = " << lambda
       << " outside complete-positivity interval [" << lo << ", 1]";
    throw std::invalid_argument(os.str());
  }
  // sigma = lambda |phi+><phi+| + (1-lambda)/n^2 * 1; Kraus operators come
  // from its eigendecomposition so the construction works for any n.
  const int n2 = n * n;
  CVec plus = maximally_entangled(n).amplitudes();
  Mat sigma = lambda * (plus * plus.adjoint()) +
              ((1.0 - lambda) / n2) * Mat::Identity(n2, n2);
  return kraus_from_choi(JamiolkowskiState(n, DensityMatrix(sigma)));
}

const std::array<Mat, 4>& pauli_matrices() {
  static const std::array<Mat, 4> paulis = [] {
    std::array<Mat, 4> p;
    p[0] = Mat::Identity(2, 2);
    p[1] = Mat(2, 2);
    p[1] << 0, 1, 1, 0;
    p[2] = Mat(2, 2);
    p[2] << 0, Complex(0, -1), Complex(0, 1), 0;
    p[3] = Mat(2, 2);
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  return paulis;
}

KrausChannel pauli_channel(const std::array<double, 4>& b) {
  double sum = 0.0;
  for (double x : b) {
    if (x < -tol::completeness)
      throw std::invalid_argument("pauli_channel: negative weight");
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol::completeness)
    throw std::invalid_argument("pauli_channel: weights must sum to 1");
  std::vector<Mat> ops;
  for (int i = 0; i < 4; ++i)
    if (b[i] > 0.0) ops.push_back(std::sqrt(b[i]) * pauli_matrices()[i]);
  return KrausChannel(2, std::move(ops));
}

KrausChannel coarse_graining(int n) {
  if (n < 2) throw std::invalid_argument("coarse_graining: n >= 2");
  std::vector<Mat> ops;
  for (int i = 0; i < n; ++i) {
    Mat p = Mat::Zero(n, n);
    p(i, i) = 1.0;
    ops.push_back(std::move(p));
  }
  return KrausChannel(n, std::move(ops));
}

KrausChannel random_channel(int n, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > n * n)
    throw std::invalid_argument("random_channel: rank must be in [1, n^2]");
  Rng rng(seed);
  // Stinespring dilation: the n x n blocks of a Haar (n*rank) x n isometry.
  Mat v = haar_isometry(n * rank, n, rng);
  std::vector<Mat> ops;
  for (int a = 0; a < rank; ++a) ops.push_back(v.middleRows(a * n, n));
  return KrausChannel(n, std::move(ops));
}

double map_entropy(const KrausChannel& phi, const EntropyOrder& order) {
  return renyi_entropy(choi(phi).sigma(), order);
}

double exchange_entropy(const KrausChannel& phi, const DensityMatrix& rho,
                        LogBase base) {
  const int n = phi.dim();
  if (rho.dim() != n)
    throw std::invalid_argument("exchange_entropy: dimension mismatch");
  // Purify rho = sum p_i |e_i><e_i| as sum sqrt(p_i)|e_i>|i>.
  Mat h = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  CVec psi = CVec::Zero(static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i) {
    double p = std::max(es.eigenvalues()(i), 0.0);
    if (p <= 0.0) continue;
    const CVec e = es.eigenvectors().col(i);
    for (int a = 0; a < n; ++a) psi(a * n + i) += std::sqrt(p) * e(a);
  }
  psi.normalize();
  Mat pur = psi * psi.adjoint();
  // (Phi (x) id) acting on the purification
  Mat out = Mat::Zero(n * n, n * n);
  for (const Mat& k : phi.operators()) {
    Mat ke = kron(k, Mat::Identity(n, n));
    out += ke * pur * ke.adjoint();
  }
  return von_neumann_entropy(DensityMatrix(out), base);
}

}  // namespace qchan
