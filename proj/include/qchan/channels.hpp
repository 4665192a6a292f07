#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qchan/states.hpp"

namespace qchan {

// Completely positive trace-preserving map in Kraus form.
class KrausChannel {
 public:
  KrausChannel(int dim, std::vector<Mat> operators);

  int dim() const { return dim_; }
  const std::vector<Mat>& operators() const { return ops_; }
  int kraus_count() const { return static_cast<int>(ops_.size()); }

 private:
  int dim_;
  std::vector<Mat> ops_;
};

// sigma^Phi = (Phi (x) id)|phi+><phi+| on output (x) reference.  Both the CP
// witness (sigma is a valid state) and the TP witness (reference marginal of
// the Choi matrix is the identity) hold by construction.
class JamiolkowskiState {
 public:
  JamiolkowskiState(int dim, DensityMatrix sigma);

  int dim() const { return dim_; }
  const DensityMatrix& sigma() const { return sigma_; }
  Mat choi() const { return static_cast<double>(dim_) * sigma_.matrix(); }

 private:
  int dim_;
  DensityMatrix sigma_;
};

// Matrix of the channel in the matrix-unit basis: <ij, Phi kl> = Phi(E_kl)_ij.
struct SuperoperatorMatrix {
  int dim;
  Mat matrix;
};

Mat apply_raw(const KrausChannel& phi, const Mat& m);
DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho);

// Adjoint map X -> sum K^dagger X K.
Mat adjoint_apply(const KrausChannel& phi, const Mat& m);

JamiolkowskiState choi(const KrausChannel& phi);
SuperoperatorMatrix superoperator(const KrausChannel& phi);

// Index permutation <ab, R(M) cd> = <ac, M bd>; an involution relating the
// superoperator matrix and the Choi matrix.
Mat reshuffle(const Mat& m);

// Eigendecomposition of the Choi matrix; keeps eigenvalues above tol::rank.
KrausChannel kraus_from_choi(const JamiolkowskiState& sigma);

KrausChannel tensor_channels(const KrausChannel& phi1, const KrausChannel& phi2);
// phi2 after phi1
KrausChannel compose(const KrausChannel& phi2, const KrausChannel& phi1);

KrausChannel identity_channel(int n);
KrausChannel depolarizing(int n, double lambda);
KrausChannel pauli_channel(const std::array<double, 4>& b);
KrausChannel coarse_graining(int n);
KrausChannel random_channel(int n, int rank, std::uint64_t seed);

const std::array<Mat, 4>& pauli_matrices();

double map_entropy(const KrausChannel& phi, const EntropyOrder& order);

// Entropy of (Phi (x) id) applied to a purification of rho.
double exchange_entropy(const KrausChannel& phi, const DensityMatrix& rho,
                        LogBase base = LogBase::natural);

}  // namespace qchan
