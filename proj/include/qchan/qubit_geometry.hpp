#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qchan/channels.hpp"

namespace qchan {

// (lambda, t): ellipsoid half-axes and translation of the Bloch-ball image.
struct BlochParams {
  std::array<double, 3> lambda{};
  std::array<double, 3> t{};
};

// Convex weights over the vertices of the asymmetric tetrahedron K.
struct TetraWeights {
  std::array<double, 4> a{};
};

// Eigenvalues of the qubit Choi matrix; equals the Pauli weights b up to the
// fixed vertex ordering.
struct ChoiSpectrumQubit {
  std::array<double, 4> v{};
};

struct QubitChoiResult {
  Mat sigma;              // the 4x4 matrix, unit trace, Hermitian
  bool cp = false;        // min eigenvalue >= -tol
  double min_eigenvalue = 0.0;
};

// 4x4 normalized dynamical matrix in the Bloch parametrization.  Non-CP
// parameters are not an error; the CP flag is the verdict.
QubitChoiResult choi_qubit(const BlochParams& p);

ChoiSpectrumQubit spectrum_from_lambda(const std::array<double, 3>& lambda);
std::array<double, 3> lambda_from_spectrum(const ChoiSpectrumQubit& v);

// Requires |l1| <= |l2| <= |l3| and the point inside K.
TetraWeights weights_from_lambda(const std::array<double, 3>& lambda);
std::array<double, 3> lambda_from_weights(const TetraWeights& w);

// Sort axes by |.| ascending and flip sign pairs so the representative lies
// in K (l2, l3 >= 0); complete positivity is preserved.
std::array<double, 3> canonicalize_lambda(std::array<double, 3> lambda);

// -log((9 + (1 + 2a1 + 2a2 - a4)^2)/18)
double min_output_from_weights(const TetraWeights& w);

struct BoundaryPoint {
  std::string edge;  // "AB", "AD" or "BD"
  std::array<double, 4> b{};
  double s_map = 0.0;
  double s_min = 0.0;
};

// The three boundary edges of the Pauli-channel projection on the
// (S2map, S2min)-plane, sampled uniformly in the edge parameter.
std::vector<BoundaryPoint> boundary_curves(int samples_per_edge);

enum class EntropyKind { renyi2, von_neumann };

struct TetraSample {
  std::array<double, 4> b{};
  double s_map = 0.0;
  double s_min = 0.0;
};

// Pauli weights b drawn flat on the 3-simplex; von Neumann minima use the
// numeric minimizer, Renyi-2 minima the closed form.
std::vector<TetraSample> sample_tetrahedron(int count, std::uint64_t seed,
                                            EntropyKind kind);

struct SlackReport {
  bool ok = false;
  double slack = 0.0;
};

// S_q(sigma) <= S_q(diag sigma): the spectrum majorizes the diagonal.
SlackReport classical_bound_check(const KrausChannel& phi, double q);

}  // namespace qchan
