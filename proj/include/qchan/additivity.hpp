#pragma once

#include <optional>
#include <vector>

#include "qchan/channels.hpp"

namespace qchan {

// |S^map_q(Phi1 x Phi2) - S^map_q(Phi1) - S^map_q(Phi2)|; q = 1 routes
// through the von Neumann limit.
double verify_map_additivity(const KrausChannel& phi1, const KrausChannel& phi2,
                             double q);

struct SpectralEquivalence {
  double spectral_distance = 0.0;  // max over sorted spectra
  // entrywise distance of U (D1 x D2) U^t vs D^{Phi1 x Phi2}; only
  // materialized for n*m <= 16
  std::optional<double> entrywise_distance;
};

// D^{Phi1 x Phi2} versus D^{Phi1} x D^{Phi2}: equal spectra, related by the
// permutation exchanging the two middle tensor factors.
SpectralEquivalence permutation_equivalence(const KrausChannel& phi1,
                                            const KrausChannel& phi2);

struct BoundReport {
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;
  double slack_low = 0.0;   // value - lower
  double slack_high = 0.0;  // upper - value
};

// Lindblad sandwich for the von Neumann entropy of (Phi1 x Phi2) acting on a
// maximally entangled state.
BoundReport lindblad_bounds(const KrausChannel& phi1, const KrausChannel& phi2,
                            const PureState& psi);

// Tsallis-derived lower bound on the Renyi-2 output entropy at a maximally
// entangled input; upper/slack_high are not meaningful here and are set to
// +infinity.
BoundReport tsallis_lower_bound(const KrausChannel& phi1,
                                const KrausChannel& phi2, const PureState& psi);

// Sufficient condition for a maximally entangled input not to minimize the
// output Renyi-2 entropy of Phi1 x Phi2.
bool region_condition(double s1, double s2, int n, int m);

// Slope of the boundary ray of R through the origin at s_map = 2 log n.
double alpha(int n);

struct RegionPoint {
  double s1 = 0.0;
  double s2 = 0.0;
  int n = 0;
  int m = 0;
  bool in_region = false;
};

// Uniform grid over [0, 2 log n] x [0, 2 log m], endpoints included.
std::vector<RegionPoint> region_scan(int n, int m, int grid);

}  // namespace qchan
