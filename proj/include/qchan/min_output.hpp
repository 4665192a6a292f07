#pragma once

#include <cstdint>

#include "qchan/channels.hpp"

namespace qchan {

// Result of a multi-start minimal-output-entropy search.  `value` is an
// upper bound on the true minimum.
struct MinOutResult {
  double value = 0.0;
  PureState argmin;
  int starts_used = 0;
  bool converged = false;
  double best_purity = 0.0;  // tr Phi(P)^2 at the argmin
};

struct MinOutOptions {
  int starts = 32;
  std::uint64_t seed = 0;
  double tol_opt = 1e-12;
  int max_iterations = 10000;
};

// Multi-start projected-gradient search over pure input states.  Analytic
// gradient (purity ascent) at q = 2, finite differences otherwise.
MinOutResult min_output_entropy(const KrausChannel& phi,
                                const EntropyOrder& order,
                                const MinOutOptions& opts = {});

// Closed forms for the depolarizing family at q = 2.
double depolarizing_min_output_q2(int n, double lambda);
double depolarizing_map_q2(int n, double lambda);

// Minimal output entropy of a depolarizing channel as a function of its map
// entropy, S2min = -log((1 + n e^{-S2map})/(n+1)).
double depolarizing_curve(int n, double s_map);

// Bistochastic qubit closed form, -log((1 + lambda3^2)/2); requires
// |l1| <= |l2| <= |l3| and complete positivity.
double qubit_pauli_min_output_q2(double l1, double l2, double l3);

// Purity-form inequality behind the depolarizing boundary: with
// eps = 1 - best_purity, checks tr(sigma^Phi)^2 <= 1 - eps(n+1)/n.
struct Prop1Report {
  double epsilon = 0.0;
  double sigma_purity = 0.0;
  double slack = 0.0;  // rhs - sigma_purity
  bool pass = false;
};

Prop1Report check_prop1(const KrausChannel& phi, const MinOutResult& opt,
                        double tol_ineq = 1e-7);

}  // namespace qchan
