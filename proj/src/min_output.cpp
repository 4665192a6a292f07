#include "qchan/min_output.hpp"

#include <cmath>
#include <stdexcept>

#include "qchan/rng.hpp"

namespace qchan {

namespace {

double output_purity(const KrausChannel& phi, const CVec& v) {
  Mat rho = apply_raw(phi, v * v.adjoint());
  return (rho * rho).trace().real();
}

double output_entropy(const KrausChannel& phi, const CVec& v, double q) {
  Mat rho = apply_raw(phi, v * v.adjoint());
  return renyi_from_spectrum(hermitian_spectrum(rho), q);
}

struct LocalResult {
  CVec state;
  double value = 0.0;
  bool converged = false;
};

// Projected gradient ascent of tr Phi(vv^t)^2 on the unit sphere with
// backtracking.  Wirtinger gradient of the purity is 2 Phi^t(Phi(vv^t)) v.
LocalResult purity_ascent(const KrausChannel& phi, CVec v, double tol_opt,
                          int max_iter) {
  LocalResult res;
  double f = output_purity(phi, v);
  double step = 1.0;
  for (int it = 0; it < max_iter; ++it) {
    Mat rho = apply_raw(phi, v * v.adjoint());
    CVec g = adjoint_apply(phi, rho) * v;
    // project onto the tangent space of the sphere
    CVec r = g - (v.dot(g)) * v;
    const double rn = r.norm();
    if (rn < 1e-14) {
      res.converged = true;
      break;
    }
    step = std::min(step * 2.0, 1.0);
    bool moved = false;
    while (step > 1e-18) {
      CVec cand = (v + step * r).normalized();
      const double fc = output_purity(phi, cand);
      if (fc > f + 1e-4 * step * rn * rn) {
        const double move = (cand - v).norm();
        v = cand;
        f = fc;
        moved = true;
        if (move < tol_opt) res.converged = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      res.converged = true;
      break;
    }
    if (res.converged) break;
  }
  res.state = v;
  res.value = -std::log(f);
  return res;
}

// Finite-difference projected descent of S_q over the real embedding of the
// sphere; used for q != 2 (including the von Neumann limit q = 1).
LocalResult entropy_descent(const KrausChannel& phi, CVec v, double q,
                            double tol_opt, int max_iter) {
  const int n = phi.dim();
  LocalResult res;
  double f = output_entropy(phi, v, q);
  const double h = 1e-6;
  double step = 0.5;
  for (int it = 0; it < max_iter; ++it) {
    // gradient over 2n real coordinates, central differences
    CVec grad = CVec::Zero(n);
    for (int i = 0; i < n; ++i) {
      for (int part = 0; part < 2; ++part) {
        const Complex dir = part == 0 ? Complex(1, 0) : Complex(0, 1);
        CVec vp = v, vm = v;
        vp(i) += h * dir;
        vm(i) -= h * dir;
        vp.normalize();
        vm.normalize();
        const double d =
            (output_entropy(phi, vp, q) - output_entropy(phi, vm, q)) /
            (2.0 * h);
        grad(i) += d * dir;
      }
    }
    CVec r = grad - (v.dot(grad)) * v;
    const double rn = r.norm();
    if (rn < 1e-10) {
      res.converged = true;
      break;
    }
    step = std::min(step * 2.0, 0.5);
    bool moved = false;
    while (step > 1e-16) {
      CVec cand = (v - step * r).normalized();
      const double fc = output_entropy(phi, cand, q);
      if (fc < f - 1e-4 * step * rn * rn) {
        const double move = (cand - v).norm();
        v = cand;
        f = fc;
        moved = true;
        if (move < tol_opt) res.converged = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      res.converged = true;
      break;
    }
    if (res.converged) break;
  }
  res.state = v;
  res.value = f;
  return res;
}

}  // namespace

MinOutResult min_output_entropy(const KrausChannel& phi,
                                const EntropyOrder& order,
                                const MinOutOptions& opts) {
  if (opts.starts < 1)
    throw std::invalid_argument("min_output_entropy: starts >= 1");
  const int n = phi.dim();
  LocalResult best;
  bool have = false;
  for (int s = 0; s < opts.starts; ++s) {
    Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(s)));
    CVec v0 = haar_state_vector(n, rng);
    LocalResult loc =
        order.q == 2.0
            ? purity_ascent(phi, v0, opts.tol_opt, opts.max_iterations)
            : entropy_descent(phi, v0, order.q, opts.tol_opt,
                              opts.max_iterations);
    if (!have || loc.value < best.value) {
      best = loc;
      have = true;
    }
  }
  MinOutResult out{to_base(best.value, order.base), PureState(best.state),
                   opts.starts, best.converged,
                   output_purity(phi, best.state)};
  return out;
}

namespace {
void check_depol_lambda(int n, double lambda) {
  const double lo = -1.0 / (static_cast<double>(n) * n - 1.0);
  if (lambda < lo - 1e-15 || lambda > 1.0 + 1e-15)
    throw std::invalid_argument("lambda outside complete-positivity interval");
}
}  // namespace

double depolarizing_min_output_q2(int n, double lambda) {
  check_depol_lambda(n, lambda);
  return -std::log((1.0 + (n - 1) * lambda * lambda) / n);
}

double depolarizing_map_q2(int n, double lambda) {
  check_depol_lambda(n, lambda);
  const double n2 = static_cast<double>(n) * n;
  return -std::log((1.0 + (n2 - 1.0) * lambda * lambda) / n2);
}

double depolarizing_curve(int n, double s_map) {
  if (s_map < -1e-12 || s_map > 2.0 * std::log(double(n)) + 1e-12)
    throw std::invalid_argument("depolarizing_curve: s_map out of range");
  return -std::log((1.0 + n * std::exp(-s_map)) / (n + 1.0));
}

double qubit_pauli_min_output_q2(double l1, double l2, double l3) {
  if (!(std::abs(l1) <= std::abs(l2) + 1e-12 &&
        std::abs(l2) <= std::abs(l3) + 1e-12))
    throw std::invalid_argument(
        "qubit_pauli_min_output_q2: axes must be ordered |l1|<=|l2|<=|l3|");
  // CP check via the Choi eigenvalues (1 +- l1 +- l2 +- l3)/4
  const double v1 = 1 + l1 + l2 + l3, v2 = 1 - l1 - l2 + l3,
               v3 = 1 - l1 + l2 - l3, v4 = 1 + l1 - l2 - l3;
  if (v1 < -4e-12 || v2 < -4e-12 || v3 < -4e-12 || v4 < -4e-12)
    throw std::invalid_argument(
        "qubit_pauli_min_output_q2: not completely positive");
  return -std::log(0.5 * (1.0 + l3 * l3));
}

Prop1Report check_prop1(const KrausChannel& phi, const MinOutResult& opt,
                        double tol_ineq) {
  const int n = phi.dim();
  Prop1Report rep;
  rep.epsilon = 1.0 - opt.best_purity;
  const JamiolkowskiState sigma = choi(phi);
  const auto& p = sigma.sigma().eigenvalues();
  rep.sigma_purity = 0.0;
  for (double x : p) rep.sigma_purity += x * x;
  rep.slack = (1.0 - rep.epsilon * (n + 1.0) / n) - rep.sigma_purity;
  rep.pass = rep.slack >= -tol_ineq;
  return rep;
}

}  // namespace qchan
