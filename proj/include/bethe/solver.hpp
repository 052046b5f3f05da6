#pragma once

// Damped Newton solver for the coupled Bethe equations E_i(u_1..u_M) = 0 in
// logarithmic coordinates z_i = log u_i, with multi-start and canonical
// deduplication.  The equations are holomorphic away from b-factor poles, so
// a complex Jacobian from real central differences in z is exact to O(h^2).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bethe/eigenvalues.hpp"
#include "bethe/params.hpp"
#include "bethe/roots.hpp"
#include "bethe/sampling.hpp"
#include "bethe/types.hpp"

namespace bethe {

struct SolverOptions {
  int max_iterations = 200;
  double residual_tol = 1e-11;  // convergence threshold on max_i |E_i|
  double fd_step = 1e-6;        // central-difference step in log coordinates
  int max_halvings = 30;        // damping: step is halved until it improves
  int starts = 48;              // Newton starts per round
  int max_rounds = 10;          // rounds stop early once saturated
  std::uint64_t seed = 7;
};

struct BetheSolution {
  RootSet roots;
  double max_equation_residual = 0.0;
  int iterations = 0;
};

struct SolveOutcome {
  std::vector<BetheSolution> solutions;  // deduplicated, canonical order
  int attempts = 0;
  int converged = 0;  // converged Newton runs before filtering/deduplication
};

namespace detail {

inline Eigen::VectorXcd bethe_equations(const std::vector<Complex>& roots,
                                        const ModelParams& p,
                                        TransferCase kase) {
  const int m = static_cast<int>(roots.size());
  Eigen::VectorXcd e(m);
  for (int i = 0; i < m; ++i) {
    Complex ei = bethe_residual_d(i, roots, p);
    if (case_has_g_branch(kase)) ei += bethe_residual_g(i, roots, p);
    e(i) = ei;
  }
  return e;
}

inline std::vector<Complex> exp_coords(const Eigen::VectorXcd& z) {
  std::vector<Complex> u(static_cast<std::size_t>(z.size()));
  for (Eigen::Index i = 0; i < z.size(); ++i) u[static_cast<std::size_t>(i)] = std::exp(z(i));
  return u;
}

inline double inf_norm(const Eigen::VectorXcd& e) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < e.size(); ++i) m = std::max(m, std::abs(e(i)));
  return m;
}

inline bool all_finite(const Eigen::VectorXcd& e) {
  for (Eigen::Index i = 0; i < e.size(); ++i)
    if (!std::isfinite(e(i).real()) || !std::isfinite(e(i).imag())) return false;
  return true;
}

// Rejects numerically converged but degenerate root configurations:
// crossing-fixed points u^4 = 1 (where every E_i vanishes identically),
// b(qu^2) = 0 poles of the eigenvalue functions, roots colliding with an
// inhomogeneity +-v_k (there the equations acquire structural zeros that do
// not correspond to eigenvectors), root collisions, crossing-paired roots
// u_i ~ 1/(q u_j), and reflection-paired roots u_i u_j ~ +-1 (the factor
// b(u_i u_j) = 0 degenerates the coupled system the same way a v_k
// collision does; such near-pairs flood the homogeneous point).
inline bool physical_roots(const std::vector<Complex>& roots,
                           const BulkParams& pb) {
  const Complex& q = pb.q;
  for (const Complex& u : roots) {
    if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) return false;
    // both crossing representatives must avoid the degenerate set c = 0
    // (canonicalization may later replace u by 1/(qu))
    if (std::abs(fn_c(u)) < 1e-6) return false;
    if (std::abs(fn_c(1.0 / (q * u))) < 1e-6) return false;
    if (std::abs(fn_b(q * u * u, q)) < 1e-6) return false;
    // b(+-1) = 0, so these two factors cover u = +-v_k and u = +-1/(q v_k)
    // in either crossing representative
    for (const Complex& v : pb.v) {
      if (std::abs(fn_b(u / v, q)) < 1e-6) return false;
      if (std::abs(fn_b(q * u * v, q)) < 1e-6) return false;
    }
  }
  if (!roots_distinct(roots, q)) return false;
  // Pair admissibility: the coupling functions f, h, m degenerate (pole or
  // structural zero) when any of these six combinations hits the zero set of
  // b; the set is closed under crossing either root, so it covers every
  // canonical image of a degenerate raw pair.
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Complex prod = roots[i] * roots[j];
      const Complex ratio = roots[i] / roots[j];
      if (std::abs(fn_b(ratio, q)) <= 1e-6) return false;
      if (std::abs(fn_b(q * ratio, q)) <= 1e-6) return false;
      if (std::abs(fn_b(ratio / q, q)) <= 1e-6) return false;
      if (std::abs(fn_b(prod, q)) <= 1e-6) return false;
      if (std::abs(fn_b(q * prod, q)) <= 1e-6) return false;
      if (std::abs(fn_b(q * q * prod, q)) <= 1e-6) return false;
    }
  return true;
}

struct NewtonResult {
  bool converged = false;
  std::vector<Complex> roots;
  double residual = 0.0;
  int iterations = 0;
};

inline NewtonResult newton_run(Eigen::VectorXcd z, const ModelParams& p,
                               TransferCase kase, const SolverOptions& opt) {
  NewtonResult res;
  const int m = static_cast<int>(z.size());
  Eigen::VectorXcd e = bethe_equations(exp_coords(z), p, kase);
  if (!all_finite(e)) return res;
  double err = inf_norm(e);
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (err < opt.residual_tol) {
      res.converged = true;
      res.roots = exp_coords(z);
      res.residual = err;
      res.iterations = it;
      return res;
    }
    Eigen::MatrixXcd jac(m, m);
    for (int k = 0; k < m; ++k) {
      Eigen::VectorXcd zp = z, zm = z;
      zp(k) += opt.fd_step;
      zm(k) -= opt.fd_step;
      const Eigen::VectorXcd ep = bethe_equations(exp_coords(zp), p, kase);
      const Eigen::VectorXcd em = bethe_equations(exp_coords(zm), p, kase);
      if (!all_finite(ep) || !all_finite(em)) return res;
      jac.col(k) = (ep - em) / (2.0 * opt.fd_step);
    }
    const Eigen::VectorXcd dz = jac.fullPivLu().solve(-e);
    if (!all_finite(dz)) return res;
    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h <= opt.max_halvings; ++h) {
      const Eigen::VectorXcd zt = z + lambda * dz;
      const Eigen::VectorXcd et = bethe_equations(exp_coords(zt), p, kase);
      if (all_finite(et) && inf_norm(et) < err) {
        z = zt;
        e = et;
        err = inf_norm(et);
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) return res;  // stalled
  }
  if (err < opt.residual_tol) {
    res.converged = true;
    res.roots = exp_coords(z);
    res.residual = err;
    res.iterations = opt.max_iterations;
  }
  return res;
}

}  // namespace detail

// Solves the sector-M Bethe equations for the given case.  For the
// lower-upper case the admissible sector is M = N (enforced).
inline SolveOutcome solve_bethe(const ModelParams& p, TransferCase kase,
                                int sector_m,
                                const SolverOptions& opt = SolverOptions()) {
  const int n = p.bulk.n;
  if (sector_m < 0 || sector_m > n)
    throw std::invalid_argument("solve_bethe: sector out of range");
  if (case_has_g_branch(kase) && sector_m != n)
    throw std::invalid_argument("solve_bethe: lower-upper case requires M = N");

  SolveOutcome out;
  if (sector_m == 0) {  // empty root set, trivially on-shell
    BetheSolution sol;
    sol.roots = RootSet{0, {}, kase};
    out.solutions.push_back(sol);
    out.converged = 1;
    out.attempts = 0;
    return out;
  }

  Sampler sampler(opt.seed, "solver");
  const Complex q = p.bulk.q;

  // Multi-start Newton in rounds.  Starts are drawn uniformly from an
  // annulus covering both crossing representatives (a draw is flipped to
  // 1/(qu) with probability one half); guesses seeded near the
  // inhomogeneities are counterproductive here because they sit inside the
  // basins of the spurious u = +-v_k attractors.  Rounds stop early once a
  // full round adds no new solution and at least one has been kept.
  for (int round = 0; round < opt.max_rounds; ++round) {
    const std::size_t before = out.solutions.size();
    for (int s = 0; s < opt.starts; ++s) {
      ++out.attempts;
      Eigen::VectorXcd z(sector_m);
      for (int i = 0; i < sector_m; ++i) {
        Complex u = sampler.annulus(0.55, 1.75);
        if (sampler.unit() < 0.5) u = 1.0 / (q * u);
        z(i) = std::log(u);
      }

      detail::NewtonResult nr = detail::newton_run(z, p, kase, opt);
      if (!nr.converged) continue;
      ++out.converged;

      RootSet rs{sector_m, nr.roots, kase};
      canonicalize(rs, q);
      // filter canonical representatives: crossing-mixed raw pairs reveal
      // their degeneracy only after the orbit is collapsed
      if (!detail::physical_roots(rs.roots, p.bulk)) continue;
      bool duplicate = false;
      for (const BetheSolution& known : out.solutions)
        if (same_rootset(known.roots, rs)) { duplicate = true; break; }
      if (duplicate) continue;

      BetheSolution sol;
      sol.roots = rs;
      sol.max_equation_residual = nr.residual;
      sol.iterations = nr.iterations;
      out.solutions.push_back(sol);
    }
    if (!out.solutions.empty() && out.solutions.size() == before) break;
  }
  return out;
}

// Relative distance of a computed eigenvalue to the closest exact eigenvalue.
struct EigenvalueMatch {
  int index = -1;
  double distance = 0.0;
};

inline EigenvalueMatch match_eigenvalue(const Complex& lambda,
                                        const std::vector<Complex>& spectrum_values) {
  EigenvalueMatch best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < spectrum_values.size(); ++i) {
    const Complex e = spectrum_values[i];
    const double d =
        std::abs(lambda - e) / std::max({1.0, std::abs(lambda), std::abs(e)});
    if (d < best_dist) {
      best_dist = d;
      best.index = static_cast<int>(i);
    }
  }
  if (best.index >= 0) best.distance = best_dist;
  return best;
}

}  // namespace bethe
