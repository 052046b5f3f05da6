#pragma once

// Property-suite registry.  Every library invariant is covered by a suite
// with a stable id; suites draw their own samples from a generator seeded by
// (config seed XOR hash(suite id)) and return one CheckReport each.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bethe/double_row.hpp"
#include "bethe/eigenvalues.hpp"
#include "bethe/functions.hpp"
#include "bethe/hamiltonian.hpp"
#include "bethe/kmatrix.hpp"
#include "bethe/linalg.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/params.hpp"
#include "bethe/report.hpp"
#include "bethe/rmatrix.hpp"
#include "bethe/roots.hpp"
#include "bethe/sampling.hpp"
#include "bethe/solver.hpp"
#include "bethe/states.hpp"
#include "bethe/types.hpp"

namespace bethe {

struct Suite {
  std::string id;
  std::string description;
  std::function<CheckReport(const RunConfig&)> run;
};

namespace suite_detail {

inline double sres(const Complex& a, const Complex& b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

struct Acc {
  double max_res = 0.0;
  int samples = 0;
  void add(double r) {
    max_res = std::max(max_res, r);
    ++samples;
  }
};

inline std::string digest_config(const RunConfig& cfg, const std::string& id) {
  DigestBuilder d;
  d.add("suite", id);
  d.add("seed", cfg.seed);
  d.add("n", cfg.n);
  d.add("case", to_string(cfg.kase));
  d.add("q", cfg.q);
  for (std::size_t i = 0; i < cfg.v_pool.size(); ++i)
    d.add("v" + std::to_string(i), cfg.v_pool[i]);
  d.add("nu_plus", cfg.right.nu_plus);
  d.add("nu_minus", cfg.right.nu_minus);
  d.add("tau", cfg.right.tau);
  d.add("tau_tilde", cfg.right.tau_tilde);
  d.add("eps_plus", cfg.left.eps_plus);
  d.add("eps_minus", cfg.left.eps_minus);
  d.add("kappa", cfg.left.kappa);
  d.add("kappa_tilde", cfg.left.kappa_tilde);
  d.add("tol_op", cfg.tol.operator_identity);
  d.add("tol_fd", cfg.tol.finite_difference);
  return d.hex();
}

inline Mat random_matrix(Sampler& smp, long rows, long cols) {
  Mat m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m(i, j) = smp.annulus(0.2, 1.5);
  return m;
}

// Replaces root i by the probe point, preserving positions (the m-ladder of
// the upper-case builder is positional).
inline std::vector<Complex> replace_root(const std::vector<Complex>& roots,
                                         std::size_t i, const Complex& u) {
  std::vector<Complex> out = roots;
  out[i] = u;
  return out;
}

// A spectral probe that is additionally generic against a given root set, so
// eigenvalue functions evaluated at it stay finite.
inline Complex probe_point(Sampler& smp, const BulkParams& pb,
                           const std::vector<Complex>& avoid) {
  for (int t = 0; t < 512; ++t) {
    const Complex u0 = smp.spectral(pb);
    bool ok = true;
    for (const Complex& r : avoid)
      if (!Sampler::admissible_pair(u0, r, pb.q)) { ok = false; break; }
    if (ok) return u0;
  }
  throw std::runtime_error("probe point draw failed");
}

using Runner = CheckReport (*)(const RunConfig&);

// ---------------------------------------------------------------- tensor ---

inline CheckReport run_embed_commute(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "embed-commute");
  Acc acc;
  const int n = 4;
  for (int s = 0; s < 5; ++s) {
    const Mat a = random_matrix(smp, 2, 2), b = random_matrix(smp, 2, 2);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const QOperator ea = embed_local(a, i, n), eb = embed_local(b, j, n);
        acc.add(residual(ea * eb, eb * ea));
      }
  }
  return make_report("embed-commute", digest_config(cfg, "embed-commute"),
                     acc.samples, acc.max_res, 1e-14, sw.ms());
}

inline CheckReport run_spectrum_triangular(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "spectrum-triangular");
  Acc acc;
  for (int s = 0; s < 5; ++s) {
    const long d = 16;
    Mat t = Mat::Zero(d, d);
    for (long i = 0; i < d; ++i)
      for (long j = i; j < d; ++j) t(i, j) = smp.annulus(0.2, 1.5);
    const std::vector<Complex> eigs = spectrum(t);
    double worst = 0.0;
    for (long i = 0; i < d; ++i) {
      double best = 1e300;
      for (const Complex& e : eigs)
        best = std::min(best, std::abs(e - t(i, i)) / std::max(1.0, std::abs(t(i, i))));
      worst = std::max(worst, best);
    }
    acc.add(worst);
  }
  return make_report("spectrum-triangular",
                     digest_config(cfg, "spectrum-triangular"), acc.samples,
                     acc.max_res, 1e-10, sw.ms());
}

inline CheckReport run_kron_mixed(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "kron-mixed");
  Acc acc;
  const long sizes[3][2] = {{2, 2}, {2, 3}, {3, 2}};
  for (int s = 0; s < 21; ++s) {
    const long na = sizes[s % 3][0], nb = sizes[s % 3][1];
    const Mat a = random_matrix(smp, na, na), c = random_matrix(smp, na, na);
    const Mat b = random_matrix(smp, nb, nb), d = random_matrix(smp, nb, nb);
    acc.add(residual(kron(a, b) * kron(c, d), kron(a * c, b * d)));
  }
  return make_report("kron-mixed", digest_config(cfg, "kron-mixed"),
                     acc.samples, acc.max_res, 1e-13, sw.ms());
}

// ---------------------------------------------------------- vertex model ---

inline CheckReport run_ybe(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "ybe");
  Acc acc;
  for (int s = 0; s < 100; ++s) {
    const Complex q = smp.generic_q(1);
    acc.add(ybe_residual(smp.annulus(), smp.annulus(), smp.annulus(), q));
  }
  return make_report("ybe", digest_config(cfg, "ybe"), acc.samples,
                     acc.max_res, 1e-11, sw.ms());
}

inline CheckReport run_rll(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "rll");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 8; ++s) {
      const BulkParams pb = smp.bulk(n);
      const std::vector<Complex> uv = smp.spectral_family(2, pb);
      acc.add(rll_residual(uv[0], uv[1], pb));
    }
  return make_report("rll", digest_config(cfg, "rll"), acc.samples,
                     acc.max_res, cfg.tol.operator_identity, sw.ms());
}

inline CheckReport run_l_commutations(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "l-commutations");
  Acc acc;
  for (int n = 2; n <= 4; ++n)
    for (int s = 0; s < 20; ++s) {
      const BulkParams pb = smp.bulk(n);
      const Complex q = pb.q;
      const std::vector<Complex> uv = smp.spectral_family(2, pb);
      const Complex u = uv[0], v = uv[1];
      const MonodromyBlocks lu = build_monodromy(u, pb);
      const MonodromyBlocks lv = build_monodromy(v, pb);
      // [l12(u), l12(v)] = 0
      acc.add(residual(lu.l12 * lv.l12, lv.l12 * lu.l12));
      // l11(u) l12(v) = b(qv/u)/b(v/u) l12(v) l11(u) + 1/b(u/v) l12(u) l11(v)
      acc.add(residual(lu.l11 * lv.l12,
                       (fn_b(q * v / u, q) / fn_b(v / u, q)) * (lv.l12 * lu.l11) +
                           (1.0 / fn_b(u / v, q)) * (lu.l12 * lv.l11)));
      // l22(u) l12(v) = b(qu/v)/b(u/v) l12(v) l22(u) + 1/b(v/u) l12(u) l22(v)
      acc.add(residual(lu.l22 * lv.l12,
                       (fn_b(q * u / v, q) / fn_b(u / v, q)) * (lv.l12 * lu.l22) +
                           (1.0 / fn_b(v / u, q)) * (lu.l12 * lv.l22)));
      // l21(u) l12(v) = l12(v) l21(u) + 1/b(u/v) (l11(v) l22(u) - l11(u) l22(v))
      acc.add(residual(lu.l21 * lv.l12,
                       lv.l12 * lu.l21 +
                           (1.0 / fn_b(u / v, q)) *
                               (lv.l11 * lu.l22 - lu.l11 * lv.l22)));
    }
  return make_report("l-commutations", digest_config(cfg, "l-commutations"),
                     acc.samples, acc.max_res, cfg.tol.operator_identity, sw.ms());
}

inline CheckReport run_izergin_symmetry(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "izergin-symmetry");
  Acc acc;
  for (int n = 2; n <= 4; ++n)
    for (int s = 0; s < 6; ++s) {
      const BulkParams pb = smp.bulk(n);
      std::vector<Complex> us = smp.spectral_family(n, pb);
      const Complex z0 = izergin_z(us, pb);
      std::vector<Complex> up = us;
      std::shuffle(up.begin(), up.end(), smp.engine());
      acc.add(sres(z0, izergin_z(up, pb)));
      BulkParams pbp = pb;
      std::shuffle(pbp.v.begin(), pbp.v.end(), smp.engine());
      acc.add(sres(z0, izergin_z(us, pbp)));
    }
  return make_report("izergin-symmetry",
                     digest_config(cfg, "izergin-symmetry"), acc.samples,
                     acc.max_res, 1e-10, sw.ms());
}

inline CheckReport run_lagrange(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "lagrange");
  Acc acc;
  for (int s = 0; s < 20; ++s) {
    const BulkParams pb = smp.bulk(2);
    const Complex q = pb.q;
    const std::vector<Complex> pts = smp.spectral_family(3, pb);
    const Complex u1 = pts[0], u2 = pts[1], w = pts[2];
    const MonodromyBlocks l1 = build_monodromy(u1, pb);
    const MonodromyBlocks l2 = build_monodromy(u2, pb);
    const MonodromyBlocks lw = build_monodromy(w, pb);
    acc.add(residual(lw.l12,
                     (fn_b(w / u2, q) / fn_b(u1 / u2, q)) * l1.l12 +
                         (fn_b(w / u1, q) / fn_b(u2 / u1, q)) * l2.l12));
  }
  return make_report("lagrange", digest_config(cfg, "lagrange"), acc.samples,
                     acc.max_res, 1e-11, sw.ms());
}

inline CheckReport run_qdet(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "qdet");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 4; ++s) {
      const BulkParams pb = smp.bulk(n);
      const Complex u = smp.spectral(pb);
      acc.add(sres(quantum_determinant(u, pb), qdet_product(u, pb)));
      acc.add(inverse_relation_residual(u, pb));
    }
  return make_report("qdet", digest_config(cfg, "qdet"), acc.samples,
                     acc.max_res, cfg.tol.operator_identity, sw.ms());
}

inline CheckReport run_comonodromy(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "comonodromy");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 4; ++s) {
      const BulkParams pb = smp.bulk(n);
      acc.add(comonodromy_crosscheck_residual(smp.spectral(pb), pb));
    }
  return make_report("comonodromy", digest_config(cfg, "comonodromy"),
                     acc.samples, acc.max_res, 1e-12, sw.ms());
}

// ------------------------------------------------------ boundary algebra ---

inline CheckReport run_re_dre(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "re-dre");
  Acc acc;
  for (int s = 0; s < 100; ++s) {
    const Complex q = smp.generic_q(1);
    RightBoundary r = smp.right_boundary(true);
    r.tau_tilde = smp.scalar();  // the reflection equation holds untriangularly
    acc.add(re_residual(smp.annulus(), smp.annulus(), r, q));
    const LeftBoundary l = smp.left_boundary(true, true);
    acc.add(dre_residual(smp.annulus(), smp.annulus(), l, q));
  }
  return make_report("re-dre", digest_config(cfg, "re-dre"), acc.samples,
                     acc.max_res, 1e-12, sw.ms());
}

inline CheckReport run_abcd_commutations(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "abcd-commutations");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 20; ++s) {
      const ModelParams p = smp.model(n, TransferCase::LowerUpper);
      const Complex q = p.bulk.q;
      const std::vector<Complex> uv = smp.spectral_family(2, p.bulk);
      const Complex u = uv[0], v = uv[1];
      const DoubleRowEntries du = build_double_row(u, p);
      const DoubleRowEntries dv = build_double_row(v, p);
      const auto rel = [&](const Complex& a, const Complex& b,
                           const DoubleRowEntries& da, const DoubleRowEntries& db) {
        // exchange relations at the ordered pair (a, b)
        acc.add(residual(da.A * db.B, fn_f(a, b, q) * (db.B * da.A) +
                                          fn_g(a, b, q) * (da.B * db.A) +
                                          fn_w(a, b, q) * (da.B * db.D)));
        acc.add(residual(db.C * da.A, fn_f(a, b, q) * (da.A * db.C) +
                                          fn_g(a, b, q) * (db.A * da.C) +
                                          fn_w(a, b, q) * (db.D * da.C)));
        acc.add(residual(da.D * db.B, fn_h(a, b, q) * (db.B * da.D) +
                                          fn_k(a, b, q) * (da.B * db.D) +
                                          fn_n(a, b, q) * (da.B * db.A)));
        acc.add(residual(da.C * db.D, fn_h(b, a, q) * (db.D * da.C) +
                                          fn_k(b, a, q) * (da.D * db.C) +
                                          fn_n(b, a, q) * (da.A * db.C)));
        acc.add(residual(
            da.C * db.B,
            db.B * da.C + fn_s(a, b, q) * (da.A * db.A) +
                fn_x(a, b, q) * (db.A * da.A) + fn_y(a, b, q) * (da.D * db.A) +
                fn_r(a, b, q) * (da.A * db.D) + fn_p(a, b, q) * (db.A * da.D) +
                fn_w(a, b, q) * (da.D * db.D)));
        acc.add(residual(da.A * db.D,
                         db.D * da.A + fn_k(b, a, q) * (da.B * db.C - db.B * da.C)));
      };
      rel(u, v, du, dv);  // six asymmetric relations at (u, v)
      rel(v, u, dv, du);  // and their argument-swapped instances
      // symmetric relations
      acc.add(residual(du.A * dv.A,
                       dv.A * du.A + fn_w(u, v, q) * (du.B * dv.C - dv.B * du.C)));
      acc.add(residual(du.D * dv.D,
                       dv.D * du.D - (fn_phi(u, q) * fn_phi(v, q) * fn_w(u, v, q)) *
                                         (du.B * dv.C - dv.B * du.C)));
      acc.add(residual(du.B * dv.B, dv.B * du.B));
      acc.add(residual(du.C * dv.C, dv.C * du.C));
    }
  return make_report("abcd-commutations",
                     digest_config(cfg, "abcd-commutations"), acc.samples,
                     acc.max_res, cfg.tol.operator_identity, sw.ms());
}

inline CheckReport run_iduwt(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "iduwt");
  Acc acc;
  int done = 0;
  while (done < 50) {
    const Complex q = smp.generic_q(1);
    const Complex u = smp.annulus(), v = smp.annulus();
    bool ok = Sampler::admissible_pair(u, v, q);
    for (const Complex& w : {u, v}) {
      if (std::abs(fn_b(q * w * w, q)) < kGenericMargin) ok = false;
      if (std::abs(fn_b(q * q * w * w, q)) < kGenericMargin) ok = false;
      if (std::abs(fn_c(w)) < kGenericMargin) ok = false;
    }
    if (!ok) continue;
    ++done;
    const RightBoundary r = smp.right_boundary(true);
    const LeftBoundary l = smp.left_boundary(true, true);
    const auto km = [&](const Complex& x) { return k_minus(x, r); };
    const auto kp = [&](const Complex& x) { return k_plus(x, l); };
    const Complex scale = fn_g(u, v, q) * fn_phi(u, q);
    for (const Complex& val :
         {id_uwt1(u, v, q, km), id_uwt2(u, v, q, km), id_uwt1(u, v, q, kp),
          id_uwt2(u, v, q, kp)})
      acc.add(std::abs(val) / std::max(1.0, std::abs(scale)));
  }
  return make_report("iduwt", digest_config(cfg, "iduwt"), acc.samples,
                     acc.max_res, 1e-12, sw.ms());
}

inline CheckReport run_m_shifted_upper(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "m-shifted-upper");
  Acc acc;
  for (int n = 1; n <= 3; ++n)
    for (int m : {-4, -2, 0, 2})
      for (int s = 0; s < 3; ++s) {
        const ModelParams p = smp.model(n, TransferCase::UpperUpper);
        const Complex q = p.bulk.q;
        const std::vector<Complex> uv = smp.spectral_family(2, p.bulk);
        const Complex u = uv[0], v = uv[1];
        const ModifiedUpper mu = build_modified_ops_upper(u, m, p);
        const ModifiedUpper mv = build_modified_ops_upper(v, m, p);
        const ModifiedUpper mu2 = build_modified_ops_upper(u, m - 2, p);
        const ModifiedUpper mv2 = build_modified_ops_upper(v, m - 2, p);
        const ModifiedUpper mup = build_modified_ops_upper(u, m + 2, p);
        acc.add(residual(mu.Btil * mv2.Btil, mv.Btil * mu2.Btil));
        acc.add(residual(mup.Atil * mv.Btil,
                         fn_f(u, v, q) * (mv.Btil * mu.Atil) +
                             fn_g(u, v, q) * (mu.Btil * mv.Atil) +
                             fn_w(u, v, q) * (mu.Btil * mv.Dtil)));
        acc.add(residual(mup.Dtil * mv.Btil,
                         fn_h(u, v, q) * (mv.Btil * mu.Dtil) +
                             fn_k(u, v, q) * (mu.Btil * mv.Dtil) +
                             fn_n(u, v, q) * (mu.Btil * mv.Atil)));
      }
  return make_report("m-shifted-upper", digest_config(cfg, "m-shifted-upper"),
                     acc.samples, acc.max_res, cfg.tol.operator_identity, sw.ms());
}

inline CheckReport run_m_shifted_lower(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "m-shifted-lower");
  Acc acc;
  for (int n = 1; n <= 3; ++n)
    for (int m : {-4, -2, 0, 2})
      for (int s = 0; s < 3; ++s) {
        const ModelParams p = smp.model(n, TransferCase::LowerUpper);
        const Complex q = p.bulk.q;
        const std::vector<Complex> uv = smp.spectral_family(2, p.bulk);
        const Complex u = uv[0], v = uv[1];
        const ModifiedLower mu = build_modified_ops_lower(u, m, p);
        const ModifiedLower mv = build_modified_ops_lower(v, m, p);
        const ModifiedLower mup = build_modified_ops_lower(u, m + 2, p);
        const QOperator bu = build_double_row(u, p).B;
        const QOperator bv = build_double_row(v, p).B;
        acc.add(residual(mup.Abar * bv, fn_f(u, v, q) * (bv * mu.Abar) +
                                            fn_g(u, v, q) * (bu * mv.Abar) +
                                            fn_w(u, v, q) * (bu * mv.Dbar)));
        acc.add(residual(mup.Dbar * bv, fn_h(u, v, q) * (bv * mu.Dbar) +
                                            fn_k(u, v, q) * (bu * mv.Dbar) +
                                            fn_n(u, v, q) * (bu * mv.Abar)));
      }
  return make_report("m-shifted-lower", digest_config(cfg, "m-shifted-lower"),
                     acc.samples, acc.max_res, cfg.tol.operator_identity, sw.ms());
}

inline CheckReport run_nilpotency_diag(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "nilpotency-diag");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 5; ++s) {
      const ModelParams p = smp.model(n, TransferCase::Diag);
      const QOperator b = build_double_row(smp.spectral(p.bulk), p).B;
      const StateVector image = b * covacuum(n);
      acc.add(image.v.norm() / std::max(1.0, b.m.norm()));
    }
  return make_report("nilpotency-diag", digest_config(cfg, "nilpotency-diag"),
                     acc.samples, acc.max_res, 1e-12, sw.ms());
}

inline CheckReport run_closed_forms(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "closed-forms");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 5; ++s) {
      const ModelParams p = smp.model(n, TransferCase::LowerUpper);
      const Complex u = smp.spectral(p.bulk);
      const DoubleRowEntries built = build_double_row(u, p);
      const DoubleRowEntries closed = closed_double_row(u, p);
      acc.add(residual(built.A, closed.A));
      acc.add(residual(built.B, closed.B));
      acc.add(residual(built.C, closed.C));
      acc.add(residual(built.D, closed.D));
    }
  return make_report("closed-forms", digest_config(cfg, "closed-forms"),
                     acc.samples, acc.max_res, cfg.tol.operator_identity, sw.ms());
}

inline CheckReport run_vacuum_actions(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "vacuum-actions");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 5; ++s) {
      const ModelParams p = smp.model(n, TransferCase::LowerUpper);
      const Complex q = p.bulk.q;
      const Complex u = smp.spectral(p.bulk);
      const Complex cr = 1.0 / (q * u);
      const DoubleRowEntries d = build_double_row(u, p);
      const StateVector om = vacuum(n);
      acc.add(residual(d.A * om,
                       (k_minus(u, p.right) * lambda_vacuum(u, p.bulk)) * om));
      acc.add(residual(d.D * om, (fn_phi(cr, q) * k_minus(cr, p.right) *
                                  lambda_vacuum(cr, p.bulk)) *
                                     om));
      acc.add((d.C * om).v.norm() / std::max(1.0, d.C.m.norm()));
    }
  return make_report("vacuum-actions", digest_config(cfg, "vacuum-actions"),
                     acc.samples, acc.max_res, cfg.tol.operator_identity, sw.ms());
}

inline CheckReport run_transfer_commute(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "transfer-commute");
  Acc acc;
  const TransferCase cases[4] = {TransferCase::Diag, TransferCase::UpperUpper,
                                 TransferCase::LowerUpper,
                                 TransferCase::GeneralTriangular};
  for (int n = 1; n <= 3; ++n)
    for (const TransferCase c : cases)
      for (int s = 0; s < 3; ++s) {
        const ModelParams p = smp.model(n, c);
        const std::vector<Complex> uv = smp.spectral_family(2, p.bulk);
        const QOperator tu = build_transfer(uv[0], p, c);
        const QOperator tv = build_transfer(uv[1], p, c);
        acc.add(residual(tu * tv, tv * tu));
      }
  return make_report("transfer-commute",
                     digest_config(cfg, "transfer-commute"), acc.samples,
                     acc.max_res, cfg.tol.operator_identity, sw.ms());
}

inline CheckReport run_tupm_trlpd(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "tupm-trlpd");
  Acc acc;
  for (int n = 1; n <= 3; ++n)
    for (int s = 0; s < 4; ++s) {
      {
        const ModelParams p = smp.model(n, TransferCase::UpperUpper);
        const Complex q = p.bulk.q;
        const Complex u = smp.spectral(p.bulk);
        const ModifiedUpper mo = build_modified_ops_upper(u, 0, p);
        const QOperator rewrite =
            fn_phi(u, q) * k_plus(u, p.left) * mo.Atil +
            k_plus(1.0 / (q * u), p.left) * mo.Dtil;
        acc.add(residual(rewrite, build_transfer(u, p, TransferCase::UpperUpper)));
      }
      {
        const ModelParams p = smp.model(n, TransferCase::LowerUpper);
        const Complex q = p.bulk.q;
        const Complex u = smp.spectral(p.bulk);
        const ModifiedLower mo = build_modified_ops_lower(u, 0, p);
        const QOperator rewrite =
            fn_phi(u, q) * k_plus(u, p.left) * mo.Abar +
            k_plus(1.0 / (q * u), p.left) * mo.Dbar;
        acc.add(residual(rewrite, build_transfer(u, p, TransferCase::LowerUpper)));
      }
    }
  return make_report("tupm-trlpd", digest_config(cfg, "tupm-trlpd"),
                     acc.samples, acc.max_res, cfg.tol.operator_identity, sw.ms());
}

// ------------------------------------------------------- bethe functions ---

inline CheckReport run_fn_crossing(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "fn-crossing");
  Acc acc;
  int done = 0;
  while (done < 50) {
    const Complex q = smp.generic_q(2);
    const Complex u = smp.annulus(), v = smp.annulus();
    if (!Sampler::admissible_pair(u, v, q)) continue;
    if (std::abs(fn_b(q * u * u, q)) < kGenericMargin ||
        std::abs(fn_b(q * v * v, q)) < kGenericMargin)
      continue;
    ++done;
    const Complex vc = 1.0 / (q * v), uc = 1.0 / (q * u);
    acc.add(sres(fn_f(u, vc, q), fn_f(u, v, q)));
    acc.add(sres(fn_h(u, vc, q), fn_h(u, v, q)));
    acc.add(sres(fn_m(u, vc, q), fn_m(u, v, q)));
    acc.add(sres(fn_f(uc, v, q), fn_h(u, v, q)));
  }
  return make_report("fn-crossing", digest_config(cfg, "fn-crossing"),
                     acc.samples, acc.max_res, 1e-11, sw.ms());
}

inline CheckReport run_lambda_symmetry(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "lambda-symmetry");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 3; ++s) {
      const ModelParams p = smp.model(n, TransferCase::LowerUpper);
      const Complex q = p.bulk.q;
      std::vector<Complex> pts = smp.spectral_family(n + 1, p.bulk);
      const Complex u = pts.back();
      pts.pop_back();
      const std::vector<Complex> roots = pts;
      const RootSet rs{n, roots, TransferCase::LowerUpper};
      const Complex ld = lambda_d(u, roots, p);
      const Complex lg = lambda_g(u, roots, p);
      const Complex lt = lambda_total(u, rs, p);
      // root permutations
      std::vector<Complex> perm = roots;
      std::shuffle(perm.begin(), perm.end(), smp.engine());
      const RootSet rsp{n, perm, TransferCase::LowerUpper};
      acc.add(sres(ld, lambda_d(u, perm, p)));
      acc.add(sres(lg, lambda_g(u, perm, p)));
      acc.add(sres(lt, lambda_total(u, rsp, p)));
      // crossing image of the probe point
      const Complex uc = 1.0 / (q * u);
      acc.add(sres(ld, lambda_d(uc, roots, p)));
      acc.add(sres(lg, lambda_g(uc, roots, p)));
      acc.add(sres(lt, lambda_total(uc, rs, p)));
      // crossing image of one root
      std::vector<Complex> rc = roots;
      const std::size_t j = static_cast<std::size_t>(smp.integer(0, n - 1));
      rc[j] = 1.0 / (q * rc[j]);
      const RootSet rsc{n, rc, TransferCase::LowerUpper};
      acc.add(sres(ld, lambda_d(u, rc, p)));
      acc.add(sres(lg, lambda_g(u, rc, p)));
      acc.add(sres(lt, lambda_total(u, rsc, p)));
    }
  return make_report("lambda-symmetry", digest_config(cfg, "lambda-symmetry"),
                     acc.samples, acc.max_res, 1e-10, sw.ms());
}

inline CheckReport run_e_limits(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "e-limits");
  Acc acc;
  for (int n = 1; n <= 3; ++n)
    for (int s = 0; s < 3; ++s) {
      const ModelParams p = smp.model(n, TransferCase::LowerUpper);
      const Complex q = p.bulk.q;
      const std::vector<Complex> roots = smp.spectral_family(n, p.bulk);
      const int i = smp.integer(0, n - 1);
      const Complex ui = roots[static_cast<std::size_t>(i)];
      // E_branch(u_i) = lim_{u->u_i} b(u_i/u) Lambda_branch(u); three-level
      // Richardson in the relative offset eps removes the O(eps) and O(eps^2)
      // errors of the weighted evaluation.
      const auto weighted = [&](const auto& lam, double eps) {
        const Complex u = ui * (1.0 + eps);
        return fn_b(ui / u, q) * lam(u);
      };
      const auto richardson = [&](const auto& lam) {
        const double e0 = 1e-4;
        const Complex l1 = weighted(lam, e0);
        const Complex l2 = weighted(lam, e0 / 2.0);
        const Complex l3 = weighted(lam, e0 / 4.0);
        const Complex r1 = 2.0 * l2 - l1;
        const Complex r2 = 2.0 * l3 - l2;
        return (4.0 * r2 - r1) / 3.0;
      };
      const auto lamd = [&](const Complex& u) { return lambda_d(u, roots, p); };
      const auto lamg = [&](const Complex& u) { return lambda_g(u, roots, p); };
      acc.add(sres(richardson(lamd), bethe_residual_d(i, roots, p)));
      acc.add(sres(richardson(lamg), bethe_residual_g(i, roots, p)));
    }
  return make_report("e-limits", digest_config(cfg, "e-limits"), acc.samples,
                     acc.max_res, cfg.tol.finite_difference, sw.ms());
}

inline CheckReport run_onshell_eigenvalue(const RunConfig& cfg) {
  Stopwatch sw;
  Acc acc;
  Sampler smp(cfg.seed, "onshell-eigenvalue");
  SolverOptions opt;
  opt.seed = cfg.seed;
  for (int n = 1; n <= 2; ++n) {
    const ModelParams p = cfg.model_for(n, TransferCase::LowerUpper);
    const SolveOutcome so = solve_bethe(p, TransferCase::LowerUpper, n, opt);
    int used = 0;
    for (const BetheSolution& sol : so.solutions) {
      if (++used > 4) break;
      const Complex u0 = probe_point(smp, p.bulk, sol.roots.roots);
      const Complex lam = lambda_total(u0, sol.roots, p);
      const std::vector<Complex> eigs =
          spectrum(build_transfer(u0, p, TransferCase::LowerUpper));
      acc.add(match_eigenvalue(lam, eigs).distance);
    }
  }
  {  // diagonal case, every magnon sector
    const int n = 2;
    const ModelParams p = cfg.model_for(n, TransferCase::Diag);
    for (int m = 0; m <= n; ++m) {
      const SolveOutcome so = solve_bethe(p, TransferCase::Diag, m, opt);
      int used = 0;
      for (const BetheSolution& sol : so.solutions) {
        if (++used > 4) break;
        const Complex u0 = probe_point(smp, p.bulk, sol.roots.roots);
        const Complex lam = lambda_total(u0, sol.roots, p);
        const std::vector<Complex> eigs =
            spectrum(build_transfer(u0, p, TransferCase::Diag));
        acc.add(match_eigenvalue(lam, eigs).distance);
      }
    }
  }
  return make_report("onshell-eigenvalue",
                     digest_config(cfg, "onshell-eigenvalue"), acc.samples,
                     acc.max_res, 1e-8, sw.ms());
}

// ---------------------------------------------------------- state builder ---

inline CheckReport run_bv_symmetry(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "bv-symmetry");
  Acc acc;
  for (int n = 2; n <= 3; ++n)
    for (int s = 0; s < 3; ++s) {
      {
        const ModelParams p = smp.model(n, TransferCase::Diag);
        const std::vector<Complex> roots = smp.spectral_family(n, p.bulk);
        std::vector<Complex> perm = roots;
        std::shuffle(perm.begin(), perm.end(), smp.engine());
        acc.add(residual(build_phi_d(roots, p).state, build_phi_d(perm, p).state));
      }
      {
        const ModelParams p = smp.model(n, TransferCase::UpperUpper);
        const std::vector<Complex> roots = smp.spectral_family(n, p.bulk);
        std::vector<Complex> perm = roots;
        std::shuffle(perm.begin(), perm.end(), smp.engine());
        acc.add(residual(build_phi_up(roots, p).state, build_phi_up(perm, p).state));
      }
      {
        const ModelParams p = smp.model(n, TransferCase::LowerUpper);
        const std::vector<Complex> roots = smp.spectral_family(n, p.bulk);
        std::vector<Complex> perm = roots;
        std::shuffle(perm.begin(), perm.end(), smp.engine());
        acc.add(residual(build_phi_lo_up(roots, p).state,
                         build_phi_lo_up(perm, p).state));
      }
    }
  return make_report("bv-symmetry", digest_config(cfg, "bv-symmetry"),
                     acc.samples, acc.max_res, 1e-10, sw.ms());
}

inline CheckReport run_nilpotency_chain(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "nilpotency-chain");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 3; ++s) {
      const BulkParams pb = smp.bulk(n);
      const std::vector<Complex> pts = smp.spectral_family(n + 1, pb);
      StateVector state = vacuum(n);
      for (int i = 0; i < n; ++i)
        state = build_monodromy(pts[static_cast<std::size_t>(i)], pb).l12 * state;
      const Complex z =
          izergin_z(std::vector<Complex>(pts.begin(), pts.end() - 1), pb);
      acc.add(residual(state, z * covacuum(n)));
      const StateVector dead = build_monodromy(pts.back(), pb).l12 * state;
      acc.add(dead.v.norm());  // structural zero: one flip past the lowest sector
    }
  return make_report("nilpotency-chain",
                     digest_config(cfg, "nilpotency-chain"), acc.samples,
                     acc.max_res, 1e-10, sw.ms());
}

inline CheckReport run_izergin_brute(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "izergin-brute");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 3; ++s) {
      const BulkParams pb = smp.bulk(n);
      const std::vector<Complex> us = smp.spectral_family(n, pb);
      StateVector state = vacuum(n);
      for (const Complex& u : us) state = build_monodromy(u, pb).l12 * state;
      acc.add(sres(state.v(dim_of(n) - 1), izergin_z(us, pb)));
    }
  return make_report("izergin-brute", digest_config(cfg, "izergin-brute"),
                     acc.samples, acc.max_res, 1e-10, sw.ms());
}

inline CheckReport run_zd_brute(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "zd-brute");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 3; ++s) {
      const ModelParams p = smp.model(n, TransferCase::Diag);
      const std::vector<Complex> us = smp.spectral_family(n, p.bulk);
      acc.add(sres(scalar_product_sup({}, us, p), zd_partition(us, p)));
    }
  return make_report("zd-brute", digest_config(cfg, "zd-brute"), acc.samples,
                     acc.max_res, 1e-9, sw.ms());
}

inline CheckReport run_offshell_diag(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "offshell-diag");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= n; ++m)
      for (int s = 0; s < 2; ++s) {
        const ModelParams p = smp.model(n, TransferCase::Diag);
        const Complex q = p.bulk.q;
        std::vector<Complex> pts = smp.spectral_family(m + 1, p.bulk);
        const Complex u = pts.back();
        pts.pop_back();
        const std::vector<Complex> roots = pts;
        const BetheVector phi = build_phi_d(roots, p);
        StateVector rhs = lambda_d(u, roots, p) * phi.state;
        for (std::size_t i = 0; i < roots.size(); ++i)
          rhs = rhs + (fn_F(u, roots[i], q) * bethe_residual_d(static_cast<int>(i), roots, p)) *
                          build_phi_d(replace_root(roots, i, u), p).state;
        const StateVector lhs = build_transfer(u, p, TransferCase::Diag) * phi.state;
        acc.add(residual(lhs, rhs));
      }
  return make_report("offshell-diag", digest_config(cfg, "offshell-diag"),
                     acc.samples, acc.max_res, 1e-9, sw.ms());
}

inline CheckReport run_offshell_upper(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "offshell-upper");
  Acc acc;
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= n; ++m)
      for (int s = 0; s < 2; ++s) {
        const ModelParams p = smp.model(n, TransferCase::UpperUpper);
        const Complex q = p.bulk.q;
        std::vector<Complex> pts = smp.spectral_family(m + 1, p.bulk);
        const Complex u = pts.back();
        pts.pop_back();
        const std::vector<Complex> roots = pts;
        const BetheVector phi = build_phi_up(roots, p);
        StateVector rhs = lambda_d(u, roots, p) * phi.state;
        for (std::size_t i = 0; i < roots.size(); ++i)
          rhs = rhs + (fn_F(u, roots[i], q) * bethe_residual_d(static_cast<int>(i), roots, p)) *
                          build_phi_up(replace_root(roots, i, u), p).state;
        const StateVector lhs =
            build_transfer(u, p, TransferCase::UpperUpper) * phi.state;
        acc.add(residual(lhs, rhs));
      }
  return make_report("offshell-upper", digest_config(cfg, "offshell-upper"),
                     acc.samples, acc.max_res, 1e-9, sw.ms());
}

inline CheckReport run_conjecture(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "conjecture");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 2; ++s) {
      const ModelParams p = smp.model(n, TransferCase::LowerUpper);
      const Complex q = p.bulk.q;
      std::vector<Complex> pts = smp.spectral_family(n + 1, p.bulk);
      const Complex u = pts.back();
      pts.pop_back();
      const std::vector<Complex> roots = pts;
      const BetheVector phi = build_phi_lo_up(roots, p);
      const StateVector lhs = (p.left.kappa * fn_c(q * u)) *
                              (build_double_row(u, p).B * phi.state);
      StateVector rhs = lambda_g(u, roots, p) * phi.state;
      for (std::size_t i = 0; i < roots.size(); ++i)
        rhs = rhs + (fn_F(u, roots[i], q) * bethe_residual_g(static_cast<int>(i), roots, p)) *
                        build_phi_lo_up(replace_root(roots, i, u), p).state;
      acc.add(residual(lhs, rhs));
    }
  return make_report("conjecture", digest_config(cfg, "conjecture"),
                     acc.samples, acc.max_res, 1e-9, sw.ms());
}

inline CheckReport run_main_result(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "main-result");
  Acc acc;
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < 2; ++s) {
      const ModelParams p = smp.model(n, TransferCase::LowerUpper);
      const Complex q = p.bulk.q;
      std::vector<Complex> pts = smp.spectral_family(n + 1, p.bulk);
      const Complex u = pts.back();
      pts.pop_back();
      const std::vector<Complex> roots = pts;
      const RootSet rs{n, roots, TransferCase::LowerUpper};
      const BetheVector phi = build_phi_lo_up(roots, p);
      const StateVector lhs =
          build_transfer(u, p, TransferCase::LowerUpper) * phi.state;
      // full form: total eigenvalue branch plus total unwanted terms
      StateVector rhs = lambda_total(u, rs, p) * phi.state;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        const int ii = static_cast<int>(i);
        const Complex etot =
            bethe_residual_d(ii, roots, p) + bethe_residual_g(ii, roots, p);
        rhs = rhs + (fn_F(u, roots[i], q) * etot) *
                        build_phi_lo_up(replace_root(roots, i, u), p).state;
      }
      acc.add(residual(lhs, rhs));
      // equivalent split form: diagonal branch plus the kappa B(u) action
      StateVector rhs2 = lambda_d(u, roots, p) * phi.state +
                         (p.left.kappa * fn_c(q * u)) *
                             (build_double_row(u, p).B * phi.state);
      for (std::size_t i = 0; i < roots.size(); ++i)
        rhs2 = rhs2 + (fn_F(u, roots[i], q) *
                       bethe_residual_d(static_cast<int>(i), roots, p)) *
                          build_phi_lo_up(replace_root(roots, i, u), p).state;
      acc.add(residual(lhs, rhs2));
    }
  return make_report("main-result", digest_config(cfg, "main-result"),
                     acc.samples, acc.max_res, 1e-9, sw.ms());
}

inline CheckReport run_scalar_products(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "scalar-products");
  Acc acc;
  for (int n = 1; n <= 3; ++n)
    for (int s = 0; s < 3; ++s) {
      {  // short products vanish; full products match the determinant
        const ModelParams p = smp.model(n, TransferCase::Diag);
        const std::vector<Complex> pts = smp.spectral_family(n, p.bulk);
        if (n >= 1) {
          const std::vector<Complex> shorter(pts.begin(), pts.end() - 1);
          acc.add(std::abs(scalar_product_sup({}, shorter, p)));
        }
        acc.add(sres(scalar_product_sup({}, pts, p), zd_partition(pts, p)));
      }
      {  // one-extra-point recursion of the lower-upper case
        const ModelParams p = smp.model(n, TransferCase::LowerUpper);
        const Complex q = p.bulk.q;
        std::vector<Complex> pts = smp.spectral_family(n + 1, p.bulk);
        const Complex w = pts.back();
        pts.pop_back();
        const std::vector<Complex> us = pts;
        const Complex lhs = scalar_product_sup({w}, us, p);
        Complex rhs = lambda_g(w, us, p) * scalar_product_sup({}, us, p);
        for (std::size_t i = 0; i < us.size(); ++i) {
          std::vector<Complex> with_w = us;
          with_w[i] = w;
          rhs += fn_F(w, us[i], q) * bethe_residual_g(static_cast<int>(i), us, p) *
                 scalar_product_sup({}, with_w, p);
        }
        rhs /= p.left.kappa * fn_c(q * w);
        acc.add(sres(lhs, rhs));
      }
    }
  return make_report("scalar-products", digest_config(cfg, "scalar-products"),
                     acc.samples, acc.max_res, 1e-9, sw.ms());
}

inline CheckReport run_bvn_explicit(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "bvn-explicit");
  Acc acc;
  for (int s = 0; s < 5; ++s) {
    {
      const ModelParams p = smp.model(1, TransferCase::LowerUpper);
      const Complex u1 = smp.spectral(p.bulk);
      acc.add(residual(build_phi_lo_up({u1}, p).state, explicit_phi_lo_up_n1(u1, p)));
    }
    {
      const ModelParams p = smp.model(2, TransferCase::LowerUpper);
      const std::vector<Complex> us = smp.spectral_family(2, p.bulk);
      acc.add(residual(build_phi_lo_up(us, p).state,
                       explicit_phi_lo_up_n2(us[0], us[1], p)));
    }
  }
  return make_report("bvn-explicit", digest_config(cfg, "bvn-explicit"),
                     acc.samples, acc.max_res, 1e-9, sw.ms());
}

inline CheckReport run_project_basis(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "project-basis");
  Acc acc;
  for (int n = 2; n <= 3; ++n)
    for (int s = 0; s < 3; ++s) {
      const ModelParams p = smp.model(n, TransferCase::LowerUpper);
      const std::vector<Complex> all = smp.spectral_family(2 * n, p.bulk);
      const std::vector<Complex> roots(all.begin(), all.begin() + n);
      const std::vector<Complex> basis_pts(all.begin() + n, all.end());
      const StateVector state = build_phi_lo_up(roots, p).state;
      const std::vector<Complex> coeff = project_basis(state, basis_pts, p);
      std::vector<QOperator> l12s;
      for (const Complex& w : basis_pts)
        l12s.push_back(build_monodromy(w, p.bulk).l12);
      StateVector recon(n, Vec::Zero(dim_of(n)));
      for (long mask = 0; mask < dim_of(n); ++mask) {
        StateVector b = vacuum(n);
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1) b = l12s[static_cast<std::size_t>(i)] * b;
        recon = recon + coeff[static_cast<std::size_t>(mask)] * b;
      }
      acc.add(residual(state, recon));
    }
  return make_report("project-basis", digest_config(cfg, "project-basis"),
                     acc.samples, acc.max_res, 1e-9, sw.ms());
}

// -------------------------------------------------------------- spectral ---

inline CheckReport run_hamiltonian_suite(const RunConfig& cfg) {
  Stopwatch sw;
  Sampler smp(cfg.seed, "hamiltonian");
  Acc acc;
  for (int n = 1; n <= 5; ++n)
    for (const TransferCase c :
         {TransferCase::Diag, TransferCase::GeneralTriangular}) {
      ModelParams p = smp.model(n, c);
      p.bulk.v.assign(static_cast<std::size_t>(n), Complex(1.0, 0.0));
      const QOperator from_t = build_hamiltonian_from_transfer(p);
      const QOperator direct = build_hamiltonian_direct(p);
      const double scale =
          std::max(1.0, direct.m.cwiseAbs().maxCoeff());
      acc.add((from_t.m - direct.m).cwiseAbs().maxCoeff() / scale);
    }
  return make_report("hamiltonian", digest_config(cfg, "hamiltonian"),
                     acc.samples, acc.max_res, cfg.tol.finite_difference, sw.ms());
}

inline CheckReport run_solve_closure(const RunConfig& cfg) {
  Stopwatch sw;
  Acc acc;
  Sampler smp(cfg.seed, "solve-closure");
  SolverOptions opt;
  opt.seed = cfg.seed;
  for (int n = 1; n <= 2; ++n) {
    const ModelParams p = cfg.model_for(n, TransferCase::LowerUpper);
    const SolveOutcome so = solve_bethe(p, TransferCase::LowerUpper, n, opt);
    if (so.solutions.empty()) acc.add(1.0);  // no on-shell set found: fail
    int used = 0;
    for (const BetheSolution& sol : so.solutions) {
      if (++used > 4) break;
      for (int i = 0; i < n; ++i)
        acc.add(std::abs(bethe_residual_total(i, sol.roots, p)));
      const BetheVector phi = build_phi_lo_up(sol.roots.roots, p);
      for (int probe = 0; probe < 3; ++probe) {
        const Complex u0 = probe_point(smp, p.bulk, sol.roots.roots);
        const Complex lam = lambda_total(u0, sol.roots, p);
        const QOperator t = build_transfer(u0, p, TransferCase::LowerUpper);
        acc.add(residual(t * phi.state, lam * phi.state));
        acc.add(match_eigenvalue(lam, spectrum(t)).distance);
      }
    }
  }
  {  // diagonal case: all magnon sectors at n = 3
    const int n = 3;
    const ModelParams p = cfg.model_for(n, TransferCase::Diag);
    for (int m = 0; m <= n; ++m) {
      const SolveOutcome so = solve_bethe(p, TransferCase::Diag, m, opt);
      if (so.solutions.empty()) acc.add(1.0);
      int used = 0;
      for (const BetheSolution& sol : so.solutions) {
        if (++used > 4) break;
        const Complex u0 = probe_point(smp, p.bulk, sol.roots.roots);
        const Complex lam = lambda_d(u0, sol.roots.roots, p);
        acc.add(match_eigenvalue(
                    lam, spectrum(build_transfer(u0, p, TransferCase::Diag)))
                    .distance);
      }
    }
  }
  return make_report("solve-closure", digest_config(cfg, "solve-closure"),
                     acc.samples, acc.max_res, 1e-8, sw.ms());
}

// --------------------------------------------------------------- harness ---

std::vector<CheckReport> run_suites(const RunConfig& cfg,
                                    const std::vector<std::string>& ids);

inline CheckReport run_determinism(const RunConfig& cfg) {
  Stopwatch sw;
  RunConfig sub = cfg;
  sub.suites = {"fn-crossing", "iduwt", "ybe"};
  const std::string once =
      reports_to_json(run_suites(sub, sub.suites), true).dump();
  const std::string twice =
      reports_to_json(run_suites(sub, sub.suites), true).dump();
  const double res = (once == twice) ? 0.0 : 1.0;
  return make_report("determinism", digest_config(cfg, "determinism"), 2, res,
                     0.5, sw.ms());
}

const std::vector<Suite>& suite_registry();

inline CheckReport run_suite_coverage(const RunConfig& cfg) {
  Stopwatch sw;
  // one suite id per library invariant, grouped by layer
  static const std::vector<std::string> required = {
      // tensor kernel
      "embed-commute", "spectrum-triangular", "kron-mixed",
      // vertex model
      "ybe", "rll", "l-commutations", "izergin-symmetry", "lagrange",
      // boundary algebra
      "re-dre", "abcd-commutations", "iduwt", "m-shifted-upper",
      "nilpotency-diag",
      // eigenvalue functions
      "fn-crossing", "lambda-symmetry", "e-limits", "onshell-eigenvalue",
      // state builders
      "bv-symmetry", "nilpotency-chain", "offshell-diag", "offshell-upper",
      "conjecture", "main-result",
      // harness
      "determinism", "suite-coverage"};
  int missing = 0;
  for (const std::string& id : required) {
    bool found = false;
    for (const Suite& s : suite_registry())
      if (s.id == id) { found = true; break; }
    if (!found) ++missing;
  }
  // duplicate ids also violate coverage
  for (std::size_t i = 0; i < suite_registry().size(); ++i)
    for (std::size_t j = i + 1; j < suite_registry().size(); ++j)
      if (suite_registry()[i].id == suite_registry()[j].id) ++missing;
  return make_report("suite-coverage", digest_config(cfg, "suite-coverage"),
                     static_cast<int>(required.size()),
                     static_cast<double>(missing), 0.5, sw.ms());
}

}  // namespace suite_detail

inline const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> reg = {
      {"embed-commute", "single-site embeddings at distinct sites commute",
       suite_detail::run_embed_commute},
      {"spectrum-triangular", "eigenvalues of a triangular matrix are its diagonal",
       suite_detail::run_spectrum_triangular},
      {"kron-mixed", "Kronecker product is multiplicative over matrix products",
       suite_detail::run_kron_mixed},
      {"ybe", "R-matrix satisfies the Yang-Baxter equation",
       suite_detail::run_ybe},
      {"rll", "monodromy satisfies the RLL exchange relation",
       suite_detail::run_rll},
      {"l-commutations", "monodromy block exchange relations",
       suite_detail::run_l_commutations},
      {"izergin-symmetry", "Izergin determinant is symmetric in both point sets",
       suite_detail::run_izergin_symmetry},
      {"lagrange", "two-site l12 is a two-point Lagrange combination",
       suite_detail::run_lagrange},
      {"qdet", "quantum determinant is the scalar product formula; inverse relation",
       suite_detail::run_qdet},
      {"comonodromy", "reversed product equals the crossing image of the monodromy",
       suite_detail::run_comonodromy},
      {"re-dre", "boundary matrices satisfy the (dual) reflection equation",
       suite_detail::run_re_dre},
      {"abcd-commutations", "sixteen double-row exchange relations",
       suite_detail::run_abcd_commutations},
      {"iduwt", "scalar three-term boundary identities for both k functions",
       suite_detail::run_iduwt},
      {"m-shifted-upper", "shifted operator exchange relations, upper case",
       suite_detail::run_m_shifted_upper},
      {"m-shifted-lower", "shifted operator exchange relations, lower case",
       suite_detail::run_m_shifted_lower},
      {"nilpotency-diag", "diagonal-boundary creation operator kills the covacuum",
       suite_detail::run_nilpotency_diag},
      {"closed-forms", "double-row entries match their closed one-row expressions",
       suite_detail::run_closed_forms},
      {"vacuum-actions", "diagonal entries act on the vacuum by scalars; C kills it",
       suite_detail::run_vacuum_actions},
      {"transfer-commute", "transfer matrices commute at distinct points",
       suite_detail::run_transfer_commute},
      {"tupm-trlpd", "transfer rewrites in shifted operators match",
       suite_detail::run_tupm_trlpd},
      {"fn-crossing", "exchange functions are crossing invariant",
       suite_detail::run_fn_crossing},
      {"lambda-symmetry", "eigenvalue functions are symmetric and crossing invariant",
       suite_detail::run_lambda_symmetry},
      {"e-limits", "equation residuals are weighted limits of the eigenvalue",
       suite_detail::run_e_limits},
      {"onshell-eigenvalue", "on-shell eigenvalue function matches exact spectrum",
       suite_detail::run_onshell_eigenvalue},
      {"bv-symmetry", "Bethe vectors are symmetric in their roots",
       suite_detail::run_bv_symmetry},
      {"nilpotency-chain", "creation chain terminates with the Izergin coefficient",
       suite_detail::run_nilpotency_chain},
      {"izergin-brute", "Izergin determinant matches the brute-force coefficient",
       suite_detail::run_izergin_brute},
      {"zd-brute", "reflecting-end determinant matches the brute-force product",
       suite_detail::run_zd_brute},
      {"offshell-diag", "off-shell action, diagonal case",
       suite_detail::run_offshell_diag},
      {"offshell-upper", "off-shell action, upper-upper case",
       suite_detail::run_offshell_upper},
      {"conjecture", "off-shell action of the scaled creation operator",
       suite_detail::run_conjecture},
      {"main-result", "full off-shell equation of the lower-upper transfer",
       suite_detail::run_main_result},
      {"scalar-products", "scalar product laws and the one-extra-point recursion",
       suite_detail::run_scalar_products},
      {"bvn-explicit", "explicit one- and two-site vectors match the builder",
       suite_detail::run_bvn_explicit},
      {"project-basis", "states reconstruct from the creation-monomial basis",
       suite_detail::run_project_basis},
      {"hamiltonian", "transfer derivative reproduces the dense Hamiltonian",
       suite_detail::run_hamiltonian_suite},
      {"solve-closure", "solver roots are on-shell eigenvectors with matched spectrum",
       suite_detail::run_solve_closure},
      {"determinism", "identical config and seed give byte-identical reports",
       suite_detail::run_determinism},
      {"suite-coverage", "every library invariant has a registered suite",
       suite_detail::run_suite_coverage},
  };
  return reg;
}

namespace suite_detail {
inline const std::vector<Suite>& suite_registry() { return ::bethe::suite_registry(); }
}  // namespace suite_detail

inline const Suite* find_suite(const std::string& id) {
  for (const Suite& s : suite_registry())
    if (s.id == id) return &s;
  return nullptr;
}

inline std::vector<std::string> all_suite_ids() {
  std::vector<std::string> ids;
  for (const Suite& s : suite_registry()) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Runs the requested suites (all when `ids` is empty), assembling reports in
// suite-id order.
inline std::vector<CheckReport> run_suites(const RunConfig& cfg,
                                           const std::vector<std::string>& ids) {
  std::vector<std::string> wanted = ids.empty() ? all_suite_ids() : ids;
  std::sort(wanted.begin(), wanted.end());
  std::vector<CheckReport> out;
  for (const std::string& id : wanted) {
    const Suite* s = find_suite(id);
    if (!s) throw std::runtime_error("unknown suite id: " + id);
    out.push_back(s->run(cfg));
  }
  return out;
}

namespace suite_detail {
inline std::vector<CheckReport> run_suites(const RunConfig& cfg,
                                           const std::vector<std::string>& ids) {
  return ::bethe::run_suites(cfg, ids);
}
}  // namespace suite_detail

}  // namespace bethe
