#pragma once

// Seeded random draws of spectral points, bulk data, and boundary data.
// One global seed is split per suite by hashing the suite id, so suites are
// reproducible independently of execution order.

#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bethe/functions.hpp"
#include "bethe/params.hpp"
#include "bethe/types.hpp"

namespace bethe {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// Margin below which a b-factor counts as a pole collision and the draw is
// rejected.
inline constexpr double kGenericMargin = 1e-6;

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream)
      : rng_(seed ^ fnv1a64(stream)) {}

  // Uniform double in [0,1) from the top 53 bits of the engine output.
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  int integer(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Modulus uniform in [rlo, rhi], phase uniform.
  Complex annulus(double rlo = 0.5, double rhi = 2.0) {
    const double r = uniform(rlo, rhi);
    const double th = uniform(0.0, 2.0 * std::numbers::pi);
    return std::polar(r, th);
  }

  // A spectral point u is admissible against bulk data when no b-factor that
  // appears in a denominator of the double-row construction degenerates:
  // b(u/v_i), b(q u v_i), b(q u^2), and additionally c(u) (crossing map).
  static bool admissible_spectral(const Complex& u, const BulkParams& p,
                                  double margin = kGenericMargin) {
    const Complex q = p.q;
    if (std::abs(fn_b(q * u * u, q)) < margin) return false;
    if (std::abs(fn_c(u)) < margin) return false;
    for (const Complex& v : p.v) {
      if (std::abs(fn_b(u / v, q)) < margin) return false;
      if (std::abs(fn_b(q * u * v, q)) < margin) return false;
    }
    return true;
  }

  // Two spectral points collide when b(a/b) or b(q a b) degenerates (the
  // latter is the crossing image of the former).
  static bool admissible_pair(const Complex& a, const Complex& b,
                              const Complex& q,
                              double margin = kGenericMargin) {
    return std::abs(fn_b(a / b, q)) >= margin &&
           std::abs(fn_b(q * a * b, q)) >= margin;
  }

  Complex spectral(const BulkParams& p, int max_tries = 1024) {
    for (int t = 0; t < max_tries; ++t) {
      const Complex u = annulus();
      if (admissible_spectral(u, p)) return u;
    }
    throw std::runtime_error("sampling: no admissible spectral point found");
  }

  // A family of mutually generic spectral points.
  std::vector<Complex> spectral_family(int count, const BulkParams& p,
                                       int max_tries = 4096) {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < max_tries && static_cast<int>(out.size()) < count; ++t) {
      const Complex u = annulus();
      if (!admissible_spectral(u, p)) continue;
      bool ok = true;
      for (const Complex& w : out) {
        if (!admissible_pair(u, w, p.q)) { ok = false; break; }
      }
      if (ok) out.push_back(u);
    }
    if (static_cast<int>(out.size()) < count)
      throw std::runtime_error("sampling: spectral family incomplete");
    return out;
  }

  // Deformation parameter q away from low-order roots of unity (order up to
  // 2n+4) and from the degenerate points q = ±1.
  Complex generic_q(int n_sites, int max_tries = 1024) {
    for (int t = 0; t < max_tries; ++t) {
      const Complex q = annulus(0.8, 1.4);
      if (std::abs(q - 1.0) < 0.05 || std::abs(q + 1.0) < 0.05) continue;
      bool ok = true;
      Complex pw = 1.0;
      for (int k = 1; k <= 2 * n_sites + 4 && ok; ++k) {
        pw *= q;
        if (std::abs(pw - 1.0) < 1e-3) ok = false;
      }
      if (ok) return q;
    }
    throw std::runtime_error("sampling: no admissible q found");
  }

  // Inhomogeneities with v_i/v_j kept away from q^m, |m| <= 2.
  std::vector<Complex> inhomogeneities(const Complex& q, int n_sites,
                                       int max_tries = 4096) {
    std::vector<Complex> vs;
    vs.reserve(static_cast<std::size_t>(n_sites));
    for (int t = 0; t < max_tries && static_cast<int>(vs.size()) < n_sites; ++t) {
      const Complex v = annulus(0.6, 1.6);
      bool ok = true;
      for (const Complex& w : vs) {
        for (int m = -2; m <= 2 && ok; ++m) {
          if (std::abs(v / w - std::pow(q, m)) < 1e-4) ok = false;
          if (std::abs(w / v - std::pow(q, m)) < 1e-4) ok = false;
        }
        if (!ok) break;
      }
      if (ok) vs.push_back(v);
    }
    if (static_cast<int>(vs.size()) < n_sites)
      throw std::runtime_error("sampling: inhomogeneity draw incomplete");
    return vs;
  }

  BulkParams bulk(int n_sites) {
    BulkParams b;
    b.q = generic_q(n_sites);
    b.n = n_sites;
    b.v = inhomogeneities(b.q, n_sites);
    b.validate();
    return b;
  }

  // Boundary scalar bounded away from zero.
  Complex scalar() { return annulus(0.5, 2.0); }

  RightBoundary right_boundary(bool with_tau, int max_tries = 256) {
    for (int t = 0; t < max_tries; ++t) {
      RightBoundary r;
      r.nu_plus = scalar();
      r.nu_minus = scalar();
      r.tau = with_tau ? scalar() : Complex(0.0);
      r.tau_tilde = Complex(0.0);
      if (std::abs(r.nu_plus + r.nu_minus) > 0.05) return r;
    }
    throw std::runtime_error("sampling: right boundary draw failed");
  }

  LeftBoundary left_boundary(bool with_kappa, bool with_kappa_tilde,
                             int max_tries = 256) {
    for (int t = 0; t < max_tries; ++t) {
      LeftBoundary l;
      l.eps_plus = scalar();
      l.eps_minus = scalar();
      l.kappa = with_kappa ? scalar() : Complex(0.0);
      l.kappa_tilde = with_kappa_tilde ? scalar() : Complex(0.0);
      if (std::abs(l.eps_plus + l.eps_minus) > 0.05 &&
          std::abs(l.eps_minus) > 0.05)
        return l;
    }
    throw std::runtime_error("sampling: left boundary draw failed");
  }

  // Full parameter draw for a given transfer case.  tau_tilde is always zero
  // (triangular right boundary); the case decides which of tau, kappa,
  // kappa_tilde are switched on.
  ModelParams model(int n_sites, TransferCase kase) {
    ModelParams p;
    p.bulk = bulk(n_sites);
    switch (kase) {
      case TransferCase::Diag:
        p.right = right_boundary(false);
        p.left = left_boundary(false, false);
        break;
      case TransferCase::UpperUpper:
        p.right = right_boundary(true);
        p.left = left_boundary(false, true);
        break;
      case TransferCase::LowerUpper:
        p.right = right_boundary(true);
        p.left = left_boundary(true, false);
        break;
      case TransferCase::GeneralTriangular:
        p.right = right_boundary(true);
        p.left = left_boundary(true, true);
        break;
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bethe
