#pragma once

// Machine-readable check reports, run configuration, and digests.
// Report JSON uses a fixed field order so identical inputs give identical
// bytes; the wall-clock field can be masked for determinism comparisons.

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bethe/params.hpp"
#include "bethe/sampling.hpp"
#include "bethe/types.hpp"

namespace bethe {

using ojson = nlohmann::ordered_json;

struct CheckReport {
  std::string check_id;
  std::string params_digest;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::int64_t elapsed_ms = 0;
};

inline CheckReport make_report(std::string check_id, std::string digest,
                               int samples, double max_residual,
                               double tolerance, std::int64_t elapsed_ms) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.params_digest = std::move(digest);
  r.samples = samples;
  r.max_residual = max_residual;
  r.tolerance = tolerance;
  r.passed = max_residual < tolerance;
  r.elapsed_ms = elapsed_ms;
  return r;
}

inline ojson report_to_json(const CheckReport& r, bool mask_elapsed = false) {
  ojson j;
  j["check_id"] = r.check_id;
  j["params_digest"] = r.params_digest;
  j["samples"] = r.samples;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["elapsed_ms"] = mask_elapsed ? 0 : r.elapsed_ms;
  return j;
}

inline ojson reports_to_json(const std::vector<CheckReport>& rs,
                             bool mask_elapsed = false) {
  ojson arr = ojson::array();
  for (const CheckReport& r : rs) arr.push_back(report_to_json(r, mask_elapsed));
  return arr;
}

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

// Canonical parameter digest: every scalar printed with %.17g (lossless for
// doubles), concatenated in a fixed key order, hashed with 64-bit FNV-1a.
class DigestBuilder {
 public:
  DigestBuilder& add(std::string_view key, double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    s_.append(key).append("=").append(buf).append(";");
    return *this;
  }
  DigestBuilder& add(std::string_view key, const Complex& z) {
    add(key, z.real());
    return add(std::string(key) + ".i", z.imag());
  }
  DigestBuilder& add(std::string_view key, int x) {
    s_.append(key).append("=").append(std::to_string(x)).append(";");
    return *this;
  }
  DigestBuilder& add(std::string_view key, std::uint64_t x) {
    s_.append(key).append("=").append(std::to_string(x)).append(";");
    return *this;
  }
  DigestBuilder& add(std::string_view key, std::string_view x) {
    s_.append(key).append("=").append(x).append(";");
    return *this;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(s_)));
    return buf;
  }

 private:
  std::string s_;
};

inline std::string digest_model(const ModelParams& p, std::uint64_t seed,
                                TransferCase kase) {
  DigestBuilder d;
  d.add("seed", seed);
  d.add("case", to_string(kase));
  d.add("n", p.bulk.n);
  d.add("q", p.bulk.q);
  for (std::size_t i = 0; i < p.bulk.v.size(); ++i)
    d.add("v" + std::to_string(i), p.bulk.v[i]);
  d.add("nu_plus", p.right.nu_plus);
  d.add("nu_minus", p.right.nu_minus);
  d.add("tau", p.right.tau);
  d.add("tau_tilde", p.right.tau_tilde);
  d.add("eps_plus", p.left.eps_plus);
  d.add("eps_minus", p.left.eps_minus);
  d.add("kappa", p.left.kappa);
  d.add("kappa_tilde", p.left.kappa_tilde);
  return d.hex();
}

struct Tolerances {
  double operator_identity = 1e-10;  // dense operator identities
  double finite_difference = 1e-7;   // derivative/limit based checks
};

// The environment variable BETHE_SEGMENT_TOL (decimal string) overrides the
// built-in default operator tolerance; an explicit value in the config file
// overrides both.
inline Tolerances default_tolerances() {
  Tolerances t;
  if (const char* s = std::getenv("BETHE_SEGMENT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
      throw std::runtime_error("BETHE_SEGMENT_TOL: not a positive decimal string");
    t.operator_identity = v;
  }
  return t;
}

struct RunConfig {
  std::string note;
  std::uint64_t seed = 7;
  int n = 3;
  TransferCase kase = TransferCase::LowerUpper;
  Complex q;
  std::vector<Complex> v_pool;
  LeftBoundary left;
  RightBoundary right;
  std::vector<std::string> suites;  // empty: run all
  Tolerances tol;

  // Model data for a chain of n_sites sites, using the first n_sites pool
  // inhomogeneities.  Boundary switches follow the requested case.
  ModelParams model_for(int n_sites, TransferCase c) const {
    if (static_cast<int>(v_pool.size()) < n_sites)
      throw std::runtime_error("config: inhomogeneity pool smaller than n");
    ModelParams p;
    p.bulk.q = q;
    p.bulk.n = n_sites;
    p.bulk.v.assign(v_pool.begin(), v_pool.begin() + n_sites);
    p.bulk.validate();
    p.right = right;
    p.left = left;
    switch (c) {
      case TransferCase::Diag:
        p.right.tau = 0.0;
        p.left.kappa = 0.0;
        p.left.kappa_tilde = 0.0;
        break;
      case TransferCase::UpperUpper:
        p.left.kappa = 0.0;
        break;
      case TransferCase::LowerUpper:
        p.left.kappa_tilde = 0.0;
        break;
      case TransferCase::GeneralTriangular:
        break;
    }
    p.right.tau_tilde = 0.0;
    return p;
  }
  ModelParams model_for(int n_sites) const { return model_for(n_sites, kase); }
};

// Values chosen by the implementer to pass every admissibility rejection;
// they carry no provenance beyond that.  config/default.json holds the same
// numbers.
inline RunConfig default_config() {
  RunConfig c;
  c.note =
      "generic parameter set chosen by the implementer to pass all "
      "admissibility rejections; no other provenance";
  c.seed = 7;
  c.n = 3;
  c.kase = TransferCase::LowerUpper;
  c.q = Complex(1.3, 0.0) * std::exp(Complex(0.0, 0.21));
  c.v_pool = {Complex(1.12, 0.31),  Complex(0.84, -0.47), Complex(1.31, 0.09),
              Complex(0.66, 0.58),  Complex(1.05, -0.33), Complex(0.91, 0.71),
              Complex(1.44, -0.18), Complex(0.73, -0.62)};
  c.right.nu_plus = Complex(0.83, -0.41);
  c.right.nu_minus = Complex(1.21, 0.35);
  c.right.tau = Complex(0.57, 0.93);
  c.right.tau_tilde = Complex(0.0, 0.0);
  c.left.eps_plus = Complex(-0.62, 0.71);
  c.left.eps_minus = Complex(1.05, -0.22);
  c.left.kappa = Complex(0.44, -0.67);
  c.left.kappa_tilde = Complex(-0.31, 0.52);
  c.suites = {};
  c.tol = default_tolerances();
  return c;
}

namespace detail {

inline void reject_unknown_keys(const ojson& j,
                                const std::vector<std::string>& allowed,
                                const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const std::string& k : allowed)
      if (it.key() == k) { ok = true; break; }
    if (!ok)
      throw std::runtime_error("config: unknown key at " + path + "." + it.key());
  }
}

inline Complex read_complex(const ojson& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::runtime_error("config: " + path +
                             " must be a two-element array [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace detail

inline RunConfig config_from_json(const ojson& j) {
  RunConfig c = default_config();
  if (!j.is_object()) throw std::runtime_error("config: root must be an object");
  detail::reject_unknown_keys(
      j, {"note", "seed", "n", "case", "q", "v", "left", "right", "suites",
          "tolerances"},
      "$");
  if (j.contains("note")) c.note = j["note"].get<std::string>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("n")) c.n = j["n"].get<int>();
  if (j.contains("case")) c.kase = parse_case(j["case"].get<std::string>());
  if (j.contains("q")) c.q = detail::read_complex(j["q"], "$.q");
  if (j.contains("v")) {
    if (!j["v"].is_array())
      throw std::runtime_error("config: $.v must be an array");
    c.v_pool.clear();
    int i = 0;
    for (const auto& e : j["v"])
      c.v_pool.push_back(detail::read_complex(e, "$.v[" + std::to_string(i++) + "]"));
  }
  if (j.contains("left")) {
    const ojson& l = j["left"];
    detail::reject_unknown_keys(
        l, {"eps_plus", "eps_minus", "kappa", "kappa_tilde"}, "$.left");
    if (l.contains("eps_plus"))
      c.left.eps_plus = detail::read_complex(l["eps_plus"], "$.left.eps_plus");
    if (l.contains("eps_minus"))
      c.left.eps_minus = detail::read_complex(l["eps_minus"], "$.left.eps_minus");
    if (l.contains("kappa"))
      c.left.kappa = detail::read_complex(l["kappa"], "$.left.kappa");
    if (l.contains("kappa_tilde"))
      c.left.kappa_tilde =
          detail::read_complex(l["kappa_tilde"], "$.left.kappa_tilde");
  }
  if (j.contains("right")) {
    const ojson& r = j["right"];
    detail::reject_unknown_keys(
        r, {"nu_plus", "nu_minus", "tau", "tau_tilde"}, "$.right");
    if (r.contains("nu_plus"))
      c.right.nu_plus = detail::read_complex(r["nu_plus"], "$.right.nu_plus");
    if (r.contains("nu_minus"))
      c.right.nu_minus = detail::read_complex(r["nu_minus"], "$.right.nu_minus");
    if (r.contains("tau"))
      c.right.tau = detail::read_complex(r["tau"], "$.right.tau");
    if (r.contains("tau_tilde"))
      c.right.tau_tilde = detail::read_complex(r["tau_tilde"], "$.right.tau_tilde");
  }
  if (j.contains("suites")) {
    if (!j["suites"].is_array())
      throw std::runtime_error("config: $.suites must be an array of strings");
    c.suites.clear();
    for (const auto& e : j["suites"]) c.suites.push_back(e.get<std::string>());
  }
  if (j.contains("tolerances")) {
    const ojson& t = j["tolerances"];
    detail::reject_unknown_keys(t, {"operator", "finite_difference"},
                                "$.tolerances");
    if (t.contains("operator"))
      c.tol.operator_identity = t["operator"].get<double>();
    if (t.contains("finite_difference"))
      c.tol.finite_difference = t["finite_difference"].get<double>();
  }
  return c;
}

inline ojson config_to_json(const RunConfig& c) {
  auto cpx = [](const Complex& z) { return ojson::array({z.real(), z.imag()}); };
  ojson j;
  j["note"] = c.note;
  j["seed"] = c.seed;
  j["n"] = c.n;
  j["case"] = to_string(c.kase);
  j["q"] = cpx(c.q);
  ojson vs = ojson::array();
  for (const Complex& v : c.v_pool) vs.push_back(cpx(v));
  j["v"] = vs;
  j["left"] = {{"eps_plus", cpx(c.left.eps_plus)},
               {"eps_minus", cpx(c.left.eps_minus)},
               {"kappa", cpx(c.left.kappa)},
               {"kappa_tilde", cpx(c.left.kappa_tilde)}};
  j["right"] = {{"nu_plus", cpx(c.right.nu_plus)},
                {"nu_minus", cpx(c.right.nu_minus)},
                {"tau", cpx(c.right.tau)},
                {"tau_tilde", cpx(c.right.tau_tilde)}};
  j["suites"] = c.suites;
  j["tolerances"] = {{"operator", c.tol.operator_identity},
                     {"finite_difference", c.tol.finite_difference}};
  return j;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  ojson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("config: parse error in " + path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace bethe
