#pragma once
// Scalar machinery: the rational functions b, c, phi, the boundary scalars
// k^-, k^+, and the exchange-coefficient family f, g, w, h, k, n, m, F, s, x,
// y, r, p, together with the two scalar identities relating them.  All
// arguments are multiplicative spectral parameters; the crossing image of u is
// 1/(q u).

#include "bethe/params.hpp"
#include "bethe/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace bethe {

inline Complex fn_b(const Complex& u, const Complex& q) {
  return (u - 1.0 / u) / (q - 1.0 / q);
}

inline Complex fn_c(const Complex& u) { return u * u - 1.0 / (u * u); }

// phi(u) = b(q^2 u^2) / b(q u^2)
inline Complex fn_phi(const Complex& u, const Complex& q) {
  return fn_b(q * q * u * u, q) / fn_b(q * u * u, q);
}

inline Complex crossed(const Complex& u, const Complex& q) { return 1.0 / (q * u); }

inline Complex k_minus(const Complex& u, const RightBoundary& r) {
  return r.nu_minus * u + r.nu_plus / u;
}
inline Complex k_plus(const Complex& u, const LeftBoundary& l) {
  return l.eps_plus * u + l.eps_minus / u;
}

// Exchange coefficients.
inline Complex fn_f(const Complex& u, const Complex& v, const Complex& q) {
  return fn_b(q * v / u, q) * fn_b(u * v, q) / (fn_b(v / u, q) * fn_b(q * u * v, q));
}
inline Complex fn_g(const Complex& u, const Complex& v, const Complex& q) {
  return fn_phi(1.0 / (q * v), q) / fn_b(u / v, q);
}
inline Complex fn_w(const Complex& u, const Complex& v, const Complex& q) {
  return -1.0 / fn_b(q * u * v, q);
}
inline Complex fn_h(const Complex& u, const Complex& v, const Complex& q) {
  return fn_b(q * q * u * v, q) * fn_b(q * u / v, q) / (fn_b(q * u * v, q) * fn_b(u / v, q));
}
inline Complex fn_k(const Complex& u, const Complex& v, const Complex& q) {
  return fn_phi(u, q) / fn_b(v / u, q);
}
inline Complex fn_n(const Complex& u, const Complex& v, const Complex& q) {
  return fn_phi(u, q) * fn_phi(1.0 / (q * v), q) / fn_b(q * u * v, q);
}
inline Complex fn_m(const Complex& u, const Complex& v, const Complex& q) {
  return 1.0 / (fn_b(u / v, q) * fn_b(q * u * v, q));
}
inline Complex fn_F(const Complex& u, const Complex& v, const Complex& q) {
  return fn_m(u, v, q) * fn_b(q * q * u * u, q) / fn_phi(v, q);
}
inline Complex fn_s(const Complex& u, const Complex& v, const Complex& q) {
  return fn_phi(1.0 / (q * u), q) / (fn_b(v / u, q) * fn_b(q * v * v, q));
}
inline Complex fn_x(const Complex& u, const Complex& v, const Complex& q) {
  return fn_phi(1.0 / (q * u), q) * fn_b(q * u / v, q) / (fn_b(u / v, q) * fn_b(q * u * v, q));
}
inline Complex fn_y(const Complex& u, const Complex& v, const Complex& q) {
  return -1.0 / (fn_b(q * v * v, q) * fn_b(q * u * v, q));
}
inline Complex fn_r(const Complex& u, const Complex& v, const Complex& q) {
  return fn_phi(1.0 / (q * u), q) / fn_b(v / u, q);
}
inline Complex fn_p(const Complex& u, const Complex& v, const Complex& q) {
  return fn_b(u * v, q) / (fn_b(u / v, q) * fn_b(q * u * v, q));
}

// Scalar identity residuals tying the coefficient family to a boundary scalar
// kf (either k^- or k^+): both vanish identically.
//   g(u,v) phi(u) kf(u) + n(u,v) kf(1/(qu)) - F(u,v) phi(1/(qv)) phi(v) kf(v)
//   k(u,v) kf(1/(qu)) + w(u,v) phi(u) kf(u) + F(u,v) phi(v) kf(1/(qv))
template <typename KFn>
inline Complex id_uwt1(const Complex& u, const Complex& v, const Complex& q, KFn kf) {
  return fn_g(u, v, q) * fn_phi(u, q) * kf(u) + fn_n(u, v, q) * kf(1.0 / (q * u)) -
         fn_F(u, v, q) * fn_phi(1.0 / (q * v), q) * fn_phi(v, q) * kf(v);
}
template <typename KFn>
inline Complex id_uwt2(const Complex& u, const Complex& v, const Complex& q, KFn kf) {
  return fn_k(u, v, q) * kf(1.0 / (q * u)) + fn_w(u, v, q) * fn_phi(u, q) * kf(u) +
         fn_F(u, v, q) * fn_phi(v, q) * kf(1.0 / (q * v));
}

// Checked evaluation by name, for the CLI and pole diagnostics.  Two-argument
// functions take args = {u, v}; one-argument take {u}.  Throws naming the
// vanishing denominator factor.
inline Complex eval_fn(const std::string& name, const std::vector<Complex>& args,
                       const ModelParams& p) {
  const Complex q = p.bulk.q;
  const double pole_tol = 1e-12;
  auto guard = [&](const Complex& z, const std::string& factor) {
    if (std::abs(z) < pole_tol)
      throw std::domain_error("eval_fn(" + name + "): pole, factor " + factor + " vanishes");
    return z;
  };
  auto need = [&](size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("eval_fn(" + name + "): expected " + std::to_string(k) +
                                  " argument(s)");
  };
  auto b = [&](const Complex& z) { return fn_b(z, q); };

  if (name == "b") { need(1); return b(args[0]); }
  if (name == "c") { need(1); return fn_c(args[0]); }
  if (name == "phi") {
    need(1);
    guard(b(q * args[0] * args[0]), "b(qu^2)");
    return fn_phi(args[0], q);
  }
  if (name == "kminus") { need(1); return k_minus(args[0], p.right); }
  if (name == "kplus") { need(1); return k_plus(args[0], p.left); }

  need(2);
  const Complex u = args[0], v = args[1];
  if (name == "f") {
    guard(b(v / u), "b(v/u)"); guard(b(q * u * v), "b(quv)");
    return fn_f(u, v, q);
  }
  if (name == "g") {
    guard(b(u / v), "b(u/v)"); guard(b(1.0 / (q * v * v)), "b(1/(qv^2))");
    return fn_g(u, v, q);
  }
  if (name == "w") { guard(b(q * u * v), "b(quv)"); return fn_w(u, v, q); }
  if (name == "h") {
    guard(b(q * u * v), "b(quv)"); guard(b(u / v), "b(u/v)");
    return fn_h(u, v, q);
  }
  if (name == "k") { guard(b(v / u), "b(v/u)"); return fn_k(u, v, q); }
  if (name == "n") { guard(b(q * u * v), "b(quv)"); return fn_n(u, v, q); }
  if (name == "m") {
    guard(b(u / v), "b(u/v)"); guard(b(q * u * v), "b(quv)");
    return fn_m(u, v, q);
  }
  if (name == "F") {
    guard(b(u / v), "b(u/v)"); guard(b(q * u * v), "b(quv)");
    guard(b(q * v * v), "b(qv^2)");
    return fn_F(u, v, q);
  }
  if (name == "s") {
    guard(b(v / u), "b(v/u)"); guard(b(q * v * v), "b(qv^2)");
    return fn_s(u, v, q);
  }
  if (name == "x") {
    guard(b(u / v), "b(u/v)"); guard(b(q * u * v), "b(quv)");
    return fn_x(u, v, q);
  }
  if (name == "y") {
    guard(b(q * v * v), "b(qv^2)"); guard(b(q * u * v), "b(quv)");
    return fn_y(u, v, q);
  }
  if (name == "r") { guard(b(v / u), "b(v/u)"); return fn_r(u, v, q); }
  if (name == "p") {
    guard(b(u / v), "b(u/v)"); guard(b(q * u * v), "b(quv)");
    return fn_p(u, v, q);
  }
  throw std::invalid_argument("eval_fn: unknown function '" + name + "'");
}

}  // namespace bethe
