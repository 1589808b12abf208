#pragma once

// Numerical differential geometry on implicit surfaces F(x,y,z) = c: Gauss
// curvature from the bordered Hessian, geodesic integration with fixed-step
// RK4, planar-geodesic profiles, and the numeric cross-validation of the
// symbolic NVE.  Gradients and Hessians are formed symbolically and evaluated
// in double precision; constraint drift is left visible as the health metric.

#include <geogal/nve.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace gg {

using Vec3 = std::array<double, 3>;

struct SingularGradient : std::runtime_error {
  SingularGradient() : std::runtime_error("gradient vanishes at the queried point") {}
};

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

class ImplicitSurface {
 public:
  ImplicitSurface(Expr F, Rat level) : F_(std::move(F)), level_(std::move(level)) {
    const Var vars[3] = {Var::X, Var::Y, Var::Z};
    for (int i = 0; i < 3; ++i) grad_[i] = differentiate(F_, vars[i]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) hess_[i][j] = differentiate(grad_[i], vars[j]);
  }

  const Expr& F() const { return F_; }
  const Rat& level() const { return level_; }
  double level_d() const { return rat_to_double(level_); }

  double value(const Vec3& p) const { return eval_double(F_, p[0], p[1], p[2]); }
  Vec3 gradient(const Vec3& p) const {
    return {eval_double(grad_[0], p[0], p[1], p[2]), eval_double(grad_[1], p[0], p[1], p[2]),
            eval_double(grad_[2], p[0], p[1], p[2])};
  }
  std::array<std::array<double, 3>, 3> hessian(const Vec3& p) const {
    std::array<std::array<double, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h[i][j] = eval_double(hess_[i][j], p[0], p[1], p[2]);
    return h;
  }

 private:
  Expr F_;
  Rat level_;
  Expr grad_[3];
  Expr hess_[3][3];
};

namespace detail {

inline double det4(double m[4][4]) {
  // plain LU with partial pivoting
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r2 = c + 1; r2 < 4; ++r2)
      if (std::abs(m[r2][c]) > std::abs(m[piv][c])) piv = r2;
    if (m[piv][c] == 0) return 0.0;
    if (piv != c) {
      for (int k = 0; k < 4; ++k) std::swap(m[piv][k], m[c][k]);
      det = -det;
    }
    det *= m[c][c];
    for (int r2 = c + 1; r2 < 4; ++r2) {
      double f = m[r2][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r2][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace detail

// K = -det[[H, g],[g^T, 0]] / |g|^4
inline double gauss_curvature(const ImplicitSurface& S, const Vec3& p) {
  Vec3 g = S.gradient(p);
  double g2 = dot(g, g);
  if (g2 < 1e-24) throw SingularGradient();
  auto h = S.hessian(p);
  double m[4][4];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = h[i][j];
    m[i][3] = g[i];
    m[3][i] = g[i];
  }
  m[3][3] = 0.0;
  return -detail::det4(m) / (g2 * g2);
}

struct GeodesicState {
  Vec3 pos{};
  Vec3 vel{};
};

// acceleration = lambda * grad F with lambda = -(H v . v)/|grad F|^2
inline Vec3 geodesic_rhs(const ImplicitSurface& S, const GeodesicState& st) {
  Vec3 g = S.gradient(st.pos);
  double g2 = dot(g, g);
  if (g2 < 1e-24) throw SingularGradient();
  auto h = S.hessian(st.pos);
  Vec3 hv{};
  for (int i = 0; i < 3; ++i)
    hv[i] = h[i][0] * st.vel[0] + h[i][1] * st.vel[1] + h[i][2] * st.vel[2];
  double lambda = -dot(hv, st.vel) / g2;
  return {lambda * g[0], lambda * g[1], lambda * g[2]};
}

struct TrajectorySample {
  double s;
  Vec3 pos, vel;
  double f_drift;
  double speed_drift;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double max_f_drift = 0;
  double max_speed_drift = 0;
  bool fault = false;
  std::string fault_reason;

  void write_csv(std::ostream& os) const {
    os << "s,x,y,z,vx,vy,vz,F_drift,speed_drift\n";
    char buf[360];
    for (const auto& sm : samples) {
      std::snprintf(buf, sizeof buf,
                    "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", sm.s, sm.pos[0],
                    sm.pos[1], sm.pos[2], sm.vel[0], sm.vel[1], sm.vel[2], sm.f_drift,
                    sm.speed_drift);
      os << buf;
    }
  }
};

// Classical fixed-step RK4; no renormalization, drift stays observable.
inline Trajectory integrate_geodesic(const ImplicitSurface& S, const GeodesicState& ic,
                                     double length, double step) {
  if (step <= 0 || length <= 0) throw std::invalid_argument("integrate_geodesic: bad step/length");
  Trajectory out;
  GeodesicState st = ic;
  const double c = S.level_d();
  auto record = [&](double s) {
    double fd = std::abs(S.value(st.pos) - c);
    double sd = std::abs(norm(st.vel) - 1.0);
    out.max_f_drift = std::max(out.max_f_drift, fd);
    out.max_speed_drift = std::max(out.max_speed_drift, sd);
    out.samples.push_back({s, st.pos, st.vel, fd, sd});
  };
  record(0.0);
  long nsteps = static_cast<long>(std::ceil(length / step));
  double s = 0.0;
  for (long i = 0; i < nsteps; ++i) {
    double h = std::min(step, length - s);
    if (h <= 0) break;
    try {
      auto f = [&](const GeodesicState& x) {
        GeodesicState d;
        d.pos = x.vel;
        d.vel = geodesic_rhs(S, x);
        return d;
      };
      auto add = [](const GeodesicState& x, const GeodesicState& d, double hh) {
        GeodesicState r;
        for (int k = 0; k < 3; ++k) {
          r.pos[k] = x.pos[k] + hh * d.pos[k];
          r.vel[k] = x.vel[k] + hh * d.vel[k];
        }
        return r;
      };
      GeodesicState k1 = f(st);
      GeodesicState k2 = f(add(st, k1, h / 2));
      GeodesicState k3 = f(add(st, k2, h / 2));
      GeodesicState k4 = f(add(st, k3, h));
      for (int k = 0; k < 3; ++k) {
        st.pos[k] += h / 6 * (k1.pos[k] + 2 * k2.pos[k] + 2 * k3.pos[k] + k4.pos[k]);
        st.vel[k] += h / 6 * (k1.vel[k] + 2 * k2.vel[k] + 2 * k3.vel[k] + k4.vel[k]);
      }
    } catch (const SingularGradient&) {
      out.fault = true;
      out.fault_reason = "singular gradient at s = " + std::to_string(s);
      return out;
    }
    s += h;
    record(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// the planar geodesic on a Monge patch: dy/ds = (1 + f_y(0,y)^2)^(-1/2)

struct WindowHitsSingularity : std::runtime_error {
  WindowHitsSingularity() : std::runtime_error("integration window hits a singular point") {}
};

struct PlanarProfile {
  std::vector<std::pair<double, double>> table;  // (s, y), strictly monotone in y
};

inline PlanarProfile planar_geodesic_profile(const MongeSurface& s, double y0, double smax,
                                             double step = 1e-3) {
  Expr fy = substitute(differentiate(s.f, Var::Y), Var::X, Expr::number(0L));
  auto slope = [&](double y) {
    double v = eval_double(fy, 0, y, 0);
    if (!std::isfinite(v)) throw WindowHitsSingularity();
    return 1.0 / std::sqrt(1.0 + v * v);
  };
  PlanarProfile out;
  double y = y0, sacc = 0.0;
  out.table.emplace_back(0.0, y);
  long nsteps = static_cast<long>(std::ceil(smax / step));
  for (long i = 0; i < nsteps; ++i) {
    double h = std::min(step, smax - sacc);
    if (h <= 0) break;
    double k1 = slope(y);
    double k2 = slope(y + h / 2 * k1);
    double k3 = slope(y + h / 2 * k2);
    double k4 = slope(y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    sacc += h;
    out.table.emplace_back(sacc, y);
  }
  return out;
}

// ---------------------------------------------------------------------------
// cross-validation of the symbolic NVE against the arclength equation
// xi_ss + K|_0 xi = 0 with K from the implicit-surface curvature formula

struct CrossCheckResult {
  double max_deviation = 0;    // arclength route vs y-parameter route
  double max_w_deviation = 0;  // normal-form route vs transformed xi
  std::vector<double> curvature_samples;
};

inline CrossCheckResult cross_validate_nve(const MongeSurface& surf, double y1, double y2,
                                           long steps = 4096) {
  NVECoefficients co = derive_nve(surf);
  NormalFormODE nf = normal_form(co);

  // independent curvature route: K on the surface z - f = 0 from the
  // bordered-Hessian formula, restricted to the plane x = 0
  ImplicitSurface S(Expr::symbol(Var::Z) - surf.f, Rat(0));
  Expr fy_expr = substitute(differentiate(surf.f, Var::Y), Var::X, Expr::number(0L));
  auto K_at = [&](double y) {
    double z = eval_double(surf.f, 0, y, 0);
    return gauss_curvature(S, Vec3{0, y, z});
  };
  auto sprime = [&](double y) {
    double v = eval_double(fy_expr, 0, y, 0);
    return std::sqrt(1.0 + v * v);
  };
  auto a_of = [&](double y) {
    double den = co.a.den().eval_double(y);
    return co.a.num().eval_double(y) / den;
  };
  auto b_of = [&](double y) {
    return co.b.num().eval_double(y) / co.b.den().eval_double(y);
  };
  auto r_of = [&](double y) {
    return nf.r.num().eval_double(y) / nf.r.den().eval_double(y);
  };
  auto ha_of = [&](double y) {
    return nf.half_a.num().eval_double(y) / nf.half_a.den().eval_double(y);
  };

  // state: (xiA, uA = dxiA/ds, xiB, xiB', I = int a/2 dy, w, w')
  const int N = 7;
  using State = std::array<double, N>;
  auto deriv = [&](double y, const State& v) {
    State d;
    double sp = sprime(y);
    d[0] = v[1] * sp;
    d[1] = -K_at(y) * v[0] * sp;
    d[2] = v[3];
    d[3] = -a_of(y) * v[3] - b_of(y) * v[2];
    d[4] = ha_of(y);
    d[5] = v[6];
    d[6] = r_of(y) * v[5];
    return d;
  };
  State v{};
  v[0] = 1.0;
  v[1] = 0.0;
  v[2] = 1.0;
  v[3] = 0.0;  // xiB' = uA * s'(y1) = 0
  v[4] = 0.0;
  v[5] = 1.0;                  // w(y1) = xi * exp(0)
  v[6] = ha_of(y1);            // w' = xi' + (a/2) xi at y1
  CrossCheckResult out;
  double h = (y2 - y1) / static_cast<double>(steps);
  double y = y1;
  for (long i = 0; i <= steps; ++i) {
    if (i > 0) {
      auto add = [&](const State& x, const State& d, double hh) {
        State r;
        for (int k = 0; k < N; ++k) r[k] = x[k] + hh * d[k];
        return r;
      };
      State k1 = deriv(y, v);
      State k2 = deriv(y + h / 2, add(v, k1, h / 2));
      State k3 = deriv(y + h / 2, add(v, k2, h / 2));
      State k4 = deriv(y + h, add(v, k3, h));
      for (int k = 0; k < N; ++k) v[k] += h / 6 * (k1[k] + 2 * k2[k] + 2 * k3[k] + k4[k]);
      y += h;
      for (int k = 0; k < N; ++k)
        if (!std::isfinite(v[k])) throw WindowHitsSingularity();
    }
    double scale = std::max({1.0, std::abs(v[0]), std::abs(v[2])});
    out.max_deviation = std::max(out.max_deviation, std::abs(v[0] - v[2]) / scale);
    double w_from_xi = v[2] * std::exp(v[4]);
    double wscale = std::max({1.0, std::abs(v[5]), std::abs(w_from_xi)});
    out.max_w_deviation = std::max(out.max_w_deviation, std::abs(v[5] - w_from_xi) / wscale);
    if (i % (steps / 16 ? steps / 16 : 1) == 0) out.curvature_samples.push_back(K_at(y));
  }
  return out;
}

}  // namespace gg
