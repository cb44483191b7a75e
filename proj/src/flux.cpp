#include "magweyl/flux.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace magweyl {

namespace {

// Newton iteration on Legendre polynomials, nodes mapped to [0, 1].
QuadRule build_gl(int order) {
  QuadRule r;
  r.nodes.resize(order);
  r.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    Real x = std::cos(pi * (i + 0.75) / (order + 0.5));
    Real dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1.0, p1 = x;
      for (int j = 2; j <= order; ++j) {
        const Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const Real dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[order - 1 - i] = 0.5 * (x + 1.0);
    r.weights[order - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

std::map<int, QuadRule> rule_cache;
std::mutex rule_mutex;

}  // namespace

const QuadRule& gl_rule(int order) {
  require(order >= 1, "quadrature: order must be positive");
  std::lock_guard<std::mutex> lock(rule_mutex);
  auto it = rule_cache.find(order);
  if (it == rule_cache.end()) it = rule_cache.emplace(order, build_gl(order)).first;
  return it->second;
}

ComplexUnit line_phase(const VectorPotential& A, const Coord& x, const Coord& z,
                       int quad_order) {
  require(quad_order >= 4, "line_phase: quad_order must be >= 4");
  const QuadRule& q = gl_rule(quad_order);
  const Coord d = coord_sub(z, x);
  Real integral = 0.0;
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    const Coord p = coord_add(x, coord_scale(q.nodes[i], d));
    Real along = 0.0;
    for (int j = 0; j < A.dim; ++j) along += A.comp(j, p) * d[j];
    integral += q.weights[i] * along;
  }
  return std::exp(-iu * integral);
}

Real triangle_flux_value(const MagneticField& B, const Coord& x, const Coord& y,
                         const Coord& z, int quad_order) {
  if (B.dim == 1) return 0.0;
  // Parametrize T(s, t) = x + s (y - x) + t (z - x) over the unit simplex;
  // the Jacobian is the signed area factor (y-x) wedge (z-x).  The simplex
  // integral is mapped to the square by the substitution t -> (1 - s) t.
  const Coord e1 = coord_sub(y, x);
  const Coord e2 = coord_sub(z, x);
  const Real jac = e1[0] * e2[1] - e1[1] * e2[0];
  const QuadRule& q = gl_rule(quad_order);
  Real integral = 0.0;
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    const Real s = q.nodes[i];
    for (size_t j = 0; j < q.nodes.size(); ++j) {
      const Real t = (1.0 - s) * q.nodes[j];
      const Coord p = {x[0] + s * e1[0] + t * e2[0], x[1] + s * e1[1] + t * e2[1]};
      integral += q.weights[i] * q.weights[j] * (1.0 - s) * B.b12(p);
    }
  }
  return integral * jac;
}

ComplexUnit triangle_flux(const MagneticField& B, const Coord& x, const Coord& y,
                          const Coord& z, int quad_order) {
  return std::exp(-iu * triangle_flux_value(B, x, y, z, quad_order));
}

ComplexUnit omega_centered(const MagneticField& B, const Coord& x,
                           const Coord& y, const Coord& z, int quad_order) {
  const Coord v1 = {x[0] - y[0] - z[0], x[1] - y[1] - z[1]};
  const Coord v2 = {x[0] + y[0] - z[0], x[1] + y[1] - z[1]};
  const Coord v3 = {x[0] - y[0] + z[0], x[1] - y[1] + z[1]};
  return triangle_flux(B, v1, v2, v3, quad_order);
}

Real parallelogram_flux(const MagneticField& B, const Coord& z, const Coord& x,
                        const Coord& y, int quad_order) {
  if (B.dim == 1) return 0.0;
  const QuadRule& q = gl_rule(quad_order);
  Real sum = 0.0;
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    const Real s = q.nodes[i] - 0.5;
    for (size_t j = 0; j < q.nodes.size(); ++j) {
      const Real t = q.nodes[j];
      const Coord p = {x[0] + s * y[0] + t * z[0], x[1] + s * y[1] + t * z[1]};
      const Real b = B.b12(p);
      // -sum_{j != k} y_j z_k B_{jk} = -b (y1 z2 - y2 z1).
      sum -= q.weights[i] * q.weights[j] * b * (y[0] * z[1] - y[1] * z[0]);
    }
  }
  return sum;
}

VectorPotential poincare_gauge(const MagneticField& B, int quad_order) {
  VectorPotential A;
  A.dim = B.dim;
  A.tag = "poincare";
  if (B.dim == 1) return A;
  MagneticField f = B;
  const int ord = quad_order;
  A.comp = [f, ord](int j, const Coord& x) {
    const QuadRule& q = gl_rule(ord);
    Real v = 0.0;
    for (int k = 0; k < 2; ++k) {
      if (k == j) continue;
      Real integral = 0.0;
      for (size_t i = 0; i < q.nodes.size(); ++i) {
        const Real t = q.nodes[i];
        integral += q.weights[i] * t * f.component(j, k, coord_scale(t, x));
      }
      v -= x[k] * integral;
    }
    return v;
  };
  // d/dx_i A_j = -[delta_{ik} int t B_jk(tx) + x_k int t^2 (d_i B_jk)(tx)].
  A.partial = [f, ord](int i, int j, const Coord& x) {
    const QuadRule& q = gl_rule(ord);
    Real v = 0.0;
    for (int k = 0; k < 2; ++k) {
      if (k == j) continue;
      Real ib = 0.0, idb = 0.0;
      for (size_t t_i = 0; t_i < q.nodes.size(); ++t_i) {
        const Real t = q.nodes[t_i];
        const Coord tx = coord_scale(t, x);
        ib += q.weights[t_i] * t * f.component(j, k, tx);
        idb += q.weights[t_i] * t * t * f.component_deriv(j, k, i, tx);
      }
      if (i == k) v -= ib;
      v -= x[k] * idb;
    }
    return v;
  };
  return A;
}

}  // namespace magweyl
