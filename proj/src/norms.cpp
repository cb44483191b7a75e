#include "magweyl/norms.hpp"

#include <cmath>
#include <limits>

#include "magweyl/transforms.hpp"

namespace magweyl {

Real lp_norm(const SymbolField& f, Real p) {
  require(p >= 1.0, "lp_norm: p must be >= 1");
  if (std::isinf(p)) return f.vals.cwiseAbs().maxCoeff();
  const PhaseGrid& g = f.grid;
  const Real w = std::pow(0.5 * g.h(), g.dim) * std::pow(g.k(), g.dim);
  Real s = 0.0;
  for (long r = 0; r < f.vals.rows(); ++r)
    for (long c = 0; c < f.vals.cols(); ++c)
      s += std::pow(std::abs(f.vals(r, c)), p);
  return std::pow(s * w, 1.0 / p);
}

Real lp_norm(const SymbolFn& F, const PhaseGrid& g, Real p) {
  return lp_norm(sample(F, g), p);
}

std::vector<std::array<int, 2>> multi_indices(int dim, int total) {
  std::vector<std::array<int, 2>> out;
  if (dim == 1) {
    out.push_back({total, 0});
  } else {
    for (int i = 0; i <= total; ++i) out.push_back({i, total - i});
  }
  return out;
}

Real hoermander_seminorm(const SymbolFn& F, Real m, int N, int M,
                         const PhaseGrid& g) {
  std::vector<SymbolFn> derivs;
  for (const auto& alpha : multi_indices(g.dim, N))
    for (const auto& beta : multi_indices(g.dim, M))
      derivs.push_back(F.derivative(alpha, beta));

  const Axis xr = g.x_refined();
  const Axis xi = g.xi_axis();
  Real best = 0.0;
  for (long r = 0; r < g.points_x_refined(); ++r) {
    PhasePoint X;
    X.x = g.point_flat(xr, r);
    for (long c = 0; c < g.points_xi(); ++c) {
      X.xi = g.point_flat(xi, c);
      Real s = 0.0;
      for (const auto& D : derivs) s += std::abs(D.eval(X));
      const Real br = 1.0 + dot(X.xi, X.xi, g.dim);
      best = std::max(best, std::pow(br, -0.5 * m) * s);
    }
  }
  return best;
}

SymbolField spectral_derivative(const SymbolField& f,
                                const std::array<int, 2>& alpha,
                                const std::array<int, 2>& beta) {
  const PhaseGrid& g = f.grid;
  const TransformTables& t = transforms_for(g);
  SymbolField out = f;

  auto x_mult = [&](int order) {
    const Axis kap = g.kappa_axis();
    Vector mult(kap.count);
    for (int v = 0; v < kap.count; ++v)
      mult(v) = std::pow(iu * kap.value(v), order);
    return Matrix(t.x_synthesis * mult.asDiagonal() * t.x_analysis);
  };
  auto xi_mult = [&](int order) {
    const Axis y = g.y_axis();
    Vector mult(y.count);
    for (int r = 0; r < y.count; ++r) mult(r) = std::pow(iu * y.value(r), order);
    return Matrix(t.xi_synthesis * mult.asDiagonal() * t.xi_analysis);
  };

  if (g.dim == 1) {
    if (alpha[0]) out.vals = map_rows(g, out.vals, x_mult(alpha[0]));
    if (beta[0]) out.vals = map_columns(g, out.vals, xi_mult(beta[0]));
  } else {
    if (alpha[0] || alpha[1])
      out.vals = map_rows(g, out.vals, x_mult(alpha[0]), x_mult(alpha[1]));
    if (beta[0] || beta[1])
      out.vals = map_columns(g, out.vals, xi_mult(beta[0]), xi_mult(beta[1]));
  }
  return out;
}

}  // namespace magweyl
