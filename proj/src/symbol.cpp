#include "magweyl/symbol.hpp"

#include <cmath>

namespace magweyl {

SymbolField make_field(const PhaseGrid& g) {
  SymbolField f;
  f.grid = g;
  f.vals = Matrix::Zero(g.points_x_refined(), g.points_xi());
  return f;
}

namespace {

Real ipow_real(Real x, int p) {
  Real r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

Complex eval_term(const SymbolTerm& t, int dim, const PhasePoint& X) {
  Complex v = t.coeff;
  Real ex = 0.0, exi = 0.0, xi2 = 0.0;
  for (int a = 0; a < dim; ++a) {
    const Real dx = X.x[a] - t.x0[a];
    const Real dxi = X.xi[a] - t.xi0[a];
    if (t.xpow[a]) v *= ipow_real(dx, t.xpow[a]);
    if (t.xipow[a]) v *= ipow_real(dxi, t.xipow[a]);
    ex += dx * dx;
    exi += dxi * dxi;
    xi2 += X.xi[a] * X.xi[a];
  }
  if (t.lam_x != 0.0) v *= std::exp(-t.lam_x * ex);
  if (t.lam_xi != 0.0) v *= std::exp(-t.lam_xi * exi);
  if (t.bracket_pow != 0.0)
    v *= std::pow(1.0 + t.bracket_scale * xi2, 0.5 * t.bracket_pow);
  return v;
}

// d/dx_a of a term: product rule over the monomial and Gaussian factors.
void diff_x(const SymbolTerm& t, int a, std::vector<SymbolTerm>& out) {
  if (t.xpow[a] > 0) {
    SymbolTerm s = t;
    s.coeff *= Real(t.xpow[a]);
    s.xpow[a] -= 1;
    out.push_back(s);
  }
  if (t.lam_x != 0.0) {
    SymbolTerm s = t;
    s.coeff *= -2.0 * t.lam_x;
    s.xpow[a] += 1;
    out.push_back(s);
  }
}

// d/dxi_a: monomial, Gaussian, and bracket factors; the bracket contributes
// m * bs * xi_a * (...)^{(m-2)/2} with xi_a recentered around xi0_a.
void diff_xi(const SymbolTerm& t, int a, std::vector<SymbolTerm>& out) {
  if (t.xipow[a] > 0) {
    SymbolTerm s = t;
    s.coeff *= Real(t.xipow[a]);
    s.xipow[a] -= 1;
    out.push_back(s);
  }
  if (t.lam_xi != 0.0) {
    SymbolTerm s = t;
    s.coeff *= -2.0 * t.lam_xi;
    s.xipow[a] += 1;
    out.push_back(s);
  }
  if (t.bracket_pow != 0.0) {
    SymbolTerm s = t;
    s.coeff *= t.bracket_pow * t.bracket_scale;
    s.bracket_pow -= 2.0;
    s.xipow[a] += 1;
    out.push_back(s);
    if (t.xi0[a] != 0.0) {
      SymbolTerm s2 = t;
      s2.coeff *= t.bracket_pow * t.bracket_scale * t.xi0[a];
      s2.bracket_pow -= 2.0;
      out.push_back(s2);
    }
  }
}

}  // namespace

Complex SymbolFn::eval(const PhasePoint& X) const {
  Complex v = 0.0;
  for (const auto& t : terms) v += eval_term(t, dim, X);
  return v;
}

SymbolFn SymbolFn::derivative(const std::array<int, 2>& alpha,
                              const std::array<int, 2>& beta) const {
  SymbolFn out = *this;
  for (int a = 0; a < dim; ++a) {
    for (int r = 0; r < alpha[a]; ++r) {
      std::vector<SymbolTerm> next;
      for (const auto& t : out.terms) diff_x(t, a, next);
      out.terms = std::move(next);
    }
    for (int r = 0; r < beta[a]; ++r) {
      std::vector<SymbolTerm> next;
      for (const auto& t : out.terms) diff_xi(t, a, next);
      out.terms = std::move(next);
    }
  }
  return out;
}

Complex SymbolFn::deriv(const std::array<int, 2>& alpha,
                        const std::array<int, 2>& beta,
                        const PhasePoint& X) const {
  return derivative(alpha, beta).eval(X);
}

SymbolFn SymbolFn::translated(const PhasePoint& Z) const {
  SymbolFn out = *this;
  for (auto& t : out.terms) {
    require(t.bracket_pow == 0.0 || (Z.xi[0] == 0.0 && Z.xi[1] == 0.0),
            "symbol: bracket factors only translate in x");
    t.x0 = coord_add(t.x0, Z.x);
    t.xi0 = coord_add(t.xi0, Z.xi);
  }
  return out;
}

SymbolFn SymbolFn::dilated(Real lam) const {
  SymbolFn out = *this;
  for (auto& t : out.terms) {
    for (int a = 0; a < dim; ++a) {
      t.coeff *= ipow_real(lam, t.xpow[a] + t.xipow[a]);
      t.x0[a] /= lam;
      t.xi0[a] /= lam;
    }
    t.lam_x *= lam * lam;
    t.lam_xi *= lam * lam;
    t.bracket_scale *= lam * lam;
  }
  return out;
}

SymbolFn SymbolFn::scaled(Complex c) const {
  SymbolFn out = *this;
  for (auto& t : out.terms) t.coeff *= c;
  return out;
}

SymbolFn symbol_one(int dim) {
  SymbolFn f;
  f.dim = dim;
  f.terms.push_back(SymbolTerm{});
  f.family = "one";
  return f;
}

SymbolFn symbol_gaussian(int dim, Real lam, Complex coeff) {
  SymbolFn f;
  f.dim = dim;
  SymbolTerm t;
  t.coeff = coeff;
  t.lam_x = lam;
  t.lam_xi = lam;
  f.terms.push_back(t);
  f.family = "gaussian";
  return f;
}

SymbolFn symbol_gaussian_split(int dim, Real lam_x, Real lam_xi,
                               const PhasePoint& center, Complex coeff) {
  SymbolFn f;
  f.dim = dim;
  SymbolTerm t;
  t.coeff = coeff;
  t.lam_x = lam_x;
  t.lam_xi = lam_xi;
  t.x0 = center.x;
  t.xi0 = center.xi;
  f.terms.push_back(t);
  f.family = "gaussian";
  return f;
}

SymbolFn symbol_poly_gaussian(int dim, const std::array<int, 2>& xpow,
                              const std::array<int, 2>& xipow, Real lam,
                              Complex coeff) {
  SymbolFn f;
  f.dim = dim;
  SymbolTerm t;
  t.coeff = coeff;
  t.xpow = xpow;
  t.xipow = xipow;
  t.lam_x = lam;
  t.lam_xi = lam;
  f.terms.push_back(t);
  f.family = "poly_gaussian";
  return f;
}

SymbolFn symbol_bracket_power(int dim, Real m) {
  SymbolFn f;
  f.dim = dim;
  SymbolTerm t;
  t.bracket_pow = m;
  f.terms.push_back(t);
  f.family = "bracket_power";
  return f;
}

SymbolFn symbol_x_only_gaussian(int dim, Real lam, Complex coeff) {
  SymbolFn f;
  f.dim = dim;
  SymbolTerm t;
  t.coeff = coeff;
  t.lam_x = lam;
  f.terms.push_back(t);
  f.family = "x_gaussian";
  return f;
}

SymbolField sample(const SymbolFn& F, const PhaseGrid& g) {
  require(F.dim == g.dim, "sample: dimension mismatch");
  SymbolField f = make_field(g);
  const Axis xr = g.x_refined();
  const Axis xi = g.xi_axis();
  for (long r = 0; r < f.vals.rows(); ++r) {
    PhasePoint X;
    X.x = g.point_flat(xr, r);
    for (long c = 0; c < f.vals.cols(); ++c) {
      X.xi = g.point_flat(xi, c);
      f.vals(r, c) = F.eval(X);
    }
  }
  return f;
}

}  // namespace magweyl
