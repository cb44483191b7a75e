#pragma once

#include <string>
#include <vector>

#include "magweyl/grid.hpp"

namespace magweyl {

// Grid image of a symbol: samples on (half-step x refinement) x (xi lattice).
// Row index flattens the refined x axes, column index the xi axes.
struct SymbolField {
  PhaseGrid grid;
  Matrix vals;  // (2n)^d rows, n^d cols
};

SymbolField make_field(const PhaseGrid& g);

// One product term
//   coeff * prod_a (x_a - x0_a)^{xpow_a} * prod_a (xi_a - xi0_a)^{xipow_a}
//         * exp(-lam_x |x - x0|^2) * exp(-lam_xi |xi - xi0|^2)
//         * (1 + bracket_scale |xi|^2)^{bracket_pow / 2}.
// The family is closed under partial derivatives, translation and dilation,
// which keeps every derivative evaluator analytic.
struct SymbolTerm {
  Complex coeff{1.0, 0.0};
  std::array<int, 2> xpow{0, 0};
  std::array<int, 2> xipow{0, 0};
  Coord x0{0.0, 0.0};
  Coord xi0{0.0, 0.0};
  Real lam_x = 0.0;
  Real lam_xi = 0.0;
  Real bracket_pow = 0.0;
  Real bracket_scale = 1.0;
};

struct SymbolFn {
  int dim = 1;
  std::vector<SymbolTerm> terms;
  std::string family = "custom";

  Complex eval(const PhasePoint& X) const;
  Complex deriv(const std::array<int, 2>& alpha, const std::array<int, 2>& beta,
                const PhasePoint& X) const;
  SymbolFn derivative(const std::array<int, 2>& alpha,
                      const std::array<int, 2>& beta) const;
  SymbolFn translated(const PhasePoint& Z) const;  // X -> F(X - Z)
  SymbolFn dilated(Real lam) const;                // X -> F(lam X)
  SymbolFn scaled(Complex c) const;
};

// Test families.
SymbolFn symbol_one(int dim);
SymbolFn symbol_gaussian(int dim, Real lam, Complex coeff = 1.0);
SymbolFn symbol_gaussian_split(int dim, Real lam_x, Real lam_xi,
                               const PhasePoint& center, Complex coeff = 1.0);
SymbolFn symbol_poly_gaussian(int dim, const std::array<int, 2>& xpow,
                              const std::array<int, 2>& xipow, Real lam,
                              Complex coeff = 1.0);
SymbolFn symbol_bracket_power(int dim, Real m);
SymbolFn symbol_x_only_gaussian(int dim, Real lam, Complex coeff = 1.0);

// Samples an analytic symbol on the grid.
SymbolField sample(const SymbolFn& F, const PhaseGrid& g);

}  // namespace magweyl
