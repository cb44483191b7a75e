#pragma once

#include <functional>
#include <string>

#include "magweyl/grid.hpp"

namespace magweyl {

// Magnetic field in d = 2: the single component B12(x) plus its first
// partials (needed by the transversal-gauge derivative evaluators).  In
// d = 1 every 2-form vanishes, so the field is identically zero there.
struct MagneticField {
  int dim = 2;
  std::function<Real(const Coord&)> b12 = [](const Coord&) { return 0.0; };
  std::function<Real(const Coord&)> db12_dx1 = [](const Coord&) { return 0.0; };
  std::function<Real(const Coord&)> db12_dx2 = [](const Coord&) { return 0.0; };

  // Antisymmetric component access: B_{jk}.
  Real component(int j, int k, const Coord& x) const;
  Real component_deriv(int j, int k, int i, const Coord& x) const;

  MagneticField negated() const;
  MagneticField translated(const Coord& shift) const;  // x -> B(x + shift)
};

MagneticField field_zero(int dim);
MagneticField field_constant(int dim, Real b);
// b(x) = b0 + b1 cos(x1) cos(x2); bounded with all derivatives bounded.
MagneticField field_oscillatory(Real b0, Real b1);

struct VectorPotential {
  int dim = 1;
  std::string tag = "zero";
  std::function<Real(int, const Coord&)> comp =
      [](int, const Coord&) { return 0.0; };
  // partial(i, j, x) = d A_j / d x_i.
  std::function<Real(int, int, const Coord&)> partial =
      [](int, int, const Coord&) { return 0.0; };

  Real curl12(const Coord& x) const;  // d1 A2 - d2 A1
};

struct GaugeFunction {
  int dim = 1;
  std::function<Real(const Coord&)> phi = [](const Coord&) { return 0.0; };
  std::function<Real(int, const Coord&)> grad =
      [](int, const Coord&) { return 0.0; };
  // hess(i, j, x) = d^2 phi / dx_i dx_j, used for the shifted potential's
  // derivative evaluator.
  std::function<Real(int, int, const Coord&)> hess =
      [](int, int, const Coord&) { return 0.0; };
};

VectorPotential gauge_zero(int dim);
VectorPotential gauge_symmetric(Real b);        // (-b x2 / 2, b x1 / 2)
VectorPotential gauge_landau(Real b);           // (-b x2, 0)
VectorPotential gauge_shift(const VectorPotential& A, const GaugeFunction& phi);

GaugeFunction gauge_fn_bilinear(Real c);        // phi = c x1 x2
GaugeFunction gauge_fn_landau_to_symmetric(Real b);  // phi = b x1 x2 / 2

// Field induced by a potential: b12 = curl12(A) with finite-difference
// partials.
MagneticField field_from_potential(const VectorPotential& A);

}  // namespace magweyl
