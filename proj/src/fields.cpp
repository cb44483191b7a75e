#include "magweyl/fields.hpp"

#include <cmath>

namespace magweyl {

Real MagneticField::component(int j, int k, const Coord& x) const {
  if (dim == 1 || j == k) return 0.0;
  if (j == 0 && k == 1) return b12(x);
  return -b12(x);
}

Real MagneticField::component_deriv(int j, int k, int i, const Coord& x) const {
  if (dim == 1 || j == k) return 0.0;
  const Real v = (i == 0) ? db12_dx1(x) : db12_dx2(x);
  return (j == 0 && k == 1) ? v : -v;
}

MagneticField MagneticField::negated() const {
  MagneticField out = *this;
  auto b = b12, d1 = db12_dx1, d2 = db12_dx2;
  out.b12 = [b](const Coord& x) { return -b(x); };
  out.db12_dx1 = [d1](const Coord& x) { return -d1(x); };
  out.db12_dx2 = [d2](const Coord& x) { return -d2(x); };
  return out;
}

MagneticField MagneticField::translated(const Coord& shift) const {
  MagneticField out = *this;
  auto b = b12, d1 = db12_dx1, d2 = db12_dx2;
  out.b12 = [b, shift](const Coord& x) { return b(coord_add(x, shift)); };
  out.db12_dx1 = [d1, shift](const Coord& x) { return d1(coord_add(x, shift)); };
  out.db12_dx2 = [d2, shift](const Coord& x) { return d2(coord_add(x, shift)); };
  return out;
}

MagneticField field_zero(int dim) {
  MagneticField f;
  f.dim = dim;
  return f;
}

MagneticField field_constant(int dim, Real b) {
  require(dim == 2 || b == 0.0, "field: nonzero magnetic field needs d = 2");
  MagneticField f;
  f.dim = dim;
  f.b12 = [b](const Coord&) { return b; };
  return f;
}

MagneticField field_oscillatory(Real b0, Real b1) {
  MagneticField f;
  f.dim = 2;
  f.b12 = [b0, b1](const Coord& x) {
    return b0 + b1 * std::cos(x[0]) * std::cos(x[1]);
  };
  f.db12_dx1 = [b1](const Coord& x) {
    return -b1 * std::sin(x[0]) * std::cos(x[1]);
  };
  f.db12_dx2 = [b1](const Coord& x) {
    return -b1 * std::cos(x[0]) * std::sin(x[1]);
  };
  return f;
}

MagneticField field_from_potential(const VectorPotential& A) {
  MagneticField f;
  f.dim = A.dim;
  if (A.dim == 1) return field_zero(1);
  f.b12 = [A](const Coord& x) { return A.curl12(x); };
  const Real eps = 1e-5;
  f.db12_dx1 = [A, eps](const Coord& x) {
    return (A.curl12(Coord{x[0] + eps, x[1]}) -
            A.curl12(Coord{x[0] - eps, x[1]})) /
           (2 * eps);
  };
  f.db12_dx2 = [A, eps](const Coord& x) {
    return (A.curl12(Coord{x[0], x[1] + eps}) -
            A.curl12(Coord{x[0], x[1] - eps})) /
           (2 * eps);
  };
  return f;
}

Real VectorPotential::curl12(const Coord& x) const {
  if (dim == 1) return 0.0;
  return partial(0, 1, x) - partial(1, 0, x);
}

VectorPotential gauge_zero(int dim) {
  VectorPotential A;
  A.dim = dim;
  A.tag = "zero";
  return A;
}

VectorPotential gauge_symmetric(Real b) {
  VectorPotential A;
  A.dim = 2;
  A.tag = "symmetric";
  A.comp = [b](int j, const Coord& x) {
    return j == 0 ? -0.5 * b * x[1] : 0.5 * b * x[0];
  };
  A.partial = [b](int i, int j, const Coord&) {
    if (i == 1 && j == 0) return -0.5 * b;
    if (i == 0 && j == 1) return 0.5 * b;
    return 0.0;
  };
  return A;
}

VectorPotential gauge_landau(Real b) {
  VectorPotential A;
  A.dim = 2;
  A.tag = "landau";
  A.comp = [b](int j, const Coord& x) { return j == 0 ? -b * x[1] : 0.0; };
  A.partial = [b](int i, int j, const Coord&) {
    return (i == 1 && j == 0) ? -b : 0.0;
  };
  return A;
}

VectorPotential gauge_shift(const VectorPotential& A, const GaugeFunction& phi) {
  require(A.dim == phi.dim, "gauge_shift: dimension mismatch");
  VectorPotential out;
  out.dim = A.dim;
  out.tag = "shifted";
  auto base = A.comp;
  auto basep = A.partial;
  auto g = phi.grad;
  auto h = phi.hess;
  out.comp = [base, g](int j, const Coord& x) { return base(j, x) + g(j, x); };
  out.partial = [basep, h](int i, int j, const Coord& x) {
    return basep(i, j, x) + h(i, j, x);
  };
  return out;
}

GaugeFunction gauge_fn_bilinear(Real c) {
  GaugeFunction f;
  f.dim = 2;
  f.phi = [c](const Coord& x) { return c * x[0] * x[1]; };
  f.grad = [c](int j, const Coord& x) { return j == 0 ? c * x[1] : c * x[0]; };
  f.hess = [c](int i, int j, const Coord&) { return i != j ? c : 0.0; };
  return f;
}

GaugeFunction gauge_fn_landau_to_symmetric(Real b) {
  // Landau (-b x2, 0) plus the gradient of phi = b x1 x2 / 2 gives the
  // symmetric gauge (-b x2/2, b x1/2).
  return gauge_fn_bilinear(0.5 * b);
}

}  // namespace magweyl
