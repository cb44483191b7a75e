#pragma once

#include "magweyl/fields.hpp"

namespace magweyl {

using ComplexUnit = Complex;

// Gauss-Legendre nodes and weights on [0, 1]; exact for polynomials of
// degree < 2 * order.
struct QuadRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};
const QuadRule& gl_rule(int order);

// Lambda^A(x, z) = exp(-i int_[x,z] A), straight segment from x to z.
ComplexUnit line_phase(const VectorPotential& A, const Coord& x, const Coord& z,
                       int quad_order = 16);

// Omega^B(x, y, z) = exp(-i flux through the oriented triangle <x,y,z>).
ComplexUnit triangle_flux(const MagneticField& B, const Coord& x,
                          const Coord& y, const Coord& z, int quad_order = 16);
Real triangle_flux_value(const MagneticField& B, const Coord& x, const Coord& y,
                         const Coord& z, int quad_order = 16);

// omega^B(x, y, z) = Omega^B(x-y-z, x+y-z, x-y+z).
ComplexUnit omega_centered(const MagneticField& B, const Coord& x,
                           const Coord& y, const Coord& z, int quad_order = 16);

// S^B_z(x, y) = -sum_{j != k} y_j z_k int_{-1/2}^{1/2} ds int_0^1 dt
//               B_{jk}(x + s y + t z): the flux through the parallelogram
//               with vertices {x+y/2, x-y/2, x-y/2+z, x+y/2+z}.
Real parallelogram_flux(const MagneticField& B, const Coord& z, const Coord& x,
                        const Coord& y, int quad_order = 16);

// Transversal gauge A_j(x) = -sum_k x_k int_0^1 t B_{jk}(t x) dt; satisfies
// dA = B for any smooth field.
VectorPotential poincare_gauge(const MagneticField& B, int quad_order = 16);

}  // namespace magweyl
