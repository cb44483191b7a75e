#pragma once

#include <vector>

#include "magweyl/fields.hpp"
#include "magweyl/quantize.hpp"
#include "magweyl/symbol.hpp"

namespace magweyl {

// Mixed representation of a symbol field: the xi axes are transformed to the
// dual configuration variable y.  Rows are refined x points, columns the
// n^d y-lattice (step h from -L).
struct MixedField {
  PhaseGrid grid;
  Matrix vals;
};

MixedField to_mixed(const SymbolField& f);
SymbolField from_mixed(const MixedField& m);

// Unit element of the xi-convolution: unit-mass point at xi = 0
// (value k^{-d} at the central bin).
SymbolField star_unit(const PhaseGrid& g);

// Fiberwise product (f * g)(x, xi) = sum_eta f(x, eta) g(x, xi - eta) k^d,
// the circular convolution over the xi lattice at frozen x.  Computed by
// pointwise multiplication in the mixed representation.
SymbolField mixed_product(const SymbolField& f, const SymbolField& g);

// Same product with the left factor given directly in the mixed
// representation.  Normalized so that stored values identically 1 act as
// the identity: the zero-field phase factor then reduces magnetic
// translation to plain translation, which fixes the constant.
SymbolField mixed_product(const MixedField& f, const SymbolField& g);

// Phase factor of magnetic translations, stored in the mixed
// representation: vals(x, y) = e^{-i S^B_z(x, y)} with
//   S^B_z(x, y) = -(y1 z2 - y2 z1)
//                 int_{-1/2}^{1/2} ds int_0^1 dt B12(x + s y + t z)
// in d = 2 and S = 0 in d = 1.  quad_order is the per-axis node count of
// the (s, t) rule; order 1 is exact for affine fields.
MixedField theta_factor(const MagneticField& B, const Coord& z,
                        const PhaseGrid& g, int quad_order = 12);

// Magnetic translation of a symbol: theta_factor(B, z) applied to
// tau_Z g = g(. + Z), with tau_Z re-evaluated analytically.  The x part of
// Z must lie on the lattice.
SymbolField magnetic_translate(const SymbolFn& g, const PhasePoint& Z,
                               const MagneticField& B, const PhaseGrid& grid,
                               int quad_order = 12);

// Moyal product through the kernel calculus: with K^A the twisted kernels,
// result = inverse_weyl(untwist(K^A_f K^A_g h^d)).  Quantizing the result
// reproduces the operator product Op^A(f) Op^A(g) up to the kernel entries
// outside the strict difference window, which the product kernel must
// outrun by decay.
SymbolField moyal_kernel_route(const SymbolFn& f, const SymbolFn& g,
                               const VectorPotential& A, const PhaseGrid& grid,
                               int quad_order = 16);
SymbolField moyal_kernel_route(const SymbolField& f, const SymbolField& g,
                               const VectorPotential& A, int quad_order = 16);

struct MoyalOptions {
  double max_nodes = 1e9;  // budget on (Y, Z) pair evaluations, totaled
  int flux_quad_order = 8;
  int threads = 1;
};

// Direct quadrature of the twisted product integral
//   (f #_B g)(X) = pi^{-2d} int dY dZ e^{-2i sigma(Y,Z)}
//                  Omega^B(x-y-z, x+y-z, x-y+z) f(X-Y) g(X-Z),
// substituted so f and g are read on the refined phase-space lattice and
// the momentum integrals collapse into precomputed tables.  Node count is
// (2n)^{3d}; exceeding opts.max_nodes is an error.
SymbolField moyal_direct(const SymbolFn& f, const SymbolFn& g,
                         const MagneticField& B, const PhaseGrid& grid,
                         const MoyalOptions& opts = {});

// Phase-space lattice {(j h, m k) : |j_i| <= rad_x, |m_i| <= rad_xi}.
std::vector<PhasePoint> phase_lattice(const PhaseGrid& g, int rad_x,
                                      int rad_xi);

// Quadrature of the averaged expansion of Op^A(f * g) over phase-space
// translates: sum_Z f(Z) w_Z W^A(Z)* Op^A(theta^{-tau_z B}_{-z} * g) W^A(Z)
// with w_Z = h^d k^d.  The field is induced from A; Z x-parts must be
// lattice-aligned.
OperatorMatrix kato_convolution_expand(const SymbolFn& f, const SymbolFn& g,
                                       const VectorPotential& A,
                                       const std::vector<PhasePoint>& Z_lattice,
                                       const PhaseGrid& grid,
                                       int theta_quad_order = 2,
                                       int threads = 1);

}  // namespace magweyl
