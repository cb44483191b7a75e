#pragma once

#include "magweyl/flux.hpp"
#include "magweyl/symbol.hpp"

namespace magweyl {

// Integral kernel on lattice x lattice.
struct Kernel {
  PhaseGrid grid;
  Matrix K;  // n^d x n^d
};

// Dense operator on grid-L^2: for quantizations M = K * w_x with w_x = h^d,
// so that matrix singular values approximate continuum ones.
struct OperatorMatrix {
  PhaseGrid grid;
  Matrix M;
};

// Forward kernel map: K(x_a, x_b) = (2 pi)^{-d} sum_xi e^{i<xi, x_a - x_b>}
// F((x_a + x_b)/2, xi) w_xi, with the quadrature taken over the half-step
// xi refinement (w_xi = (k/2)^d).  On that refinement the sum has period 4L
// in x_a - x_b, so no spurious image of the diagonal enters the box and
// F = 1 maps exactly to the discrete delta h^{-d} delta_ab.  Field inputs
// are trig-interpolated from the xi lattice onto the refinement.
Kernel weyl_kernel(const SymbolFn& F, const PhaseGrid& g);
Kernel weyl_kernel(const SymbolField& f);

// Entrywise multiplication by the segment phase Lambda^A(x_a, x_b) (or its
// conjugate, undoing the twist).
Kernel twist_kernel(const Kernel& K, const VectorPotential& A,
                    int quad_order = 16);
Kernel untwist_kernel(const Kernel& K, const VectorPotential& A,
                      int quad_order = 16);

OperatorMatrix to_operator(const Kernel& K);
Kernel to_kernel(const OperatorMatrix& M);

// Op^A(F) = (Lambda^A . weyl_kernel(F)) * w_x.
OperatorMatrix op_matrix(const SymbolFn& F, const VectorPotential& A,
                         const PhaseGrid& g, int quad_order = 16);
OperatorMatrix op_matrix(const SymbolField& f, const VectorPotential& A,
                         int quad_order = 16);

// Magnetic Weyl system W^A(X): u(z) -> Lambda^A(z, z+x) e^{i<xi,x>/2}
// e^{-i<xi,z>} u(z+x).  The translation component must lie on the lattice;
// samples shifted out of the box are dropped (zero padding, no wraparound).
OperatorMatrix weyl_system_matrix(const PhasePoint& X, const VectorPotential& A,
                                  const PhaseGrid& g, int quad_order = 16);

// W^A(Z)* T W^A(Z) computed directly through index shifts and diagonal
// phases; agrees with the explicit triple product to roundoff and costs
// O(N^2).  The x part of Z must lie on the lattice.
OperatorMatrix weyl_conjugate(const OperatorMatrix& T, const PhasePoint& Z,
                              const VectorPotential& A, int quad_order = 16);

// Inverse kernel map.  Defined as an exact right inverse of weyl_kernel on
// kernels supported in the per-axis difference window |a - b| < n/2:
// weyl_kernel(inverse_weyl(K)) reproduces every such entry to roundoff, and
// produces exact zeros outside the window.  Symbol values are completed
// across difference-parity classes by the band projection, so the map is
// idempotent (inverse_weyl . weyl_kernel is the identity on its image) and
// round trips symbols whose kernels decay inside the window to the same
// accuracy as that decay.  Midpoint rows near the box corners see clipped
// difference windows, so no inverse can round trip arbitrary bandlimited
// fields exactly; window-supported kernel data is the invariant content.
SymbolField inverse_weyl(const Kernel& K);

}  // namespace magweyl
