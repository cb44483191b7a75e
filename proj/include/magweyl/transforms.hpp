#pragma once

#include "magweyl/grid.hpp"

namespace magweyl {

// Dense per-axis spectral matrices for one grid.  Every multi-dimensional
// field operation in the library is a tensor product of these 1-d maps,
// applied axis by axis via map_rows / map_columns.
//
// Normalization table (per axis; h k n = 2 pi):
//   xi_analysis    c(u_q) = (1/n) sum_m F(xi_m) e^{-i xi_m u_q},  u_q = q h
//   xi_synthesis   F(xi_m) = sum_q c(u_q) e^{+i xi_m u_q}
//   xi_upsample    trig interpolation onto the half-step xi refinement,
//                  edge coefficient split symmetrically
//   x_analysis     c(kappa_v) = (1/2n) sum_p g(s_p) e^{-i kappa_v s_p}
//   x_synthesis    g(s_p) = sum_v c(kappa_v) e^{+i kappa_v s_p}
//   x_lowpass      x_synthesis . band mask (|v| < n/2 kept, |v| = n/2
//                  halved, rest zeroed) . x_analysis
//   mixed_fwd      m(y_r) = (2 pi)^{-1/2} k sum_m g(xi_m) e^{-i xi_m y_r}
//   mixed_inv      g(xi_m) = (2 pi)^{-1/2} h sum_r m(y_r) e^{+i xi_m y_r}
//   parity_even/odd  xi_synthesis . u-parity mask . xi_analysis
struct TransformTables {
  PhaseGrid grid;
  Matrix xi_analysis;
  Matrix xi_synthesis;
  Matrix xi_upsample;
  Matrix x_analysis;
  Matrix x_synthesis;
  Matrix x_lowpass;
  Matrix mixed_fwd;
  Matrix mixed_inv;
  Matrix parity_even;
  Matrix parity_odd;
};

const TransformTables& transforms_for(const PhaseGrid& g);

// Applies per-axis matrices to the flattened column index of `field`
// (column index runs over the xi-type axes).  M0 acts on axis 0, M1 on
// axis 1; for dim = 1 only M0 is used.  Matrices may be rectangular.
Matrix map_columns(const PhaseGrid& g, const Matrix& field, const Matrix& M0,
                   const Matrix& M1);
Matrix map_columns(const PhaseGrid& g, const Matrix& field, const Matrix& M);

// Same on the flattened row index (the x-type axes).
Matrix map_rows(const PhaseGrid& g, const Matrix& field, const Matrix& M0,
                const Matrix& M1);
Matrix map_rows(const PhaseGrid& g, const Matrix& field, const Matrix& M);

// Per-row parity-resolved column map: row index is unflattened over the
// x refinement and each xi axis gets `even` or `odd` according to the
// parity of the matching x index component.
Matrix map_columns_by_row_parity(const PhaseGrid& g, const Matrix& field,
                                 const Matrix& even, const Matrix& odd);

}  // namespace magweyl
