#pragma once

#include <vector>

#include "magweyl/types.hpp"

namespace magweyl {

// Uniform 1-d sample axis: values start, start + step, ...
struct Axis {
  int count = 0;
  Real step = 0.0;
  Real start = 0.0;
  Real value(int i) const { return start + step * i; }
  std::vector<Real> values() const {
    std::vector<Real> v(count);
    for (int i = 0; i < count; ++i) v[i] = value(i);
    return v;
  }
};

// Symmetric box [-L, L)^d with an n-point lattice per axis.  The grids used
// throughout:
//   x lattice      n points, step h = 2L/n, from -L
//   x refinement   2n points, step h/2, from -L  (midpoints of lattice pairs)
//   xi lattice     n points, step k = pi/L, from -(n/2) k
//   xi refinement  2n points, step k/2, same span
//   y lattice      n points, step h, from -L  (conjugate to the xi axis)
//   kappa lattice  2n points, step k, from -n k  (conjugate to x refinement)
// Per axis h * k * n = 2 pi, so the paired analysis/synthesis sums below are
// mutually inverse without any further constant.
struct PhaseGrid {
  int dim = 1;
  int n = 8;
  Real box = 1.0;

  Real h() const { return 2.0 * box / n; }
  Real k() const { return pi / box; }
  // Half-bandwidth of the xi axis (also pi / h).
  Real lambda() const { return 0.5 * n * k(); }

  Axis x_axis() const { return {n, h(), -box}; }
  Axis x_refined() const { return {2 * n, 0.5 * h(), -box}; }
  Axis xi_axis() const { return {n, k(), -0.5 * n * k()}; }
  Axis xi_refined() const { return {2 * n, 0.5 * k(), -0.5 * n * k()}; }
  Axis y_axis() const { return {n, h(), -box}; }
  Axis kappa_axis() const { return {2 * n, k(), -static_cast<Real>(n) * k()}; }

  long points_x() const { return ipow(n); }
  long points_x_refined() const { return ipow(2 * n); }
  long points_xi() const { return ipow(n); }
  long points_xi_refined() const { return ipow(2 * n); }
  long points_y() const { return ipow(n); }

  long ipow(long m) const { return dim == 1 ? m : m * m; }

  // Row-major flattening of per-axis indices (axis 0 is the slow index).
  long flatten(const std::array<int, 2>& idx, int per_axis) const {
    return dim == 1 ? idx[0] : static_cast<long>(idx[0]) * per_axis + idx[1];
  }
  std::array<int, 2> unflatten(long flat, int per_axis) const {
    if (dim == 1) return {static_cast<int>(flat), 0};
    return {static_cast<int>(flat / per_axis), static_cast<int>(flat % per_axis)};
  }

  Coord point(const Axis& ax, const std::array<int, 2>& idx) const {
    Coord c{0.0, 0.0};
    for (int a = 0; a < dim; ++a) c[a] = ax.value(idx[a]);
    return c;
  }
  Coord point_flat(const Axis& ax, long flat) const {
    return point(ax, unflatten(flat, ax.count));
  }
};

PhaseGrid make_grid(int dim, int n, Real box);

// Iterates idx over the full {0..count-1}^dim slab in flattening order.
template <typename F>
void for_each_index(const PhaseGrid& g, int count, F&& f) {
  if (g.dim == 1) {
    for (int i = 0; i < count; ++i) f(std::array<int, 2>{i, 0});
  } else {
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j) f(std::array<int, 2>{i, j});
  }
}

}  // namespace magweyl
