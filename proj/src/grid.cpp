#include "magweyl/grid.hpp"

namespace magweyl {

PhaseGrid make_grid(int dim, int n, Real box) {
  require(dim == 1 || dim == 2, "grid: dim must be 1 or 2");
  require(n >= 8, "grid: n must be at least 8");
  require(n % 2 == 0, "grid: n must be even");
  require(box > 0.0, "grid: box half-width must be positive");
  PhaseGrid g;
  g.dim = dim;
  g.n = n;
  g.box = box;
  require(g.points_x() <= 1296, "grid: operator dimension n^dim exceeds 1296");
  return g;
}

}  // namespace magweyl
