#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/SVD>
#include <random>

#include "doctest.h"
#include "magweyl/quantize.hpp"
#include "magweyl/transforms.hpp"

using namespace magweyl;

namespace {

Real max_abs(const Matrix& M) { return M.cwiseAbs().maxCoeff(); }

RealVector sorted_singular_values(const Matrix& M) {
  Eigen::BDCSVD<Matrix> svd(M);
  return svd.singularValues();
}

}  // namespace

TEST_CASE("unit symbol quantizes to identity") {
  for (auto [dim, n] : {std::pair{1, 16}, std::pair{2, 8}}) {
    PhaseGrid g = make_grid(dim, n, 6.0);
    Kernel K = weyl_kernel(symbol_one(dim), g);
    const Real wx = std::pow(g.h(), dim);
    Matrix expect = Matrix::Identity(g.points_x(), g.points_x()) / wx;
    CHECK(max_abs(K.K - expect) * wx < 1e-12);
    OperatorMatrix M = to_operator(K);
    CHECK(max_abs(M.M - Matrix::Identity(g.points_x(), g.points_x())) < 1e-12);
  }
}

TEST_CASE("position-only symbol quantizes to a multiplication operator") {
  PhaseGrid g = make_grid(2, 8, 5.0);
  SymbolFn F = symbol_x_only_gaussian(2, 0.3, 1.7);
  OperatorMatrix M = op_matrix(F, gauge_zero(2), g);
  const Axis xl = g.x_axis();
  for (long a = 0; a < g.points_x(); ++a) {
    for (long b = 0; b < g.points_x(); ++b) {
      PhasePoint X;
      X.x = g.point_flat(xl, a);
      const Complex expect = (a == b) ? F.eval(X) : Complex(0.0);
      CHECK(std::abs(M.M(a, b) - expect) < 1e-12);
    }
  }
}

TEST_CASE("gaussian kernel closed form") {
  // F(x,xi) = exp(-(x^2+xi^2)/2) has kernel
  // (2 pi)^{-1/2} exp(-(a-b)^2/2) exp(-((a+b)/2)^2/2).
  PhaseGrid g = make_grid(1, 64, 8.0);
  Kernel K = weyl_kernel(symbol_gaussian(1, 0.5), g);
  const Axis xl = g.x_axis();
  Real worst = 0.0;
  for (int a = 0; a < g.n; ++a) {
    for (int b = 0; b < g.n; ++b) {
      const Real u = xl.value(a) - xl.value(b);
      const Real mid = 0.5 * (xl.value(a) + xl.value(b));
      const Real expect =
          std::exp(-0.5 * u * u) * std::exp(-0.5 * mid * mid) /
          std::sqrt(2.0 * pi);
      worst = std::max(worst, std::abs(K.K(a, b) - expect));
    }
  }
  CHECK(worst * std::sqrt(2.0 * pi) < 1e-12);  // relative to the peak
}

TEST_CASE("sampled-field path matches pointwise evaluation") {
  // The two paths agree up to trig-interpolation aliasing, which for a
  // balanced Gaussian is limited by the grid's uncertainty budget
  // exp(-pi n / 4): tight at n = 64, only ~2e-3 at n = 8.  Exact validation
  // of the sampled-field path is the section test below.
  for (auto [dim, n, L, lam, tol] :
       {std::tuple{1, 64, 8.0, 0.5, 1e-9}, std::tuple{2, 8, 4.0, 0.64, 1e-2}}) {
    PhaseGrid g = make_grid(dim, n, L);
    SymbolFn F = symbol_gaussian(dim, lam);
    Kernel direct = weyl_kernel(F, g);
    Kernel via_field = weyl_kernel(sample(F, g));
    CHECK(max_abs(direct.K - via_field.K) * std::pow(g.h(), dim) < tol);
  }
}

TEST_CASE("twist round trip and zero-gauge reduction") {
  PhaseGrid g = make_grid(2, 8, 4.0);
  std::mt19937_64 rng(5);
  std::normal_distribution<Real> N(0.0, 1.0);
  Kernel K;
  K.grid = g;
  K.K = Matrix::NullaryExpr(g.points_x(), g.points_x(),
                            [&](Eigen::Index, Eigen::Index) {
                              return Complex(N(rng), N(rng));
                            });
  VectorPotential A = gauge_symmetric(1.3);
  Kernel back = untwist_kernel(twist_kernel(K, A), A);
  CHECK(max_abs(back.K - K.K) < 1e-13);
  Kernel same = twist_kernel(K, gauge_zero(2));
  CHECK(max_abs(same.K - K.K) == 0.0);
}

TEST_CASE("real symbols give self-adjoint operators") {
  PhaseGrid g = make_grid(2, 8, 4.0);
  SymbolFn F = symbol_poly_gaussian(2, {1, 0}, {0, 1}, 0.4, 1.0);
  OperatorMatrix M = op_matrix(F, gauge_symmetric(1.0), g);
  CHECK(max_abs(M.M - M.M.adjoint()) < 1e-12);
}

TEST_CASE("gauge change conjugates the operator") {
  // A_landau + grad(b x1 x2 / 2) = A_symmetric, so the two quantizations are
  // unitarily equivalent via the diagonal phase U = diag(e^{i b x1 x2 / 2}).
  const Real b = 1.0;
  PhaseGrid g = make_grid(2, 8, 4.0);
  SymbolFn F = symbol_gaussian(2, 0.5);
  OperatorMatrix Ml = op_matrix(F, gauge_landau(b), g);
  OperatorMatrix Ms = op_matrix(F, gauge_symmetric(b), g);
  GaugeFunction phi = gauge_fn_landau_to_symmetric(b);
  const Axis xl = g.x_axis();
  Vector u(g.points_x());
  for (long a = 0; a < g.points_x(); ++a)
    u(a) = std::exp(iu * phi.phi(g.point_flat(xl, a)));
  Matrix conj = u.asDiagonal() * Ml.M * u.conjugate().asDiagonal();
  CHECK(max_abs(Ms.M - conj) < 1e-12);

  RealVector sl = sorted_singular_values(Ml.M);
  RealVector ss = sorted_singular_values(Ms.M);
  CHECK((sl - ss).cwiseAbs().maxCoeff() / sl(0) < 1e-12);
}

TEST_CASE("weyl system matrix") {
  PhaseGrid g = make_grid(1, 64, 8.0);
  VectorPotential A0 = gauge_zero(1);

  PhasePoint zero;
  zero.x = {0.0, 0.0};
  zero.xi = {0.0, 0.0};
  OperatorMatrix W0 = weyl_system_matrix(zero, A0, g);
  CHECK(max_abs(W0.M - Matrix::Identity(g.n, g.n)) < 1e-14);

  // Nonzero lattice point, zero field: check the explicit phase formula.
  PhasePoint Z;
  Z.x = {4 * g.h(), 0.0};
  Z.xi = {3 * g.k(), 0.0};
  OperatorMatrix W = weyl_system_matrix(Z, A0, g);
  const Axis xl = g.x_axis();
  for (int a = 0; a < g.n; ++a) {
    for (int bcol = 0; bcol < g.n; ++bcol) {
      Complex expect = 0.0;
      if (bcol == a + 4)
        expect = std::exp(iu * (0.5 * Z.xi[0] * Z.x[0] - Z.xi[0] * xl.value(a)));
      CHECK(std::abs(W.M(a, bcol) - expect) < 1e-13);
    }
  }

  // Norm preservation on a state supported away from the boundary.
  Vector v(g.n);
  for (int a = 0; a < g.n; ++a) {
    const Real x = xl.value(a);
    v(a) = std::exp(-4.0 * x * x) * Complex(1.0, 0.3);
  }
  VectorPotential A = gauge_symmetric(0.0);
  CHECK(std::abs((W.M * v).norm() - v.norm()) / v.norm() < 1e-12);

  // Off-lattice translation components are rejected.
  PhasePoint bad;
  bad.x = {0.37, 0.0};
  bad.xi = {0.0, 0.0};
  CHECK_THROWS(weyl_system_matrix(bad, A0, g));
}

TEST_CASE("weyl system conjugation translates the symbol") {
  // W(Z)^* Op(g) W(Z) = Op(g(. - Z)) at zero field, up to box truncation.
  PhaseGrid g = make_grid(1, 64, 8.0);
  VectorPotential A0 = gauge_zero(1);
  SymbolFn F = symbol_gaussian(1, 0.5);
  PhasePoint Z;
  Z.x = {4 * g.h(), 0.0};
  Z.xi = {3 * g.k(), 0.0};
  OperatorMatrix M = to_operator(weyl_kernel(F, g));
  OperatorMatrix W = weyl_system_matrix(Z, A0, g);
  Matrix lhs = W.M.adjoint() * M.M * W.M;
  Matrix rhs = to_operator(weyl_kernel(F.translated(Z), g)).M;
  CHECK(max_abs(lhs - rhs) < 1e-8);
}

TEST_CASE("inverse kernel map recovers the unit symbol from the delta kernel") {
  for (auto [dim, n] : {std::pair{1, 16}, std::pair{2, 8}}) {
    PhaseGrid g = make_grid(dim, n, 6.0);
    Kernel K;
    K.grid = g;
    K.K = Matrix::Identity(g.points_x(), g.points_x()) / std::pow(g.h(), dim);
    SymbolField F = inverse_weyl(K);
    CHECK(max_abs(F.vals - Matrix::Ones(F.vals.rows(), F.vals.cols())) < 1e-12);
  }
}

TEST_CASE("inverse kernel map round trips a gaussian symbol") {
  PhaseGrid g = make_grid(1, 64, 8.0);
  SymbolField F = sample(symbol_gaussian(1, 0.5), g);
  SymbolField back = inverse_weyl(weyl_kernel(F));
  CHECK(max_abs(back.vals - F.vals) < 1e-10);
}

namespace {

bool in_window(const PhaseGrid& g, long a, long b) {
  const auto ia = g.unflatten(a, g.n), ib = g.unflatten(b, g.n);
  for (int ax = 0; ax < g.dim; ++ax)
    if (std::abs(ia[ax] - ib[ax]) >= g.n / 2) return false;
  return true;
}

Kernel random_window_kernel(const PhaseGrid& g, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> N(0.0, 1.0);
  Kernel K;
  K.grid = g;
  K.K = Matrix::Zero(g.points_x(), g.points_x());
  for (long a = 0; a < g.points_x(); ++a)
    for (long b = 0; b < g.points_x(); ++b)
      if (in_window(g, a, b)) K.K(a, b) = Complex(N(rng), N(rng));
  return K;
}

}  // namespace

TEST_CASE("inverse kernel map is an exact section of the forward map") {
  // For kernels supported in the strict per-axis difference window, the
  // forward map reproduces every window entry of the original kernel, and
  // produces zeros outside the window.
  for (auto [dim, n] : {std::pair{1, 16}, std::pair{2, 8}}) {
    PhaseGrid g = make_grid(dim, n, 6.0);
    Kernel K = random_window_kernel(g, 77 + dim);
    Kernel K2 = weyl_kernel(inverse_weyl(K));
    Real worst_in = 0.0, worst_out = 0.0;
    for (long a = 0; a < g.points_x(); ++a)
      for (long b = 0; b < g.points_x(); ++b)
        (in_window(g, a, b) ? worst_in : worst_out) =
            std::max(in_window(g, a, b) ? worst_in : worst_out,
                     std::abs(K2.K(a, b) - K.K(a, b)));
    CHECK(worst_in < 1e-12);
    CHECK(worst_out < 1e-12);
  }
}

TEST_CASE("inverse kernel map is idempotent on its image") {
  for (auto [dim, n] : {std::pair{1, 32}, std::pair{2, 8}}) {
    PhaseGrid g = make_grid(dim, n, 5.0);
    SymbolField F = inverse_weyl(random_window_kernel(g, 40 + dim));
    SymbolField back = inverse_weyl(weyl_kernel(F));
    CHECK(max_abs(back.vals - F.vals) / max_abs(F.vals) < 1e-11);
  }
}
