#include "magweyl/transforms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace magweyl {

namespace {

TransformTables build_tables(const PhaseGrid& g) {
  TransformTables t;
  t.grid = g;
  const int n = g.n;
  const Axis xi = g.xi_axis();
  const Axis xir = g.xi_refined();
  const Axis u = g.y_axis();  // u-spectrum nodes coincide with the y lattice
  const Axis xr = g.x_refined();
  const Axis kap = g.kappa_axis();

  t.xi_analysis = Matrix(n, n);
  for (int q = 0; q < n; ++q)
    for (int m = 0; m < n; ++m)
      t.xi_analysis(q, m) = std::exp(-iu * xi.value(m) * u.value(q)) / Real(n);

  t.xi_synthesis = Matrix(n, n);
  for (int m = 0; m < n; ++m)
    for (int q = 0; q < n; ++q)
      t.xi_synthesis(m, q) = std::exp(iu * xi.value(m) * u.value(q));

  // Extended synthesis onto the refined xi axis; the lone edge coefficient
  // u = -L is split between u = -L and u = +L to keep real fields real.
  Matrix ext(2 * n, n);
  for (int m = 0; m < 2 * n; ++m) {
    for (int q = 0; q < n; ++q) {
      if (q == 0)
        ext(m, q) = std::cos(xir.value(m) * g.box);
      else
        ext(m, q) = std::exp(iu * xir.value(m) * u.value(q));
    }
  }
  t.xi_upsample = ext * t.xi_analysis;

  t.x_analysis = Matrix(2 * n, 2 * n);
  for (int v = 0; v < 2 * n; ++v)
    for (int p = 0; p < 2 * n; ++p)
      t.x_analysis(v, p) = std::exp(-iu * kap.value(v) * xr.value(p)) / Real(2 * n);
  t.x_synthesis = Matrix(2 * n, 2 * n);
  for (int p = 0; p < 2 * n; ++p)
    for (int v = 0; v < 2 * n; ++v)
      t.x_synthesis(p, v) = std::exp(iu * kap.value(v) * xr.value(p));

  RealVector band(2 * n);
  for (int v = 0; v < 2 * n; ++v) {
    const int off = std::abs(v - n);
    band(v) = off < n / 2 ? 1.0 : (off == n / 2 ? 0.5 : 0.0);
  }
  t.x_lowpass = t.x_synthesis * band.cast<Complex>().asDiagonal() * t.x_analysis;

  const Real c = 1.0 / std::sqrt(2.0 * pi);
  t.mixed_fwd = Matrix(n, n);
  for (int r = 0; r < n; ++r)
    for (int m = 0; m < n; ++m)
      t.mixed_fwd(r, m) = c * g.k() * std::exp(-iu * xi.value(m) * u.value(r));
  t.mixed_inv = Matrix(n, n);
  for (int m = 0; m < n; ++m)
    for (int r = 0; r < n; ++r)
      t.mixed_inv(m, r) = c * g.h() * std::exp(iu * xi.value(m) * u.value(r));

  RealVector even(n), odd(n);
  for (int q = 0; q < n; ++q) {
    const bool is_even = ((q - n / 2) % 2) == 0;
    even(q) = is_even ? 1.0 : 0.0;
    odd(q) = is_even ? 0.0 : 1.0;
  }
  t.parity_even = t.xi_synthesis * even.cast<Complex>().asDiagonal() * t.xi_analysis;
  t.parity_odd = t.xi_synthesis * odd.cast<Complex>().asDiagonal() * t.xi_analysis;
  return t;
}

std::map<std::tuple<int, int, Real>, std::unique_ptr<TransformTables>> cache;
std::mutex cache_mutex;

}  // namespace

const TransformTables& transforms_for(const PhaseGrid& g) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(g.dim, g.n, g.box);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<TransformTables>(build_tables(g))).first;
  return *it->second;
}

Matrix map_columns(const PhaseGrid& g, const Matrix& field, const Matrix& M0,
                   const Matrix& M1) {
  if (g.dim == 1) {
    require(M0.cols() == field.cols(), "map_columns: axis size mismatch");
    return field * M0.transpose();
  }
  const long ci = M0.cols(), co = M0.rows();
  require(M1.cols() == ci && M1.rows() == co, "map_columns: axes must match");
  require(field.cols() == ci * ci, "map_columns: axis size mismatch");
  Matrix out(field.rows(), co * co);
  Matrix tmp(ci, ci);
  for (long r = 0; r < field.rows(); ++r) {
    for (long a = 0; a < ci; ++a)
      for (long b = 0; b < ci; ++b) tmp(a, b) = field(r, a * ci + b);
    Matrix res = M0 * tmp * M1.transpose();
    for (long a = 0; a < co; ++a)
      for (long b = 0; b < co; ++b) out(r, a * co + b) = res(a, b);
  }
  return out;
}

Matrix map_columns(const PhaseGrid& g, const Matrix& field, const Matrix& M) {
  return map_columns(g, field, M, M);
}

Matrix map_rows(const PhaseGrid& g, const Matrix& field, const Matrix& M0,
                const Matrix& M1) {
  if (g.dim == 1) {
    require(M0.cols() == field.rows(), "map_rows: axis size mismatch");
    return M0 * field;
  }
  const long ci = M0.cols(), co = M0.rows();
  require(M1.cols() == ci && M1.rows() == co, "map_rows: axes must match");
  require(field.rows() == ci * ci, "map_rows: axis size mismatch");
  Matrix out(co * co, field.cols());
  Matrix tmp(ci, ci);
  for (long c = 0; c < field.cols(); ++c) {
    for (long a = 0; a < ci; ++a)
      for (long b = 0; b < ci; ++b) tmp(a, b) = field(a * ci + b, c);
    Matrix res = M0 * tmp * M1.transpose();
    for (long a = 0; a < co; ++a)
      for (long b = 0; b < co; ++b) out(a * co + b, c) = res(a, b);
  }
  return out;
}

Matrix map_rows(const PhaseGrid& g, const Matrix& field, const Matrix& M) {
  return map_rows(g, field, M, M);
}

Matrix map_columns_by_row_parity(const PhaseGrid& g, const Matrix& field,
                                 const Matrix& even, const Matrix& odd) {
  Matrix out(field.rows(), field.cols());
  const int rc = 2 * g.n;
  for (long r = 0; r < field.rows(); ++r) {
    const auto idx = g.unflatten(r, rc);
    const Matrix& M0 = (idx[0] % 2 == 0) ? even : odd;
    if (g.dim == 1) {
      out.row(r) = field.row(r) * M0.transpose();
    } else {
      const Matrix& M1 = (idx[1] % 2 == 0) ? even : odd;
      const long ci = M0.cols();
      Matrix tmp(ci, ci);
      for (long a = 0; a < ci; ++a)
        for (long b = 0; b < ci; ++b) tmp(a, b) = field(r, a * ci + b);
      Matrix res = M0 * tmp * M1.transpose();
      for (long a = 0; a < ci; ++a)
        for (long b = 0; b < ci; ++b) out(r, a * ci + b) = res(a, b);
    }
  }
  return out;
}

}  // namespace magweyl
