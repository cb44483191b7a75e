#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace magweyl {

using Real = double;
using Complex = std::complex<Real>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

inline constexpr Real pi = 3.14159265358979323846;
inline constexpr Complex iu{0.0, 1.0};

// Position or momentum coordinate; only the first `dim` entries of a Coord
// are meaningful.
using Coord = std::array<Real, 2>;

struct PhasePoint {
  Coord x{0.0, 0.0};
  Coord xi{0.0, 0.0};
};

inline Coord coord_add(const Coord& a, const Coord& b) {
  return {a[0] + b[0], a[1] + b[1]};
}

inline Coord coord_sub(const Coord& a, const Coord& b) {
  return {a[0] - b[0], a[1] - b[1]};
}

inline Coord coord_scale(Real s, const Coord& a) { return {s * a[0], s * a[1]}; }

inline Real dot(const Coord& a, const Coord& b, int dim) {
  Real s = 0.0;
  for (int i = 0; i < dim; ++i) s += a[i] * b[i];
  return s;
}

// Standard symplectic form on phase space: sigma(X, Y) = <xi, y> - <x, eta>.
inline Real symplectic_form(const PhasePoint& X, const PhasePoint& Y, int dim) {
  return dot(X.xi, Y.x, dim) - dot(X.x, Y.xi, dim);
}

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace magweyl
