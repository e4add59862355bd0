#pragma once

#include <array>

#include "trisphere/geometry.hpp"

namespace trisphere::fixtures {

// Reference table values, used only for comparison.

struct QuadraticRow {
  PolyhedronKind kind;
  double alpha_f, alpha_g, d_r, k_min, k_max;
};

struct CubicRow {
  PolyhedronKind kind;
  double alpha, beta, gamma, d_r, k_min, k_max;
};

struct QuarticRow {
  PolyhedronKind kind;
  double alpha, beta, gamma, zeta, xi, d_r, k_min, k_max;
};

inline constexpr std::array<QuadraticRow, 3> kTable1{{
    {PolyhedronKind::Tetrahedron, 3.060496, 3.132163, 0.192853, -0.19, 0.16},
    {PolyhedronKind::Octahedron, 1.965622, 1.968975, 0.049691, 0.01, 0.41},
    {PolyhedronKind::Icosahedron, 1.371294, 1.371371, 0.008604, 0.30, 0.71},
}};

inline constexpr std::array<CubicRow, 3> kTable2{{
    {PolyhedronKind::Tetrahedron, 1.333333, 1.000000, 3.666667, 0.370370, 0.11, 3.24},
    {PolyhedronKind::Octahedron, 1.000000, 0.666667, 1.732051, 0.090551, 0.25, 1.69},
    {PolyhedronKind::Icosahedron, 0.793989, 0.460655, 1.186755, 0.016690, 0.52, 1.25},
}};

inline constexpr std::array<QuarticRow, 3> kTable3{{
    {PolyhedronKind::Tetrahedron, 1.175523, 0.526570, 0.968062, 2.053140, 1.313741, 0.017296, 0.68, 1.24},
    {PolyhedronKind::Octahedron, 1.000000, 0.412772, 0.775181, 1.000000, 0.550362, 0.001019, 0.93, 1.03},
    {PolyhedronKind::Icosahedron, 0.857991, 0.317543, 0.617022, 0.659094, 0.344164, 0.000017, 0.99, 1.00},
}};

inline constexpr double kParameterTolerance = 1e-5;
inline constexpr double kCurvatureTolerance = 0.005;

}  // namespace trisphere::fixtures
