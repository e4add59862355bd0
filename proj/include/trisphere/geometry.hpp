#pragma once

#include <array>
#include <string_view>
#include <utility>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace trisphere {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

enum class PolyhedronKind { Tetrahedron, Octahedron, Icosahedron };

inline constexpr std::array<PolyhedronKind, 3> kAllKinds = {
    PolyhedronKind::Tetrahedron, PolyhedronKind::Octahedron, PolyhedronKind::Icosahedron};

/// c = cos(psi) of the projected face: 2*sqrt(2)/3, sqrt(6)/3, sqrt(2(5-sqrt5)/15).
double polyhedron_c(PolyhedronKind kind);

std::string_view to_string(PolyhedronKind kind);
/// Accepts "tetrahedron"/"tetra"/"tet", "octahedron"/"octa"/"oct", "icosahedron"/"icosa"/"ico".
PolyhedronKind parse_kind(std::string_view name);

/// Number of faces meeting at a vertex (3, 4, 5).
int vertex_valence(PolyhedronKind kind);
int face_count(PolyhedronKind kind);

/// Equilateral spherical triangle with mass point (0,0,1). Vertices are
/// ordered counter-clockwise seen from outside.
struct SphericalTriangle {
  std::array<Vec3, 3> v;
  double c = 0.0;
};

SphericalTriangle canonical_triangle(double c);
SphericalTriangle canonical_triangle(PolyhedronKind kind);

/// Point of the parameter simplex; w = 1 - u - v.
struct BarycentricPoint {
  double u = 0.0;
  double v = 0.0;

  double w() const { return 1.0 - u - v; }
  bool operator==(const BarycentricPoint&) const = default;
};

/// l1 distance from (u, v) to the simplex.
double l1_distance_to_simplex(BarycentricPoint p);
bool in_simplex(BarycentricPoint p, double tol = 0.0);

/// Elementary symmetric values (e2, e3) of (u, v, w).
struct OmegaPoint {
  double e2 = 0.0;
  double e3 = 0.0;
};

OmegaPoint to_omega(BarycentricPoint p);

struct OmegaBounds {
  double lo = 0.0;
  double hi = 0.0;
};

/// e3 bounds of the image domain at fixed e2; lo is clamped at 0.
/// Throws std::domain_error for e2 outside [0, 1/3].
OmegaBounds omega_bounds(double e2);
/// Unclamped closed-form bounds.
OmegaBounds omega_bounds_raw(double e2);

inline constexpr double kOmegaTolerance = 1e-12;
bool in_omega(OmegaPoint q, double tol = kOmegaTolerance);

}  // namespace trisphere
