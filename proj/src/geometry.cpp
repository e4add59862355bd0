#include "trisphere/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trisphere {

double polyhedron_c(PolyhedronKind kind) {
  switch (kind) {
    case PolyhedronKind::Tetrahedron:
      return 2.0 * std::sqrt(2.0) / 3.0;
    case PolyhedronKind::Octahedron:
      return std::sqrt(6.0) / 3.0;
    case PolyhedronKind::Icosahedron:
      return std::sqrt(2.0 * (5.0 - std::sqrt(5.0)) / 15.0);
  }
  throw std::invalid_argument("unknown polyhedron kind");
}

std::string_view to_string(PolyhedronKind kind) {
  switch (kind) {
    case PolyhedronKind::Tetrahedron:
      return "tetrahedron";
    case PolyhedronKind::Octahedron:
      return "octahedron";
    case PolyhedronKind::Icosahedron:
      return "icosahedron";
  }
  return "unknown";
}

PolyhedronKind parse_kind(std::string_view name) {
  if (name == "tetrahedron" || name == "tetra" || name == "tet") return PolyhedronKind::Tetrahedron;
  if (name == "octahedron" || name == "octa" || name == "oct") return PolyhedronKind::Octahedron;
  if (name == "icosahedron" || name == "icosa" || name == "ico") return PolyhedronKind::Icosahedron;
  throw std::invalid_argument("unknown polyhedron: " + std::string(name));
}

int vertex_valence(PolyhedronKind kind) {
  switch (kind) {
    case PolyhedronKind::Tetrahedron:
      return 3;
    case PolyhedronKind::Octahedron:
      return 4;
    case PolyhedronKind::Icosahedron:
      return 5;
  }
  return 0;
}

int face_count(PolyhedronKind kind) {
  switch (kind) {
    case PolyhedronKind::Tetrahedron:
      return 4;
    case PolyhedronKind::Octahedron:
      return 8;
    case PolyhedronKind::Icosahedron:
      return 20;
  }
  return 0;
}

SphericalTriangle canonical_triangle(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("c must lie in (0, 1)");
  const double z = std::sqrt(1.0 - c * c);
  const double h = std::sqrt(3.0) / 2.0 * c;
  SphericalTriangle t;
  t.c = c;
  t.v[0] = Vec3(c, 0.0, z);
  t.v[1] = Vec3(-0.5 * c, h, z);
  t.v[2] = Vec3(-0.5 * c, -h, z);
  return t;
}

SphericalTriangle canonical_triangle(PolyhedronKind kind) {
  return canonical_triangle(polyhedron_c(kind));
}

double l1_distance_to_simplex(BarycentricPoint p) {
  const double du = std::max(0.0, -p.u);
  const double dv = std::max(0.0, -p.v);
  const double excess = std::max(0.0, std::max(p.u, 0.0) + std::max(p.v, 0.0) - 1.0);
  return du + dv + excess;
}

bool in_simplex(BarycentricPoint p, double tol) {
  return p.u >= -tol && p.v >= -tol && p.u + p.v <= 1.0 + tol;
}

OmegaPoint to_omega(BarycentricPoint p) {
  const double w = p.w();
  return {p.u * p.v + p.u * w + p.v * w, p.u * p.v * w};
}

OmegaBounds omega_bounds_raw(double e2) {
  if (!(e2 >= -kOmegaTolerance && e2 <= 1.0 / 3.0 + kOmegaTolerance)) {
    throw std::domain_error("e2 outside [0, 1/3]: " + std::to_string(e2));
  }
  e2 = std::clamp(e2, 0.0, 1.0 / 3.0);
  const double root = std::sqrt(std::max(0.0, 1.0 - 3.0 * e2));
  const double base = 9.0 * e2 - 2.0;
  const double spread = (2.0 - 6.0 * e2) * root;
  return {(base - spread) / 27.0, (base + spread) / 27.0};
}

OmegaBounds omega_bounds(double e2) {
  OmegaBounds b = omega_bounds_raw(e2);
  b.lo = std::max(0.0, b.lo);
  return b;
}

bool in_omega(OmegaPoint q, double tol) {
  if (q.e2 < -tol || q.e2 > 1.0 / 3.0 + tol || q.e3 < -tol) return false;
  const OmegaBounds b = omega_bounds(q.e2);
  return q.e3 >= b.lo - tol && q.e3 <= b.hi + tol;
}

}  // namespace trisphere
