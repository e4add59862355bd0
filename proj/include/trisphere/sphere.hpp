#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trisphere/bezier.hpp"
#include "trisphere/continuity.hpp"
#include "trisphere/geometry.hpp"

namespace trisphere {

/// Platonic solid inscribed in the unit sphere. Faces are counter-clockwise
/// seen from outside.
struct Polyhedron {
  PolyhedronKind kind = PolyhedronKind::Tetrahedron;
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
};

Polyhedron make_polyhedron(PolyhedronKind kind);

struct SphereFace {
  ControlNet net{0};
  /// Rotation taking the canonical triangle onto this face.
  Mat3 transform = Mat3::Identity();
  std::array<int, 3> vertices{};
};

/// Edge e of a face is the one opposite its corner e.
struct EdgeAdjacency {
  int face_a = 0;
  int edge_a = 0;
  int face_b = 0;
  int edge_b = 0;
};

struct SphereSpline {
  PolyhedronKind kind = PolyhedronKind::Tetrahedron;
  Polyhedron polyhedron;
  std::vector<SphereFace> faces;
  std::vector<EdgeAdjacency> adjacency;
};

/// Rotates the canonical net onto every face. Throws std::invalid_argument
/// when the net corners are not the canonical vertices (> 1e-10).
SphereSpline build_sphere(PolyhedronKind kind, const ControlNet& net);

/// Faces around each polyhedron vertex in cyclic order.
std::vector<std::vector<int>> vertex_rings(const SphereSpline& sphere);

struct SphereCertification {
  std::vector<ContinuityCertificate> edges;
  std::vector<ContinuityCertificate> vertices;

  bool pass() const;
  std::size_t failures() const;
};

SphereCertification certify_sphere(const SphereSpline& sphere, Smoothness level, int samples = 101);

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  /// Per-vertex Gaussian curvature; empty when not requested.
  std::vector<double> curvature;
};

/// Uniform barycentric sampling with subdivisions^2 triangles per face,
/// welding coincident vertices (1e-9).
Mesh tessellate(const SphereSpline& sphere, int subdivisions, bool with_curvature);

enum class MeshFormat { Obj, Ply };
MeshFormat parse_mesh_format(std::string_view name);

void write_obj(std::ostream& out, const Mesh& mesh);
/// Binary little-endian PLY with float64 coordinates and optional quality.
void write_ply(std::ostream& out, const Mesh& mesh);
void write_mesh_file(const Mesh& mesh, MeshFormat format, const std::string& path);
void export_mesh(const SphereSpline& sphere, int subdivisions, bool with_curvature, MeshFormat format,
                 const std::string& path);

struct MeshAudit {
  std::size_t open_edges = 0;
  std::size_t nonmanifold_edges = 0;
  std::size_t misoriented_edges = 0;
  std::size_t inward_triangles = 0;
  double min_radius = 0.0;
  double max_radius = 0.0;

  bool watertight() const { return open_edges == 0 && nonmanifold_edges == 0 && misoriented_edges == 0; }
  bool outward() const { return inward_triangles == 0; }
  double radial_deviation() const;
};

MeshAudit audit_mesh(const Mesh& mesh);

}  // namespace trisphere
