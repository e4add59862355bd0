#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "trisphere/optimal_params.hpp"
#include "trisphere/sphere.hpp"

using namespace trisphere;

namespace {

ControlNet optimal_net(PolyhedronKind kind, int degree) {
  return optimal_solution(kind, degree, ErrorMeasure::Radial).net;
}

double lattice_radial_max(const ControlNet& net, int n) {
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      worst = std::max(worst, std::abs(evaluate_position(net, {double(i) / n, double(j) / n}).norm() - 1.0));
    }
  }
  return worst;
}

Vec3 edge_point(const SphereFace& face, int edge, double t) {
  // Edge e is opposite corner e; walk from corner e+1 to corner e+2.
  double lam[3] = {0.0, 0.0, 0.0};
  lam[(edge + 1) % 3] = 1.0 - t;
  lam[(edge + 2) % 3] = t;
  return evaluate_position(face.net, {lam[0], lam[1]});
}

}  // namespace

TEST(Polyhedron, CountsAndUnitVertices) {
  const int vertices[] = {4, 6, 12};
  const int faces[] = {4, 8, 20};
  for (int k = 0; k < 3; ++k) {
    const Polyhedron p = make_polyhedron(kAllKinds[k]);
    EXPECT_EQ(static_cast<int>(p.vertices.size()), vertices[k]);
    EXPECT_EQ(static_cast<int>(p.faces.size()), faces[k]);
    for (const Vec3& v : p.vertices) EXPECT_NEAR(v.norm(), 1.0, 1e-15);
    for (const auto& f : p.faces) {
      const Vec3 n = (p.vertices[f[1]] - p.vertices[f[0]]).cross(p.vertices[f[2]] - p.vertices[f[0]]);
      EXPECT_GT(n.dot(p.vertices[f[0]]), 0.0);
    }
  }
}

TEST(BuildSphere, RotationsAndControls) {
  for (auto kind : kAllKinds) {
    const SphereSpline s = build_sphere(kind, optimal_net(kind, 4));
    EXPECT_EQ(static_cast<int>(s.faces.size()), face_count(kind));
    for (const SphereFace& f : s.faces) {
      EXPECT_LT((f.transform * f.transform.transpose() - Mat3::Identity()).norm(), 1e-14);
      EXPECT_NEAR(f.transform.determinant(), 1.0, 1e-14);
      for (int a = 0; a < 3; ++a) {
        EXPECT_NEAR(f.net.corner(a).norm(), 1.0, 1e-13);
        EXPECT_LT((f.net.corner(a) - s.polyhedron.vertices[f.vertices[a]]).norm(), 1e-13);
      }
    }
  }
}

TEST(BuildSphere, EveryEdgeInTwoFacesWithCoincidentBoundaries) {
  for (auto kind : kAllKinds) {
    const SphereSpline s = build_sphere(kind, optimal_net(kind, 3));
    EXPECT_EQ(static_cast<int>(s.adjacency.size()), face_count(kind) * 3 / 2);
    std::map<std::pair<int, int>, int> uses;
    for (const auto& f : s.polyhedron.faces) {
      for (int a = 0; a < 3; ++a) ++uses[{std::min(f[a], f[(a + 1) % 3]), std::max(f[a], f[(a + 1) % 3])}];
    }
    for (const auto& [edge, count] : uses) EXPECT_EQ(count, 2);
    for (const EdgeAdjacency& adj : s.adjacency) {
      const SphereFace& a = s.faces[adj.face_a];
      const SphereFace& b = s.faces[adj.face_b];
      for (int k = 0; k <= 32; ++k) {
        const double t = k / 32.0;
        // Neighbours traverse the shared edge in opposite directions.
        EXPECT_LT((edge_point(a, adj.edge_a, t) - edge_point(b, adj.edge_b, 1.0 - t)).norm(), 1e-12);
      }
    }
  }
}

TEST(BuildSphere, RejectsForeignNets) {
  EXPECT_THROW(build_sphere(PolyhedronKind::Octahedron, optimal_net(PolyhedronKind::Tetrahedron, 2)),
               std::invalid_argument);
}

TEST(BuildSphere, VertexValence) {
  for (auto kind : kAllKinds) {
    const SphereSpline s = build_sphere(kind, optimal_net(kind, 2));
    const auto rings = vertex_rings(s);
    EXPECT_EQ(rings.size(), s.polyhedron.vertices.size());
    for (const auto& ring : rings) EXPECT_EQ(static_cast<int>(ring.size()), vertex_valence(kind));
  }
}

TEST(BuildSphere, RadialErrorEqualsCanonicalPatch) {
  const int n = 144;
  for (auto kind : kAllKinds) {
    for (int degree : {2, 3, 4}) {
      const OptimalSolution sol = optimal_solution(kind, degree, ErrorMeasure::Radial);
      const double canonical = lattice_radial_max(sol.net, n);
      double worst = 0.0;
      for (const SphereFace& f : build_sphere(kind, sol.net).faces) worst = std::max(worst, lattice_radial_max(f.net, n));
      EXPECT_NEAR(worst, canonical, 1e-12);
      if (!(kind == PolyhedronKind::Icosahedron && degree == 4)) {
        EXPECT_NEAR(worst, sol.d_r, 1e-12);
      }
    }
  }
}

TEST(CertifySphere, CubicIcosahedronIsG2) {
  const SphereCertification cert = certify_sphere(build_sphere(PolyhedronKind::Icosahedron, optimal_net(PolyhedronKind::Icosahedron, 3)),
                                                  Smoothness::G2);
  EXPECT_EQ(cert.edges.size(), 30u);
  EXPECT_EQ(cert.vertices.size(), 12u);
  EXPECT_TRUE(cert.pass());
  EXPECT_EQ(cert.failures(), 0u);
}

TEST(CertifySphere, QuarticSpheresAreG2) {
  for (auto kind : kAllKinds) {
    const SphereCertification cert = certify_sphere(build_sphere(kind, optimal_net(kind, 4)), Smoothness::G2);
    EXPECT_TRUE(cert.pass()) << to_string(kind);
  }
}

TEST(CertifySphere, QuadraticSpheresAreOnlyG0) {
  for (auto kind : kAllKinds) {
    const SphereSpline s = build_sphere(kind, optimal_net(kind, 2));
    const SphereCertification g1 = certify_sphere(s, Smoothness::G1);
    for (const auto& e : g1.edges) EXPECT_FALSE(e.pass);
    for (const auto& v : g1.vertices) EXPECT_FALSE(v.pass);
    EXPECT_EQ(g1.failures(), g1.edges.size() + g1.vertices.size());
    EXPECT_TRUE(certify_sphere(s, Smoothness::G0).pass());
  }
}

TEST(Tessellate, SingleSubdivisionGivesThePolyhedron) {
  for (auto kind : kAllKinds) {
    const SphereSpline s = build_sphere(kind, optimal_net(kind, 3));
    const Mesh m = tessellate(s, 1, false);
    EXPECT_EQ(m.triangles.size(), s.polyhedron.faces.size());
    EXPECT_EQ(m.vertices.size(), s.polyhedron.vertices.size());
    for (const Vec3& v : m.vertices) EXPECT_NEAR(v.norm(), 1.0, 1e-13);
    EXPECT_TRUE(m.curvature.empty());
  }
}

TEST(Tessellate, OctahedronQuadraticStaysWithinRadialError) {
  const Mesh m = tessellate(build_sphere(PolyhedronKind::Octahedron, optimal_net(PolyhedronKind::Octahedron, 2)), 64, true);
  EXPECT_EQ(m.triangles.size(), 8u * 64 * 64);
  EXPECT_EQ(m.vertices.size(), 4u * 64 * 64 + 2);
  EXPECT_EQ(m.curvature.size(), m.vertices.size());
  const MeshAudit audit = audit_mesh(m);
  EXPECT_GE(audit.min_radius, 1.0 - 0.0497);
  EXPECT_LE(audit.max_radius, 1.0 + 0.0497);
  EXPECT_TRUE(audit.watertight());
  EXPECT_TRUE(audit.outward());
}

TEST(Tessellate, WatertightAndOutwardForAllKinds) {
  for (auto kind : kAllKinds) {
    for (int degree : {2, 3, 4}) {
      const Mesh m = tessellate(build_sphere(kind, optimal_net(kind, degree)), 7, false);
      const MeshAudit audit = audit_mesh(m);
      EXPECT_EQ(audit.open_edges, 0u);
      EXPECT_EQ(audit.nonmanifold_edges, 0u);
      EXPECT_EQ(audit.misoriented_edges, 0u);
      EXPECT_EQ(audit.inward_triangles, 0u);
      // Euler characteristic of the sphere.
      std::set<std::pair<int, int>> edges;
      for (const auto& t : m.triangles) {
        for (int a = 0; a < 3; ++a) edges.insert({std::min(t[a], t[(a + 1) % 3]), std::max(t[a], t[(a + 1) % 3])});
      }
      EXPECT_EQ(static_cast<long>(m.vertices.size()) - static_cast<long>(edges.size()) +
                    static_cast<long>(m.triangles.size()),
                2);
    }
  }
}

TEST(Export, ObjRoundTrip) {
  const Mesh m = tessellate(build_sphere(PolyhedronKind::Tetrahedron, optimal_net(PolyhedronKind::Tetrahedron, 2)), 8, true);
  std::ostringstream out;
  write_obj(out, m);
  std::istringstream in(out.str());
  std::vector<Vec3> v;
  std::vector<double> k;
  std::vector<std::array<int, 3>> f;
  std::string tag;
  while (in >> tag) {
    if (tag == "v") {
      Vec3 p;
      in >> p.x() >> p.y() >> p.z();
      v.push_back(p);
    } else if (tag == "#") {
      std::string name;
      double value;
      in >> name >> value;
      EXPECT_EQ(name, "K");
      k.push_back(value);
    } else if (tag == "f") {
      std::array<int, 3> t;
      in >> t[0] >> t[1] >> t[2];
      f.push_back({t[0] - 1, t[1] - 1, t[2] - 1});
    }
  }
  ASSERT_EQ(v.size(), m.vertices.size());
  EXPECT_EQ(f, m.triangles);
  EXPECT_EQ(k, m.curvature);
  for (std::size_t n = 0; n < v.size(); ++n) EXPECT_EQ(v[n], m.vertices[n]);
  EXPECT_EQ(f.size(), 4u * 64u);
}

TEST(Export, PlyRoundTrip) {
  const Mesh m = tessellate(build_sphere(PolyhedronKind::Octahedron, optimal_net(PolyhedronKind::Octahedron, 4)), 5, true);
  std::ostringstream out;
  write_ply(out, m);
  const std::string data = out.str();
  const std::string end = "end_header\n";
  const std::size_t body = data.find(end) + end.size();
  const std::string header = data.substr(0, body);
  EXPECT_NE(header.find("format binary_little_endian 1.0"), std::string::npos);
  EXPECT_NE(header.find("element vertex " + std::to_string(m.vertices.size())), std::string::npos);
  EXPECT_NE(header.find("property double quality"), std::string::npos);
  EXPECT_EQ(data.size(), body + m.vertices.size() * 32 + m.triangles.size() * 13);
  const char* p = data.data() + body;
  for (std::size_t n = 0; n < m.vertices.size(); ++n) {
    double xyzk[4];
    std::memcpy(xyzk, p, sizeof xyzk);
    p += sizeof xyzk;
    EXPECT_EQ(Vec3(xyzk[0], xyzk[1], xyzk[2]), m.vertices[n]);
    EXPECT_EQ(xyzk[3], m.curvature[n]);
  }
  for (const auto& t : m.triangles) {
    EXPECT_EQ(static_cast<unsigned char>(*p), 3u);
    std::int32_t idx[3];
    std::memcpy(idx, p + 1, sizeof idx);
    p += 13;
    EXPECT_EQ(idx[0], t[0]);
    EXPECT_EQ(idx[1], t[1]);
    EXPECT_EQ(idx[2], t[2]);
  }
}

TEST(Export, WritesFilesAndReportsIoErrors) {
  const SphereSpline s = build_sphere(PolyhedronKind::Icosahedron, optimal_net(PolyhedronKind::Icosahedron, 2));
  const auto path = std::filesystem::temp_directory_path() / "trisphere_export_test.obj";
  export_mesh(s, 2, false, MeshFormat::Obj, path.string());
  EXPECT_GT(std::filesystem::file_size(path), 0u);
  std::filesystem::remove(path);
  EXPECT_THROW(export_mesh(s, 2, false, MeshFormat::Ply, "/nonexistent-dir/x.ply"), std::ios_base::failure);
  EXPECT_EQ(parse_mesh_format("obj"), MeshFormat::Obj);
  EXPECT_EQ(parse_mesh_format("ply"), MeshFormat::Ply);
  EXPECT_THROW(parse_mesh_format("stl"), std::invalid_argument);
}
