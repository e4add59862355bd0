#include "trisphere/sphere.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <Eigen/LU>

#include "trisphere/curvature.hpp"

namespace trisphere {

namespace {

std::vector<Vec3> polyhedron_vertices(PolyhedronKind kind) {
  std::vector<Vec3> v;
  switch (kind) {
    case PolyhedronKind::Tetrahedron:
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case PolyhedronKind::Octahedron:
      v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case PolyhedronKind::Icosahedron: {
      const double phi = std::numbers::phi;
      for (double a : {1.0, -1.0}) {
        for (double b : {phi, -phi}) {
          v.emplace_back(0.0, a, b);
          v.emplace_back(a, b, 0.0);
          v.emplace_back(b, 0.0, a);
        }
      }
      break;
    }
  }
  for (auto& p : v) p.normalize();
  return v;
}

}  // namespace

Polyhedron make_polyhedron(PolyhedronKind kind) {
  Polyhedron poly;
  poly.kind = kind;
  poly.vertices = polyhedron_vertices(kind);
  const auto& v = poly.vertices;
  const int n = static_cast<int>(v.size());
  double edge = std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edge = std::min(edge, (v[a] - v[b]).norm());
  }
  auto adjacent = [&](int a, int b) { return std::abs((v[a] - v[b]).norm() - edge) < 1e-9; };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!adjacent(a, c) || !adjacent(b, c)) continue;
        if ((v[b] - v[a]).cross(v[c] - v[a]).dot(v[a] + v[b] + v[c]) > 0.0) {
          poly.faces.push_back({a, b, c});
        } else {
          poly.faces.push_back({a, c, b});
        }
      }
    }
  }
  if (static_cast<int>(poly.faces.size()) != face_count(kind)) {
    throw std::logic_error("polyhedron construction produced the wrong face count");
  }
  return poly;
}

SphereSpline build_sphere(PolyhedronKind kind, const ControlNet& net) {
  const SphericalTriangle tri = canonical_triangle(kind);
  for (int a = 0; a < 3; ++a) {
    if ((net.corner(a) - tri.v[a]).norm() > 1e-10) {
      throw std::invalid_argument("net corners are not the canonical triangle of the " +
                                  std::string(to_string(kind)));
    }
  }
  SphereSpline sphere;
  sphere.kind = kind;
  sphere.polyhedron = make_polyhedron(kind);
  Mat3 canon;
  for (int a = 0; a < 3; ++a) canon.col(a) = tri.v[a];
  const Mat3 canon_inv = canon.inverse();
  for (const auto& f : sphere.polyhedron.faces) {
    Mat3 target;
    for (int a = 0; a < 3; ++a) target.col(a) = sphere.polyhedron.vertices[f[a]];
    const Mat3 q = target * canon_inv;
    if ((q * q.transpose() - Mat3::Identity()).norm() > 1e-12 || q.determinant() < 0.0) {
      throw std::logic_error("face transform is not a rotation");
    }
    sphere.faces.push_back({net.transformed(q), q, f});
  }
  const auto& faces = sphere.polyhedron.faces;
  for (std::size_t fa = 0; fa < faces.size(); ++fa) {
    for (std::size_t fb = fa + 1; fb < faces.size(); ++fb) {
      int shared = 0;
      int opp_a = 0;
      int opp_b = 0;
      for (int a = 0; a < 3; ++a) {
        const bool in_b = std::find(faces[fb].begin(), faces[fb].end(), faces[fa][a]) != faces[fb].end();
        if (in_b) {
          ++shared;
        } else {
          opp_a = a;
        }
      }
      if (shared != 2) continue;
      for (int b = 0; b < 3; ++b) {
        if (std::find(faces[fa].begin(), faces[fa].end(), faces[fb][b]) == faces[fa].end()) opp_b = b;
      }
      sphere.adjacency.push_back({static_cast<int>(fa), opp_a, static_cast<int>(fb), opp_b});
    }
  }
  return sphere;
}

std::vector<std::vector<int>> vertex_rings(const SphereSpline& sphere) {
  const auto& faces = sphere.polyhedron.faces;
  std::vector<std::vector<int>> rings;
  for (int x = 0; x < static_cast<int>(sphere.polyhedron.vertices.size()); ++x) {
    std::vector<int> ring;
    int current = -1;
    for (int f = 0; f < static_cast<int>(faces.size()) && current < 0; ++f) {
      if (std::find(faces[f].begin(), faces[f].end(), x) != faces[f].end()) current = f;
    }
    while (current >= 0 && (ring.empty() || current != ring.front())) {
      ring.push_back(current);
      const auto& f = faces[current];
      const int pos = static_cast<int>(std::find(f.begin(), f.end(), x) - f.begin());
      const int y = f[(pos + 1) % 3];
      int next = -1;
      // The neighbour across edge (x, y) traverses it as (y, x).
      for (int g = 0; g < static_cast<int>(faces.size()); ++g) {
        const auto& h = faces[g];
        for (int a = 0; a < 3; ++a) {
          if (h[a] == y && h[(a + 1) % 3] == x) next = g;
        }
      }
      if (static_cast<int>(ring.size()) > vertex_valence(sphere.kind)) {
        throw std::logic_error("vertex ring does not close");
      }
      current = next;
    }
    rings.push_back(std::move(ring));
  }
  return rings;
}

bool SphereCertification::pass() const { return failures() == 0; }

std::size_t SphereCertification::failures() const {
  std::size_t n = 0;
  for (const auto& c : edges) n += c.pass ? 0 : 1;
  for (const auto& c : vertices) n += c.pass ? 0 : 1;
  return n;
}

SphereCertification certify_sphere(const SphereSpline& sphere, Smoothness level, int samples) {
  SphereCertification out;
  std::optional<TransversalCurve> curve;
  if (level == Smoothness::G2) curve = infer_transversal_curve(sphere.faces.front().net);
  for (const auto& e : sphere.adjacency) {
    const AdjoinedPair pair =
        adjoin_along_shared_edge(sphere.faces[e.face_a].net, sphere.faces[e.face_b].net);
    switch (level) {
      case Smoothness::G0:
        out.edges.push_back(check_g0(pair, samples));
        break;
      case Smoothness::G1:
        out.edges.push_back(check_g1(pair, samples));
        break;
      case Smoothness::G2:
        out.edges.push_back(check_g2_via_curve(pair, *curve, samples));
        break;
    }
  }
  for (const auto& ring : vertex_rings(sphere)) {
    std::vector<ControlNet> nets;
    for (int f : ring) nets.push_back(sphere.faces[f].net);
    out.vertices.push_back(check_vertex_ring(nets, level, samples));
  }
  return out;
}

namespace {

// Spatial hash with cell size well above the weld distance; lookups scan
// the 27 neighbouring cells.
class Welder {
 public:
  explicit Welder(double tol) : tol_(tol), cell_(1e-6) {}

  int insert(const Vec3& p, std::vector<Vec3>& store, bool& created) {
    const auto key = cell_of(p);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find({key[0] + dx, key[1] + dy, key[2] + dz});
          if (it == cells_.end()) continue;
          for (int idx : it->second) {
            if ((store[idx] - p).norm() <= tol_) {
              created = false;
              return idx;
            }
          }
        }
      }
    }
    store.push_back(p);
    const int idx = static_cast<int>(store.size()) - 1;
    cells_[key].push_back(idx);
    created = true;
    return idx;
  }

 private:
  using Key = std::array<std::int64_t, 3>;
  Key cell_of(const Vec3& p) const {
    return {static_cast<std::int64_t>(std::floor(p.x() / cell_)),
            static_cast<std::int64_t>(std::floor(p.y() / cell_)),
            static_cast<std::int64_t>(std::floor(p.z() / cell_))};
  }

  double tol_;
  double cell_;
  std::map<Key, std::vector<int>> cells_;
};

}  // namespace

Mesh tessellate(const SphereSpline& sphere, int subdivisions, bool with_curvature) {
  if (subdivisions < 1) throw std::invalid_argument("subdivisions must be at least 1");
  Mesh mesh;
  Welder welder(1e-9);
  const int s = subdivisions;
  for (const auto& face : sphere.faces) {
    std::vector<int> ids;
    // ids laid out row by row: (i, j) with i + j <= s, i outer.
    for (int i = 0; i <= s; ++i) {
      for (int j = 0; i + j <= s; ++j) {
        const BarycentricPoint p{static_cast<double>(i) / s, static_cast<double>(j) / s};
        bool created = false;
        const int id = welder.insert(evaluate_position(face.net, p), mesh.vertices, created);
        if (created && with_curvature) mesh.curvature.push_back(gaussian_curvature(face.net, p).K);
        ids.push_back(id);
      }
    }
    auto at = [&](int i, int j) { return ids[i * (s + 1) - i * (i - 1) / 2 + j]; };
    for (int i = 0; i < s; ++i) {
      for (int j = 0; i + j < s; ++j) {
        mesh.triangles.push_back({at(i, j), at(i + 1, j), at(i, j + 1)});
        if (i + j + 1 < s) mesh.triangles.push_back({at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
      }
    }
  }
  return mesh;
}

MeshFormat parse_mesh_format(std::string_view name) {
  if (name == "obj") return MeshFormat::Obj;
  if (name == "ply") return MeshFormat::Ply;
  throw std::invalid_argument("unknown mesh format: " + std::string(name));
}

void write_obj(std::ostream& out, const Mesh& mesh) {
  char buf[160];
  for (std::size_t n = 0; n < mesh.vertices.size(); ++n) {
    const Vec3& p = mesh.vertices[n];
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", p.x(), p.y(), p.z());
    out << buf;
    if (!mesh.curvature.empty()) {
      std::snprintf(buf, sizeof buf, "# K %.17g\n", mesh.curvature[n]);
      out << buf;
    }
  }
  for (const auto& t : mesh.triangles) out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.write(bytes, sizeof(T));
}

}  // namespace

void write_ply(std::ostream& out, const Mesh& mesh) {
  const bool quality = !mesh.curvature.empty();
  out << "ply\nformat binary_little_endian 1.0\n";
  out << "element vertex " << mesh.vertices.size() << '\n';
  out << "property double x\nproperty double y\nproperty double z\n";
  if (quality) out << "property double quality\n";
  out << "element face " << mesh.triangles.size() << '\n';
  out << "property list uchar int vertex_indices\nend_header\n";
  for (std::size_t n = 0; n < mesh.vertices.size(); ++n) {
    for (int a = 0; a < 3; ++a) put_le<double>(out, mesh.vertices[n][a]);
    if (quality) put_le<double>(out, mesh.curvature[n]);
  }
  for (const auto& t : mesh.triangles) {
    put_le<std::uint8_t>(out, 3);
    for (int a = 0; a < 3; ++a) put_le<std::int32_t>(out, t[a]);
  }
}

void write_mesh_file(const Mesh& mesh, MeshFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  if (format == MeshFormat::Obj) {
    write_obj(out, mesh);
  } else {
    write_ply(out, mesh);
  }
  out.flush();
  if (!out) throw std::ios_base::failure("failed writing " + path);
}

void export_mesh(const SphereSpline& sphere, int subdivisions, bool with_curvature, MeshFormat format,
                 const std::string& path) {
  write_mesh_file(tessellate(sphere, subdivisions, with_curvature), format, path);
}

double MeshAudit::radial_deviation() const {
  return std::max(std::abs(max_radius - 1.0), std::abs(1.0 - min_radius));
}

MeshAudit audit_mesh(const Mesh& mesh) {
  MeshAudit audit;
  std::map<std::pair<int, int>, std::pair<int, int>> edges;  // (forward, backward) counts
  for (const auto& t : mesh.triangles) {
    for (int a = 0; a < 3; ++a) {
      const int p = t[a];
      const int q = t[(a + 1) % 3];
      auto& e = edges[{std::min(p, q), std::max(p, q)}];
      (p < q ? e.first : e.second) += 1;
    }
    const Vec3& x = mesh.vertices[t[0]];
    const Vec3& y = mesh.vertices[t[1]];
    const Vec3& z = mesh.vertices[t[2]];
    if ((y - x).cross(z - x).dot(x + y + z) <= 0.0) ++audit.inward_triangles;
  }
  for (const auto& [key, count] : edges) {
    const int total = count.first + count.second;
    if (total == 1) {
      ++audit.open_edges;
    } else if (total > 2) {
      ++audit.nonmanifold_edges;
    } else if (count.first != 1) {
      ++audit.misoriented_edges;
    }
  }
  audit.min_radius = std::numeric_limits<double>::infinity();
  audit.max_radius = 0.0;
  for (const auto& p : mesh.vertices) {
    audit.min_radius = std::min(audit.min_radius, p.norm());
    audit.max_radius = std::max(audit.max_radius, p.norm());
  }
  return audit;
}

}  // namespace trisphere
