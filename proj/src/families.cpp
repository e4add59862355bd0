#include "trisphere/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/LU>

namespace trisphere {

std::vector<TriangleSymmetry> triangle_symmetries(const SphericalTriangle& tri) {
  static constexpr std::array<std::array<int, 3>, 6> kPerms = {
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  Mat3 source;
  for (int a = 0; a < 3; ++a) source.col(a) = tri.v[a];
  const Mat3 inv = source.inverse();
  std::vector<TriangleSymmetry> out;
  out.reserve(kPerms.size());
  for (const auto& perm : kPerms) {
    Mat3 target;
    for (int a = 0; a < 3; ++a) target.col(a) = tri.v[perm[a]];
    out.push_back({target * inv, perm});
  }
  return out;
}

ControlNet complete_by_symmetry(const SphericalTriangle& tri, int degree,
                                const std::map<std::array<int, 3>, Vec3>& listed) {
  constexpr double kOrbitTolerance = 1e-13;
  std::map<std::array<int, 3>, Vec3> filled;
  const auto group = triangle_symmetries(tri);
  for (const auto& [idx, point] : listed) {
    if (idx[0] + idx[1] + idx[2] != degree) throw std::invalid_argument("listed index degree");
    for (const auto& g : group) {
      std::array<int, 3> image{};
      for (int a = 0; a < 3; ++a) image[g.perm[a]] = idx[a];
      const Vec3 mapped = g.q * point;
      auto [it, inserted] = filled.emplace(image, mapped);
      if (!inserted && (it->second - mapped).norm() > kOrbitTolerance) {
        throw std::logic_error("symmetry orbit mismatch at index " + std::to_string(image[0]) +
                               "," + std::to_string(image[1]) + "," + std::to_string(image[2]));
      }
    }
  }
  ControlNet net(degree);
  for (const TriIndex& q : net.indices()) {
    auto it = filled.find({q.i, q.j, q.k});
    if (it == filled.end()) throw std::logic_error("control index not reached by symmetry");
    net.set(q, it->second);
  }
  return net;
}

ControlNet QuadraticFamily::net() const {
  const auto tri = canonical_triangle(c);
  return complete_by_symmetry(tri, 2,
                              {{{2, 0, 0}, tri.v[0]}, {{1, 1, 0}, 0.5 * alpha * (tri.v[0] + tri.v[1])}});
}

ControlNet quadratic_net(double c, double alpha) {
  if (alpha < 0.0) throw std::domain_error("quadratic family needs alpha >= 0");
  return QuadraticFamily{c, alpha}.net();
}

ControlNet quadratic_net(PolyhedronKind kind, double alpha) {
  return quadratic_net(polyhedron_c(kind), alpha);
}

ControlNet CubicFamily::net() const {
  const auto tri = canonical_triangle(c);
  return complete_by_symmetry(tri, 3,
                              {{{3, 0, 0}, tri.v[0]},
                               {{2, 1, 0}, alpha * tri.v[0] + beta * tri.v[1]},
                               {{1, 1, 1}, Vec3(0.0, 0.0, gamma)}});
}

double vertex_g1_alpha(double c, double beta) {
  return 0.5 * (2.0 - 2.0 * beta + 3.0 * c * c * beta);
}

std::array<CubicTriple, 3> cubic_g1_triples(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("c must lie in (0, 1)");
  const double c2 = c * c;
  const double s = std::sqrt(1.0 - c2);
  const double a = 4.0 - 3.0 * c2;
  const double one_minus = 1.0 - c2;
  CubicTriple t1{(8.0 - 3.0 * c2) / (3.0 * a), 4.0 / (3.0 * a),
                 s * (8.0 - 8.0 * c2 + 3.0 * c2 * c2) / (2.0 * one_minus * a)};
  CubicTriple t2{1.0, 0.0, s * a / (4.0 * one_minus)};
  CubicTriple t3{3.0 * c2 / a, 4.0 / a, s * (8.0 - 9.0 * c2 * c2) / (2.0 * one_minus * a)};
  return {t1, t2, t3};
}

ControlNet cubic_net(double c, int triple_index) {
  if (triple_index < 1 || triple_index > 3) throw std::out_of_range("cubic triple index 1..3");
  const CubicTriple t = cubic_g1_triples(c)[triple_index - 1];
  return CubicFamily{c, t.alpha, t.beta, t.gamma}.net();
}

ControlNet cubic_net(PolyhedronKind kind, int triple_index) {
  return cubic_net(polyhedron_c(kind), triple_index);
}

QuarticFamily quartic_g1_family(double c, double gamma, QuarticBranch branch) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("c must lie in (0, 1)");
  const double c2 = c * c;
  const double c4 = c2 * c2;
  const double c6 = c4 * c2;
  QuarticFamily f;
  f.c = c;
  f.gamma = gamma;
  f.branch = branch;
  if (branch == QuarticBranch::One) {
    f.alpha = ((6.0 * c2 - 4.0) * gamma + c2 + 2.0) / (4.0 * c2);
    f.beta = (2.0 * gamma - 1.0) / (2.0 * c2);
    f.zeta = (-4.0 * (9.0 * c4 - 18.0 * c2 + 8.0) * gamma + 9.0 * c6 - 24.0 * c4 - 4.0 * c2 + 16.0) /
             (12.0 * c2 * (3.0 * c4 - 7.0 * c2 + 4.0));
    f.xi = (-2.0 * (3.0 * c4 - 3.0 * c2 - 2.0) * gamma - c2 - 2.0) / (12.0 * c2 * (1.0 - c2));
  } else {
    const double lead = (9.0 * c4 - 18.0 * c2 + 8.0) * gamma - 3.0 * c4 + 10.0 * c2 - 4.0;
    f.alpha = lead / (c2 * (4.0 - 3.0 * c2));
    f.beta = ((6.0 * c2 - 8.0) * gamma + 4.0) / (c2 * (4.0 - 3.0 * c2));
    f.zeta = lead / (6.0 * c2 * (1.0 - c2));
    f.xi = ((9.0 * c6 - 30.0 * c4 + 36.0 * c2 - 16.0) * gamma + 3.0 * c4 - 8.0 * c2 + 8.0) /
           (6.0 * c2 * (3.0 * c4 - 7.0 * c2 + 4.0));
  }
  return f;
}

ControlNet QuarticFamily::net() const {
  const auto tri = canonical_triangle(c);
  const Vec3& v0 = tri.v[0];
  const Vec3& v1 = tri.v[1];
  const Vec3& v2 = tri.v[2];
  return complete_by_symmetry(tri, 4,
                              {{{4, 0, 0}, v0},
                               {{3, 1, 0}, alpha * v0 + beta * v1},
                               {{2, 2, 0}, gamma * (v0 + v1)},
                               {{2, 1, 1}, zeta * v0 + xi * (v1 + v2)}});
}

ControlNet quartic_net(double c, double gamma, QuarticBranch branch) {
  return quartic_g1_family(c, gamma, branch).net();
}

ControlNet quartic_net(PolyhedronKind kind, double gamma, QuarticBranch branch) {
  return quartic_net(polyhedron_c(kind), gamma, branch);
}

double boundary_planarity_residual(const ControlNet& net) {
  double worst = 0.0;
  for (int zero_axis = 0; zero_axis < 3; ++zero_axis) {
    const Vec3& a = net.corner((zero_axis + 1) % 3);
    const Vec3& b = net.corner((zero_axis + 2) % 3);
    const Vec3 m = a.cross(b).normalized();
    for (const TriIndex& q : net.indices()) {
      if (q[zero_axis] != 0) continue;
      worst = std::max(worst, std::abs(m.dot(net.at(q))));
    }
  }
  return worst;
}

double corner_deviation(const ControlNet& net, const SphericalTriangle& tri) {
  double d = 0.0;
  for (int a = 0; a < 3; ++a) d = std::max(d, (net.corner(a) - tri.v[a]).norm());
  return d;
}

}  // namespace trisphere
