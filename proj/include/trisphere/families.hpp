#pragma once

#include <array>
#include <map>
#include <vector>

#include "trisphere/bezier.hpp"
#include "trisphere/geometry.hpp"

namespace trisphere {

/// One element of the spatial D3 symmetry group of the canonical triangle:
/// matrix q maps vertex a to vertex perm[a].
struct TriangleSymmetry {
  Mat3 q;
  std::array<int, 3> perm;
};

/// All six symmetries (three rotations about z, three mirrors).
std::vector<TriangleSymmetry> triangle_symmetries(const SphericalTriangle& tri);

/// Fills every control index reachable from the listed ones by the symmetry
/// group. Throws std::logic_error when an orbit is inconsistent (> 1e-13) or
/// an index stays unset.
ControlNet complete_by_symmetry(const SphericalTriangle& tri, int degree,
                                const std::map<std::array<int, 3>, Vec3>& listed);

/// Midpoint controls alpha/2 (v_i + v_j).
struct QuadraticFamily {
  double c = 0.0;
  double alpha = 1.0;

  ControlNet net() const;
};

ControlNet quadratic_net(double c, double alpha);
ControlNet quadratic_net(PolyhedronKind kind, double alpha);

/// b210 = alpha v0 + beta v1 (and images), b111 = (0, 0, gamma).
struct CubicFamily {
  double c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  ControlNet net() const;
};

struct CubicTriple {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Vertex G1 constraint shared by the cubic and quartic families.
double vertex_g1_alpha(double c, double beta);

/// The three G1 parameter triples of the cubic family. Triple 1 is the only
/// regular one; 2 and 3 lose the normal at (0,0) and (1/2,1/2).
std::array<CubicTriple, 3> cubic_g1_triples(double c);

ControlNet cubic_net(double c, int triple_index);
ControlNet cubic_net(PolyhedronKind kind, int triple_index);

enum class QuarticBranch { One, Two };

/// b310 = alpha v0 + beta v1, b220 = gamma (v0 + v1),
/// b211 = zeta v0 + xi (v1 + v2), remaining controls by symmetry.
struct QuarticFamily {
  double c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double zeta = 0.0;
  double xi = 0.0;
  QuarticBranch branch = QuarticBranch::One;

  ControlNet net() const;
};

/// G1 quartic family member for the given gamma. Branch One and Two are the
/// two regular solution sets; the two singular sets are not provided.
QuarticFamily quartic_g1_family(double c, double gamma, QuarticBranch branch);

ControlNet quartic_net(double c, double gamma, QuarticBranch branch = QuarticBranch::One);
ControlNet quartic_net(PolyhedronKind kind, double gamma,
                       QuarticBranch branch = QuarticBranch::One);

/// Largest |<(b - 0), m>| over boundary controls b_{i,j,0}, b_{0,j,k}, b_{i,0,k}
/// where m is the unit normal of the plane through the origin and the edge's
/// corner points.
double boundary_planarity_residual(const ControlNet& net);

/// Max distance between the net's corners and the triangle's vertices.
double corner_deviation(const ControlNet& net, const SphericalTriangle& tri);

}  // namespace trisphere
