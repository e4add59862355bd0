#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "trisphere/geometry.hpp"

using namespace trisphere;

namespace {

BarycentricPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = unit(rng);
  double v = unit(rng);
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return {u, v};
}

// Discriminant of t^3 - t^2 + e2 t - e3, whose roots are u, v, w.
double discriminant(double e2, double e3) {
  const double b = -1.0, c = e2, d = -e3;
  return 18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * c * c * c - 27.0 * d * d;
}

}  // namespace

TEST(CanonicalTriangle, PlatonicValuesOfC) {
  EXPECT_NEAR(polyhedron_c(PolyhedronKind::Tetrahedron), 2.0 * std::sqrt(2.0) / 3.0, 1e-15);
  EXPECT_NEAR(polyhedron_c(PolyhedronKind::Octahedron), std::sqrt(6.0) / 3.0, 1e-15);
  EXPECT_NEAR(polyhedron_c(PolyhedronKind::Icosahedron), std::sqrt(2.0 * (5.0 - std::sqrt(5.0)) / 15.0), 1e-15);
}

TEST(CanonicalTriangle, VerticesOnSphereWithCommonHeight) {
  for (auto kind : kAllKinds) {
    const SphericalTriangle t = canonical_triangle(kind);
    const double s = std::sqrt(1.0 - t.c * t.c);
    for (const auto& v : t.v) {
      EXPECT_NEAR(v.norm(), 1.0, 1e-15);
      EXPECT_NEAR(v.z(), s, 1e-15);
      EXPECT_NEAR(std::hypot(v.x(), v.y()), t.c, 1e-15);
    }
    // Counter-clockwise seen from +z.
    EXPECT_GT((t.v[1] - t.v[0]).cross(t.v[2] - t.v[0]).z(), 0.0);
  }
}

TEST(CanonicalTriangle, EdgeAngleMatchesPolyhedron) {
  // Central angle between adjacent vertices: tetra acos(-1/3), octa pi/2, icosa atan(2).
  const double expected[3] = {std::acos(-1.0 / 3.0), std::numbers::pi / 2.0, std::atan(2.0)};
  for (int n = 0; n < 3; ++n) {
    const SphericalTriangle t = canonical_triangle(kAllKinds[n]);
    EXPECT_NEAR(std::acos(t.v[0].dot(t.v[1])), expected[n], 1e-14);
  }
}

TEST(CanonicalTriangle, RejectsOutOfRange) {
  EXPECT_THROW(canonical_triangle(0.0), std::domain_error);
  EXPECT_THROW(canonical_triangle(1.0), std::domain_error);
  EXPECT_THROW(canonical_triangle(-0.3), std::domain_error);
}

TEST(Kinds, ParseAliases) {
  EXPECT_EQ(parse_kind("tetra"), PolyhedronKind::Tetrahedron);
  EXPECT_EQ(parse_kind("octahedron"), PolyhedronKind::Octahedron);
  EXPECT_EQ(parse_kind("ico"), PolyhedronKind::Icosahedron);
  EXPECT_THROW(parse_kind("cube"), std::invalid_argument);
  EXPECT_EQ(vertex_valence(PolyhedronKind::Icosahedron), 5);
  EXPECT_EQ(face_count(PolyhedronKind::Octahedron), 8);
}

TEST(Simplex, L1Distance) {
  EXPECT_DOUBLE_EQ(l1_distance_to_simplex({0.2, 0.3}), 0.0);
  EXPECT_DOUBLE_EQ(l1_distance_to_simplex({-0.01, 0.5}), 0.01);
  EXPECT_NEAR(l1_distance_to_simplex({0.6, 0.45}), 0.05, 1e-15);
  EXPECT_TRUE(in_simplex({1.0, 0.0}));
  EXPECT_FALSE(in_simplex({0.7, 0.31}));
}

TEST(Omega, BarycenterAndMidpoints) {
  const OmegaPoint center = to_omega({1.0 / 3.0, 1.0 / 3.0});
  EXPECT_NEAR(center.e2, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(center.e3, 1.0 / 27.0, 1e-15);
  const OmegaPoint mid = to_omega({0.5, 0.5});
  EXPECT_NEAR(mid.e2, 0.25, 1e-15);
  EXPECT_NEAR(mid.e3, 0.0, 1e-15);
  const OmegaBounds b = omega_bounds(1.0 / 3.0);
  EXPECT_NEAR(b.lo, 1.0 / 27.0, 1e-15);
  EXPECT_NEAR(b.hi, 1.0 / 27.0, 1e-15);
}

TEST(Omega, LowerBoundClampedAtZero) {
  EXPECT_LT(omega_bounds_raw(0.1).lo, 0.0);
  EXPECT_EQ(omega_bounds(0.1).lo, 0.0);
  EXPECT_NEAR(omega_bounds_raw(0.25).lo, 0.0, 1e-16);
  EXPECT_THROW(omega_bounds(0.34), std::domain_error);
  EXPECT_THROW(omega_bounds(-0.01), std::domain_error);
}

TEST(Omega, MembershipOfAMillionRandomPoints) {
  std::mt19937_64 rng(20260101);
  int outside = 0;
  for (int n = 0; n < 1000000; ++n) {
    if (!in_omega(to_omega(random_point(rng)))) ++outside;
  }
  EXPECT_EQ(outside, 0);
}

TEST(Omega, MediansMapOntoTheBoundingCurves) {
  for (int n = 0; n <= 1000; ++n) {
    const double t = 0.5 * n / 1000.0;
    const OmegaPoint q = to_omega({t, t});
    const OmegaBounds raw = omega_bounds_raw(q.e2);
    const double target = t <= 1.0 / 3.0 ? raw.hi : raw.lo;
    EXPECT_NEAR(q.e3, target, 1e-12) << "t=" << t;
  }
}

TEST(Omega, EdgesMapOntoZeroLowerBound) {
  for (int n = 0; n <= 1000; ++n) {
    const double t = n / 1000.0;
    const OmegaPoint q = to_omega({t, 1.0 - t});
    EXPECT_NEAR(q.e3, 0.0, 1e-15);
    EXPECT_LE(q.e2, 0.25 + 1e-15);
    EXPECT_NEAR(omega_bounds(q.e2).lo, 0.0, 1e-12);
  }
}

TEST(Omega, CurvePreimagesHaveRepeatedCoordinate) {
  // A point of the upper or (raw) lower curve is the image of (u, v, w) with a
  // double root of the symmetric cubic, i.e. a point on a median.
  for (int n = 0; n <= 400; ++n) {
    const double e2 = n / 1200.0;
    const OmegaBounds raw = omega_bounds_raw(e2);
    EXPECT_NEAR(discriminant(e2, raw.hi), 0.0, 1e-12) << "e2=" << e2;
    if (raw.lo >= 0.0) {
      EXPECT_NEAR(discriminant(e2, raw.lo), 0.0, 1e-12) << "e2=" << e2;
    }
  }
}

TEST(Omega, InteriorPointsStayOffTheCurves) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 10000; ++n) {
    const BarycentricPoint p = random_point(rng);
    const double w = p.w();
    const double gap = std::min({std::abs(p.u - p.v), std::abs(p.u - w), std::abs(p.v - w)});
    if (gap < 1e-3 || std::min({p.u, p.v, w}) < 1e-3) continue;
    const OmegaPoint q = to_omega(p);
    const OmegaBounds b = omega_bounds(q.e2);
    EXPECT_GT(q.e3 - b.lo, 0.0);
    EXPECT_GT(b.hi - q.e3, 0.0);
  }
}
