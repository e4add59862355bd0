#include "trisphere/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "trisphere/bezier.hpp"
#include "trisphere/continuity.hpp"
#include "trisphere/error_metrics.hpp"
#include "trisphere/families.hpp"
#include "trisphere/optimal_params.hpp"

namespace trisphere {

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

ControlNet random_net(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<Vec3> pts;
  for (std::size_t n = 0; n < control_point_count(degree); ++n) pts.emplace_back(coord(rng), coord(rng), coord(rng));
  return ControlNet(degree, std::move(pts));
}

PropertyResult finish(std::string name, int trials, double worst, double tol) {
  return {std::move(name), trials, worst, tol, worst <= tol};
}

}  // namespace

std::vector<PropertyResult> run_property_checks(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_int_distribution<int> degree(1, 6);
  std::uniform_int_distribution<int> kind_pick(0, 2);
  std::vector<PropertyResult> out;

  {
    double worst = 0.0;
    for (int n = 0; n < trials; ++n) {
      const OmegaPoint q = to_omega(random_point(rng));
      const OmegaBounds b = omega_bounds(std::clamp(q.e2, 0.0, 1.0 / 3.0));
      worst = std::max({worst, b.lo - q.e3, q.e3 - b.hi, 0.0});
    }
    out.push_back(finish("omega_membership", trials, worst, kOmegaTolerance));
  }
  {
    double worst = 0.0;
    for (int n = 0; n < trials; ++n) {
      const ControlNet net = random_net(rng, degree(rng));
      Mat3 a;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) a(r, c) = coord(rng);
      }
      const Vec3 t(coord(rng), coord(rng), coord(rng));
      const BarycentricPoint p = random_point(rng);
      const Vec3 lhs = evaluate_position(net.transformed(a, t), p);
      const Vec3 rhs = a * evaluate_position(net, p) + t;
      worst = std::max(worst, (lhs - rhs).norm());
    }
    out.push_back(finish("affine_invariance", trials, worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int n = 0; n < trials; ++n) {
      const ControlNet net = random_net(rng, degree(rng));
      const BarycentricPoint p = random_point(rng);
      worst = std::max(worst, (evaluate_position(elevate_degree(net), p) - evaluate_position(net, p)).norm());
    }
    out.push_back(finish("degree_elevation", trials, worst, 1e-12));
  }
  {
    double worst = 0.0;
    const std::array<ControlNet, 3> nets{quartic_net(PolyhedronKind::Tetrahedron, 0.968062280),
                                         quartic_net(PolyhedronKind::Octahedron, 0.775181215),
                                         quartic_net(PolyhedronKind::Icosahedron, 0.617022198)};
    for (int n = 0; n < trials; ++n) {
      const ControlNet& net = nets[kind_pick(rng)];
      const BarycentricPoint p = random_point(rng);
      const double f = radial_errors(net, p).f;
      const double f_rot = radial_errors(net, {p.v, p.w()}).f;
      const double f_swap = radial_errors(net, {p.v, p.u}).f;
      worst = std::max({worst, std::abs(f - f_rot), std::abs(f - f_swap)});
    }
    out.push_back(finish("error_symmetry", trials, worst, 1e-13));
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> alpha(0.5, 3.5);
    for (int n = 0; n < trials; ++n) {
      const double c = polyhedron_c(kAllKinds[kind_pick(rng)]);
      const double a = alpha(rng);
      const BarycentricPoint p = random_point(rng);
      const double direct = radial_errors(quadratic_net(c, a), p).f;
      worst = std::max(worst, std::abs(direct - quadratic_error_in_omega(c, a, to_omega(p))));
    }
    out.push_back(finish("quadratic_omega_expansion", trials, worst, 1e-12));
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> cval(0.05, 0.95);
    for (int n = 0; n < trials; ++n) {
      const Mat3 r = reflection_matrix(cval(rng));
      worst = std::max({worst, (r * r - Mat3::Identity()).norm(), std::abs(r.determinant() + 1.0)});
    }
    out.push_back(finish("reflection_involution", trials, worst, 1e-14));
  }
  return out;
}

}  // namespace trisphere
