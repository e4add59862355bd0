#include "trisphere/optimal_params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/LU>

#include "trisphere/errors.hpp"

namespace trisphere {

std::string_view to_string(Smoothness s) {
  switch (s) {
    case Smoothness::G0:
      return "G0";
    case Smoothness::G1:
      return "G1";
    case Smoothness::G2:
      return "G2";
  }
  return "?";
}

std::string_view to_string(ErrorMeasure m) {
  return m == ErrorMeasure::Simplified ? "simplified" : "radial";
}

std::string_view to_string(Provenance p) {
  return p == Provenance::ClosedForm ? "closed-form" : "bisection";
}

Smoothness parse_smoothness(std::string_view s) {
  if (s == "G0" || s == "g0") return Smoothness::G0;
  if (s == "G1" || s == "g1") return Smoothness::G1;
  if (s == "G2" || s == "g2") return Smoothness::G2;
  throw std::invalid_argument("unknown smoothness: " + std::string(s));
}

ErrorMeasure parse_measure(std::string_view s) {
  if (s == "simplified" || s == "f" || s == "ds") return ErrorMeasure::Simplified;
  if (s == "radial" || s == "g" || s == "dr") return ErrorMeasure::Radial;
  throw std::invalid_argument("unknown measure: " + std::string(s));
}

double OptimalSolution::param(const std::string& name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw std::out_of_range("no parameter " + name);
}

double quadratic_optimal(double c, ErrorMeasure measure) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("c must lie in (0, 1)");
  const double c2 = c * c;
  if (measure == ErrorMeasure::Simplified) {
    return (68.0 - 59.0 * c2 - 12.0 * std::sqrt(196.0 - 175.0 * c2 - 3.0 * c2 * c2)) /
           (91.0 * c2 - 100.0);
  }
  const double a = std::sqrt(4.0 - 3.0 * c2);
  const double b = std::sqrt(1.0 - c2);
  return (24.0 - 3.0 * a - 4.0 * b) / (3.0 * a + 8.0 * b);
}

CubicTriple cubic_optimal(double c) { return cubic_g1_triples(c)[0]; }

double quartic_closed_form_gamma(PolyhedronKind kind, ErrorMeasure measure) {
  const bool f = measure == ErrorMeasure::Simplified;
  switch (kind) {
    case PolyhedronKind::Tetrahedron:
      return f ? (2189.0 + 108.0 * std::sqrt(2291.0)) / 7602.0
               : (9587.0 - 2916.0 * std::sqrt(3.0)) / 4686.0;
    case PolyhedronKind::Octahedron:
      return f ? (47.0 + 36.0 * std::sqrt(974.0)) / 1510.0
               : (209.0 + 768.0 * std::sqrt(3.0) - 12.0 * std::sqrt(6126.0 + 1512.0 * std::sqrt(3.0))) /
                     538.0;
    case PolyhedronKind::Icosahedron:
      break;
  }
  throw std::invalid_argument("no closed-form quartic optimum for the icosahedron");
}

double icosahedron_gamma0() {
  const double s5 = std::sqrt(5.0);
  return (-1931.0 - 1100.0 * s5 + 18.0 * std::sqrt(6.0 * (556615.0 + 248877.0 * s5))) /
         (6.0 * (5771.0 + 2508.0 * s5));
}

std::pair<double, double> icosahedron_gamma_bracket() {
  const double s5 = std::sqrt(5.0);
  return {(29.0 - 13.0 * s5 + 9.0 * std::sqrt(6.0 * (5.0 + s5))) / 96.0,
          (-1.0 + 2.0 * std::sqrt(10.0 - 2.0 * s5)) / 6.0};
}

double tetrahedron_branch_split_gamma() {
  return (22229.0 - 216.0 * std::sqrt(2291.0)) / 7602.0;
}

namespace {

// max + min of the chosen error: positive when the maximum dominates.
double balance(const ControlNet& net, ErrorMeasure measure, int grid_n) {
  const ErrorReport r = extrema_over_delta(net, grid_n);
  return measure == ErrorMeasure::Simplified ? r.max_f + r.min_f : r.max_g + r.min_g;
}

// Representative of the symmetric orbit of p with its two equal coordinates first.
BarycentricPoint diagonal_representative(BarycentricPoint p) {
  const double w = p.w();
  const double pairs[3][2] = {{p.u, p.v}, {p.u, w}, {p.v, w}};
  int best = 0;
  for (int n = 1; n < 3; ++n) {
    if (std::abs(pairs[n][0] - pairs[n][1]) < std::abs(pairs[best][0] - pairs[best][1])) best = n;
  }
  const double d = 0.5 * (pairs[best][0] + pairs[best][1]);
  return {d, d};
}

std::vector<std::pair<std::string, double>> quartic_params(const QuarticFamily& f) {
  return {{"alpha", f.alpha}, {"beta", f.beta}, {"gamma", f.gamma}, {"zeta", f.zeta}, {"xi", f.xi}};
}

}  // namespace

BisectionResult bisect_quartic_gamma(double c, ErrorMeasure measure, double lo, double hi,
                                     double tol, int grid_n) {
  auto side = [&](double gamma) {
    return balance(quartic_net(c, gamma, QuarticBranch::One), measure, grid_n);
  };
  const double at_lo = side(lo);
  const double at_hi = side(hi);
  if (!(at_lo < 0.0 && at_hi > 0.0)) {
    throw BisectionFailure("bisection interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                           "] does not bracket the equioscillation point");
  }
  BisectionResult r;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (side(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++r.iterations;
  }
  r.gamma = 0.5 * (lo + hi);
  r.width = hi - lo;
  return r;
}

DiagonalSolution solve_diagonal_system(double c, double u0, double gamma0) {
  const ControlNet base = quartic_net(c, 0.0, QuarticBranch::One);
  const ControlNet unit = quartic_net(c, 1.0, QuarticBranch::One);
  std::vector<Vec3> slope_pts;
  for (std::size_t n = 0; n < base.size(); ++n) slope_pts.push_back(unit.points()[n] - base.points()[n]);
  // Controls are affine in gamma, so d/dgamma of the patch is this net.
  const ControlNet slope(base.degree(), std::move(slope_pts));
  const BarycentricPoint edge_mid{0.5, 0.0};

  auto system = [&](const Eigen::Vector2d& x, Eigen::Matrix2d* jac, double* second) {
    const ControlNet net = quartic_net(c, x.y(), QuarticBranch::One);
    const SurfacePoint s = evaluate(net, {x.x(), x.x()});
    const SurfacePoint q = evaluate(slope, {x.x(), x.x()});
    const Vec3 e = evaluate_position(net, edge_mid);
    const Vec3 qe = evaluate_position(slope, edge_mid);
    const Vec3 d1 = s.du + s.dv;
    const Vec3 d2 = s.duu + 2.0 * s.duv + s.dvv;
    Eigen::Vector2d F;
    F(0) = s.position.squaredNorm() + e.squaredNorm() - 2.0;
    F(1) = 2.0 * s.position.dot(d1);
    if (jac) {
      (*jac)(0, 0) = 2.0 * s.position.dot(d1);
      (*jac)(0, 1) = 2.0 * s.position.dot(q.position) + 2.0 * e.dot(qe);
      (*jac)(1, 0) = 2.0 * (d1.dot(d1) + s.position.dot(d2));
      (*jac)(1, 1) = 2.0 * (q.position.dot(d1) + s.position.dot(q.du + q.dv));
    }
    if (second) *second = 2.0 * (d1.dot(d1) + s.position.dot(d2));
    return F;
  };

  Eigen::Vector2d x(u0, gamma0);
  DiagonalSolution out;
  for (int iter = 0; iter < 100; ++iter) {
    Eigen::Matrix2d jac;
    const Eigen::Vector2d F = system(x, &jac, nullptr);
    const double norm = F.norm();
    out.iterations = iter;
    if (norm < 1e-17) break;
    const Eigen::Vector2d step = -jac.partialPivLu().solve(F);
    double t = 1.0;
    bool accepted = false;
    for (int k = 0; k < 40; ++k) {
      const Eigen::Vector2d y = x + t * step;
      if (system(y, nullptr, nullptr).norm() < norm) {
        x = y;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted || (t * step).norm() < 1e-16) break;
  }
  out.u = x.x();
  out.gamma = x.y();
  system(x, nullptr, &out.second_derivative);
  return out;
}

OptimalSolution quadratic_solution(PolyhedronKind kind, ErrorMeasure measure, int grid_n) {
  const double c = polyhedron_c(kind);
  OptimalSolution s;
  s.kind = kind;
  s.degree = 2;
  s.smoothness = Smoothness::G0;
  s.measure = measure;
  const double alpha = quadratic_optimal(c, measure);
  s.params = {{"alpha", alpha}};
  s.net = quadratic_net(c, alpha);
  const ErrorReport r = extrema_over_delta(s.net, grid_n);
  s.d_r = r.d_r;
  s.d_s = r.d_s;
  return s;
}

OptimalSolution cubic_solution(PolyhedronKind kind, int grid_n) {
  const double c = polyhedron_c(kind);
  const CubicTriple t = cubic_optimal(c);
  OptimalSolution s;
  s.kind = kind;
  s.degree = 3;
  s.smoothness = Smoothness::G2;
  s.measure = ErrorMeasure::Radial;
  s.params = {{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}};
  s.net = CubicFamily{c, t.alpha, t.beta, t.gamma}.net();
  const ErrorReport r = extrema_over_delta(s.net, grid_n);
  s.d_r = r.d_r;
  s.d_s = r.d_s;
  return s;
}

OptimalSolution quartic_optimal(PolyhedronKind kind, ErrorMeasure measure, int grid_n) {
  const double c = polyhedron_c(kind);
  OptimalSolution s;
  s.kind = kind;
  s.degree = 4;
  s.smoothness = Smoothness::G2;
  s.measure = measure;
  double gamma = 0.0;
  if (kind == PolyhedronKind::Icosahedron) {
    const BisectionResult b = bisect_quartic_gamma(c, measure, 0.5, icosahedron_gamma0(), 1e-12, grid_n);
    gamma = b.gamma;
    s.provenance = Provenance::Bisection;
    s.iterations = b.iterations;
  } else {
    gamma = quartic_closed_form_gamma(kind, measure);
    s.provenance = Provenance::ClosedForm;
  }
  const QuarticFamily fam = quartic_g1_family(c, gamma, QuarticBranch::One);
  s.params = quartic_params(fam);
  s.net = fam.net();
  const ErrorReport r = extrema_over_delta(s.net, grid_n);
  s.d_r = r.d_r;
  s.d_s = r.d_s;
  if (kind == PolyhedronKind::Icosahedron) s.extremum = diagonal_representative(r.argmax_f);
  return s;
}

OptimalSolution optimal_solution(PolyhedronKind kind, int degree, ErrorMeasure measure, int grid_n) {
  switch (degree) {
    case 2:
      return quadratic_solution(kind, measure, grid_n);
    case 3:
      return cubic_solution(kind, grid_n);
    case 4:
      return quartic_optimal(kind, measure, grid_n);
  }
  throw std::invalid_argument("degree must be 2, 3 or 4");
}

BranchSweep quartic_branch_two_sweep(PolyhedronKind kind, int grid_n) {
  if (kind == PolyhedronKind::Icosahedron) {
    throw std::invalid_argument("branch sweep is defined for the tetrahedron and octahedron");
  }
  const double c = polyhedron_c(kind);
  BranchSweep out;
  const ControlNet best_one =
      quartic_net(c, quartic_closed_form_gamma(kind, ErrorMeasure::Simplified), QuarticBranch::One);
  out.branch_one_ds = extrema_over_delta(best_one).d_s;
  out.branch_two_min_ds = std::numeric_limits<double>::infinity();
  for (int step = 0; step <= 3000; ++step) {
    const double gamma = step * 1e-3;
    const double ds = brute_force_extrema(quartic_net(c, gamma, QuarticBranch::Two), grid_n).d_s;
    if (ds < out.branch_two_min_ds) {
      out.branch_two_min_ds = ds;
      out.argmin_gamma = gamma;
    }
  }
  out.inferior = out.branch_two_min_ds > out.branch_one_ds;
  return out;
}

bool quartic_branch_two_inferior(PolyhedronKind kind) {
  return quartic_branch_two_sweep(kind).inferior;
}

}  // namespace trisphere
