#include "trisphere/error_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "trisphere/errors.hpp"

namespace trisphere {

RadialError radial_errors(const ControlNet& net, BarycentricPoint p) {
  const Vec3 x = evaluate_position(net, p);
  const double f = x.squaredNorm() - 1.0;
  if (f < -1.0) throw NegativeRadicand("f < -1: patch passes through the origin");
  return {f, std::sqrt(f + 1.0) - 1.0};
}

double error_value(const ControlNet& net, BarycentricPoint p, ErrorMeasure which) {
  const RadialError e = radial_errors(net, p);
  return which == ErrorMeasure::Simplified ? e.f : e.g;
}

bool has_permutation_symmetry(const ControlNet& net, double tol) {
  static constexpr std::array<std::array<int, 3>, 2> kGenerators = {{{1, 2, 0}, {1, 0, 2}}};
  const auto& idx = net.indices();
  for (const auto& perm : kGenerators) {
    const ControlNet moved = net.permuted(perm);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a; b < idx.size(); ++b) {
        const double lhs = net.points()[a].dot(net.points()[b]);
        const double rhs = moved.points()[a].dot(moved.points()[b]);
        if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(lhs))) return false;
      }
    }
  }
  return true;
}

namespace {

struct FieldSample {
  double value = 0.0;
  Eigen::Vector2d grad = Eigen::Vector2d::Zero();
  Eigen::Matrix2d hess = Eigen::Matrix2d::Zero();
};

// f = |p|^2 - 1 with exact first and second partials.
FieldSample sample_f(const ControlNet& net, BarycentricPoint p) {
  const SurfacePoint s = evaluate(net, p);
  FieldSample out;
  out.value = s.position.squaredNorm() - 1.0;
  out.grad << 2.0 * s.position.dot(s.du), 2.0 * s.position.dot(s.dv);
  out.hess(0, 0) = 2.0 * (s.du.dot(s.du) + s.position.dot(s.duu));
  out.hess(0, 1) = 2.0 * (s.du.dot(s.dv) + s.position.dot(s.duv));
  out.hess(1, 1) = 2.0 * (s.dv.dot(s.dv) + s.position.dot(s.dvv));
  out.hess(1, 0) = out.hess(0, 1);
  return out;
}

// Boundary constraints of the simplex as a . x <= b.
struct Constraint {
  Eigen::Vector2d a;
  double b;
};
const std::array<Constraint, 3> kConstraints = {{{Eigen::Vector2d(-1, 0), 0.0},
                                                 {Eigen::Vector2d(0, -1), 0.0},
                                                 {Eigen::Vector2d(1, 1), 1.0}}};

Eigen::Vector2d clamp_to_simplex(Eigen::Vector2d x) {
  x.x() = std::max(0.0, x.x());
  x.y() = std::max(0.0, x.y());
  const double s = x.x() + x.y();
  if (s > 1.0) {
    const double shift = 0.5 * (s - 1.0);
    x.x() -= shift;
    x.y() -= shift;
    if (x.x() < 0.0) {
      x.y() += x.x();
      x.x() = 0.0;
    }
    if (x.y() < 0.0) {
      x.x() += x.y();
      x.y() = 0.0;
    }
  }
  return x;
}

// Largest t in [0, 1] with x + t d inside the simplex.
double max_feasible_step(const Eigen::Vector2d& x, const Eigen::Vector2d& d) {
  double t = 1.0;
  for (const auto& c : kConstraints) {
    const double rate = c.a.dot(d);
    if (rate > 0.0) t = std::min(t, std::max(0.0, (c.b - c.a.dot(x)) / rate));
  }
  return t;
}

struct Refined {
  Eigen::Vector2d x;
  double value;
};

// Maximises sign * f from start. Active-set projected Newton with a gradient
// fallback; every accepted step must not decrease the objective.
Refined refine(const ControlNet& net, Eigen::Vector2d x, double sign, double h0) {
  constexpr double kGradTol = 1e-12;
  constexpr double kActive = 1e-15;
  constexpr int kMaxIter = 200;
  auto objective = [&](const Eigen::Vector2d& y) {
    return sign * (evaluate_position(net, {y.x(), y.y()}).squaredNorm() - 1.0);
  };
  double value = objective(x);
  double trust = h0;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    FieldSample s = sample_f(net, {x.x(), x.y()});
    const Eigen::Vector2d g = sign * s.grad;
    const Eigen::Matrix2d h = sign * s.hess;

    // Basis of the feasible subspace given active constraints blocking ascent.
    std::vector<Eigen::Vector2d> blocked;
    for (const auto& c : kConstraints) {
      if (c.b - c.a.dot(x) <= kActive && c.a.dot(g) > 0.0) blocked.push_back(c.a);
    }
    Eigen::Vector2d dir = Eigen::Vector2d::Zero();
    double proj_grad = 0.0;
    Eigen::Vector2d newton = Eigen::Vector2d::Zero();
    bool have_newton = false;
    if (blocked.empty()) {
      proj_grad = g.norm();
      if (proj_grad < kGradTol) break;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(h);
      if (eig.eigenvalues().maxCoeff() < 0.0) {
        newton = -h.ldlt().solve(g);
        have_newton = true;
      }
      dir = g;
    } else if (blocked.size() == 1) {
      const Eigen::Vector2d t = Eigen::Vector2d(-blocked[0].y(), blocked[0].x()).normalized();
      const double gt = g.dot(t);
      proj_grad = std::abs(gt);
      if (proj_grad < kGradTol) break;
      const double ht = t.dot(h * t);
      if (ht < 0.0) {
        newton = (-gt / ht) * t;
        have_newton = true;
      }
      dir = gt * t;
    } else {
      break;  // corner with ascent blocked in both directions
    }

    bool moved = false;
    std::vector<Eigen::Vector2d> trials;
    if (have_newton) trials.push_back(newton);
    trials.push_back(dir.normalized() * trust);
    for (const Eigen::Vector2d& base : trials) {
      Eigen::Vector2d step = base;
      for (int halving = 0; halving < 60; ++halving) {
        const double tmax = max_feasible_step(x, step);
        const Eigen::Vector2d y = clamp_to_simplex(x + tmax * step);
        const double vy = objective(y);
        if (vy > value) {
          moved = true;
          x = y;
          value = vy;
          trust = std::max(std::min(2.0 * (tmax * step).norm(), h0), 1e-14);
          break;
        }
        step *= 0.5;
        if (step.norm() < 1e-17) break;
      }
      if (moved) break;
    }
    if (!moved) break;
  }
  return {x, value};
}

struct GridHit {
  double value;
  Eigen::Vector2d x;
};

// Keeps the best few distinct grid points (lexicographically smallest on ties).
void keep_best(std::vector<GridHit>& best, const GridHit& hit, std::size_t cap) {
  auto better = [](const GridHit& a, const GridHit& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.x.x() != b.x.x()) return a.x.x() < b.x.x();
    return a.x.y() < b.x.y();
  };
  if (best.size() == cap && !better(hit, best.back())) return;
  best.insert(std::upper_bound(best.begin(), best.end(), hit, better), hit);
  if (best.size() > cap) best.pop_back();
}

ErrorReport finish_report(double max_f, BarycentricPoint argmax, double min_f,
                          BarycentricPoint argmin) {
  if (min_f < -1.0) throw NegativeRadicand("f < -1: patch passes through the origin");
  ErrorReport r;
  r.max_f = max_f;
  r.min_f = min_f;
  r.argmax_f = argmax;
  r.argmin_f = argmin;
  r.max_g = g_from_f(max_f);
  r.min_g = g_from_f(min_f);
  r.argmax_g = argmax;
  r.argmin_g = argmin;
  r.d_s = std::max(std::abs(max_f), std::abs(min_f));
  r.d_r = std::max(std::abs(r.max_g), std::abs(r.min_g));
  r.equioscillation_f = std::abs(std::abs(max_f) - std::abs(min_f)) < kEquioscillationTolerance;
  r.equioscillation_g = std::abs(std::abs(r.max_g) - std::abs(r.min_g)) < kEquioscillationTolerance;
  return r;
}

}  // namespace

ErrorReport extrema_over_delta(const ControlNet& net, int grid_n) {
  if (grid_n < 64) throw std::invalid_argument("grid_n must be at least 64");
  const bool symmetric = has_permutation_symmetry(net);
  constexpr std::size_t kSeeds = 6;
  std::vector<GridHit> top;
  std::vector<GridHit> bottom;
  const double h = 1.0 / grid_n;
  for (int i = 0; i <= grid_n; ++i) {
    for (int j = 0; j <= grid_n - i; ++j) {
      const int k = grid_n - i - j;
      // fundamental sixth: u >= v >= w
      if (symmetric && !(i >= j && j >= k)) continue;
      const Eigen::Vector2d x(i * h, j * h);
      const double f = evaluate_position(net, {x.x(), x.y()}).squaredNorm() - 1.0;
      keep_best(top, {f, x}, kSeeds);
      keep_best(bottom, {-f, x}, kSeeds);
    }
  }
  // Symmetric nets: the fundamental sixth may miss a seed when grid_n is not
  // a multiple of 6, so also seed at the symmetric points.
  if (symmetric) {
    for (const Eigen::Vector2d& x : {Eigen::Vector2d(1.0 / 3.0, 1.0 / 3.0), Eigen::Vector2d(0.5, 0.5)}) {
      const double f = evaluate_position(net, {x.x(), x.y()}).squaredNorm() - 1.0;
      keep_best(top, {f, x}, kSeeds + 1);
      keep_best(bottom, {-f, x}, kSeeds + 1);
    }
  }

  auto best_of = [&](const std::vector<GridHit>& seeds, double sign) {
    Refined best{seeds.front().x, -std::numeric_limits<double>::infinity()};
    for (const auto& seed : seeds) {
      const Refined r = refine(net, seed.x, sign, h);
      const bool tie_break = r.value == best.value &&
                             (r.x.x() < best.x.x() || (r.x.x() == best.x.x() && r.x.y() < best.x.y()));
      if (r.value > best.value || tie_break) best = r;
    }
    return best;
  };
  const Refined mx = best_of(top, 1.0);
  const Refined mn = best_of(bottom, -1.0);
  ErrorReport r = finish_report(mx.value, {mx.x.x(), mx.x.y()}, -mn.value, {mn.x.x(), mn.x.y()});
  r.used_symmetry = symmetric;
  return r;
}

ErrorReport brute_force_extrema(const ControlNet& net, int grid_n) {
  if (grid_n < 1) throw std::invalid_argument("grid_n must be positive");
  double max_f = -std::numeric_limits<double>::infinity();
  double min_f = std::numeric_limits<double>::infinity();
  BarycentricPoint argmax, argmin;
  const double h = 1.0 / grid_n;
  for (int i = 0; i <= grid_n; ++i) {
    for (int j = 0; j <= grid_n - i; ++j) {
      const BarycentricPoint p{i * h, j * h};
      const double f = evaluate_position(net, p).squaredNorm() - 1.0;
      if (f > max_f) {
        max_f = f;
        argmax = p;
      }
      if (f < min_f) {
        min_f = f;
        argmin = p;
      }
    }
  }
  return finish_report(max_f, argmax, min_f, argmin);
}

double equioscillation_residual(const QuadraticFamily& family, ErrorMeasure which) {
  const ControlNet net = family.net();
  return error_value(net, {1.0 / 3.0, 1.0 / 3.0}, which) + error_value(net, {0.5, 0.5}, which);
}

double equioscillation_residual(const QuarticFamily& family, ErrorMeasure which, ResidualMode mode,
                                int grid_n) {
  const ControlNet net = family.net();
  if (mode == ResidualMode::Generalized) return generalized_residual(net, which, grid_n);
  return error_value(net, {1.0 / 3.0, 1.0 / 3.0}, which) + error_value(net, {0.5, 0.5}, which);
}

double generalized_residual(const ControlNet& net, ErrorMeasure which, int grid_n) {
  const ErrorReport r = extrema_over_delta(net, grid_n);
  return which == ErrorMeasure::Simplified ? r.max_f + r.min_f : r.max_g + r.min_g;
}

double minimax_value(const ControlNet& net, ErrorMeasure which, int grid_n) {
  const ErrorReport r = extrema_over_delta(net, grid_n);
  return which == ErrorMeasure::Simplified ? r.d_s : r.d_r;
}

std::array<double, 3> quadratic_error_coefficients(double c, OmegaPoint q) {
  const double c2 = c * c;
  const double a = 4.0 - 3.0 * c2;
  const double b = 12.0 * (1.0 - c2);
  const double e2 = q.e2;
  const double e3 = q.e3;
  const double f0 = 6.0 * c2 * e3 - 4.0 * e2 + a * e2 * e2;
  const double f1 = a * (e2 - 2.0 * e2 * e2 - 3.0 * e3) + b * e3;
  const double f2 = b * e3 + a * (e2 * e2 - 3.0 * e3);
  return {f0, f1, f2};
}

double quadratic_error_in_omega(double c, double alpha, OmegaPoint q) {
  const auto f = quadratic_error_coefficients(c, q);
  return f[0] + f[1] * alpha + f[2] * alpha * alpha;
}

}  // namespace trisphere
