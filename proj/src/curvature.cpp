#include "trisphere/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "trisphere/error_metrics.hpp"
#include "trisphere/errors.hpp"

namespace trisphere {

CurvatureSample curvature_from_partials(const Vec3& du, const Vec3& dv, const Vec3& duu, const Vec3& duv,
                                        const Vec3& dvv) {
  CurvatureSample out;
  out.E = du.dot(du);
  out.F = du.dot(dv);
  out.G = dv.dot(dv);
  const double det = out.E * out.G - out.F * out.F;
  if (det <= 1e-12) throw NonRegularPoint("first fundamental form is singular");
  const Vec3 n = du.cross(dv).normalized();
  out.L = duu.dot(n);
  out.M = duv.dot(n);
  out.N = dvv.dot(n);
  out.K = (out.L * out.N - out.M * out.M) / det;
  return out;
}

CurvatureSample gaussian_curvature(const ControlNet& net, BarycentricPoint p) {
  const SurfacePoint s = evaluate(net, p);
  CurvatureSample out = curvature_from_partials(s.du, s.dv, s.duu, s.duv, s.dvv);
  out.p = p;
  return out;
}

namespace {

struct Candidate {
  double k;
  BarycentricPoint p;
};

// Pattern search for the extremum of sign * K starting from p.
Candidate pattern_search(const ControlNet& net, Candidate start, double sign, double step) {
  static constexpr double kDirs[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  Candidate best = start;
  while (step > 1e-10) {
    bool moved = false;
    for (const auto& d : kDirs) {
      const BarycentricPoint q{best.p.u + step * d[0], best.p.v + step * d[1]};
      if (!in_simplex(q)) continue;
      const double k = gaussian_curvature(net, q).K;
      if (sign * k > sign * best.k) {
        best = {k, q};
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

}  // namespace

CurvatureRange curvature_range(const ControlNet& net, int grid_n) {
  if (grid_n < 128) throw std::invalid_argument("curvature grid must be at least 128");
  const bool sym = has_permutation_symmetry(net);
  std::vector<Candidate> samples;
  for (int i = 0; i <= grid_n; ++i) {
    for (int j = 0; i + j <= grid_n; ++j) {
      const int k = grid_n - i - j;
      if (sym && !(i >= j && j >= k)) continue;
      const BarycentricPoint p{static_cast<double>(i) / grid_n, static_cast<double>(j) / grid_n};
      samples.push_back({gaussian_curvature(net, p).K, p});
    }
  }
  auto by_k = [](const Candidate& a, const Candidate& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.p.u != b.p.u) return a.p.u < b.p.u;
    return a.p.v < b.p.v;
  };
  std::sort(samples.begin(), samples.end(), by_k);
  const std::size_t seeds = std::min<std::size_t>(6, samples.size());
  const double step = 1.0 / grid_n;
  CurvatureRange out;
  Candidate lo = samples.front();
  Candidate hi = samples.back();
  for (std::size_t n = 0; n < seeds; ++n) {
    const Candidate a = pattern_search(net, samples[n], -1.0, step);
    if (a.k < lo.k) lo = a;
    const Candidate b = pattern_search(net, samples[samples.size() - 1 - n], 1.0, step);
    if (b.k > hi.k) hi = b;
  }
  out.k_min = lo.k;
  out.argmin = lo.p;
  out.k_max = hi.k;
  out.argmax = hi.p;
  return out;
}

double round_decimals(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(x * scale) / scale;
}

}  // namespace trisphere
