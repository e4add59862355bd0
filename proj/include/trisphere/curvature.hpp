#pragma once

#include "trisphere/bezier.hpp"
#include "trisphere/geometry.hpp"

namespace trisphere {

struct CurvatureSample {
  BarycentricPoint p;
  double E = 0.0, F = 0.0, G = 0.0;
  double L = 0.0, M = 0.0, N = 0.0;
  double K = 0.0;
};

/// Forms and K of any parameterization from its first and second partials.
/// Throws NonRegularPoint when EG - F^2 <= 1e-12.
CurvatureSample curvature_from_partials(const Vec3& du, const Vec3& dv, const Vec3& duu, const Vec3& duv,
                                        const Vec3& dvv);

/// Fundamental forms with the normal du x dv. Throws NonRegularPoint when
/// EG - F^2 <= 1e-12.
CurvatureSample gaussian_curvature(const ControlNet& net, BarycentricPoint p);

struct CurvatureRange {
  double k_min = 0.0;
  double k_max = 0.0;
  BarycentricPoint argmin;
  BarycentricPoint argmax;
};

/// Grid scan (one sixth of the simplex for symmetric nets) followed by a
/// pattern search around the best grid points. grid_n >= 128.
CurvatureRange curvature_range(const ControlNet& net, int grid_n = 512);

/// Round half away from zero to the given number of decimals.
double round_decimals(double x, int decimals);

}  // namespace trisphere
