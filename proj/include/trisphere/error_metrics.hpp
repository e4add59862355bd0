#pragma once

#include <array>

#include "trisphere/bezier.hpp"
#include "trisphere/families.hpp"
#include "trisphere/geometry.hpp"

namespace trisphere {

/// f = ||p||^2 - 1 (simplified radial error) and g = ||p|| - 1 (radial error).
struct RadialError {
  double f = 0.0;
  double g = 0.0;
};

enum class ErrorMeasure { Simplified, Radial };

/// Throws NegativeRadicand if f < -1.
RadialError radial_errors(const ControlNet& net, BarycentricPoint p);
double error_value(const ControlNet& net, BarycentricPoint p, ErrorMeasure which);

inline double g_from_f(double f) { return std::sqrt(f + 1.0) - 1.0; }

inline constexpr double kEquioscillationTolerance = 1e-9;
inline constexpr int kDefaultGrid = 512;

struct ErrorReport {
  double max_f = 0.0;
  double min_f = 0.0;
  double max_g = 0.0;
  double min_g = 0.0;
  BarycentricPoint argmax_f;
  BarycentricPoint argmin_f;
  BarycentricPoint argmax_g;
  BarycentricPoint argmin_g;
  double d_s = 0.0;
  double d_r = 0.0;
  bool equioscillation_f = false;
  bool equioscillation_g = false;
  /// Search was restricted to one sixth of the simplex.
  bool used_symmetry = false;

  bool equioscillation() const { return equioscillation_f || equioscillation_g; }
};

/// True when ||p||^2 is invariant under all permutations of (u, v, w), i.e.
/// the Gram matrix of the control points is permutation invariant.
bool has_permutation_symmetry(const ControlNet& net, double tol = 1e-12);

/// Two-stage search for the extrema of f (and g) over the simplex: a dense
/// grid of resolution grid_n (one sixth of the simplex when symmetric),
/// followed by projected Newton / gradient refinement with step halving.
ErrorReport extrema_over_delta(const ControlNet& net, int grid_n = kDefaultGrid);

/// Plain scan of f over all points (i/n, j/n), i + j <= n.
ErrorReport brute_force_extrema(const ControlNet& net, int grid_n);

/// err(1/3,1/3) + err(1/2,1/2) for the chosen error function.
double equioscillation_residual(const QuadraticFamily& family, ErrorMeasure which);

enum class ResidualMode { TwoPoint, Generalized };

/// TwoPoint as above; Generalized uses max + min from extrema_over_delta,
/// which is what the icosahedron quartic needs.
double equioscillation_residual(const QuarticFamily& family, ErrorMeasure which,
                                ResidualMode mode = ResidualMode::TwoPoint,
                                int grid_n = kDefaultGrid);

/// max + min of the chosen error over the simplex.
double generalized_residual(const ControlNet& net, ErrorMeasure which, int grid_n = kDefaultGrid);

/// max(|max|, |min|) of the chosen error over the simplex.
double minimax_value(const ControlNet& net, ErrorMeasure which, int grid_n = kDefaultGrid);

/// Coefficients (f0, f1, f2) of the quadratic family error f = f0 + f1 a + f2 a^2
/// written in the symmetric values (e2, e3).
std::array<double, 3> quadratic_error_coefficients(double c, OmegaPoint q);
double quadratic_error_in_omega(double c, double alpha, OmegaPoint q);

}  // namespace trisphere
