#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisphere/error_metrics.hpp"
#include "trisphere/families.hpp"
#include "trisphere/geometry.hpp"

namespace trisphere {

enum class Smoothness { G0, G1, G2 };
enum class Provenance { ClosedForm, Bisection };

std::string_view to_string(Smoothness s);
std::string_view to_string(ErrorMeasure m);
std::string_view to_string(Provenance p);
Smoothness parse_smoothness(std::string_view s);
ErrorMeasure parse_measure(std::string_view s);

struct OptimalSolution {
  PolyhedronKind kind = PolyhedronKind::Tetrahedron;
  int degree = 2;
  Smoothness smoothness = Smoothness::G0;
  ErrorMeasure measure = ErrorMeasure::Radial;
  /// Named parameters in family order (alpha, beta, gamma, zeta, xi).
  std::vector<std::pair<std::string, double>> params;
  double d_r = 0.0;
  double d_s = 0.0;
  Provenance provenance = Provenance::ClosedForm;
  int iterations = 0;
  /// Location of the maximum of the error when it is off the barycenter.
  std::optional<BarycentricPoint> extremum;
  ControlNet net{0};

  double param(const std::string& name) const;
};

/// alpha_f (Simplified) or alpha_g (Radial) of the quadratic G0 family.
double quadratic_optimal(double c, ErrorMeasure measure);

/// The regular cubic G1 triple (triple 1).
CubicTriple cubic_optimal(double c);

/// Closed-form quartic optima for the tetrahedron and octahedron.
double quartic_closed_form_gamma(PolyhedronKind kind, ErrorMeasure measure);

/// Right end of the icosahedron bisection bracket: the positive root of
/// f(1/3,1/3,gamma) = -f(1/2,1/2,gamma).
double icosahedron_gamma0();
/// Roots of f(1/3,1/3,gamma) = 0 and f(1/2,1/2,gamma) = 0 bracketing the optimum.
std::pair<double, double> icosahedron_gamma_bracket();

struct BisectionResult {
  double gamma = 0.0;
  double width = 0.0;
  int iterations = 0;
};

/// Bisection on gamma over [lo, hi] comparing max and |min| of the chosen
/// error; stops when the interval is narrower than tol. Throws
/// BisectionFailure when the end points do not bracket.
BisectionResult bisect_quartic_gamma(double c, ErrorMeasure measure, double lo, double hi,
                                     double tol = 1e-12, int grid_n = kDefaultGrid);

struct DiagonalSolution {
  double u = 0.0;
  double gamma = 0.0;
  double second_derivative = 0.0;
  int iterations = 0;
};

/// Damped Newton solve of f(u,u,gamma) = -f(1/2,0,gamma), d/du f(u,u,gamma) = 0
/// for branch One of the quartic family.
DiagonalSolution solve_diagonal_system(double c, double u0, double gamma0);

/// Full quartic optimum: closed forms for tetrahedron/octahedron, bisection
/// over [1/2, gamma0] for the icosahedron.
OptimalSolution quartic_optimal(PolyhedronKind kind, ErrorMeasure measure,
                                int grid_n = kDefaultGrid);

OptimalSolution quadratic_solution(PolyhedronKind kind, ErrorMeasure measure,
                                   int grid_n = kDefaultGrid);
OptimalSolution cubic_solution(PolyhedronKind kind, int grid_n = kDefaultGrid);

/// Optimal net for the (degree, measure) combination; degree 3 ignores measure.
OptimalSolution optimal_solution(PolyhedronKind kind, int degree, ErrorMeasure measure,
                                 int grid_n = kDefaultGrid);

/// Split point of the tetrahedron branch comparison.
double tetrahedron_branch_split_gamma();

struct BranchSweep {
  bool inferior = false;
  double branch_one_ds = 0.0;
  /// Smallest grid lower bound of d_s over the branch Two sweep.
  double branch_two_min_ds = 0.0;
  double argmin_gamma = 0.0;
};

/// Sweeps gamma over [0, 3] (step 1e-3) comparing branch Two's d_s (grid
/// lower bound) with branch One's optimal d_s.
BranchSweep quartic_branch_two_sweep(PolyhedronKind kind, int grid_n = 64);
bool quartic_branch_two_inferior(PolyhedronKind kind);

}  // namespace trisphere
