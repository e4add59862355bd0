#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "trisphere/bezier.hpp"
#include "trisphere/geometry.hpp"
#include "trisphere/optimal_params.hpp"

namespace trisphere {

inline constexpr double kG0Tolerance = 1e-13;
inline constexpr double kG1Tolerance = 1e-10;
inline constexpr double kG2Tolerance = 1e-8;

double level_tolerance(Smoothness level);

/// Reflection across the plane through the origin and the edge v1 v2 of
/// the canonical triangle with parameter c.
Mat3 reflection_matrix(double c);

/// Householder reflection across the plane through the origin, a and b.
Mat3 reflection_across_plane(const Vec3& a, const Vec3& b);

/// Two patches glued along the u = 0 edge: p1(0, t) = p2(0, t).
struct AdjoinedPair {
  ControlNet net1{0};
  ControlNet net2{0};
  /// Set for mirror gluings; enables the boundary-plane normal test.
  std::optional<Mat3> reflection;
};

/// net2 = R net1 with R the reflection across the plane of the u = 0 edge.
AdjoinedPair reflected_pair(const ControlNet& net);

/// Relabels two nets sharing an edge (corner points equal within tol) so
/// that the edge is u = 0 in both with the same direction. Throws
/// std::invalid_argument when no edge is shared. The mirror plane is the
/// plane of the shared edge.
AdjoinedPair adjoin_along_shared_edge(const ControlNet& a, const ControlNet& b, double tol = 1e-10);

struct ContinuityCertificate {
  Smoothness level = Smoothness::G0;
  /// (tau, residual) per sample; for vertex rings tau is the patch index.
  std::vector<std::pair<double, double>> samples;
  double max_residual = 0.0;
  bool pass = false;
  std::string reason;
};

/// 101 uniform values on [0, 1], the interior extrema of T4 mapped to
/// [0, 1], and the two points 0.025 outside each end.
std::vector<double> default_tau_samples(int uniform = 101);

ContinuityCertificate check_g0(const AdjoinedPair& pair, const std::vector<double>& taus);
ContinuityCertificate check_g0(const AdjoinedPair& pair, int samples = 101);

/// Residual ||n1 x n2||, and |n1 . m| for mirror gluings (m the mirror
/// plane normal). Fails on a vanishing normal.
ContinuityCertificate check_g1(const AdjoinedPair& pair, const std::vector<double>& taus);
ContinuityCertificate check_g1(const AdjoinedPair& pair, int samples = 101);

/// Explicit transversal curve through the common boundary:
///   t <= 0: p1(-t, v)
///   t >= 0: p2(phi(t), psi(t)), phi = phi1 t + phi2 t^2, psi = v + psi1 t + psi2 t^2
struct TransversalCurve {
  enum class Family { Cubic, Quartic };
  Family family = Family::Cubic;
  double c = 0.0;
  /// Quartic b220 coefficient.
  double gamma = 0.0;

  struct Coefficients {
    double phi1, phi2, psi1, psi2;
  };
  Coefficients coefficients(double v) const;
};

/// Curve family inferred from the net degree (3 or 4), c from the corner
/// spread and gamma from b220.
TransversalCurve infer_transversal_curve(const ControlNet& net);

/// One-sided first and second derivatives at t = 0.
struct CurveJet {
  Vec3 d1_minus, d2_minus, d1_plus, d2_plus;
};

CurveJet transversal_jet(const AdjoinedPair& pair, const TransversalCurve& curve, double v);
Vec3 transversal_point(const AdjoinedPair& pair, const TransversalCurve& curve, double v, double t);

/// Lower-triangular reparameterization matrix M_k for k = 1, 2, 3 built
/// from alpha_1..alpha_k.
Eigen::MatrixXd gk_matrix(int k, const std::vector<double>& alpha);

/// Least-squares alpha1, alpha2 of d1+ = a1 d1-, d2+ = a2 d1- + a1^2 d2-.
struct G2Fit {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double residual = 0.0;
  double second_row_residual = 0.0;
};
G2Fit fit_g2(const CurveJet& jet);

ContinuityCertificate check_g2_via_curve(const AdjoinedPair& pair, const TransversalCurve& curve,
                                         const std::vector<double>& taus);
ContinuityCertificate check_g2_via_curve(const AdjoinedPair& pair, const TransversalCurve& curve,
                                         int samples = 101);

/// Nets around a common corner, consecutive ones sharing an edge (the last
/// wraps to the first). Checks the corner normals agree and, for G1 and G2,
/// the consecutive pair certificates. Degenerate projections of the ring are
/// not detected separately.
ContinuityCertificate check_vertex_ring(const std::vector<ControlNet>& nets, Smoothness level,
                                        int samples = 101);

}  // namespace trisphere
