#include "trisphere/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "trisphere/errors.hpp"

namespace trisphere {

namespace {

bool is_cyclic(const std::array<int, 3>& p) {
  return (p[1] == (p[0] + 1) % 3) && (p[2] == (p[1] + 1) % 3);
}

BarycentricPoint corner_point(int axis) {
  if (axis == 0) return {1.0, 0.0};
  if (axis == 1) return {0.0, 1.0};
  return {0.0, 0.0};
}

std::string format_tau(const char* what, double tau) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s at tau=%.6g", what, tau);
  return buf;
}

ContinuityCertificate finish(ContinuityCertificate cert) {
  cert.max_residual = 0.0;
  for (const auto& s : cert.samples) cert.max_residual = std::max(cert.max_residual, s.second);
  if (cert.reason.empty()) {
    cert.pass = cert.max_residual < level_tolerance(cert.level);
    if (!cert.pass) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "residual %.3e exceeds %.0e", cert.max_residual,
                    level_tolerance(cert.level));
      cert.reason = buf;
    }
  } else {
    cert.pass = false;
  }
  return cert;
}

std::vector<double> uniform_taus(int samples) {
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  std::vector<double> taus;
  for (int n = 0; n < samples; ++n) taus.push_back(static_cast<double>(n) / (samples - 1));
  return taus;
}

}  // namespace

double level_tolerance(Smoothness level) {
  switch (level) {
    case Smoothness::G0:
      return kG0Tolerance;
    case Smoothness::G1:
      return kG1Tolerance;
    case Smoothness::G2:
      return kG2Tolerance;
  }
  return 0.0;
}

Mat3 reflection_matrix(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("c must lie in (0, 1)");
  const double c2 = c * c;
  const double s = std::sqrt(1.0 - c2);
  const double d = 3.0 * c2 - 4.0;
  Mat3 r;
  r << (4.0 - 5.0 * c2) / d, 0.0, 4.0 * c * s / d,
       0.0, 1.0, 0.0,
       4.0 * c * s / d, 0.0, (4.0 - 5.0 * c2) / (4.0 - 3.0 * c2);
  return r;
}

Mat3 reflection_across_plane(const Vec3& a, const Vec3& b) {
  const Vec3 m = a.cross(b);
  if (m.norm() < 1e-14) throw std::invalid_argument("plane through the origin is not determined");
  const Vec3 n = m.normalized();
  return Mat3::Identity() - 2.0 * n * n.transpose();
}

AdjoinedPair reflected_pair(const ControlNet& net) {
  const int n = net.degree();
  const Mat3 r = reflection_across_plane(net.at(0, n, 0), net.at(0, 0, n));
  return {net, net.transformed(r), r};
}

AdjoinedPair adjoin_along_shared_edge(const ControlNet& a, const ControlNet& b, double tol) {
  for (int i1 = 0; i1 < 3; ++i1) {
    for (int i2 = 0; i2 < 3; ++i2) {
      if (i1 == i2) continue;
      const std::array<int, 3> p{3 - i1 - i2, i1, i2};
      if (!is_cyclic(p)) continue;
      for (int j1 = 0; j1 < 3; ++j1) {
        for (int j2 = 0; j2 < 3; ++j2) {
          if (j1 == j2) continue;
          if ((a.corner(i1) - b.corner(j1)).norm() > tol) continue;
          if ((a.corner(i2) - b.corner(j2)).norm() > tol) continue;
          const std::array<int, 3> q{3 - j1 - j2, j1, j2};
          return {a.permuted(p), b.permuted(q), reflection_across_plane(a.corner(i1), a.corner(i2))};
        }
      }
    }
  }
  throw std::invalid_argument("nets do not share an edge");
}

std::vector<double> default_tau_samples(int uniform) {
  std::vector<double> taus = uniform_taus(uniform);
  for (int k = 1; k <= 3; ++k) taus.push_back(0.5 * (1.0 - std::cos(k * std::numbers::pi / 4.0)));
  taus.push_back(-0.5 * kEvaluationEpsilon);
  taus.push_back(1.0 + 0.5 * kEvaluationEpsilon);
  return taus;
}

ContinuityCertificate check_g0(const AdjoinedPair& pair, const std::vector<double>& taus) {
  ContinuityCertificate cert;
  cert.level = Smoothness::G0;
  for (double tau : taus) {
    const Vec3 a = evaluate_position(pair.net1, {0.0, tau});
    const Vec3 b = evaluate_position(pair.net2, {0.0, tau});
    cert.samples.emplace_back(tau, (a - b).norm());
  }
  return finish(std::move(cert));
}

ContinuityCertificate check_g0(const AdjoinedPair& pair, int samples) {
  return check_g0(pair, default_tau_samples(samples));
}

ContinuityCertificate check_g1(const AdjoinedPair& pair, const std::vector<double>& taus) {
  const ContinuityCertificate g0 = check_g0(pair, taus);
  ContinuityCertificate cert;
  cert.level = Smoothness::G1;
  if (!g0.pass) {
    cert.samples = g0.samples;
    cert.reason = "not G0: " + g0.reason;
    return finish(std::move(cert));
  }
  std::optional<Vec3> mirror;
  if (pair.reflection) {
    const Mat3 half = 0.5 * (Mat3::Identity() - *pair.reflection);
    int col = 0;
    for (int k = 1; k < 3; ++k) {
      if (half.col(k).norm() > half.col(col).norm()) col = k;
    }
    mirror = half.col(col).normalized();
  }
  for (double tau : taus) {
    const SurfacePoint a = evaluate(pair.net1, {0.0, tau});
    const SurfacePoint b = evaluate(pair.net2, {0.0, tau});
    if (!a.regular || !b.regular) {
      cert.samples.emplace_back(tau, std::numeric_limits<double>::infinity());
      if (cert.reason.empty()) cert.reason = format_tau("degenerate normal", tau);
      continue;
    }
    double r = a.normal.cross(b.normal).norm();
    if (mirror) r = std::max(r, std::abs(a.normal.dot(*mirror)));
    cert.samples.emplace_back(tau, r);
  }
  return finish(std::move(cert));
}

ContinuityCertificate check_g1(const AdjoinedPair& pair, int samples) {
  return check_g1(pair, default_tau_samples(samples));
}

TransversalCurve::Coefficients TransversalCurve::coefficients(double v) const {
  const double c2 = c * c;
  const double c4 = c2 * c2;
  const double c6 = c4 * c2;
  const double a = 4.0 - 3.0 * c2;
  if (family == Family::Cubic) {
    const double q = 4.0 - 4.0 * c2 + 3.0 * c4 * (1.0 - v) * v;
    return {1.0,
            6.0 * c2 * (4.0 - 5.0 * c2 + 6.0 * c4 * (1.0 - v) * v) / (a * q),
            (6.0 * c2 * (1.0 - v) - 4.0) / a,
            6.0 * c4 * (2.0 + 9.0 * c4 * (1.0 - v) * (1.0 - v) * v - 3.0 * c2 * (1.0 + v - 2.0 * v * v)) /
                (a * a * q)};
  }
  const double g = gamma;
  const double num = 2.0 *
                     (27.0 * c6 * (1.0 - v) * (1.0 - v) * v - 16.0 - 6.0 * c2 * (4.0 * v - 7.0) +
                      9.0 * c4 * (2.0 * v * v + v - 3.0)) *
                     (2.0 + c2 - 4.0 * g);
  const double den = a * a *
                     (6.0 * c4 * (v - 1.0) * v * g + 2.0 * (2.0 * v * v - 2.0 * v + 1.0) * (2.0 * g - 1.0) +
                      c2 * (2.0 + v * v * (7.0 - 18.0 * g) - 4.0 * g + v * (18.0 * g - 7.0)));
  return {1.0, 0.0, 2.0 * (2.0 - 3.0 * c2 + 3.0 * c2 * v) / (3.0 * c2 - 4.0), num / den};
}

TransversalCurve infer_transversal_curve(const ControlNet& net) {
  TransversalCurve curve;
  const int n = net.degree();
  if (n == 3) {
    curve.family = TransversalCurve::Family::Cubic;
  } else if (n == 4) {
    curve.family = TransversalCurve::Family::Quartic;
  } else {
    throw std::invalid_argument("transversal curves exist for degree 3 and 4 only");
  }
  const Vec3 axis = (net.corner(0) + net.corner(1) + net.corner(2)).normalized();
  const double h = axis.dot(net.corner(0)) / net.corner(0).norm();
  curve.c = std::sqrt(std::max(0.0, 1.0 - h * h));
  if (n == 4) {
    const Vec3 sum = net.corner(0) + net.corner(1);
    curve.gamma = net.at(2, 2, 0).dot(sum) / sum.squaredNorm();
  }
  return curve;
}

CurveJet transversal_jet(const AdjoinedPair& pair, const TransversalCurve& curve, double v) {
  const SurfacePoint a = evaluate(pair.net1, {0.0, v});
  const SurfacePoint b = evaluate(pair.net2, {0.0, v});
  const auto k = curve.coefficients(v);
  CurveJet jet;
  jet.d1_minus = -a.du;
  jet.d2_minus = a.duu;
  jet.d1_plus = k.phi1 * b.du + k.psi1 * b.dv;
  jet.d2_plus = 2.0 * k.phi2 * b.du + 2.0 * k.psi2 * b.dv + k.phi1 * k.phi1 * b.duu +
                2.0 * k.phi1 * k.psi1 * b.duv + k.psi1 * k.psi1 * b.dvv;
  return jet;
}

Vec3 transversal_point(const AdjoinedPair& pair, const TransversalCurve& curve, double v, double t) {
  if (t <= 0.0) return evaluate_position(pair.net1, {-t, v});
  const auto k = curve.coefficients(v);
  return evaluate_position(pair.net2, {k.phi1 * t + k.phi2 * t * t, v + k.psi1 * t + k.psi2 * t * t});
}

Eigen::MatrixXd gk_matrix(int k, const std::vector<double>& alpha) {
  if (k < 1 || k > 3) throw std::invalid_argument("M_k is available for k = 1, 2, 3");
  if (static_cast<int>(alpha.size()) < k) throw std::invalid_argument("need alpha_1..alpha_k");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  const double a1 = alpha[0];
  m(0, 0) = a1;
  if (k >= 2) {
    m(1, 0) = alpha[1];
    m(1, 1) = a1 * a1;
  }
  if (k >= 3) {
    m(2, 0) = alpha[2];
    m(2, 1) = 3.0 * a1 * alpha[1];
    m(2, 2) = a1 * a1 * a1;
  }
  return m;
}

G2Fit fit_g2(const CurveJet& jet) {
  G2Fit fit;
  const double nn = jet.d1_minus.squaredNorm();
  if (nn == 0.0) throw DegenerateNormal("transversal curve has zero velocity");
  fit.alpha1 = jet.d1_plus.dot(jet.d1_minus) / nn;
  const Vec3 rhs = jet.d2_plus - fit.alpha1 * fit.alpha1 * jet.d2_minus;
  fit.alpha2 = rhs.dot(jet.d1_minus) / nn;
  const Vec3 r1 = jet.d1_plus - fit.alpha1 * jet.d1_minus;
  const Vec3 r2 = rhs - fit.alpha2 * jet.d1_minus;
  fit.second_row_residual = r2.norm();
  fit.residual = std::sqrt(r1.squaredNorm() + r2.squaredNorm());
  return fit;
}

ContinuityCertificate check_g2_via_curve(const AdjoinedPair& pair, const TransversalCurve& curve,
                                         const std::vector<double>& taus) {
  const ContinuityCertificate g1 = check_g1(pair, taus);
  ContinuityCertificate cert;
  cert.level = Smoothness::G2;
  if (!g1.pass) {
    cert.samples = g1.samples;
    cert.reason = "not G1: " + g1.reason;
    return finish(std::move(cert));
  }
  for (double tau : taus) {
    const G2Fit fit = fit_g2(transversal_jet(pair, curve, tau));
    if (!(fit.alpha1 > 0.0) && cert.reason.empty()) cert.reason = "orientation-reversing match";
    cert.samples.emplace_back(tau, fit.residual);
  }
  return finish(std::move(cert));
}

ContinuityCertificate check_g2_via_curve(const AdjoinedPair& pair, const TransversalCurve& curve,
                                         int samples) {
  return check_g2_via_curve(pair, curve, default_tau_samples(samples));
}

ContinuityCertificate check_vertex_ring(const std::vector<ControlNet>& nets, Smoothness level,
                                        int samples) {
  if (nets.size() < 2) throw std::invalid_argument("a vertex ring needs at least two nets");
  const double tol = 1e-10;
  int axis0 = -1;
  std::vector<int> axes;
  for (int a = 0; a < 3 && axis0 < 0; ++a) {
    std::vector<int> found{a};
    for (std::size_t n = 1; n < nets.size(); ++n) {
      for (int b = 0; b < 3; ++b) {
        if ((nets[n].corner(b) - nets[0].corner(a)).norm() < tol) {
          found.push_back(b);
          break;
        }
      }
    }
    if (found.size() == nets.size()) {
      axis0 = a;
      axes = found;
    }
  }
  if (axis0 < 0) throw std::invalid_argument("nets do not share a corner");

  ContinuityCertificate cert;
  cert.level = level;
  std::vector<Vec3> normals;
  for (std::size_t n = 0; n < nets.size(); ++n) {
    const SurfacePoint p = evaluate(nets[n], corner_point(axes[n]));
    if (level != Smoothness::G0 && !p.regular) {
      cert.reason = "degenerate normal at the shared vertex";
      normals.push_back(Vec3::Zero());
    } else {
      normals.push_back(p.normal);
    }
  }
  if (level != Smoothness::G0) {
    for (std::size_t n = 0; n < nets.size(); ++n) {
      cert.samples.emplace_back(static_cast<double>(n), normals[n].cross(normals[0]).norm());
    }
  }
  const TransversalCurve curve =
      level == Smoothness::G2 ? infer_transversal_curve(nets[0]) : TransversalCurve{};
  for (std::size_t n = 0; n < nets.size(); ++n) {
    const AdjoinedPair pair = adjoin_along_shared_edge(nets[n], nets[(n + 1) % nets.size()]);
    ContinuityCertificate edge;
    if (level == Smoothness::G0) {
      edge = check_g0(pair, samples);
    } else if (level == Smoothness::G1) {
      edge = check_g1(pair, samples);
    } else {
      edge = check_g2_via_curve(pair, curve, samples);
    }
    cert.samples.emplace_back(static_cast<double>(n), edge.max_residual);
    if (!edge.pass && cert.reason.empty()) cert.reason = "pair " + std::to_string(n) + ": " + edge.reason;
  }
  return finish(std::move(cert));
}

}  // namespace trisphere
