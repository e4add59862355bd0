// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance               run every criterion
//   acceptance --criterion N run criterion N only

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trisphere/continuity.hpp"
#include "trisphere/error_metrics.hpp"
#include "trisphere/geometry.hpp"
#include "trisphere/optimal_params.hpp"
#include "trisphere/sphere.hpp"
#include "trisphere/tables.hpp"

using namespace trisphere;

namespace {

// Tolerances and limits.
constexpr double kParamTol = 1e-5;
constexpr double kSqrt3Tol = 1e-12;
constexpr double kBisectionWidth = 1e-12;
constexpr double kExtremumTol = 1e-4;
constexpr double kG2Residual = 1e-8;
constexpr double kQuadraticG1Floor = 1e-3;
constexpr double kEquioscillationTol = 1e-9;
constexpr double kPerturbation = 1e-4;
constexpr double kDomainTol = 1e-12;
constexpr double kOracleTol = 1e-9;
constexpr int kOracleGrid = 2046;
constexpr double kMeshRadialSlack = 1e-9;
constexpr int kMeshSubdivisions = 32;
constexpr double kNoLimit = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string cell_failure(const TableRow& row, const TableCell& c) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "%s degree %d %s = %.9g, expected %.6f (dev %.3g)",
                std::string(to_string(row.kind)).c_str(), row.degree, c.column.c_str(), c.value, c.expected,
                c.deviation());
  return buf;
}

// Parameter and d_r cells of one table.
Outcome table_parameters(int which, double* worst_out = nullptr) {
  Outcome o;
  const TableResult t = compute_table(which);
  double worst = 0.0;
  for (const auto& row : t.rows) {
    for (const auto& c : row.cells) {
      if (c.rounded) continue;
      worst = std::max(worst, c.deviation());
      if (c.deviation() > kParamTol) o.fail(cell_failure(row, c));
    }
  }
  if (o.pass) o.detail = fmt("max deviation %.3g", worst);
  if (worst_out) *worst_out = worst;
  return o;
}

ControlNet optimal_net(PolyhedronKind kind, int degree) {
  return optimal_solution(kind, degree, ErrorMeasure::Radial).net;
}

Outcome criterion_table1() { return table_parameters(1); }

Outcome criterion_table2() {
  Outcome o = table_parameters(2);
  const double gamma = cubic_optimal(polyhedron_c(PolyhedronKind::Octahedron)).gamma;
  if (std::abs(gamma - std::sqrt(3.0)) >= kSqrt3Tol) o.fail(fmt("octahedron gamma - sqrt(3) = %.3g", gamma - std::sqrt(3.0)));
  return o;
}

Outcome criterion_table3() {
  Outcome o = table_parameters(3);
  const double c = polyhedron_c(PolyhedronKind::Icosahedron);
  const BisectionResult b = bisect_quartic_gamma(c, ErrorMeasure::Radial, 0.5, icosahedron_gamma0());
  if (!(b.width < kBisectionWidth)) o.fail(fmt("bisection interval %.3g", b.width));
  const OptimalSolution s = quartic_optimal(PolyhedronKind::Icosahedron, ErrorMeasure::Radial);
  if (!s.extremum) {
    o.fail("no icosahedron extremum location");
  } else {
    const double du = std::abs(s.extremum->u - 0.139979), dv = std::abs(s.extremum->v - 0.139979);
    if (std::max(du, dv) > kExtremumTol) o.fail(fmt("extremum off by %.3g", std::max(du, dv)));
  }
  return o;
}

Outcome criterion_curvature() {
  Outcome o;
  int cells = 0;
  for (int which : {1, 2, 3}) {
    const TableResult t = compute_table(which, 512);
    for (const auto& row : t.rows) {
      for (const auto& c : row.cells) {
        if (!c.rounded) continue;
        ++cells;
        if (std::abs(round_decimals(c.value, 2) - c.expected) > 1e-12) o.fail(cell_failure(row, c));
      }
    }
  }
  if (cells != 18) o.fail("expected 18 curvature cells, got " + std::to_string(cells));
  if (o.pass) o.detail = "18 cells agree at 2 decimals";
  return o;
}

Outcome criterion_continuity() {
  Outcome o;
  double worst_g2 = 0.0, weakest_quadratic = std::numeric_limits<double>::infinity();
  for (auto kind : kAllKinds) {
    const std::string name(to_string(kind));
    for (int degree : {3, 4}) {
      const ControlNet net = optimal_net(kind, degree);
      const ContinuityCertificate cert = check_g2_via_curve(reflected_pair(net), infer_transversal_curve(net), 101);
      worst_g2 = std::max(worst_g2, cert.max_residual);
      if (!cert.pass || !(cert.max_residual < kG2Residual)) {
        o.fail(name + " degree " + std::to_string(degree) + " pair not G2: " + cert.reason);
      }
      const SphereCertification sphere = certify_sphere(build_sphere(kind, net), Smoothness::G2);
      if (!sphere.pass()) {
        o.fail(name + " degree " + std::to_string(degree) + " sphere: " + std::to_string(sphere.failures()) +
               " failed checks");
      }
    }
    const ContinuityCertificate q = check_g1(reflected_pair(optimal_net(kind, 2)), 101);
    weakest_quadratic = std::min(weakest_quadratic, q.max_residual);
    if (q.pass || !(q.max_residual > kQuadraticG1Floor)) o.fail(name + " quadratic pair is not a clear G1 failure");
  }
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "worst G2 residual %.3g, smallest quadratic G1 residual %.3g", worst_g2,
                  weakest_quadratic);
    o.detail = buf;
  }
  return o;
}

Outcome criterion_equioscillation() {
  Outcome o;
  double worst = 0.0;
  const auto check = [&](const std::string& label, const std::function<ControlNet(double)>& make, double p,
                         ErrorMeasure m) {
    const ErrorReport r = extrema_over_delta(make(p));
    const double hi = m == ErrorMeasure::Simplified ? r.max_f : r.max_g;
    const double lo = m == ErrorMeasure::Simplified ? r.min_f : r.min_g;
    const double gap = std::abs(std::abs(hi) - std::abs(lo));
    worst = std::max(worst, gap);
    if (!(gap < kEquioscillationTol)) o.fail(label + fmt(" extrema differ by %.3g", gap));
    const double best = minimax_value(make(p), m);
    if (!(minimax_value(make(p + kPerturbation), m) > best) || !(minimax_value(make(p - kPerturbation), m) > best)) {
      o.fail(label + " is not locally minimax");
    }
  };
  for (auto kind : kAllKinds) {
    const double c = polyhedron_c(kind);
    for (auto m : {ErrorMeasure::Simplified, ErrorMeasure::Radial}) {
      const std::string label = std::string(to_string(kind)) + " " + std::string(to_string(m));
      check(label + " quadratic", [c](double a) { return quadratic_net(c, a); }, quadratic_optimal(c, m), m);
      if (kind != PolyhedronKind::Icosahedron) {
        check(label + " quartic", [c](double g) { return quartic_net(c, g); }, quartic_closed_form_gamma(kind, m), m);
      }
    }
  }
  if (o.pass) o.detail = fmt("10 closed-form optima, worst gap %.3g", worst);
  return o;
}

Outcome criterion_image_domain() {
  Outcome o;
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto random_point = [&]() {
    double u = unit(rng), v = unit(rng);
    if (u + v > 1.0) u = 1.0 - u, v = 1.0 - v;
    return BarycentricPoint{u, v};
  };
  int outside = 0;
  for (int n = 0; n < 1000000; ++n) {
    if (!in_omega(to_omega(random_point()))) ++outside;
  }
  if (outside) o.fail(std::to_string(outside) + " points outside the image domain");

  double worst = 0.0;
  for (int n = 0; n <= 1000; ++n) {
    const double t = 0.5 * n / 1000.0;
    const OmegaPoint q = to_omega({t, t});
    const OmegaBounds raw = omega_bounds_raw(q.e2);
    worst = std::max(worst, std::abs(q.e3 - (t <= 1.0 / 3.0 ? raw.hi : raw.lo)));
    const OmegaPoint e = to_omega({2.0 * t, 1.0 - 2.0 * t});
    worst = std::max(worst, std::abs(e.e3));
    worst = std::max(worst, omega_bounds(e.e2).lo);
  }
  if (!(worst <= kDomainTol)) o.fail(fmt("boundary and median images off by %.3g", worst));

  std::uniform_real_distribution<double> alpha(0.0, 4.0);
  double expansion = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const PolyhedronKind kind = kAllKinds[n % 3];
    const double c = polyhedron_c(kind), a = alpha(rng);
    const BarycentricPoint p = random_point();
    const double direct = evaluate_position(quadratic_net(c, a), p).squaredNorm() - 1.0;
    expansion = std::max(expansion, std::abs(quadratic_error_in_omega(c, a, to_omega(p)) - direct));
  }
  if (!(expansion <= kDomainTol)) o.fail(fmt("expansion differs by %.3g", expansion));
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "boundary %.3g, expansion %.3g", worst, expansion);
    o.detail = buf;
  }
  return o;
}

Outcome criterion_oracle() {
  Outcome o;
  double worst = 0.0;
  for (auto kind : kAllKinds) {
    for (int degree : {2, 3, 4}) {
      const ControlNet net = optimal_net(kind, degree);
      const ErrorReport fast = extrema_over_delta(net);
      const ErrorReport slow = brute_force_extrema(net, kOracleGrid);
      const double dev = std::max({std::abs(fast.max_f - slow.max_f), std::abs(fast.min_f - slow.min_f),
                                   std::abs(fast.max_g - slow.max_g), std::abs(fast.min_g - slow.min_g)});
      worst = std::max(worst, dev);
      if (!(dev <= kOracleTol)) {
        o.fail(std::string(to_string(kind)) + " degree " + std::to_string(degree) + fmt(" differs by %.3g", dev));
      }
    }
  }
  if (o.pass) o.detail = fmt("9 nets, worst difference %.3g", worst);
  return o;
}

Outcome criterion_mesh() {
  Outcome o;
  double worst_margin = -std::numeric_limits<double>::infinity();
  for (auto kind : kAllKinds) {
    for (int degree : {2, 3, 4}) {
      const OptimalSolution s = optimal_solution(kind, degree, ErrorMeasure::Radial);
      const MeshAudit audit = audit_mesh(tessellate(build_sphere(kind, s.net), kMeshSubdivisions, false));
      const std::string label = std::string(to_string(kind)) + " degree " + std::to_string(degree);
      if (!audit.watertight()) o.fail(label + " mesh is not edge-manifold");
      if (!audit.outward()) o.fail(label + " mesh has inward triangles");
      worst_margin = std::max(worst_margin, audit.radial_deviation() - s.d_r);
      if (!(audit.radial_deviation() <= s.d_r + kMeshRadialSlack)) {
        o.fail(label + fmt(" radial deviation exceeds d_r by %.3g", audit.radial_deviation() - s.d_r));
      }
    }
  }
  if (o.pass) o.detail = fmt("9 spheres, max deviation - d_r = %.3g", worst_margin);
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "table 1 parameters", 5.0, criterion_table1},
      {2, "table 2 parameters", 5.0, criterion_table2},
      {3, "table 3 parameters", 30.0, criterion_table3},
      {4, "curvature columns", 60.0, criterion_curvature},
      {5, "continuity certification", kNoLimit, criterion_continuity},
      {6, "equioscillation", kNoLimit, criterion_equioscillation},
      {7, "image domain properties", kNoLimit, criterion_image_domain},
      {8, "oracle equivalence", 600.0, criterion_oracle},
      {9, "mesh export", kNoLimit, criterion_mesh},
  };
  return list;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > c.limit_seconds) o.fail(fmt("took %.1f s", seconds) + fmt(", limit %.0f s", c.limit_seconds));
  std::printf("criterion %d (%s): %s (%s, %.2f s)\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
              seconds);
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);
  bool pass = true;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    pass = run_one(c) && pass;
  }
  return pass ? 0 : 1;
}
