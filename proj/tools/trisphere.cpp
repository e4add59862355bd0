#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trisphere/bezier.hpp"
#include "trisphere/continuity.hpp"
#include "trisphere/errors.hpp"
#include "trisphere/optimal_params.hpp"
#include "trisphere/properties.hpp"
#include "trisphere/report.hpp"
#include "trisphere/sphere.hpp"
#include "trisphere/tables.hpp"

using namespace trisphere;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_report(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::ios_base::failure("failed writing " + path);
}

PolyhedronKind kind_arg(const std::string& s) {
  try {
    return parse_kind(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Mat3 parse_reflection(const std::string& spec, const ControlNet& net1) {
  if (spec == "plane") {
    const int n = net1.degree();
    return reflection_across_plane(net1.at(0, n, 0), net1.at(0, 0, n));
  }
  if (spec.rfind("canonical:", 0) == 0) return reflection_matrix(polyhedron_c(kind_arg(spec.substr(10))));
  std::string text = spec;
  for (char& ch : text) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(text);
  Mat3 r;
  for (int a = 0; a < 9; ++a) {
    if (!(in >> r(a / 3, a % 3))) throw UsageError("reflection must be none, plane, canonical:<kind> or 9 numbers");
  }
  std::string extra;
  if (in >> extra) throw UsageError("reflection must be none, plane, canonical:<kind> or 9 numbers");
  return r;
}

TransversalCurve parse_curve(const std::string& spec, const ControlNet& net1) {
  if (spec == "auto") return infer_transversal_curve(net1);
  std::string text = spec;
  for (char& ch : text) {
    if (ch == ':') ch = ' ';
  }
  std::istringstream in(text);
  std::string family;
  TransversalCurve curve;
  in >> family;
  if (family == "cubic" && (in >> curve.c)) {
    curve.family = TransversalCurve::Family::Cubic;
    return curve;
  }
  if (family == "quartic" && (in >> curve.c >> curve.gamma)) {
    curve.family = TransversalCurve::Family::Quartic;
    return curve;
  }
  throw UsageError("curve must be auto, cubic:<c> or quartic:<c>:<gamma>");
}

int cmd_tables(const std::string& which, int grid, std::optional<double> tol, const std::string& report,
               bool timing) {
  std::vector<int> ids;
  if (which == "all") {
    ids = {1, 2, 3};
  } else if (which == "1" || which == "2" || which == "3") {
    ids = {which[0] - '0'};
  } else {
    throw UsageError("table must be 1, 2, 3 or all");
  }
  std::vector<TableResult> results;
  bool pass = true;
  for (int id : ids) {
    results.push_back(compute_table(id, grid, tol));
    std::cout << format_table(results.back());
    pass = pass && results.back().pass();
  }
  if (timing) {
    for (const auto& r : results) std::printf("table %d: %.3f s\n", r.table, r.seconds);
  }
  if (!report.empty()) write_report(report, tables_report(results, timing));
  return pass ? kExitOk : kExitFail;
}

int cmd_optimize(const std::string& kind, int degree, const std::string& measure, int grid,
                 const std::string& report, const std::string& net_out) {
  if (degree < 2 || degree > 4) throw UsageError("degree must be 2, 3 or 4");
  ErrorMeasure m;
  try {
    m = parse_measure(measure);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const OptimalSolution s = optimal_solution(kind_arg(kind), degree, m, grid);
  std::cout << format_solution(s);
  if (!report.empty()) {
    write_report(report, {{"tool", "trisphere"}, {"version", kToolVersion}, {"solution", to_json(s)}});
  }
  if (!net_out.empty()) save_tbnet(net_out, s.net);
  return kExitOk;
}

int cmd_errors(const std::string& netfile, int grid, std::optional<double> tol, const std::string& report) {
  const ControlNet net = load_tbnet(netfile);
  ErrorReport r = extrema_over_delta(net, grid);
  if (tol) {
    r.equioscillation_f = std::abs(std::abs(r.max_f) - std::abs(r.min_f)) < *tol;
    r.equioscillation_g = std::abs(std::abs(r.max_g) - std::abs(r.min_g)) < *tol;
  }
  std::cout << format_error_report(r);
  if (!report.empty()) {
    write_report(report, {{"tool", "trisphere"}, {"version", kToolVersion}, {"errors", to_json(r)}});
  }
  return kExitOk;
}

int cmd_check(const std::string& file_a, const std::string& file_b, const std::string& reflection,
              const std::string& level_name, const std::string& curve_spec, int samples,
              std::optional<double> tol, bool verbose, const std::string& report) {
  Smoothness level;
  try {
    level = parse_smoothness(level_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ControlNet net1 = load_tbnet(file_a);
  AdjoinedPair pair;
  pair.net1 = net1;
  if (reflection != "none") pair.reflection = parse_reflection(reflection, net1);
  if (!file_b.empty()) {
    pair.net2 = load_tbnet(file_b);
  } else if (pair.reflection) {
    pair.net2 = net1.transformed(*pair.reflection);
  } else {
    pair.net2 = net1;
  }
  if (pair.net2.degree() != net1.degree()) throw UsageError("nets must have the same degree");
  const std::vector<double> taus = default_tau_samples(samples);
  ContinuityCertificate cert;
  switch (level) {
    case Smoothness::G0:
      cert = check_g0(pair, taus);
      break;
    case Smoothness::G1:
      cert = check_g1(pair, taus);
      break;
    case Smoothness::G2:
      cert = check_g2_via_curve(pair, parse_curve(curve_spec, net1), taus);
      break;
  }
  if (tol && (cert.reason.empty() || cert.reason.rfind("residual", 0) == 0)) {
    cert.pass = cert.max_residual < *tol;
    cert.reason = cert.pass ? "" : "residual exceeds --tol";
  }
  std::cout << format_certificate(cert, verbose);
  if (!report.empty()) {
    write_report(report, {{"tool", "trisphere"}, {"version", kToolVersion}, {"certificate", to_json(cert, true)}});
  }
  return cert.pass ? kExitOk : kExitFail;
}

int cmd_mesh(const std::string& kind_name, int degree, const std::string& smoothness, int subdivisions,
             const std::string& format, const std::string& out, bool no_curvature, bool certify, int grid) {
  const PolyhedronKind kind = kind_arg(kind_name);
  Smoothness s;
  try {
    s = parse_smoothness(smoothness);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool valid = (degree == 2 && s == Smoothness::G0) ||
                     ((degree == 3 || degree == 4) && (s == Smoothness::G1 || s == Smoothness::G2));
  if (!valid) throw UsageError("valid combinations: degree 2 with G0; degree 3 or 4 with G1 or G2");
  if (subdivisions < 1) throw UsageError("subdivisions must be at least 1");
  MeshFormat fmt;
  try {
    fmt = parse_mesh_format(format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const OptimalSolution sol = optimal_solution(kind, degree, ErrorMeasure::Radial, grid);
  const SphereSpline sphere = build_sphere(kind, sol.net);
  if (certify) {
    const SphereCertification c = certify_sphere(sphere, s);
    std::printf("certified %s: %zu of %zu checks failed\n", std::string(to_string(s)).c_str(), c.failures(),
                c.edges.size() + c.vertices.size());
    if (!c.pass()) return kExitFail;
  }
  const Mesh mesh = tessellate(sphere, subdivisions, !no_curvature);
  const MeshAudit audit = audit_mesh(mesh);
  write_mesh_file(mesh, fmt, out);
  std::printf("wrote %s: %zu vertices, %zu triangles, watertight %s, outward %s, radial deviation %.9g\n",
              out.c_str(), mesh.vertices.size(), mesh.triangles.size(), audit.watertight() ? "yes" : "no",
              audit.outward() ? "yes" : "no", audit.radial_deviation());
  return audit.watertight() && audit.outward() ? kExitOk : kExitFail;
}

int cmd_net(const std::string& kind, int degree, const std::string& measure, bool reflected, int grid,
            const std::string& out) {
  if (degree < 2 || degree > 4) throw UsageError("degree must be 2, 3 or 4");
  ErrorMeasure m;
  try {
    m = parse_measure(measure);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ControlNet net = optimal_solution(kind_arg(kind), degree, m, grid).net;
  if (reflected) net = reflected_pair(net).net2;
  if (out.empty() || out == "-") {
    write_tbnet(std::cout, net);
  } else {
    save_tbnet(out, net);
  }
  return kExitOk;
}

int cmd_properties(std::uint64_t seed, int trials) {
  bool pass = true;
  for (const auto& r : run_property_checks(seed, trials)) {
    std::printf("%-28s trials %d worst %.3e tol %.0e %s\n", r.name.c_str(), r.trials, r.worst, r.tolerance,
                r.pass ? "PASS" : "FAIL");
    pass = pass && r.pass;
  }
  return pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial triangular spline approximations of the unit sphere"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  int grid = kDefaultGrid;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string report;
  app.add_option("--grid", grid, "Grid resolution for extrema and curvature searches")
      ->check(CLI::Range(64, 1 << 14));
  app.add_option("--tol", tol, "Tolerance override");
  app.add_option("--seed", seed, "Seed for randomized property checks");
  app.add_option("--report", report, "Write a JSON report to this file");

  std::string table = "all";
  bool timing = false;
  auto* tables = app.add_subcommand("tables", "Recompute the parameter tables and compare");
  tables->add_option("which", table, "1, 2, 3 or all");
  tables->add_flag("--timing", timing, "Record wall-clock times");

  std::string kind;
  int degree = 4;
  std::string measure = "radial";
  std::string net_out;
  auto* optimize = app.add_subcommand("optimize", "Print the optimal parameters");
  optimize->add_option("kind", kind, "tetrahedron, octahedron or icosahedron")->required();
  optimize->add_option("degree", degree, "2, 3 or 4")->required();
  optimize->add_option("--measure", measure, "radial or simplified");
  optimize->add_option("--net", net_out, "Also write the net in TBNET format");

  std::string netfile;
  auto* errors = app.add_subcommand("errors", "Print the error extrema of a net");
  errors->add_option("net", netfile, "TBNET file")->required();

  std::string file_a;
  std::string file_b;
  std::string reflection = "none";
  std::string level = "G1";
  std::string curve = "auto";
  int samples = 101;
  bool verbose = false;
  auto* check = app.add_subcommand("check", "Certify continuity of two adjoined nets along u = 0");
  check->add_option("net_a", file_a, "First TBNET file")->required();
  check->add_option("net_b", file_b, "Second TBNET file (default: reflection of the first)");
  check->add_option("--reflection", reflection, "none, plane, canonical:<kind> or 9 matrix entries");
  check->add_option("--level", level, "G0, G1 or G2");
  check->add_option("--curve", curve, "auto, cubic:<c> or quartic:<c>:<gamma>");
  check->add_option("--samples", samples, "Uniform samples on [0, 1]")->check(CLI::Range(2, 100000));
  check->add_flag("--verbose", verbose, "Print every sample");

  std::string smoothness;
  int subdivisions = 16;
  std::string format;
  std::string mesh_out;
  bool no_curvature = false;
  bool certify = false;
  auto* mesh = app.add_subcommand("mesh", "Assemble the optimal sphere and export a mesh");
  mesh->add_option("kind", kind)->required();
  mesh->add_option("degree", degree)->required();
  mesh->add_option("smoothness", smoothness, "G0 (degree 2), G1 or G2 (degree 3, 4)")->required();
  mesh->add_option("subdivisions", subdivisions)->required();
  mesh->add_option("format", format, "obj or ply")->required();
  mesh->add_option("out", mesh_out)->required();
  mesh->add_flag("--no-curvature", no_curvature, "Omit the Gaussian curvature channel");
  mesh->add_flag("--certify", certify, "Certify the sphere at the requested level first");

  bool reflected = false;
  std::string net_file_out;
  auto* net = app.add_subcommand("net", "Write an optimal net in TBNET format");
  net->add_option("kind", kind)->required();
  net->add_option("degree", degree)->required();
  net->add_option("out", net_file_out, "Output file (default stdout)");
  net->add_option("--measure", measure, "radial or simplified");
  net->add_flag("--reflected", reflected, "Mirror across the plane of the u = 0 edge");

  int trials = 10000;
  auto* properties = app.add_subcommand("properties", "Randomized invariant checks");
  properties->add_option("--trials", trials)->check(CLI::Range(1, 100000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tables) return cmd_tables(table, grid, tol, report, timing);
    if (*optimize) return cmd_optimize(kind, degree, measure, grid, report, net_out);
    if (*errors) return cmd_errors(netfile, grid, tol, report);
    if (*check) return cmd_check(file_a, file_b, reflection, level, curve, samples, tol, verbose, report);
    if (*mesh) {
      return cmd_mesh(kind, degree, smoothness, subdivisions, format, mesh_out, no_curvature, certify, grid);
    }
    if (*net) return cmd_net(kind, degree, measure, reflected, grid, net_file_out);
    if (*properties) return cmd_properties(seed, trials);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
