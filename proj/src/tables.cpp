#include "trisphere/tables.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "trisphere/table_fixtures.hpp"

namespace trisphere {

double TableCell::deviation() const {
  const double v = rounded ? round_decimals(value, 2) : value;
  return std::abs(v - expected);
}

bool TableRow::pass() const {
  for (const auto& c : cells) {
    if (!c.pass()) return false;
  }
  return true;
}

bool TableResult::pass() const {
  for (const auto& r : rows) {
    if (!r.pass()) return false;
  }
  return true;
}

namespace {

TableRow make_row(const OptimalSolution& s, int grid_n) {
  TableRow row;
  row.kind = s.kind;
  row.degree = s.degree;
  row.solution = s;
  row.curvature = curvature_range(s.net, std::max(grid_n, 128));
  const AdjoinedPair pair = reflected_pair(s.net);
  row.certificate = s.degree == 2 ? check_g1(pair) : check_g2_via_curve(pair, infer_transversal_curve(s.net));
  return row;
}

void add(TableRow& row, const char* column, double value, double expected, double tol) {
  row.cells.push_back({column, value, expected, false, tol});
}

void add_curvature(TableRow& row, double k_min, double k_max) {
  row.cells.push_back({"K_min", row.curvature.k_min, k_min, true, fixtures::kCurvatureTolerance});
  row.cells.push_back({"K_max", row.curvature.k_max, k_max, true, fixtures::kCurvatureTolerance});
}

}  // namespace

TableResult compute_table(int which, int grid_n, std::optional<double> tol_override) {
  const double tol = tol_override.value_or(fixtures::kParameterTolerance);
  const auto start = std::chrono::steady_clock::now();
  TableResult out;
  out.table = which;
  switch (which) {
    case 1:
      for (const auto& f : fixtures::kTable1) {
        const double c = polyhedron_c(f.kind);
        TableRow row = make_row(quadratic_solution(f.kind, ErrorMeasure::Radial, grid_n), grid_n);
        add(row, "alpha_f", quadratic_optimal(c, ErrorMeasure::Simplified), f.alpha_f, tol);
        add(row, "alpha_g", row.solution.param("alpha"), f.alpha_g, tol);
        add(row, "d_r", row.solution.d_r, f.d_r, tol);
        add_curvature(row, f.k_min, f.k_max);
        out.rows.push_back(std::move(row));
      }
      break;
    case 2:
      for (const auto& f : fixtures::kTable2) {
        TableRow row = make_row(cubic_solution(f.kind, grid_n), grid_n);
        add(row, "alpha", row.solution.param("alpha"), f.alpha, tol);
        add(row, "beta", row.solution.param("beta"), f.beta, tol);
        add(row, "gamma", row.solution.param("gamma"), f.gamma, tol);
        add(row, "d_r", row.solution.d_r, f.d_r, tol);
        add_curvature(row, f.k_min, f.k_max);
        out.rows.push_back(std::move(row));
      }
      break;
    case 3:
      for (const auto& f : fixtures::kTable3) {
        TableRow row = make_row(quartic_optimal(f.kind, ErrorMeasure::Radial, grid_n), grid_n);
        add(row, "alpha", row.solution.param("alpha"), f.alpha, tol);
        add(row, "beta", row.solution.param("beta"), f.beta, tol);
        add(row, "gamma", row.solution.param("gamma"), f.gamma, tol);
        add(row, "zeta", row.solution.param("zeta"), f.zeta, tol);
        add(row, "xi", row.solution.param("xi"), f.xi, tol);
        add(row, "d_r", row.solution.d_r, f.d_r, tol);
        add_curvature(row, f.k_min, f.k_max);
        out.rows.push_back(std::move(row));
      }
      break;
    default:
      throw std::invalid_argument("table must be 1, 2 or 3");
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string format_table(const TableResult& table) {
  std::string text;
  char buf[256];
  std::snprintf(buf, sizeof buf, "table %d\n", table.table);
  text += buf;
  for (const auto& row : table.rows) {
    for (const auto& c : row.cells) {
      std::snprintf(buf, sizeof buf, "  %-12s %-8s %12.6f  expected %10.6f  dev %.2e  %s\n",
                    std::string(to_string(row.kind)).c_str(), c.column.c_str(),
                    c.rounded ? round_decimals(c.value, 2) : c.value, c.expected, c.deviation(),
                    c.pass() ? "ok" : "MISMATCH");
      text += buf;
    }
    std::snprintf(buf, sizeof buf, "  %-12s %-8s %s (max residual %.2e)%s%s\n",
                  std::string(to_string(row.kind)).c_str(), std::string(to_string(row.certificate.level)).c_str(),
                  row.certificate.pass ? "certified" : "not certified", row.certificate.max_residual,
                  row.certificate.reason.empty() ? "" : ": ", row.certificate.reason.c_str());
    text += buf;
  }
  return text;
}

}  // namespace trisphere
