#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisphere/continuity.hpp"
#include "trisphere/curvature.hpp"
#include "trisphere/optimal_params.hpp"

namespace trisphere {

/// One computed table entry with its reference value.
struct TableCell {
  std::string column;
  double value = 0.0;
  double expected = 0.0;
  /// K columns are compared after rounding to two decimals.
  bool rounded = false;
  double tolerance = 0.0;

  double deviation() const;
  bool pass() const { return deviation() <= tolerance; }
};

struct TableRow {
  PolyhedronKind kind = PolyhedronKind::Tetrahedron;
  int degree = 2;
  OptimalSolution solution;
  CurvatureRange curvature;
  std::vector<TableCell> cells;
  /// Pair certificate at the strongest claimed level (G1 for quadratics,
  /// expected to fail; G2 otherwise).
  ContinuityCertificate certificate;

  bool pass() const;
};

struct TableResult {
  int table = 1;
  std::vector<TableRow> rows;
  double seconds = 0.0;

  bool pass() const;
};

/// Computes table 1, 2 or 3 from scratch. tol_override replaces the
/// parameter tolerance when set.
TableResult compute_table(int which, int grid_n = 512, std::optional<double> tol_override = {});

/// Plain-text comparison, one line per cell.
std::string format_table(const TableResult& table);

}  // namespace trisphere
