#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "trisphere/geometry.hpp"

namespace trisphere {

/// Multi-index (i, j, k) with i + j + k = degree; i weights u, j weights v, k weights w.
struct TriIndex {
  int i = 0;
  int j = 0;
  int k = 0;

  int operator[](int axis) const { return axis == 0 ? i : (axis == 1 ? j : k); }
  bool operator==(const TriIndex&) const = default;
};

/// Out-of-domain evaluation allowance (l1 distance to the simplex).
inline constexpr double kEvaluationEpsilon = 0.05;
/// ||du x dv|| below this is a vanishing normal.
inline constexpr double kDegenerateNormal = 1e-12;

/// Triangular Bezier control net of degree n with (n+1)(n+2)/2 points,
/// stored in ascending lexicographic (i, j, k) order.
class ControlNet {
 public:
  explicit ControlNet(int degree);
  ControlNet(int degree, std::vector<Vec3> points);

  int degree() const { return degree_; }
  std::size_t size() const { return points_.size(); }
  std::span<const Vec3> points() const { return points_; }

  const Vec3& at(int i, int j, int k) const;
  const Vec3& at(TriIndex idx) const { return at(idx.i, idx.j, idx.k); }
  void set(TriIndex idx, const Vec3& p);

  /// Index of each stored point, in storage order.
  const std::vector<TriIndex>& indices() const;

  /// Corner point for barycentric axis 0 (u = 1), 1 (v = 1) or 2 (w = 1).
  const Vec3& corner(int axis) const;

  /// Net of the patch A * p + t.
  ControlNet transformed(const Mat3& a, const Vec3& t = Vec3::Zero()) const;

  /// Relabels barycentric roles: corner a of the result is corner perm[a]
  /// of this net. The image surface is unchanged.
  ControlNet permuted(const std::array<int, 3>& perm) const;

  double max_distance(const ControlNet& other) const;

 private:
  std::size_t offset(int i, int j) const;

  int degree_;
  std::vector<Vec3> points_;
};

std::size_t control_point_count(int degree);
std::vector<TriIndex> tri_indices(int degree);

/// n!/(i! j! k!) u^i v^j w^k. Throws std::invalid_argument unless i+j+k = n.
double bernstein(int n, int i, int j, int k, BarycentricPoint p);

struct SurfacePoint {
  Vec3 position = Vec3::Zero();
  Vec3 du = Vec3::Zero();
  Vec3 dv = Vec3::Zero();
  Vec3 duu = Vec3::Zero();
  Vec3 duv = Vec3::Zero();
  Vec3 dvv = Vec3::Zero();
  /// Unit du x dv, or zero when regular is false.
  Vec3 normal = Vec3::Zero();
  bool regular = false;

  /// Throws DegenerateNormal when the normal vanished.
  const Vec3& require_normal() const;
};

/// De Casteljau evaluation with first and second partials in (u, v).
/// Throws std::domain_error beyond kEvaluationEpsilon from the simplex.
SurfacePoint evaluate(const ControlNet& net, BarycentricPoint p);
Vec3 evaluate_position(const ControlNet& net, BarycentricPoint p);

ControlNet elevate_degree(const ControlNet& net);

// TBNET text format: "TBNET n=<degree>" then "i j k x y z" per point.
void write_tbnet(std::ostream& out, const ControlNet& net);
std::string to_tbnet(const ControlNet& net);
/// Throws ParseError with the offending line number.
ControlNet read_tbnet(std::istream& in);
ControlNet parse_tbnet(const std::string& text);
ControlNet load_tbnet(const std::string& path);
void save_tbnet(const std::string& path, const ControlNet& net);

}  // namespace trisphere
