#include "trisphere/bezier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "trisphere/errors.hpp"

namespace trisphere {

std::size_t control_point_count(int degree) {
  return static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 2) / 2;
}

std::vector<TriIndex> tri_indices(int degree) {
  std::vector<TriIndex> out;
  out.reserve(control_point_count(degree));
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; j <= degree - i; ++j) out.push_back({i, j, degree - i - j});
  }
  return out;
}

ControlNet::ControlNet(int degree) : degree_(degree) {
  if (degree < 0 || degree > 32) throw std::invalid_argument("degree must lie in [0, 32]");
  points_.assign(control_point_count(degree), Vec3::Zero());
}

ControlNet::ControlNet(int degree, std::vector<Vec3> points)
    : degree_(degree), points_(std::move(points)) {
  if (degree < 0 || degree > 32) throw std::invalid_argument("degree must lie in [0, 32]");
  if (points_.size() != control_point_count(degree)) {
    throw std::invalid_argument("control net of degree " + std::to_string(degree) + " needs " +
                                std::to_string(control_point_count(degree)) + " points");
  }
}

std::size_t ControlNet::offset(int i, int j) const {
  // rows i = 0..i-1 hold (n - a + 1) entries each
  const std::size_t n = static_cast<std::size_t>(degree_);
  const std::size_t ii = static_cast<std::size_t>(i);
  return ii * (n + 1) - ii * (ii - 1) / 2 + static_cast<std::size_t>(j);
}

const Vec3& ControlNet::at(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i + j + k != degree_) {
    throw std::out_of_range("invalid control index");
  }
  return points_[offset(i, j)];
}

void ControlNet::set(TriIndex idx, const Vec3& p) {
  if (idx.i < 0 || idx.j < 0 || idx.k < 0 || idx.i + idx.j + idx.k != degree_) {
    throw std::out_of_range("invalid control index");
  }
  points_[offset(idx.i, idx.j)] = p;
}

const std::vector<TriIndex>& ControlNet::indices() const {
  static thread_local std::array<std::vector<TriIndex>, 33> cache;
  if (static_cast<std::size_t>(degree_) >= cache.size()) {
    throw std::out_of_range("control net degree above 32");
  }
  auto& entry = cache[degree_];
  if (entry.empty()) entry = tri_indices(degree_);
  return entry;
}

const Vec3& ControlNet::corner(int axis) const {
  switch (axis) {
    case 0:
      return at(degree_, 0, 0);
    case 1:
      return at(0, degree_, 0);
    case 2:
      return at(0, 0, degree_);
  }
  throw std::out_of_range("corner axis");
}

ControlNet ControlNet::transformed(const Mat3& a, const Vec3& t) const {
  std::vector<Vec3> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back(a * p + t);
  return ControlNet(degree_, std::move(pts));
}

ControlNet ControlNet::permuted(const std::array<int, 3>& perm) const {
  std::array<bool, 3> seen{};
  for (int a : perm) {
    if (a < 0 || a > 2 || seen[a]) throw std::invalid_argument("not a permutation");
    seen[a] = true;
  }
  ControlNet out(degree_);
  for (const TriIndex& q : indices()) {
    std::array<int, 3> src{};
    for (int a = 0; a < 3; ++a) src[perm[a]] = q[a];
    out.set(q, at(src[0], src[1], src[2]));
  }
  return out;
}

double ControlNet::max_distance(const ControlNet& other) const {
  if (other.degree_ != degree_) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t n = 0; n < points_.size(); ++n) {
    d = std::max(d, (points_[n] - other.points_[n]).norm());
  }
  return d;
}

double bernstein(int n, int i, int j, int k, BarycentricPoint p) {
  if (i < 0 || j < 0 || k < 0 || i + j + k != n) {
    throw std::invalid_argument("bernstein: i + j + k must equal n");
  }
  const double coeff = std::tgamma(n + 1.0) / (std::tgamma(i + 1.0) * std::tgamma(j + 1.0) *
                                               std::tgamma(k + 1.0));
  return std::round(coeff) * std::pow(p.u, i) * std::pow(p.v, j) * std::pow(p.w(), k);
}

const Vec3& SurfacePoint::require_normal() const {
  if (!regular) throw DegenerateNormal("degenerate normal: |du x dv| < 1e-12");
  return normal;
}

namespace {

void check_domain(BarycentricPoint p) {
  if (!std::isfinite(p.u) || !std::isfinite(p.v) ||
      l1_distance_to_simplex(p) > kEvaluationEpsilon * (1.0 + 1e-12)) {
    throw std::domain_error("evaluation point outside the epsilon-neighbourhood of the simplex");
  }
}

// One de Casteljau step: degree m -> m-1, points stored like ControlNet.
std::vector<Vec3> casteljau_step(const std::vector<Vec3>& pts, int m, double u, double v,
                                 double w) {
  // Layer of degree m stored row-major by i, then j.
  auto off = [](int deg, int i, int j) {
    return static_cast<std::size_t>(i * (deg + 1) - i * (i - 1) / 2 + j);
  };
  std::vector<Vec3> out(control_point_count(m - 1));
  for (int i = 0; i <= m - 1; ++i) {
    for (int j = 0; j <= m - 1 - i; ++j) {
      out[off(m - 1, i, j)] =
          u * pts[off(m, i + 1, j)] + v * pts[off(m, i, j + 1)] + w * pts[off(m, i, j)];
    }
  }
  return out;
}

}  // namespace

SurfacePoint evaluate(const ControlNet& net, BarycentricPoint p) {
  check_domain(p);
  const int n = net.degree();
  const double u = p.u;
  const double v = p.v;
  const double w = p.w();
  SurfacePoint s;

  std::vector<Vec3> layer(net.points().begin(), net.points().end());
  if (n == 0) {
    s.position = layer[0];
    return s;
  }
  for (int m = n; m > 2; --m) layer = casteljau_step(layer, m, u, v, w);

  if (n >= 2) {
    // Degree-2 layer, storage order: 002 011 020 101 110 200.
    const Vec3& b002 = layer[0];
    const Vec3& b011 = layer[1];
    const Vec3& b020 = layer[2];
    const Vec3& b101 = layer[3];
    const Vec3& b110 = layer[4];
    const Vec3& b200 = layer[5];
    const double nn1 = static_cast<double>(n) * (n - 1);
    s.duu = nn1 * (b200 - 2.0 * b101 + b002);
    s.duv = nn1 * (b110 - b101 - b011 + b002);
    s.dvv = nn1 * (b020 - 2.0 * b011 + b002);
    layer = casteljau_step(layer, 2, u, v, w);
  }
  // Degree-1 layer: 001 010 100.
  const Vec3& c001 = layer[0];
  const Vec3& c010 = layer[1];
  const Vec3& c100 = layer[2];
  s.du = n * (c100 - c001);
  s.dv = n * (c010 - c001);
  s.position = u * c100 + v * c010 + w * c001;

  const Vec3 cross = s.du.cross(s.dv);
  const double len = cross.norm();
  s.regular = len >= kDegenerateNormal;
  if (s.regular) s.normal = cross / len;
  return s;
}

Vec3 evaluate_position(const ControlNet& net, BarycentricPoint p) {
  check_domain(p);
  const double u = p.u;
  const double v = p.v;
  const double w = p.w();
  std::vector<Vec3> layer(net.points().begin(), net.points().end());
  for (int m = net.degree(); m > 0; --m) layer = casteljau_step(layer, m, u, v, w);
  return layer[0];
}

ControlNet elevate_degree(const ControlNet& net) {
  const int n = net.degree();
  ControlNet out(n + 1);
  const double inv = 1.0 / (n + 1);
  for (const TriIndex& q : out.indices()) {
    Vec3 acc = Vec3::Zero();
    if (q.i > 0) acc += q.i * net.at(q.i - 1, q.j, q.k);
    if (q.j > 0) acc += q.j * net.at(q.i, q.j - 1, q.k);
    if (q.k > 0) acc += q.k * net.at(q.i, q.j, q.k - 1);
    out.set(q, acc * inv);
  }
  return out;
}

void write_tbnet(std::ostream& out, const ControlNet& net) {
  out << "TBNET n=" << net.degree() << '\n';
  char buf[160];
  for (std::size_t n = 0; n < net.size(); ++n) {
    const TriIndex q = net.indices()[n];
    const Vec3& p = net.points()[n];
    std::snprintf(buf, sizeof buf, "%d %d %d %.17g %.17g %.17g\n", q.i, q.j, q.k, p.x(), p.y(),
                  p.z());
    out << buf;
  }
}

std::string to_tbnet(const ControlNet& net) {
  std::ostringstream s;
  write_tbnet(s, net);
  return s.str();
}

ControlNet read_tbnet(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty input, expected TBNET header", lineno + 1);
  int degree = -1;
  {
    std::istringstream hs(line);
    std::string magic, field;
    hs >> magic >> field;
    if (magic != "TBNET" || field.rfind("n=", 0) != 0) {
      throw ParseError("expected header 'TBNET n=<degree>'", lineno);
    }
    try {
      std::size_t used = 0;
      degree = std::stoi(field.substr(2), &used);
      if (used != field.size() - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad degree in header", lineno);
    }
    std::string extra;
    if (degree < 0 || degree > 32 || (hs >> extra)) throw ParseError("bad degree in header", lineno);
  }
  ControlNet net(degree);
  const auto expected = tri_indices(degree);
  for (const TriIndex& want : expected) {
    if (!next_line()) {
      throw ParseError("unexpected end of input, expected point " + std::to_string(want.i) + " " +
                           std::to_string(want.j) + " " + std::to_string(want.k),
                       lineno + 1);
    }
    std::istringstream ls(line);
    TriIndex got;
    double x = 0, y = 0, z = 0;
    std::string extra;
    if (!(ls >> got.i >> got.j >> got.k >> x >> y >> z) || (ls >> extra)) {
      throw ParseError("expected 'i j k x y z'", lineno);
    }
    if (!(got == want)) {
      throw ParseError("indices out of lexicographic order, expected " + std::to_string(want.i) +
                           " " + std::to_string(want.j) + " " + std::to_string(want.k),
                       lineno);
    }
    net.set(got, Vec3(x, y, z));
  }
  if (next_line()) throw ParseError("trailing content after control points", lineno);
  return net;
}

ControlNet parse_tbnet(const std::string& text) {
  std::istringstream s(text);
  return read_tbnet(s);
}

ControlNet load_tbnet(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open " + path);
  return read_tbnet(f);
}

void save_tbnet(const std::string& path, const ControlNet& net) {
  std::ofstream f(path);
  if (!f) throw std::ios_base::failure("cannot write " + path);
  write_tbnet(f, net);
  if (!f) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace trisphere
