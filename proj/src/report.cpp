#include "trisphere/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace trisphere {

using nlohmann::json;

double sig12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

json point(BarycentricPoint p) { return json::array({sig12(p.u), sig12(p.v)}); }

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string line(const char* key, const std::string& value) { return std::string(key) + "=" + value + "\n"; }

}  // namespace

json to_json(const ErrorReport& r) {
  return {{"max_f", sig12(r.max_f)},
          {"min_f", sig12(r.min_f)},
          {"max_g", sig12(r.max_g)},
          {"min_g", sig12(r.min_g)},
          {"argmax_f", point(r.argmax_f)},
          {"argmin_f", point(r.argmin_f)},
          {"argmax_g", point(r.argmax_g)},
          {"argmin_g", point(r.argmin_g)},
          {"d_s", sig12(r.d_s)},
          {"d_r", sig12(r.d_r)},
          {"equioscillation_f", r.equioscillation_f},
          {"equioscillation_g", r.equioscillation_g},
          {"used_symmetry", r.used_symmetry}};
}

json to_json(const OptimalSolution& s) {
  json params = json::object();
  for (const auto& [k, v] : s.params) params[k] = sig12(v);
  json j = {{"kind", to_string(s.kind)},
            {"degree", s.degree},
            {"smoothness", to_string(s.smoothness)},
            {"measure", to_string(s.measure)},
            {"params", params},
            {"d_r", sig12(s.d_r)},
            {"d_s", sig12(s.d_s)},
            {"provenance", to_string(s.provenance)}};
  if (s.provenance == Provenance::Bisection) j["iterations"] = s.iterations;
  if (s.extremum) j["extremum"] = point(*s.extremum);
  return j;
}

json to_json(const ContinuityCertificate& c, bool with_samples) {
  json j = {{"level", to_string(c.level)},
            {"pass", c.pass},
            {"max_residual", sig12(c.max_residual)},
            {"sample_count", c.samples.size()},
            {"reason", c.reason}};
  if (with_samples) {
    json samples = json::array();
    for (const auto& [t, r] : c.samples) samples.push_back({sig12(t), sig12(r)});
    j["samples"] = samples;
  }
  return j;
}

json to_json(const TableResult& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json cells = json::array();
    for (const auto& c : r.cells) {
      cells.push_back({{"column", c.column},
                       {"value", sig12(c.value)},
                       {"expected", sig12(c.expected)},
                       {"deviation", sig12(c.deviation())},
                       {"pass", c.pass()}});
    }
    json params = json::object();
    for (const auto& [k, v] : r.solution.params) params[k] = sig12(v);
    rows.push_back({{"kind", to_string(r.kind)},
                    {"degree", r.degree},
                    {"params", params},
                    {"d_r", sig12(r.solution.d_r)},
                    {"K_min", sig12(r.curvature.k_min)},
                    {"K_max", sig12(r.curvature.k_max)},
                    {"provenance", to_string(r.solution.provenance)},
                    {"cells", cells},
                    {"certificate", to_json(r.certificate)},
                    {"pass", r.pass()}});
  }
  return {{"table", t.table}, {"rows", rows}, {"pass", t.pass()}};
}

json tables_report(const std::vector<TableResult>& tables, bool with_timing) {
  json j = {{"tool", "trisphere"}, {"version", kToolVersion}};
  json list = json::array();
  for (const auto& t : tables) list.push_back(to_json(t));
  j["tables"] = list;
  if (with_timing) {
    json timing = json::object();
    for (const auto& t : tables) timing["table" + std::to_string(t.table)] = t.seconds;
    j["timing"] = timing;
  }
  return j;
}

std::string format_error_report(const ErrorReport& r) {
  std::string s;
  s += line("max_f", num(r.max_f));
  s += line("min_f", num(r.min_f));
  s += line("max_g", num(r.max_g));
  s += line("min_g", num(r.min_g));
  s += line("argmax_f", num(r.argmax_f.u) + "," + num(r.argmax_f.v));
  s += line("argmin_f", num(r.argmin_f.u) + "," + num(r.argmin_f.v));
  s += line("d_s", num(r.d_s));
  s += line("d_r", num(r.d_r));
  s += line("equioscillation_f", r.equioscillation_f ? "true" : "false");
  s += line("equioscillation_g", r.equioscillation_g ? "true" : "false");
  s += line("used_symmetry", r.used_symmetry ? "true" : "false");
  return s;
}

std::string format_solution(const OptimalSolution& sol) {
  std::string s;
  s += line("kind", std::string(to_string(sol.kind)));
  s += line("degree", std::to_string(sol.degree));
  s += line("smoothness", std::string(to_string(sol.smoothness)));
  s += line("measure", std::string(to_string(sol.measure)));
  for (const auto& [k, v] : sol.params) s += line(k.c_str(), num(v));
  s += line("d_r", num(sol.d_r));
  s += line("d_s", num(sol.d_s));
  s += line("provenance", std::string(to_string(sol.provenance)));
  if (sol.provenance == Provenance::Bisection) s += line("iterations", std::to_string(sol.iterations));
  if (sol.extremum) s += line("extremum", num(sol.extremum->u) + "," + num(sol.extremum->v));
  return s;
}

std::string format_certificate(const ContinuityCertificate& c, bool with_samples) {
  std::string s;
  s += line("level", std::string(to_string(c.level)));
  s += line("pass", c.pass ? "true" : "false");
  s += line("max_residual", num(c.max_residual));
  s += line("samples", std::to_string(c.samples.size()));
  if (!c.reason.empty()) s += line("reason", c.reason);
  if (with_samples) {
    for (const auto& [t, r] : c.samples) s += line("sample", num(t) + "," + num(r));
  }
  return s;
}

}  // namespace trisphere
