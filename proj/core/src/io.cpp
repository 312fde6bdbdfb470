#include "numwalk/io.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace numwalk {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string whole(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0f", v);
  return buf;
}

}  // namespace

std::string path_csv(const Path& p) {
  std::string out = "step,a,b,dir,R\n";
  for (const auto& s : p.states) {
    out += std::to_string(s.step_index) + ',' + std::to_string(s.position.a) + ',' +
           std::to_string(s.position.b) + ',' + std::to_string(s.direction) + ',' +
           std::to_string(s.turn_sum) + '\n';
  }
  return out;
}

std::string winding_csv(const std::vector<std::int64_t>& profile) {
  std::string out = "step,winding\n";
  for (std::size_t i = 0; i < profile.size(); ++i)
    out += std::to_string(i) + ',' + std::to_string(profile[i]) + '\n';
  return out;
}

std::string torsion_csv(const Path& p) {
  std::string out = "step,R,torsion\n";
  for (const auto& s : p.states)
    out += std::to_string(s.step_index) + ',' + std::to_string(s.turn_sum) + ',' +
           format_rational(torsion(p, s.step_index)) + '\n';
  return out;
}

std::string render_svg(const Path& p) {
  std::vector<Cartesian> pts;
  pts.reserve(p.states.size());
  for (const auto& s : p.states) pts.push_back(to_cartesian(s.position, p.grid()));

  double min_x = pts.front().x, max_x = pts.front().x;
  double min_y = pts.front().y, max_y = pts.front().y;
  for (const auto& c : pts) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  const double margin = 1.0;
  const double w = (max_x - min_x) + 2 * margin;
  const double h = (max_y - min_y) + 2 * margin;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + whole(w * 40) + "\" height=\"" +
         whole(h * 40) + "\" viewBox=\"" + fixed6(min_x - margin) + ' ' + fixed6(min_y - margin) +
         ' ' + fixed6(w) + ' ' + fixed6(h) + "\">\n";
  out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.060000\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fixed6(pts[i].x) + ',' + fixed6(pts[i].y);
  }
  out += "\"/>\n";
  out += "  <circle cx=\"" + fixed6(pts.front().x) + "\" cy=\"" + fixed6(pts.front().y) +
         "\" r=\"0.120000\" fill=\"red\"/>\n";
  out += "</svg>\n";
  return out;
}

std::string classification_csv_header() {
  return "r,base,kind,tau,v_a,v_b,k,cycle_length,distinct_points,max_norm_sq,torsion_rate";
}

std::string classification_csv_row(const Rational& r, const ClassifiedWalk& w) {
  const Classification& c = w.c;
  std::string out = format_rational(r) + ',' + std::to_string(w.turnmap.base) + ',' +
                    std::string(kind_name(c.kind)) + ',' + std::to_string(c.isometry.tau) + ',' +
                    std::to_string(c.isometry.v.a) + ',' + std::to_string(c.isometry.v.b) + ',';
  if (c.kind == WalkKind::Closed) {
    out += std::to_string(c.multiplier) + ',' + std::to_string(c.cycle_length) + ',' +
           std::to_string(c.distinct_points) + ',' + std::to_string(c.max_norm_sq) + ',';
  } else {
    out += ",,,,";
  }
  out += format_rational(c.torsion_rate);
  return out;
}

std::string classification_jsonl(const Rational& r, const ClassifiedWalk& w) {
  const Classification& c = w.c;
  nlohmann::ordered_json j;
  j["r"] = format_rational(r);
  j["base"] = w.turnmap.base;
  j["kind"] = std::string(kind_name(c.kind));
  j["tau"] = c.isometry.tau;
  j["v"] = {c.isometry.v.a, c.isometry.v.b};
  if (c.kind == WalkKind::Closed) {
    j["k"] = c.multiplier;
    j["cycle_length"] = c.cycle_length;
    j["distinct_points"] = c.distinct_points;
    j["max_norm_sq"] = c.max_norm_sq;
  } else {
    j["k"] = nullptr;
    j["cycle_length"] = nullptr;
    j["distinct_points"] = nullptr;
    j["max_norm_sq"] = nullptr;
  }
  j["torsion_rate"] = format_rational(c.torsion_rate);
  return j.dump();
}

}  // namespace numwalk
