#pragma once

// Planar drawings. Every arc is subdivided into four segments; one face is
// sent to infinity and its boundary pinned to a regular polygon; every other
// face gets an auxiliary center node joined to its boundary, so the interior
// is triangulated and a barycentric (Tutte) placement is an embedding. Only
// the subdivided arcs are drawn.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twocurves/arrangement.hpp"
#include "twocurves/canonical.hpp"

namespace twocurves {

inline constexpr int segments_per_arc = 4;
inline constexpr double planarity_tolerance = 1e-9;
inline constexpr double solver_residual = 1e-10;
inline constexpr int solver_max_iterations = 100000;
inline constexpr double retry_perturbation = 1e-6;

struct Point2 {
  double x = 0;
  double y = 0;
};

struct PlanarLayout {
  int n_points = 0;
  int outer_face = 0;
  // Nodes: points 0..2n-1 (vertex order of the map), then segments_per_arc-1
  // subdivision nodes per arc, arcs ordered by their smaller dart.
  std::vector<Point2> coordinates;
  std::vector<std::pair<int, int>> segments;
  std::array<std::vector<int>, 2> curve_cycles;  // node cycle of each curve
  int iterations = 0;
  double residual = 0;
};

struct LayoutCheck {
  int improper_intersections = 0;
  int drawn_faces = 0;
  bool rotation_matches = false;  // drawn counterclockwise order agrees with the map rotation

  bool ok(int n_points) const { return improper_intersections == 0 && drawn_faces == n_points + 2 && rotation_matches; }
};

namespace detail {

struct Subdivision {
  std::vector<int> vertex;    // per dart
  std::vector<int> arc;       // per dart
  int num_vertices = 0;
  int num_nodes = 0;

  // Nodes from the dart's point up to (excluding) the mate's point.
  std::vector<int> walk(const Arrangement& arr, Dart d) const {
    std::vector<int> out{vertex[d]};
    const int inner = segments_per_arc - 1;
    const int base = num_vertices + inner * arc[d];
    const bool forward = d < arr.arc_mate(d);
    for (int k = 0; k < inner; ++k) out.push_back(base + (forward ? k : inner - 1 - k));
    return out;
  }
};

inline Subdivision subdivide(const Arrangement& arr) {
  Subdivision s;
  s.vertex = vertex_of_darts(arr);
  s.num_vertices = arr.num_points();
  s.arc.assign(arr.num_darts(), -1);
  int arcs = 0;
  for (Dart d = 0; d < arr.num_darts(); ++d)
    if (s.arc[d] < 0) s.arc[d] = s.arc[arr.arc_mate(d)] = arcs++;
  s.num_nodes = s.num_vertices + (segments_per_arc - 1) * arcs;
  return s;
}

inline double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

inline bool segments_cross(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double d1 = cross(a, b, c), d2 = cross(a, b, d), d3 = cross(c, d, a), d4 = cross(c, d, b);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

inline double segment_distance(Point2 a, Point2 b, Point2 c, Point2 d) {
  if (segments_cross(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d), point_segment_distance(c, a, b),
                   point_segment_distance(d, a, b)});
}

}  // namespace detail

// Improper segment contacts, drawn face count and rotation agreement.
inline LayoutCheck check_layout(const Arrangement& arr, const PlanarLayout& layout) {
  LayoutCheck out;
  const auto& p = layout.coordinates;
  const auto& segs = layout.segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      auto [a, b] = segs[i];
      auto [c, d] = segs[j];
      const bool share = a == c || a == d || b == c || b == d;
      double dist;
      if (!share) {
        dist = detail::segment_distance(p[a], p[b], p[c], p[d]);
      } else {
        // Adjacent segments may only meet at their common node.
        if (a == d || b == d) std::swap(c, d);
        if (b == c) std::swap(a, b);
        dist = std::min(detail::point_segment_distance(p[b], p[c], p[d]), detail::point_segment_distance(p[d], p[a], p[b]));
      }
      if (dist < planarity_tolerance) ++out.improper_intersections;
    }
  }

  // Rotation of the drawing: neighbours by angle, counterclockwise.
  const int nodes = static_cast<int>(p.size());
  std::vector<std::vector<int>> nbrs(nodes);
  for (auto [a, b] : segs) {
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  for (int v = 0; v < nodes; ++v) {
    std::sort(nbrs[v].begin(), nbrs[v].end(), [&](int x, int y) {
      return std::atan2(p[x].y - p[v].y, p[x].x - p[v].x) < std::atan2(p[y].y - p[v].y, p[y].x - p[v].x);
    });
  }
  // Half-edges (v -> w); face successor: at w, take the next neighbour after v
  // counterclockwise, matching sigma o alpha.
  std::vector<std::vector<char>> seen(nodes);
  for (int v = 0; v < nodes; ++v) seen[v].assign(nbrs[v].size(), 0);
  auto slot = [&](int v, int w) {
    return static_cast<int>(std::find(nbrs[v].begin(), nbrs[v].end(), w) - nbrs[v].begin());
  };
  for (int v = 0; v < nodes; ++v) {
    for (std::size_t k = 0; k < nbrs[v].size(); ++k) {
      if (seen[v][k]) continue;
      ++out.drawn_faces;
      int cv = v, ck = static_cast<int>(k);
      while (!seen[cv][ck]) {
        seen[cv][ck] = 1;
        const int w = nbrs[cv][ck];
        const int back = slot(w, cv);
        const int next = (back + 1) % static_cast<int>(nbrs[w].size());
        cv = w;
        ck = next;
      }
    }
  }

  const auto sub = detail::subdivide(arr);
  out.rotation_matches = true;
  for (Dart d = 0; d < arr.num_darts() && out.rotation_matches; ++d) {
    const int v = sub.vertex[d];
    const int towards = sub.walk(arr, d)[1];
    const int towards_next = sub.walk(arr, arr.rotation(d))[1];
    const int k = slot(v, towards);
    if (k >= static_cast<int>(nbrs[v].size()) || nbrs[v][(k + 1) % nbrs[v].size()] != towards_next)
      out.rotation_matches = false;
  }
  return out;
}

// Face of maximum degree; ties to the smallest canonical first visit.
inline int default_outer_face(const Arrangement& arr) {
  const auto walks = faces(arr);
  const auto label = canonical_labels(arr);
  int best = 0;
  auto rank = [&](int f) {
    int first = arr.num_darts();
    for (Dart d : walks[f]) first = std::min(first, label[d]);
    return std::make_pair(-static_cast<int>(walks[f].size()), first);
  };
  for (int f = 1; f < static_cast<int>(walks.size()); ++f)
    if (rank(f) < rank(best)) best = f;
  return best;
}

inline PlanarLayout layout(const Arrangement& arr, std::optional<int> outer_face = std::nullopt) {
  require_valid(arr);
  const auto walks = faces(arr);
  const int outer = outer_face.value_or(default_outer_face(arr));
  if (outer < 0 || outer >= static_cast<int>(walks.size()))
    throw Error(ErrorKind::InvalidArrangement, "outer face index out of range");

  const auto sub = detail::subdivide(arr);
  PlanarLayout out;
  out.n_points = arr.num_points();
  out.outer_face = outer;

  for (Dart d = 0; d < arr.num_darts(); ++d) {
    if (d > arr.arc_mate(d)) continue;
    auto nodes = sub.walk(arr, d);
    nodes.push_back(sub.vertex[arr.arc_mate(d)]);
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) out.segments.emplace_back(nodes[k], nodes[k + 1]);
  }
  for (Curve c : {Curve::first, Curve::second}) {
    Dart start = 0;
    while (arr.color(start) != c) ++start;
    Dart d = start;
    do {
      const auto nodes = sub.walk(arr, d);
      auto& cycle = out.curve_cycles[index(c) - 1];
      cycle.insert(cycle.end(), nodes.begin(), nodes.end());
      d = arr.straight(d);
    } while (d != start);
  }

  // Graph for the solver: subdivided arcs plus a center node per inner face.
  int total = sub.num_nodes;
  std::vector<std::vector<int>> adj(total);
  auto connect = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (auto [a, b] : out.segments) connect(a, b);
  for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
    if (f == outer) continue;
    const int center = total++;
    adj.emplace_back();
    for (Dart d : walks[f])
      for (int node : sub.walk(arr, d)) connect(center, node);
  }

  std::vector<Point2> pos(total, Point2{0.5, 0.5});
  std::vector<char> pinned(total, 0);
  std::vector<int> boundary;
  for (Dart d : walks[outer])
    for (int node : sub.walk(arr, d)) boundary.push_back(node);
  const int m = static_cast<int>(boundary.size());
  for (int k = 0; k < m; ++k) {
    const double theta = std::numbers::pi / 2 + 2 * std::numbers::pi * k / m;
    pos[boundary[k]] = {0.5 + 0.5 * std::cos(theta), 0.5 + 0.5 * std::sin(theta)};
    pinned[boundary[k]] = 1;
  }

  // Gauss-Seidel on the barycentric equations.
  double residual = 0;
  int it = 0;
  for (; it < solver_max_iterations; ++it) {
    residual = 0;
    for (int v = 0; v < total; ++v) {
      if (pinned[v]) continue;
      Point2 mean;
      for (int w : adj[v]) mean.x += pos[w].x, mean.y += pos[w].y;
      mean.x /= adj[v].size();
      mean.y /= adj[v].size();
      residual = std::max(residual, std::hypot(mean.x - pos[v].x, mean.y - pos[v].y));
      pos[v] = mean;
    }
    if (residual < solver_residual) break;
  }
  out.iterations = it;
  out.residual = residual;
  out.coordinates.assign(pos.begin(), pos.begin() + sub.num_nodes);

  if (check_layout(arr, out).ok(out.n_points)) return out;
  std::mt19937 rng(20240917u);
  std::uniform_real_distribution<double> jitter(-retry_perturbation, retry_perturbation);
  for (int v = 0; v < sub.num_nodes; ++v) {
    if (pinned[v]) continue;
    out.coordinates[v].x += jitter(rng);
    out.coordinates[v].y += jitter(rng);
  }
  if (check_layout(arr, out).ok(out.n_points)) return out;
  throw Error(ErrorKind::LayoutDegenerate, "barycentric layout failed planarity validation");
}

// ---------------------------------------------------------------------------
// SVG

struct SvgStyle {
  std::string stroke_first = "#d62728";
  std::string stroke_second = "#1f77b4";
  double stroke_width = 2.0;
  int canvas = 400;  // pixels, square
};

namespace detail {

inline std::string xml_attr(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string to_svg(const Arrangement& arr, const PlanarLayout& layout, const SvgStyle& style = {}) {
  const double margin = 0.05 * style.canvas;
  const double span = style.canvas - 2 * margin;
  char buf[128];
  auto px = [&](Point2 p) {
    // SVG y grows downward; flip so the drawing keeps its orientation.
    std::snprintf(buf, sizeof buf, "%.3f %.3f", margin + p.x * span, margin + (1.0 - p.y) * span);
    return std::string(buf);
  };
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return std::string(buf);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(style.canvas) +
         "\" height=\"" + std::to_string(style.canvas) + "\" viewBox=\"0 0 " + std::to_string(style.canvas) + " " +
         std::to_string(style.canvas) + "\">\n";
  svg += "  <desc>" + to_gp1(encode(arr)) + "</desc>\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(style.canvas) + "\" height=\"" +
         std::to_string(style.canvas) + "\" fill=\"white\"/>\n";
  for (int c = 0; c < 2; ++c) {
    std::string d;
    const auto& cycle = layout.curve_cycles[c];
    for (std::size_t k = 0; k < cycle.size(); ++k) d += (k == 0 ? "M " : " L ") + px(layout.coordinates[cycle[k]]);
    d += " Z";
    svg += "  <path class=\"curve" + std::to_string(c + 1) + "\" fill=\"none\" stroke=\"" +
           detail::xml_attr(c == 0 ? style.stroke_first : style.stroke_second) + "\" stroke-width=\"" + num(style.stroke_width) +
           "\" stroke-linejoin=\"round\" d=\"" + d + "\"/>\n";
  }
  svg += "  <g class=\"crossings\" fill=\"black\">\n";
  for (int v = 0; v < layout.n_points; ++v) {
    const Point2 p = layout.coordinates[v];
    svg += "    <circle cx=\"" + num(margin + p.x * span) + "\" cy=\"" + num(margin + (1.0 - p.y) * span) + "\" r=\"" +
           num(1.5 * style.stroke_width) + "\"/>\n";
  }
  svg += "  </g>\n</svg>\n";
  return svg;
}

}  // namespace twocurves
