#include "disciso/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>
#include <vector>

namespace disciso {

namespace {

struct Point {
  double x = 0, y = 0;
};

bool segments_cross(Point a, Point b, Point c, Point d) {
  auto orient = [](Point p, Point q, Point r) {
    double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (v > 1e-12) return 1;
    if (v < -1e-12) return -1;
    return 0;
  };
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const char* kTints[] = {"#dce9f7", "#b7d3ee", "#8fb8e0", "#6b9bcc",
                        "#4e7fb1", "#3a6491", "#2c4b6e", "#20354e"};

// Vertex dots by stripping depth: boundary red, then darkening blues.
const char* kDotTints[] = {"#b91c1c", "#1d4ed8", "#172554", "#0b1120",
                           "#3f3f46", "#52525b", "#71717a", "#a1a1aa"};

}  // namespace

RenderResult render_svg(const DiscTriangulation& t, bool tint_layers,
                        int canvas) {
  const int V = t.vertex_count();
  if (V < 3) throw InputError("rendering needs V >= 3");
  const int n = t.boundary_length();
  const double cx = canvas / 2.0, cy = canvas / 2.0;
  const double radius = canvas * 0.44;

  std::vector<Point> pos(static_cast<size_t>(V));
  std::vector<char> fixed(static_cast<size_t>(V), 0);
  for (int i = 0; i < n; ++i) {
    Vertex b = t.boundary()[static_cast<size_t>(i)];
    // Counterclockwise in math coordinates is clockwise on the flipped SVG
    // canvas; negate the angle so the drawing matches the convention.
    double a = -2.0 * M_PI * i / n + M_PI / 2.0;
    pos[static_cast<size_t>(b)] = {cx + radius * std::cos(a),
                                   cy - radius * std::sin(a)};
    fixed[static_cast<size_t>(b)] = 1;
  }
  if (V > n) {
    for (Vertex v = 0; v < V; ++v)
      if (!fixed[static_cast<size_t>(v)]) pos[static_cast<size_t>(v)] = {cx, cy};
    for (int iter = 0; iter < 4000; ++iter) {
      double moved = 0;
      for (Vertex v = 0; v < V; ++v) {
        if (fixed[static_cast<size_t>(v)]) continue;
        Point acc{0, 0};
        for (Vertex w : t.neighbors(v)) {
          acc.x += pos[static_cast<size_t>(w)].x;
          acc.y += pos[static_cast<size_t>(w)].y;
        }
        Point next{acc.x / t.degree(v), acc.y / t.degree(v)};
        moved += std::abs(next.x - pos[static_cast<size_t>(v)].x) +
                 std::abs(next.y - pos[static_cast<size_t>(v)].y);
        pos[static_cast<size_t>(v)] = next;
      }
      if (moved < 1e-9) break;
    }
  }

  // Stripping depth per vertex for the tint bands.
  std::vector<int> depth(static_cast<size_t>(V), 0);
  {
    std::vector<int> dist(static_cast<size_t>(V), -1);
    std::queue<Vertex> q;
    for (Vertex b : t.boundary()) {
      dist[static_cast<size_t>(b)] = 0;
      q.push(b);
    }
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : t.neighbors(u))
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          q.push(w);
        }
    }
    depth.assign(dist.begin(), dist.end());
  }

  // Crossing scan over non-adjacent edge pairs.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < V; ++u)
    for (Vertex w : t.neighbors(u))
      if (u < w) edges.push_back({u, w});
  int crossings = 0;
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_cross(pos[static_cast<size_t>(a)], pos[static_cast<size_t>(b)],
                         pos[static_cast<size_t>(c)], pos[static_cast<size_t>(d)]))
        ++crossings;
    }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas
      << "\" height=\"" << canvas << "\" viewBox=\"0 0 " << canvas << " "
      << canvas << "\">\n";
  svg << "<!-- vertices=" << V << " boundary=" << n
      << " crossings=" << crossings << " -->\n";
  if (crossings > 0)
    svg << "<!-- warning: straight-line drawing has overlapping edges -->\n";

  for (const auto& f : t.internal_faces()) {
    int d = std::min({depth[static_cast<size_t>(f[0])],
                      depth[static_cast<size_t>(f[1])],
                      depth[static_cast<size_t>(f[2])]});
    const char* fill =
        tint_layers ? kTints[static_cast<size_t>(d) % 8] : "#e8eef5";
    svg << "<polygon points=\"";
    for (int i = 0; i < 3; ++i) {
      const Point& p = pos[static_cast<size_t>(f[static_cast<size_t>(i)])];
      svg << (i ? " " : "") << fmt(p.x) << "," << fmt(p.y);
    }
    svg << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
  }
  for (auto [u, w] : edges) {
    const Point& a = pos[static_cast<size_t>(u)];
    const Point& b = pos[static_cast<size_t>(w)];
    svg << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
        << fmt(b.x) << "\" y2=\"" << fmt(b.y)
        << "\" stroke=\"#1f2937\" stroke-width=\"1\"/>\n";
  }
  double r_dot = std::max(2.0, radius / (4.0 * n));
  for (Vertex v = 0; v < V; ++v) {
    const Point& p = pos[static_cast<size_t>(v)];
    const char* fill = tint_layers
                           ? kDotTints[static_cast<size_t>(
                                 depth[static_cast<size_t>(v)]) % 8]
                           : (t.is_boundary(v) ? "#b91c1c" : "#111827");
    svg << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\""
        << fmt(r_dot) << "\" fill=\"" << fill << "\"/>\n";
  }
  svg << "</svg>\n";

  RenderResult out;
  out.svg = svg.str();
  out.crossings = crossings;
  return out;
}

}  // namespace disciso
