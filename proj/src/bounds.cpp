#include "disciso/bounds.hpp"

#include <algorithm>
#include <queue>

#include "disciso/builders.hpp"

namespace disciso {

long long layered_sum(long long n) {
  if (n < 0) throw InputError("layered sum needs n >= 0");
  // sum_{k=0..floor(n/6)} (n - 6k)
  long long t = n / 6 + 1;
  return t * n - 3 * t * (t - 1);
}

long long weil_bound(long long n) {
  if (n < 0) throw InputError("weil bound needs n >= 0");
  long long closed = (n + 3) * (n + 3) / 12;
  if (closed != layered_sum(n))
    throw std::logic_error("closed form and layered sum disagree at n = " +
                           std::to_string(n));
  return closed;
}

BoundReport check_volume_bound(const DiscTriangulation& t) {
  auto profile = t.degree_profile();
  if (profile.internal_vertex_count > 0 && profile.min_internal_degree < 6)
    throw InputError("volume bound requires all internal degrees >= 6 (found " +
                     std::to_string(profile.min_internal_degree) + ")");
  BoundReport r;
  r.instance = "V=" + std::to_string(t.vertex_count()) +
               ",n=" + std::to_string(t.boundary_length());
  r.bound_name = "V <= floor((n+3)^2/12)";
  r.bound = weil_bound(t.boundary_length());
  r.observed = t.vertex_count();
  r.pass = r.observed <= r.bound;
  r.slack = r.bound - r.observed;
  return r;
}

GrowthTable growth_table(int delta, int r_max, long long vertex_cap,
                         bool verify_against_bfs) {
  if (delta < 6) throw InputError("growth table needs delta >= 6");
  if (r_max < 0) throw InputError("growth table needs r_max >= 0");
  GrowthTable g;
  g.delta = delta;
  g.r_max = r_max;
  g.V = {1};
  g.S = {0};
  for (int r = 1; r <= r_max; ++r) {
    long long s = g.S.back() + 6 + static_cast<long long>(delta - 6) * g.V.back();
    long long v = g.V.back() + s;
    if (v > vertex_cap)
      throw Error("growth table exceeds vertex cap at R = " +
                  std::to_string(r));
    g.S.push_back(s);
    g.V.push_back(v);
  }

  if (verify_against_bfs && r_max >= 1) {
    auto ball = build_regular_ball({delta, r_max}, vertex_cap);
    std::vector<int> dist(static_cast<size_t>(ball.vertex_count()), -1);
    std::queue<Vertex> q;
    q.push(0);
    dist[0] = 0;
    std::vector<long long> layer(static_cast<size_t>(r_max) + 1, 0);
    layer[0] = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : ball.neighbors(u))
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          layer[static_cast<size_t>(dist[static_cast<size_t>(w)])] += 1;
          q.push(w);
        }
    }
    long long cumulative = 0;
    for (int r = 0; r <= r_max; ++r) {
      cumulative += layer[static_cast<size_t>(r)];
      long long s_bfs = r == 0 ? 0 : layer[static_cast<size_t>(r)];
      g.bfs_V.push_back(cumulative);
      g.bfs_S.push_back(s_bfs);
      if (cumulative != g.V[static_cast<size_t>(r)] ||
          s_bfs != g.S[static_cast<size_t>(r)])
        throw Error("growth recursion disagrees with BFS layer counts at R = " +
                    std::to_string(r) + " (recursion V=" +
                    std::to_string(g.V[static_cast<size_t>(r)]) + " S=" +
                    std::to_string(g.S[static_cast<size_t>(r)]) + ", bfs V=" +
                    std::to_string(cumulative) + " S=" + std::to_string(s_bfs) +
                    ")");
    }
    g.bfs_verified = true;
  }
  return g;
}

BoundReport check_hyperbolic_bound(const DiscTriangulation& t, int delta,
                                   const GrowthTable& table) {
  if (delta < 7) throw InputError("hyperbolic bound needs delta >= 7");
  if (table.delta != delta) throw InputError("growth table delta mismatch");
  auto profile = t.degree_profile();
  if (profile.internal_vertex_count > 0 && profile.min_internal_degree < delta)
    throw InputError("hyperbolic bound requires min internal degree >= delta");

  const long long V = t.vertex_count();
  int r = 0;
  for (int k = 0; k <= table.r_max; ++k)
    if (V >= table.V[static_cast<size_t>(k)]) r = k;

  BoundReport out;
  out.instance = "V=" + std::to_string(V) +
                 ",n=" + std::to_string(t.boundary_length());
  out.bound_name = "V >= V_R => n >= S_R (delta=" + std::to_string(delta) +
                   ", R=" + std::to_string(r) + ")";
  out.bound = table.S[static_cast<size_t>(r)];
  out.observed = t.boundary_length();
  out.pass = out.observed >= out.bound;
  out.slack = out.observed - out.bound;
  if (r == 0) out.note = "vacuous at R = 0";
  return out;
}

BoundReport check_edge_bound(long long v_count, long long edge_boundary_size,
                             long long boundary_vertex_count) {
  if (v_count < 1) throw InputError("edge bound needs V >= 1");
  if (edge_boundary_size < 0) throw InputError("edge boundary must be >= 0");
  BoundReport r;
  r.instance = "V=" + std::to_string(v_count) +
               ",|dA|=" + std::to_string(edge_boundary_size);
  r.bound_name = "|dA|^2 >= 48 V";
  r.bound = 48 * v_count;
  r.observed = edge_boundary_size * edge_boundary_size;
  r.pass = r.observed >= r.bound;
  r.slack = r.observed - r.bound;
  if (boundary_vertex_count >= 0)
    r.note = "intermediate bound 2n+6 = " +
             std::to_string(2 * boundary_vertex_count + 6);
  return r;
}

}  // namespace disciso
