#include "disciso/strip.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace disciso {

namespace {

std::uint64_t edge_key(Vertex a, Vertex b) {
  Vertex lo = std::min(a, b), hi = std::max(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lo)) << 32) |
         static_cast<std::uint32_t>(hi);
}

// Canonical key of an oriented triangle: rotated so the smallest vertex
// comes first (orientation preserved).
std::array<Vertex, 3> face_key(Vertex a, Vertex b, Vertex c) {
  while (!(a <= b && a <= c)) {
    Vertex t = a;
    a = b;
    b = c;
    c = t;
  }
  return {a, b, c};
}

// Face tracing over the reduced rotation system (original cyclic orders
// restricted to a vertex/edge subset), in original vertex ids.
struct ReducedMap {
  // rot[v] only defined for kept vertices.
  std::unordered_map<Vertex, std::vector<Vertex>> rot;

  std::vector<std::vector<Vertex>> orbits() const {
    std::vector<Vertex> keys;
    keys.reserve(rot.size());
    for (const auto& [v, _] : rot) keys.push_back(v);
    std::sort(keys.begin(), keys.end());

    std::set<std::pair<Vertex, int>> visited;
    std::vector<std::vector<Vertex>> result;
    for (Vertex u0 : keys) {
      const auto& r0 = rot.at(u0);
      for (int i0 = 0; i0 < static_cast<int>(r0.size()); ++i0) {
        if (visited.count({u0, i0})) continue;
        std::vector<Vertex> walk;
        Vertex u = u0;
        int i = i0;
        do {
          visited.insert({u, i});
          walk.push_back(u);
          Vertex v = rot.at(u)[static_cast<size_t>(i)];
          const auto& rv = rot.at(v);
          int j = -1;
          for (int k = 0; k < static_cast<int>(rv.size()); ++k)
            if (rv[static_cast<size_t>(k)] == u) j = k;
          int deg = static_cast<int>(rv.size());
          i = (j - 1 + deg) % deg;
          u = v;
        } while (!(u == u0 && i == i0));
        result.push_back(std::move(walk));
      }
    }
    return result;
  }
};

// Iterative biconnected components; returns blocks as edge lists.
std::vector<std::vector<std::pair<Vertex, Vertex>>> biconnected_blocks(
    const std::vector<Vertex>& vertices, const ReducedMap& g) {
  std::unordered_map<Vertex, int> disc, low;
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> blocks;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    size_t next_child = 0;
  };

  for (Vertex root : vertices) {
    if (disc.count(root)) continue;
    std::vector<Frame> stack;
    stack.push_back({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.rot.at(f.v);
      if (f.next_child < nbrs.size()) {
        Vertex w = nbrs[f.next_child++];
        if (w == f.parent) continue;
        auto it = disc.find(w);
        if (it == disc.end()) {
          edge_stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (it->second < disc[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], it->second);
        }
      } else {
        Vertex v = f.v;
        Vertex parent = f.parent;
        stack.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= disc[parent]) {
            // Pop one block ending with the tree edge (parent, v).
            std::vector<std::pair<Vertex, Vertex>> block;
            while (!edge_stack.empty()) {
              auto e = edge_stack.back();
              edge_stack.pop_back();
              block.push_back(e);
              if (e.first == parent && e.second == v) break;
            }
            blocks.push_back(std::move(block));
          }
        }
      }
    }
  }
  return blocks;
}

// A parent-vertex edge that appears twice in a rotation would break the
// reduced trace; simple graphs cannot produce that, so no guard needed.

}  // namespace

StripReport strip_layer(const DiscTriangulation& t) {
  StripReport r;
  r.V = t.vertex_count();
  r.n = t.boundary_length();
  r.E = t.edge_count();
  r.profile = t.degree_profile();

  const int V = t.vertex_count();
  if (V <= 2) return r;  // everything is boundary; empty remainder

  // Boundary edge set (edges of the boundary cycle).
  std::unordered_set<std::uint64_t> boundary_edges;
  const auto& bnd = t.boundary();
  const int n = static_cast<int>(bnd.size());
  for (int i = 0; i < n; ++i)
    boundary_edges.insert(edge_key(bnd[static_cast<size_t>(i)],
                                   bnd[static_cast<size_t>((i + 1) % n)]));

  // m: internal edges with marked boundary endpoints.
  for (Vertex u = 0; u < V; ++u)
    for (Vertex w : t.neighbors(u)) {
      if (u >= w) continue;
      if (boundary_edges.count(edge_key(u, w))) continue;
      r.m += (t.is_boundary(u) ? 1 : 0) + (t.is_boundary(w) ? 1 : 0);
    }

  // Face classification and the surviving-face set.
  std::set<std::array<Vertex, 3>> surviving;
  for (const auto& f : t.internal_faces()) {
    int bv = 0;
    for (Vertex v : f) bv += t.is_boundary(v) ? 1 : 0;
    int be = 0;
    for (int i = 0; i < 3; ++i)
      if (boundary_edges.count(
              edge_key(f[static_cast<size_t>(i)],
                       f[static_cast<size_t>((i + 1) % 3)])))
        ++be;
    switch (bv) {
      case 0:
        surviving.insert(face_key(f[0], f[1], f[2]));
        break;
      case 1:
        ++r.new_boundary_faces;
        break;
      case 2:
        if (be == 1)
          ++r.alpha;
        else
          ++r.gamma;
        break;
      case 3:
        ++r.beta[be];
        break;
    }
  }

  // Remainder: induced sub-rotation-system on internal vertices.
  ReducedMap remainder;
  std::vector<Vertex> internal;
  for (Vertex v = 0; v < V; ++v) {
    if (t.is_boundary(v)) continue;
    internal.push_back(v);
    std::vector<Vertex> kept;
    for (Vertex w : t.neighbors(v))
      if (!t.is_boundary(w)) kept.push_back(w);
    remainder.rot.emplace(v, std::move(kept));
  }
  for (Vertex v : internal) {
    if (remainder.rot.at(v).empty()) {
      r.isolated_ids.push_back(v);
      ++r.isolated_vertices;
    }
  }
  std::sort(r.isolated_ids.begin(), r.isolated_ids.end());

  // Blocks of the remainder, split at cut vertices.
  auto blocks = biconnected_blocks(internal, remainder);
  // Deterministic order: by smallest original vertex id in the block.
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) {
              auto key = [](const auto& blk) {
                Vertex m = blk[0].first;
                for (const auto& e : blk)
                  m = std::min({m, e.first, e.second});
                return m;
              };
              return key(a) < key(b);
            });

  for (const auto& block : blocks) {
    std::set<Vertex> vset;
    std::set<std::uint64_t> eset;
    for (const auto& [a, b] : block) {
      vset.insert(a);
      vset.insert(b);
      eset.insert(edge_key(a, b));
    }
    if (block.size() == 1) {
      // Bridge: a degenerate two-vertex piece, boundary walk of length 2.
      auto [a, b] = block[0];
      r.components.push_back(
          {DiscTriangulation::validate({{1}, {0}}, {0, 1}),
           {std::min(a, b), std::max(a, b)},
           2});
      r.n_prime += 2;
      continue;
    }

    // Reduce rotations to block edges and find the block's outer walk: the
    // unique face orbit that is not a surviving face of the input.
    ReducedMap bm;
    for (Vertex v : vset) {
      std::vector<Vertex> kept;
      for (Vertex w : remainder.rot.at(v))
        if (eset.count(edge_key(v, w))) kept.push_back(w);
      bm.rot.emplace(v, std::move(kept));
    }
    std::vector<Vertex> outer;
    for (auto& orbit : bm.orbits()) {
      bool is_face = orbit.size() == 3 &&
                     surviving.count(face_key(orbit[0], orbit[1], orbit[2]));
      if (is_face) continue;
      if (!outer.empty())
        throw std::logic_error("strip: block has two non-face orbits");
      outer = std::move(orbit);
    }
    if (outer.empty())
      throw std::logic_error("strip: block outer walk missing");

    // The outer walk keeps the removed region on its left; the piece
    // boundary wants the interior on the left, so reverse it.
    std::reverse(outer.begin(), outer.end());
    {
      std::set<Vertex> distinct(outer.begin(), outer.end());
      if (distinct.size() != outer.size())
        throw std::logic_error("strip: block outer walk not simple");
    }
    // Start the cycle at the smallest vertex id for reproducible output.
    std::rotate(outer.begin(),
                std::min_element(outer.begin(), outer.end()), outer.end());

    std::vector<Vertex> ids(vset.begin(), vset.end());  // sorted
    std::unordered_map<Vertex, Vertex> local;
    for (size_t i = 0; i < ids.size(); ++i)
      local.emplace(ids[i], static_cast<Vertex>(i));
    std::vector<std::vector<Vertex>> rot(ids.size());
    for (size_t i = 0; i < ids.size(); ++i)
      for (Vertex w : bm.rot.at(ids[i]))
        rot[i].push_back(local.at(w));
    std::vector<Vertex> piece_boundary;
    piece_boundary.reserve(outer.size());
    for (Vertex v : outer) piece_boundary.push_back(local.at(v));

    StripComponent c{DiscTriangulation::validate(std::move(rot),
                                                  std::move(piece_boundary)),
                     std::move(ids), 0};
    c.boundary_edges = c.piece.boundary_length();
    r.n_prime += c.boundary_edges;
    r.components.push_back(std::move(c));
  }

  return r;
}

std::vector<IdentityCheck> verify_strip_identities(const DiscTriangulation& t,
                                                   const StripReport& r) {
  if (r.V != t.vertex_count() || r.n != t.boundary_length() ||
      r.E != t.edge_count())
    throw InputError("strip report does not belong to this triangulation");
  std::vector<IdentityCheck> out;
  auto add = [&out](const std::string& name, long long lhs, long long rhs,
                    bool equality, bool checked, bool hard) {
    IdentityCheck c;
    c.name = name;
    c.lhs = lhs;
    c.rhs = rhs;
    c.is_equality = equality;
    c.checked = checked;
    c.holds = !checked || (equality ? lhs == rhs : lhs <= rhs);
    c.hard = hard;
    out.push_back(std::move(c));
  };

  const long long V = r.V, n = r.n, E = r.E, m = r.m;
  const long long internal = V - n;
  const long long int_deg_sum = r.profile.internal_degree_sum;
  const bool nondegenerate = V >= 3;

  add("degree sum: 2E = sum(int deg) + 2n + m", 2 * E,
      int_deg_sum + 2 * n + m, true, nondegenerate, true);
  add("m = 2n - 6 - (sigma-6)(V-n)", m,
      2 * n - 6 - (int_deg_sum - 6 * internal), true, nondegenerate, true);
  add("2m = 2n' + 2a + 4g + 6b0 + 4b1 + 2b2", 2 * m,
      2 * r.n_prime + 2 * r.alpha + 4 * r.gamma + 6 * r.beta[0] +
          4 * r.beta[1] + 2 * r.beta[2],
      true, nondegenerate, true);
  add("n = a + b1 + 2b2 + 3b3", n,
      r.alpha + r.beta[1] + 2 * r.beta[2] + 3 * r.beta[3], true,
      nondegenerate, true);
  add("n' = one-boundary-vertex faces", r.n_prime, r.new_boundary_faces,
      true, nondegenerate, true);

  // Vertex conservation over distinct remainder vertices (cut vertices are
  // shared between pieces and must not be double counted).
  {
    std::set<Vertex> distinct(r.isolated_ids.begin(), r.isolated_ids.end());
    for (const auto& c : r.components)
      distinct.insert(c.original_ids.begin(), c.original_ids.end());
    add("V = n + remainder vertices", V,
        n + static_cast<long long>(distinct.size()), true, nondegenerate,
        true);
  }

  const bool min6 =
      r.profile.internal_vertex_count == 0 || r.profile.min_internal_degree >= 6;
  const bool guard_basic = nondegenerate && min6 && V >= 6;
  add("m <= 2n - 6", m, 2 * n - 6, false, guard_basic, false);
  add("n' <= n - 6", r.n_prime, n - 6, false, guard_basic, false);
  add("b2 <= b1 + 3b0 + 2g", r.beta[2],
      r.beta[1] + 3 * r.beta[0] + 2 * r.gamma, false, guard_basic, false);

  const bool hyperbolic = nondegenerate &&
                          r.profile.internal_vertex_count > 0 &&
                          r.profile.min_internal_degree >= 7;
  const long long delta =
      hyperbolic ? r.profile.min_internal_degree : 0;
  add("n' <= n - 6 - (delta-6)(V-n)", r.n_prime,
      n - 6 - (delta - 6) * internal, false, hyperbolic, false);

  return out;
}

bool all_hard_hold(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (c.hard && !c.holds) return false;
  return true;
}

bool all_soft_hold(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.hard && !c.holds) return false;
  return true;
}

LayerDecomposition layer_decomposition(const DiscTriangulation& t) {
  LayerDecomposition out;
  const int V = t.vertex_count();
  const long long n0 = t.boundary_length();

  // Graph distances from the boundary: the independent depth oracle.
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
  std::vector<std::set<Vertex>> depth_class;
  for (Vertex v = 0; v < V; ++v) {
    int d = dist[static_cast<size_t>(v)];
    if (d < 0) throw std::logic_error("layers: unreachable vertex");
    if (d >= static_cast<int>(depth_class.size()))
      depth_class.resize(static_cast<size_t>(d) + 1);
    depth_class[static_cast<size_t>(d)].insert(v);
  }

  // Iterated stripping; each work item carries its map back to root ids.
  struct Item {
    DiscTriangulation piece;
    std::vector<Vertex> to_root;
  };
  std::vector<Item> frontier;
  {
    std::vector<Vertex> ident(static_cast<size_t>(V));
    for (Vertex v = 0; v < V; ++v) ident[static_cast<size_t>(v)] = v;
    frontier.push_back({t, std::move(ident)});
  }

  int depth = 0;
  while (!frontier.empty()) {
    long long boundary_edges = 0;
    std::set<Vertex> removed;
    std::vector<Item> next;
    for (const auto& item : frontier) {
      if (item.piece.vertex_count() == 1) {
        removed.insert(item.to_root[0]);
        continue;  // boundary_edges contribution 0
      }
      boundary_edges += item.piece.boundary_length();
      for (Vertex b : item.piece.boundary())
        removed.insert(item.to_root[static_cast<size_t>(b)]);
      StripReport rep = strip_layer(item.piece);
      for (auto& comp : rep.components) {
        std::vector<Vertex> to_root;
        to_root.reserve(comp.original_ids.size());
        for (Vertex id : comp.original_ids)
          to_root.push_back(item.to_root[static_cast<size_t>(id)]);
        next.push_back({std::move(comp.piece), std::move(to_root)});
      }
      for (Vertex iso : rep.isolated_ids)
        next.push_back({DiscTriangulation::validate({{}}, {0}),
                        {item.to_root[static_cast<size_t>(iso)]}});
    }
    if (removed != depth_class[static_cast<size_t>(depth)])
      throw std::logic_error(
          "layers: stripping round does not match BFS depth class");

    LayerRow row;
    row.depth = depth;
    row.boundary_edges = boundary_edges;
    row.vertices = static_cast<long long>(removed.size());
    row.allowed = std::max<long long>(0, n0 - 6 * depth);
    row.excess = row.vertices > row.allowed;
    out.any_excess = out.any_excess || row.excess;
    out.total_vertices += row.vertices;
    out.layers.push_back(row);

    frontier = std::move(next);
    ++depth;
  }
  if (depth != static_cast<int>(depth_class.size()) ||
      out.total_vertices != V)
    throw std::logic_error("layers: vertex accounting mismatch");
  return out;
}

}  // namespace disciso
