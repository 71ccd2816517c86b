#include "disciso/builders.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace disciso {

namespace {

// Axial coordinates on the triangular lattice.  The six unit directions in
// counterclockwise order; dir k maps to angle 60k degrees in the plane.
struct Axial {
  int q = 0, r = 0;
  friend bool operator<(const Axial& a, const Axial& b) {
    return a.r != b.r ? a.r < b.r : a.q < b.q;
  }
  friend bool operator==(const Axial& a, const Axial& b) {
    return a.q == b.q && a.r == b.r;
  }
  Axial operator+(const Axial& o) const { return {q + o.q, r + o.r}; }
  Axial operator-(const Axial& o) const { return {q - o.q, r - o.r}; }
};

constexpr std::array<Axial, 6> kDirs = {{{1, 0},
                                         {0, 1},
                                         {-1, 1},
                                         {-1, 0},
                                         {0, -1},
                                         {1, -1}}};

long long cross(const Axial& a, const Axial& b) {
  return static_cast<long long>(a.q) * b.r -
         static_cast<long long>(a.r) * b.q;
}

// Builds the triangulated convex lattice polygon with the given side tuple
// walked from the origin in direction order.  Returns nullopt if the walk is
// not a simple positive-area polygon.
std::optional<DiscTriangulation> build_lattice_polygon(
    const std::array<int, 6>& sides) {
  long long closure_a = sides[0] + sides[1] - sides[3] - sides[4];
  long long closure_b = sides[1] + sides[2] - sides[4] - sides[5];
  if (closure_a != 0 || closure_b != 0) return std::nullopt;

  // Boundary walk, one point per unit step.
  std::vector<Axial> walk;
  Axial at{0, 0};
  for (int side = 0; side < 6; ++side) {
    for (int step = 0; step < sides[static_cast<size_t>(side)]; ++step) {
      walk.push_back(at);
      at = at + kDirs[static_cast<size_t>(side)];
    }
  }
  if (!(at == Axial{0, 0}) || walk.size() < 3) return std::nullopt;
  {
    std::set<Axial> distinct(walk.begin(), walk.end());
    if (distinct.size() != walk.size()) return std::nullopt;
  }

  // Corner list for the convexity/containment test.
  std::vector<Axial> corners;
  at = {0, 0};
  for (int side = 0; side < 6; ++side) {
    if (sides[static_cast<size_t>(side)] > 0) corners.push_back(at);
    at = at + Axial{kDirs[static_cast<size_t>(side)].q *
                        sides[static_cast<size_t>(side)],
                    kDirs[static_cast<size_t>(side)].r *
                        sides[static_cast<size_t>(side)]};
  }
  auto inside = [&corners](const Axial& p) {
    const size_t m = corners.size();
    for (size_t i = 0; i < m; ++i) {
      Axial a = corners[i], b = corners[(i + 1) % m];
      if (cross(b - a, p - a) < 0) return false;
    }
    return true;
  };

  int qmin = 0, qmax = 0, rmin = 0, rmax = 0;
  for (const Axial& p : walk) {
    qmin = std::min(qmin, p.q);
    qmax = std::max(qmax, p.q);
    rmin = std::min(rmin, p.r);
    rmax = std::max(rmax, p.r);
  }
  std::map<Axial, Vertex> index;
  for (int r = rmin; r <= rmax; ++r)
    for (int q = qmin; q <= qmax; ++q)
      if (inside({q, r}))
        index.emplace(Axial{q, r}, static_cast<Vertex>(index.size()));

  const int V = static_cast<int>(index.size());
  std::vector<std::vector<Vertex>> rot(static_cast<size_t>(V));
  for (const auto& [p, id] : index) {
    for (const Axial& d : kDirs) {
      auto it = index.find(p + d);
      if (it != index.end())
        rot[static_cast<size_t>(id)].push_back(it->second);
    }
  }
  std::vector<Vertex> boundary;
  boundary.reserve(walk.size());
  for (const Axial& p : walk) boundary.push_back(index.at(p));

  return DiscTriangulation::validate(std::move(rot), std::move(boundary));
}

}  // namespace

int HexagonSpec::perimeter() const {
  int n = 0;
  for (int a : sides) n += a;
  return n;
}

void HexagonSpec::check() const {
  int zeros = 0;
  for (int a : sides) {
    if (a < 0) throw ValidationError("negative hexagon side");
    if (a == 0) ++zeros;
  }
  if (zeros == 6) throw ValidationError("all hexagon sides are zero");
  if (zeros > 1)
    throw ValidationError("more than one zero side (" +
                          std::to_string(zeros) + ")");
  if (perimeter() < 3) throw ValidationError("hexagon perimeter < 3");
  auto bad = [](int lhs, int rhs, const std::string& eq) {
    if (lhs != rhs)
      throw ValidationError("hexagon closure violated: " + eq + " (" +
                            std::to_string(lhs) + " != " +
                            std::to_string(rhs) + ")");
  };
  bad(sides[0] + sides[1], sides[3] + sides[4], "a1+a2 = a4+a5");
  bad(sides[1] + sides[2], sides[4] + sides[5], "a2+a3 = a5+a6");
  bad(sides[2] + sides[3], sides[5] + sides[0], "a3+a4 = a6+a1");
}

long long hexagon_vertex_formula(const HexagonSpec& spec) {
  long long s = spec.sides[0] + spec.sides[1] + spec.sides[2];
  auto tri = [](long long k) { return k * (k + 1) / 2; };
  return (s + 1) * (s + 2) / 2 - tri(spec.sides[0]) - tri(spec.sides[2]) -
         tri(spec.sides[4]);
}

DiscTriangulation build_hexagon(const HexagonSpec& spec) {
  spec.check();
  auto t = build_lattice_polygon(spec.sides);
  if (!t) throw ValidationError("hexagon sides do not close up");
  return std::move(*t);
}

std::array<int, 6> extremal_sides(int n) {
  if (n < 3) throw InputError("extremal shape needs n >= 3");
  long long best_v = -1;
  std::string best_code;
  std::array<int, 6> best_sides{-1, -1, -1, -1, -1, -1};

  int k0 = std::max(0, (n - 6) / 6);
  std::set<int> ks = {std::max(0, k0 - 1), k0, k0 + 1};
  std::set<std::array<int, 6>> seen;
  for (int k : ks) {
    std::array<int, 6> t{};
    for (int i0 = 0; i0 < 3; ++i0)
      for (int i1 = 0; i1 < 3; ++i1)
        for (int i2 = 0; i2 < 3; ++i2)
          for (int i3 = 0; i3 < 3; ++i3)
            for (int i4 = 0; i4 < 3; ++i4)
              for (int i5 = 0; i5 < 3; ++i5) {
                t = {k + i0, k + i1, k + i2, k + i3, k + i4, k + i5};
                if (t[0] + t[1] + t[2] + t[3] + t[4] + t[5] != n) continue;
                if (!seen.insert(t).second) continue;
                auto built = build_lattice_polygon(t);
                if (!built) continue;
                long long v = built->vertex_count();
                std::string code = canonical_code(*built);
                if (v > best_v || (v == best_v && code < best_code)) {
                  best_v = v;
                  best_code = std::move(code);
                  best_sides = t;
                }
              }
  }

  if (n <= 8) {
    // Fan triangulation of the n-gon (no internal vertices, V = n).
    std::vector<std::vector<Vertex>> rot(static_cast<size_t>(n));
    for (int i = 1; i <= n - 1; ++i) rot[0].push_back(i);
    rot[1] = {2, 0};
    rot[static_cast<size_t>(n - 1)] = {0, n - 2};
    for (int i = 2; i <= n - 2; ++i)
      rot[static_cast<size_t>(i)] = {i + 1, 0, i - 1};
    std::vector<Vertex> bnd(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) bnd[static_cast<size_t>(i)] = i;
    auto f = DiscTriangulation::validate(std::move(rot), std::move(bnd));
    long long v = f.vertex_count();
    std::string code = canonical_code(f);
    if (v > best_v || (v == best_v && code < best_code))
      best_sides = {-1, -1, -1, -1, -1, -1};
  }
  if (best_v < 0 && best_sides[0] == -1 && n > 8)
    throw Error("no feasible extremal side tuple for n = " +
                std::to_string(n));
  return best_sides;
}

DiscTriangulation build_extremal(int n) {
  auto sides = extremal_sides(n);
  if (sides[0] == -1) {
    std::vector<std::vector<Vertex>> rot(static_cast<size_t>(n));
    for (int i = 1; i <= n - 1; ++i) rot[0].push_back(i);
    rot[1] = {2, 0};
    rot[static_cast<size_t>(n - 1)] = {0, n - 2};
    for (int i = 2; i <= n - 2; ++i)
      rot[static_cast<size_t>(i)] = {i + 1, 0, i - 1};
    std::vector<Vertex> bnd(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) bnd[static_cast<size_t>(i)] = i;
    return DiscTriangulation::validate(std::move(rot), std::move(bnd));
  }
  auto t = build_lattice_polygon(sides);
  if (!t) throw Error("internal: extremal tuple failed to build");
  return std::move(*t);
}

// ---------------------------------------------------------------------------
// Regular balls

namespace {

struct BallVertex {
  std::vector<Vertex> parents_tail;  // parents in clockwise lower-cycle order
  Vertex prev = -1, next = -1;       // same-layer cycle neighbors (CCW)
  std::vector<Vertex> children;      // next-layer arc in CCW order
};

}  // namespace

DiscTriangulation build_regular_ball(const BallSpec& spec,
                                     long long vertex_cap) {
  const int delta = spec.degree;
  const int R = spec.radius;
  if (delta < 6) throw InputError("ball degree must be >= 6");
  if (R < 0) throw InputError("ball radius must be >= 0");
  if (R == 0) return DiscTriangulation::validate({{}}, {0});

  std::vector<BallVertex> verts(1);  // center = 0
  std::vector<Vertex> cycle;         // current outermost layer, CCW
  for (int j = 0; j < delta; ++j) {
    Vertex id = static_cast<Vertex>(verts.size());
    verts.emplace_back();
    verts[static_cast<size_t>(id)].parents_tail = {0};
    verts[0].children.push_back(id);
    cycle.push_back(id);
  }
  for (int j = 0; j < delta; ++j) {
    verts[static_cast<size_t>(cycle[static_cast<size_t>(j)])].prev =
        cycle[static_cast<size_t>((j + delta - 1) % delta)];
    verts[static_cast<size_t>(cycle[static_cast<size_t>(j)])].next =
        cycle[static_cast<size_t>((j + 1) % delta)];
  }

  for (int layer = 2; layer <= R; ++layer) {
    const int L = static_cast<int>(cycle.size());
    // Quota of new neighbors per frontier vertex.
    std::vector<int> quota(static_cast<size_t>(L));
    long long total = 0;
    for (int i = 0; i < L; ++i) {
      const auto& v = verts[static_cast<size_t>(cycle[static_cast<size_t>(i)])];
      int deg = static_cast<int>(v.parents_tail.size()) + 2;
      quota[static_cast<size_t>(i)] = delta - deg;
      if (quota[static_cast<size_t>(i)] < 2)
        throw Error("internal: ball quota underflow");
      total += quota[static_cast<size_t>(i)];
    }
    long long new_count = total - L;
    if (static_cast<long long>(verts.size()) + new_count > vertex_cap)
      throw Error("ball size cap exceeded at radius " +
                  std::to_string(layer));

    // New cycle: per frontier vertex, its private children then the apex it
    // shares with the next frontier vertex.
    std::vector<Vertex> next_cycle;
    next_cycle.reserve(static_cast<size_t>(new_count));
    std::vector<Vertex> apex(static_cast<size_t>(L));
    std::vector<std::vector<Vertex>> privates(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) {
      for (int p = 0; p < quota[static_cast<size_t>(i)] - 2; ++p) {
        Vertex id = static_cast<Vertex>(verts.size());
        verts.emplace_back();
        verts[static_cast<size_t>(id)].parents_tail = {
            cycle[static_cast<size_t>(i)]};
        privates[static_cast<size_t>(i)].push_back(id);
        next_cycle.push_back(id);
      }
      Vertex id = static_cast<Vertex>(verts.size());
      verts.emplace_back();
      // Apex above the edge (cycle[i], cycle[i+1]): parents clockwise.
      verts[static_cast<size_t>(id)].parents_tail = {
          cycle[static_cast<size_t>((i + 1) % L)],
          cycle[static_cast<size_t>(i)]};
      apex[static_cast<size_t>(i)] = id;
      next_cycle.push_back(id);
    }
    for (int i = 0; i < L; ++i) {
      auto& v = verts[static_cast<size_t>(cycle[static_cast<size_t>(i)])];
      v.children.push_back(apex[static_cast<size_t>((i + L - 1) % L)]);
      for (Vertex c : privates[static_cast<size_t>(i)])
        v.children.push_back(c);
      v.children.push_back(apex[static_cast<size_t>(i)]);
    }
    const int M = static_cast<int>(next_cycle.size());
    for (int j = 0; j < M; ++j) {
      verts[static_cast<size_t>(next_cycle[static_cast<size_t>(j)])].prev =
          next_cycle[static_cast<size_t>((j + M - 1) % M)];
      verts[static_cast<size_t>(next_cycle[static_cast<size_t>(j)])].next =
          next_cycle[static_cast<size_t>((j + 1) % M)];
    }
    cycle = std::move(next_cycle);
  }

  // Assemble counterclockwise rotations: prev, children arc, next, parents
  // in clockwise order of the inner cycle.
  const int V = static_cast<int>(verts.size());
  std::vector<std::vector<Vertex>> rot(static_cast<size_t>(V));
  rot[0] = verts[0].children;
  for (Vertex v = 1; v < V; ++v) {
    auto& out = rot[static_cast<size_t>(v)];
    const auto& b = verts[static_cast<size_t>(v)];
    out.push_back(b.prev);
    for (Vertex c : b.children) out.push_back(c);
    out.push_back(b.next);
    for (Vertex p : b.parents_tail) out.push_back(p);
  }

  auto ball = DiscTriangulation::validate(std::move(rot), cycle);

  // The construction is only trusted after independent checks: exact
  // eccentricity and exact internal degrees.
  std::vector<int> dist(static_cast<size_t>(V), -1);
  std::queue<Vertex> q;
  q.push(0);
  dist[0] = 0;
  int ecc = 0;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : ball.neighbors(u))
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        ecc = std::max(ecc, dist[static_cast<size_t>(w)]);
        q.push(w);
      }
  }
  if (ecc != R) throw Error("internal: ball eccentricity mismatch");
  for (Vertex v = 0; v < V; ++v)
    if (!ball.is_boundary(v) && ball.degree(v) != delta)
      throw Error("internal: ball internal degree mismatch at vertex " +
                  std::to_string(v));
  return ball;
}

DiscTriangulation build_lattice_patch(int radius) {
  if (radius < 1) throw InputError("lattice patch radius must be >= 1");
  return build_regular_ball({6, radius});
}

// ---------------------------------------------------------------------------
// Triangulation completion

DiscTriangulation triangulate_simple_map(const DiscMap& map) {
  std::vector<std::vector<Vertex>> rot = map.rotations();
  const int V = map.vertex_count();

  std::set<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < V; ++u)
    for (Vertex w : rot[static_cast<size_t>(u)])
      if (u < w) edges.insert({u, w});

  auto insert_after = [&rot](Vertex at, Vertex where, Vertex what) {
    auto& r = rot[static_cast<size_t>(at)];
    auto it = std::find(r.begin(), r.end(), where);
    if (it == r.end()) throw Error("internal: rotation anchor missing");
    r.insert(it + 1, what);
  };

  std::vector<std::vector<Vertex>> pending(map.internal_faces().begin(),
                                           map.internal_faces().end());
  while (!pending.empty()) {
    std::vector<Vertex> face = std::move(pending.back());
    pending.pop_back();
    const int L = static_cast<int>(face.size());
    if (L == 3) continue;

    // Greedy diagonal: the lexicographically smallest non-adjacent pair of
    // non-consecutive face vertices.
    int bi = -1, bj = -1;
    Vertex bu = -1, bv = -1;
    for (int i = 0; i < L; ++i) {
      for (int j = i + 2; j < L; ++j) {
        if (i == 0 && j == L - 1) continue;  // consecutive around the cycle
        Vertex u = face[static_cast<size_t>(i)];
        Vertex v = face[static_cast<size_t>(j)];
        Vertex lo = std::min(u, v), hi = std::max(u, v);
        if (edges.count({lo, hi})) continue;
        if (bu == -1 || std::pair(lo, hi) < std::pair(std::min(bu, bv),
                                                      std::max(bu, bv))) {
          bi = i;
          bj = j;
          bu = u;
          bv = v;
        }
      }
    }
    if (bi < 0) {
      std::ostringstream os;
      os << "stuck: face (";
      for (int i = 0; i < L; ++i) os << (i ? " " : "") << face[static_cast<size_t>(i)];
      os << ") of length " << L
         << " has all diagonals already present as edges";
      throw CompletionStuck(os.str());
    }

    Vertex u = face[static_cast<size_t>(bi)];
    Vertex v = face[static_cast<size_t>(bj)];
    // The new diagonal sits inside this face: at u between the face edges to
    // face[bi+1] and face[bi-1] (counterclockwise), symmetrically at v.
    insert_after(u, face[static_cast<size_t>((bi + 1) % L)], v);
    insert_after(v, face[static_cast<size_t>((bj + 1) % L)], u);
    edges.insert({std::min(u, v), std::max(u, v)});

    std::vector<Vertex> a(face.begin() + bi, face.begin() + bj + 1);
    std::vector<Vertex> b(face.begin() + bj, face.end());
    b.insert(b.end(), face.begin(), face.begin() + bi + 1);
    pending.push_back(std::move(a));
    pending.push_back(std::move(b));
  }

  return DiscTriangulation::validate(std::move(rot), map.boundary());
}

}  // namespace disciso
