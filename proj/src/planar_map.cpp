#include "disciso/planar_map.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace disciso {

namespace {

std::string vertex_str(Vertex v) { return std::to_string(v); }

// Shared structural checks for rotation systems.  Fills edge count and
// boundary flags; throws on loops, duplicate neighbors, asymmetric
// adjacency, bad boundary, or disconnectedness.
struct Checked {
  long long edge_count = 0;
  std::vector<char> boundary_flag;
};

Checked check_structure(const std::vector<std::vector<Vertex>>& rotations,
                        const std::vector<Vertex>& boundary) {
  const int V = static_cast<int>(rotations.size());
  if (V < 1) throw ValidationError("empty vertex set");
  if (boundary.empty()) throw ValidationError("empty boundary");

  long long degree_sum = 0;
  for (Vertex u = 0; u < V; ++u) {
    std::unordered_set<Vertex> seen;
    for (Vertex w : rotations[static_cast<size_t>(u)]) {
      if (w < 0 || w >= V)
        throw ValidationError("neighbor id out of range at vertex " +
                              vertex_str(u));
      if (w == u) throw ValidationError("loop at vertex " + vertex_str(u));
      if (!seen.insert(w).second)
        throw ValidationError("repeated neighbor " + vertex_str(w) +
                              " at vertex " + vertex_str(u) +
                              " (multi-edge)");
    }
    degree_sum += static_cast<long long>(rotations[static_cast<size_t>(u)].size());
  }
  // Adjacency symmetry.
  for (Vertex u = 0; u < V; ++u) {
    for (Vertex w : rotations[static_cast<size_t>(u)]) {
      const auto& rw = rotations[static_cast<size_t>(w)];
      if (std::find(rw.begin(), rw.end(), u) == rw.end())
        throw ValidationError("asymmetric adjacency: " + vertex_str(u) +
                              " lists " + vertex_str(w) +
                              " but not conversely");
    }
  }

  Checked out;
  out.edge_count = degree_sum / 2;
  out.boundary_flag.assign(static_cast<size_t>(V), 0);
  for (Vertex b : boundary) {
    if (b < 0 || b >= V)
      throw ValidationError("boundary id out of range: " + vertex_str(b));
    if (out.boundary_flag[static_cast<size_t>(b)])
      throw ValidationError("non-simple boundary: vertex " + vertex_str(b) +
                            " listed twice");
    out.boundary_flag[static_cast<size_t>(b)] = 1;
  }

  // Degenerate maps: a single vertex or a single edge.
  if (V == 1) {
    if (!rotations[0].empty() || boundary.size() != 1)
      throw ValidationError("degenerate single-vertex map must have no edges");
    return out;
  }
  if (boundary.size() < 2)
    throw ValidationError("boundary too short for V >= 2");

  const int n = static_cast<int>(boundary.size());
  for (int i = 0; i < n; ++i) {
    Vertex a = boundary[static_cast<size_t>(i)];
    Vertex b = boundary[static_cast<size_t>((i + 1) % n)];
    const auto& ra = rotations[static_cast<size_t>(a)];
    if (std::find(ra.begin(), ra.end(), b) == ra.end())
      throw ValidationError("boundary edge (" + vertex_str(a) + "," +
                            vertex_str(b) + ") missing from rotations");
  }

  // Connectivity.
  std::vector<char> reached(static_cast<size_t>(V), 0);
  std::queue<Vertex> q;
  q.push(0);
  reached[0] = 1;
  int count = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : rotations[static_cast<size_t>(u)]) {
      if (!reached[static_cast<size_t>(w)]) {
        reached[static_cast<size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  if (count != V) throw ValidationError("disconnected map");
  return out;
}

// Dart = (vertex u, index i into rotations[u]); the dart u -> rotations[u][i].
// With counterclockwise rotations, the face lying on the LEFT of a dart is
// traced by next(u -> v) = (v, predecessor of u in the rotation at v).
struct FaceTracer {
  const std::vector<std::vector<Vertex>>& rot;
  std::vector<std::vector<int>> pos_cache;  // pos of u in rot[v], parallel arrays

  explicit FaceTracer(const std::vector<std::vector<Vertex>>& rotations)
      : rot(rotations) {}

  int index_of(Vertex v, Vertex u) const {
    const auto& rv = rot[static_cast<size_t>(v)];
    for (size_t i = 0; i < rv.size(); ++i)
      if (rv[i] == u) return static_cast<int>(i);
    throw ValidationError("internal: missing reverse dart");
  }

  // Walks the orbit starting at dart (u, i); returns the source vertices in
  // order (one per dart of the face walk).
  std::vector<Vertex> orbit(Vertex u0, int i0,
                            std::vector<std::vector<char>>& visited) const {
    std::vector<Vertex> walk;
    Vertex u = u0;
    int i = i0;
    do {
      visited[static_cast<size_t>(u)][static_cast<size_t>(i)] = 1;
      walk.push_back(u);
      Vertex v = rot[static_cast<size_t>(u)][static_cast<size_t>(i)];
      int j = index_of(v, u);
      int deg = static_cast<int>(rot[static_cast<size_t>(v)].size());
      i = (j - 1 + deg) % deg;  // predecessor in CCW order
      u = v;
    } while (!(u == u0 && i == i0));
    return walk;
  }
};

// Traces all face orbits.  The orbit of the dart (boundary[1] -> boundary[0])
// must be exactly the reversed boundary walk; returns the remaining orbits.
std::vector<std::vector<Vertex>> trace_faces(
    const std::vector<std::vector<Vertex>>& rotations,
    const std::vector<Vertex>& boundary) {
  const int V = static_cast<int>(rotations.size());
  const int n = static_cast<int>(boundary.size());
  FaceTracer tracer(rotations);
  std::vector<std::vector<char>> visited(static_cast<size_t>(V));
  for (Vertex u = 0; u < V; ++u)
    visited[static_cast<size_t>(u)].assign(rotations[static_cast<size_t>(u)].size(), 0);

  // Outer face: expected dart sources b1, b0, b_{n-1}, ..., b_2.
  std::vector<Vertex> expected;
  expected.reserve(static_cast<size_t>(n));
  for (int i = 1; i >= 1 - (n - 1); --i)
    expected.push_back(boundary[static_cast<size_t>(((i % n) + n) % n)]);

  Vertex b1 = boundary[1 % n];
  Vertex b0 = boundary[0];
  int start_i = tracer.index_of(b1, b0);
  std::vector<Vertex> outer = tracer.orbit(b1, start_i, visited);
  if (outer != expected)
    throw ValidationError(
        "boundary does not bound the outer face (rotation system and boundary "
        "cycle disagree)");

  std::vector<std::vector<Vertex>> faces;
  for (Vertex u = 0; u < V; ++u) {
    for (size_t i = 0; i < rotations[static_cast<size_t>(u)].size(); ++i) {
      if (visited[static_cast<size_t>(u)][i]) continue;
      faces.push_back(tracer.orbit(u, static_cast<int>(i), visited));
    }
  }
  return faces;
}

void check_euler(long long V, long long E, long long F, long long n) {
  if (V - E + F != 1)
    throw ValidationError("Euler-count mismatch: V-E+F = " +
                          std::to_string(V - E + F) + " != 1");
  if (V >= 2 && 3 * F != 2 * E - n)
    throw ValidationError("face/edge count mismatch: 3F != 2E - n");
  if (V >= 3 && E != 3 * V - n - 3)
    throw ValidationError("edge count mismatch: E != 3V - n - 3");
}

}  // namespace

bool DiscTriangulation::adjacent(Vertex u, Vertex v) const {
  const auto& ru = rotations_[static_cast<size_t>(u)];
  return std::find(ru.begin(), ru.end(), v) != ru.end();
}

DiscTriangulation DiscTriangulation::validate(
    std::vector<std::vector<Vertex>> rotations, std::vector<Vertex> boundary) {
  Checked chk = check_structure(rotations, boundary);
  DiscTriangulation t;
  t.edge_count_ = chk.edge_count;
  t.boundary_flag_ = std::move(chk.boundary_flag);

  const int V = static_cast<int>(rotations.size());
  if (V >= 2) {
    auto faces = trace_faces(rotations, boundary);
    t.faces_.reserve(faces.size());
    for (const auto& f : faces) {
      if (f.size() != 3) {
        std::ostringstream os;
        os << "non-triangular internal face of length " << f.size() << " (";
        for (size_t i = 0; i < f.size() && i < 8; ++i)
          os << (i ? " " : "") << f[i];
        os << (f.size() > 8 ? " ..." : "") << ")";
        throw ValidationError(os.str());
      }
      if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
        throw ValidationError("degenerate face with repeated vertex " +
                              vertex_str(f[0]));
      t.faces_.push_back({f[0], f[1], f[2]});
    }
  }
  check_euler(V, t.edge_count_, static_cast<long long>(t.faces_.size()),
              static_cast<long long>(boundary.size()));

  t.rotations_ = std::move(rotations);
  t.boundary_ = std::move(boundary);
  return t;
}

DegreeProfile DiscTriangulation::degree_profile() const {
  DegreeProfile p;
  p.min_degree_overall = std::numeric_limits<int>::max();
  p.min_internal_degree = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < vertex_count(); ++v) {
    int d = degree(v);
    p.min_degree_overall = std::min(p.min_degree_overall, d);
    if (!is_boundary(v)) {
      ++p.internal_vertex_count;
      p.internal_degree_sum += d;
      p.min_internal_degree = std::min(p.min_internal_degree, d);
    }
  }
  if (p.internal_vertex_count == 0) p.min_internal_degree = 0;
  if (vertex_count() == 0) p.min_degree_overall = 0;
  return p;
}

DiscTriangulation DiscTriangulation::mirrored() const {
  std::vector<std::vector<Vertex>> rot = rotations_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  std::vector<Vertex> bnd = boundary_;
  std::reverse(bnd.begin(), bnd.end());
  return validate(std::move(rot), std::move(bnd));
}

DiscTriangulation DiscTriangulation::relabeled(
    const std::vector<Vertex>& perm) const {
  const size_t V = rotations_.size();
  if (perm.size() != V) throw InputError("permutation size mismatch");
  std::vector<std::vector<Vertex>> rot(V);
  for (size_t v = 0; v < V; ++v) {
    auto& dst = rot[static_cast<size_t>(perm[v])];
    dst.reserve(rotations_[v].size());
    for (Vertex w : rotations_[v]) dst.push_back(perm[static_cast<size_t>(w)]);
  }
  std::vector<Vertex> bnd;
  bnd.reserve(boundary_.size());
  for (Vertex b : boundary_) bnd.push_back(perm[static_cast<size_t>(b)]);
  return validate(std::move(rot), std::move(bnd));
}

DiscMap DiscMap::validate(std::vector<std::vector<Vertex>> rotations,
                          std::vector<Vertex> boundary) {
  Checked chk = check_structure(rotations, boundary);
  DiscMap m;
  m.edge_count_ = chk.edge_count;

  const int V = static_cast<int>(rotations.size());
  if (V >= 2) {
    auto faces = trace_faces(rotations, boundary);
    for (const auto& f : faces) {
      if (f.size() < 3)
        throw ValidationError("internal face of length " +
                              std::to_string(f.size()));
      std::unordered_set<Vertex> distinct(f.begin(), f.end());
      if (distinct.size() != f.size())
        throw ValidationError(
            "non-simple internal face (repeated vertex in face walk)");
      m.faces_.push_back(f);
    }
  }
  // Euler for maps: V - E + F = 1 with F internal faces.
  long long F = static_cast<long long>(m.faces_.size());
  if (V - m.edge_count_ + F != 1)
    throw ValidationError("Euler-count mismatch for disc map");

  m.rotations_ = std::move(rotations);
  m.boundary_ = std::move(boundary);
  return m;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const std::vector<std::vector<Vertex>>& rotations,
                     const std::vector<Vertex>& boundary) {
  ordered_json j;
  j["format"] = "disc-tri/1";
  j["boundary"] = boundary;
  j["rotations"] = rotations;
  return j;
}

void from_json_text(const std::string& text,
                    std::vector<std::vector<Vertex>>& rotations,
                    std::vector<Vertex>& boundary) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("JSON syntax error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string() ||
      j["format"].get<std::string>() != "disc-tri/1")
    throw InputError("missing or unsupported format tag (want disc-tri/1)");
  if (!j.contains("boundary") || !j["boundary"].is_array())
    throw InputError("missing boundary array");
  if (!j.contains("rotations") || !j["rotations"].is_array())
    throw InputError("missing rotations array");
  try {
    boundary = j["boundary"].get<std::vector<Vertex>>();
    rotations = j["rotations"].get<std::vector<std::vector<Vertex>>>();
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed vertex lists: ") + e.what());
  }
}

}  // namespace

DiscTriangulation parse_triangulation(const std::string& json_text) {
  std::vector<std::vector<Vertex>> rotations;
  std::vector<Vertex> boundary;
  from_json_text(json_text, rotations, boundary);
  return DiscTriangulation::validate(std::move(rotations), std::move(boundary));
}

DiscMap parse_disc_map(const std::string& json_text) {
  std::vector<std::vector<Vertex>> rotations;
  std::vector<Vertex> boundary;
  from_json_text(json_text, rotations, boundary);
  return DiscMap::validate(std::move(rotations), std::move(boundary));
}

std::string serialize(const DiscTriangulation& t) {
  return to_json(t.rotations(), t.boundary()).dump();
}

std::string serialize_map(const std::vector<std::vector<Vertex>>& rotations,
                          const std::vector<Vertex>& boundary) {
  return to_json(rotations, boundary).dump();
}

// ---------------------------------------------------------------------------
// Canonical code

namespace {

// Breadth-first relabeling encoding rooted at the boundary dart
// (boundary[start] -> anchor), reading rotations in the given direction
// (+1 = as stored, -1 = mirrored).
std::vector<std::int32_t> rooted_code(const DiscTriangulation& t, int start,
                                      int dir) {
  const int V = t.vertex_count();
  const int n = t.boundary_length();
  const auto& bnd = t.boundary();

  Vertex root = bnd[static_cast<size_t>(start)];
  Vertex anchor =
      bnd[static_cast<size_t>(((start + dir) % n + n) % n)];

  std::vector<Vertex> label(static_cast<size_t>(V), -1);
  std::vector<Vertex> order;
  std::vector<Vertex> anchor_of(static_cast<size_t>(V), -1);
  order.reserve(static_cast<size_t>(V));

  label[static_cast<size_t>(root)] = 0;
  anchor_of[static_cast<size_t>(root)] = anchor;
  order.push_back(root);

  std::vector<std::int32_t> code;
  code.reserve(static_cast<size_t>(2 * t.edge_count() + V + 2));
  code.push_back(V);
  code.push_back(n);

  for (size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    const auto& rv = t.neighbors(v);
    const int deg = static_cast<int>(rv.size());
    code.push_back(deg);
    if (deg == 0) continue;
    int a = 0;
    while (rv[static_cast<size_t>(a)] != anchor_of[static_cast<size_t>(v)]) ++a;
    for (int k = 0; k < deg; ++k) {
      Vertex w = rv[static_cast<size_t>(((a + dir * k) % deg + deg) % deg)];
      if (label[static_cast<size_t>(w)] < 0) {
        label[static_cast<size_t>(w)] = static_cast<Vertex>(order.size());
        anchor_of[static_cast<size_t>(w)] = v;
        order.push_back(w);
      }
      code.push_back(label[static_cast<size_t>(w)]);
    }
  }
  return code;
}

}  // namespace

std::string canonical_code(const DiscTriangulation& t) {
  std::vector<std::int32_t> best;
  if (t.vertex_count() == 1) {
    best = {1, 1, 0};
  } else {
    const int n = t.boundary_length();
    for (int dir : {+1, -1}) {
      for (int start = 0; start < n; ++start) {
        auto code = rooted_code(t, start, dir);
        if (best.empty() || code < best) best = std::move(code);
      }
    }
  }
  std::ostringstream os;
  for (size_t i = 0; i < best.size(); ++i) os << (i ? " " : "") << best[i];
  return os.str();
}

DiscTriangulation decode_code(const std::string& code) {
  std::istringstream is(code);
  long long v = 0, n = 0;
  if (!(is >> v >> n) || v < 1 || n < 1)
    throw InputError("bad canonical code header");
  if (v == 1) return DiscTriangulation::validate({{}}, {0});
  std::vector<std::vector<Vertex>> rot(static_cast<size_t>(v));
  for (long long i = 0; i < v; ++i) {
    long long deg = 0;
    if (!(is >> deg) || deg < 1 || deg >= v)
      throw InputError("bad degree in canonical code");
    rot[static_cast<size_t>(i)].resize(static_cast<size_t>(deg));
    for (long long k = 0; k < deg; ++k) {
      long long w = 0;
      if (!(is >> w) || w < 0 || w >= v)
        throw InputError("bad neighbor in canonical code");
      rot[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          static_cast<Vertex>(w);
    }
  }
  long long extra;
  if (is >> extra) throw InputError("trailing tokens in canonical code");

  // The root's rotation is anchored at its boundary successor; recover the
  // boundary by walking b_{i+1} = successor of b_{i-1} at b_i.
  std::vector<Vertex> boundary = {0, rot[0][0]};
  while (static_cast<long long>(boundary.size()) < n) {
    Vertex prev = boundary[boundary.size() - 2];
    Vertex cur = boundary.back();
    const auto& rc = rot[static_cast<size_t>(cur)];
    int idx = -1;
    for (size_t k = 0; k < rc.size(); ++k)
      if (rc[k] == prev) idx = static_cast<int>(k);
    if (idx < 0) throw InputError("canonical code boundary walk failed");
    boundary.push_back(rc[(static_cast<size_t>(idx) + 1) % rc.size()]);
  }
  return DiscTriangulation::validate(std::move(rot), std::move(boundary));
}

Counts counts(const DiscTriangulation& t) {
  Counts c;
  c.vertices = t.vertex_count();
  c.edges = t.edge_count();
  c.faces = t.internal_face_count();
  c.boundary = t.boundary_length();
  c.profile = t.degree_profile();
  if (c.vertices >= 3) {
    if (c.vertices - c.edges + c.faces != 1)
      throw ValidationError("Euler identity failed");
    if (3 * c.faces != 2 * c.edges - c.boundary)
      throw ValidationError("3F = 2E - n failed");
    if (c.edges != 3 * c.vertices - c.boundary - 3)
      throw ValidationError("E = 3V - n - 3 failed");
    long long degree_sum = 0;
    for (Vertex v = 0; v < t.vertex_count(); ++v) degree_sum += t.degree(v);
    if (degree_sum != 2 * c.edges)
      throw ValidationError("degree sum != 2E");
  }
  return c;
}

}  // namespace disciso
