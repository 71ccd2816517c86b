#include "disciso/isoperimetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace disciso {

namespace {

std::vector<int> distances_from_boundary(const DiscTriangulation& t) {
  std::vector<int> dist(static_cast<size_t>(t.vertex_count()), -1);
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
  return dist;
}

}  // namespace

long long edge_boundary(const DiscTriangulation& patch,
                        const std::vector<Vertex>& subset,
                        int required_margin) {
  if (subset.empty()) throw InputError("edge boundary of an empty set");
  std::unordered_set<Vertex> in(subset.begin(), subset.end());
  if (in.size() != subset.size())
    throw InputError("subset lists a vertex twice");

  auto dist = distances_from_boundary(patch);
  for (Vertex v : subset) {
    if (v < 0 || v >= patch.vertex_count())
      throw InputError("subset vertex out of range");
    if (dist[static_cast<size_t>(v)] < required_margin)
      throw InputError("margin violation: vertex " + std::to_string(v) +
                       " is at distance " +
                       std::to_string(dist[static_cast<size_t>(v)]) +
                       " from the patch boundary");
  }

  long long cut = 0, degree_sum = 0, inside = 0;
  for (Vertex v : subset) {
    degree_sum += patch.degree(v);
    for (Vertex w : patch.neighbors(v)) {
      if (in.count(w))
        ++inside;  // counted from both sides
      else
        ++cut;
    }
  }
  long long via_degrees = degree_sum - inside;  // inside/2 doubled
  if (cut != via_degrees)
    throw std::logic_error("edge boundary cross-check failed");
  return cut;
}

// ---------------------------------------------------------------------------
// Lattice animals

namespace {

struct Cell {
  int q = 0, r = 0;
  friend bool operator<(const Cell& a, const Cell& b) {
    return a.r != b.r ? a.r < b.r : a.q < b.q;
  }
  friend bool operator==(const Cell& a, const Cell& b) {
    return a.q == b.q && a.r == b.r;
  }
};

constexpr std::array<Cell, 6> kDirs = {
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

Cell rot60(const Cell& c) { return {-c.r, c.q + c.r}; }
Cell reflect(const Cell& c) { return {c.r, c.q}; }

std::vector<Cell> normalized(std::vector<Cell> cells) {
  int qmin = cells[0].q, rmin = cells[0].r;
  for (const Cell& c : cells) {
    qmin = std::min(qmin, c.q);
    rmin = std::min(rmin, c.r);
  }
  for (Cell& c : cells) {
    c.q -= qmin;
    c.r -= rmin;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Cell> canonical_animal(const std::vector<Cell>& cells) {
  std::vector<Cell> best;
  std::vector<Cell> cur = cells;
  for (int refl = 0; refl < 2; ++refl) {
    for (int rot = 0; rot < 6; ++rot) {
      auto norm = normalized(cur);
      if (best.empty() || norm < best) best = norm;
      for (Cell& c : cur) c = rot60(c);
    }
    for (Cell& c : cur) c = reflect(c);
  }
  return best;
}

long long animal_edge_boundary(const std::vector<Cell>& cells) {
  std::set<Cell> in(cells.begin(), cells.end());
  long long inside = 0;
  for (const Cell& c : cells)
    for (const Cell& d : kDirs)
      if (in.count({c.q + d.q, c.r + d.r})) ++inside;
  return 6 * static_cast<long long>(cells.size()) - inside;
}

std::string witness_string(const std::vector<Cell>& cells) {
  std::ostringstream os;
  for (size_t i = 0; i < cells.size(); ++i)
    os << (i ? ";" : "") << cells[i].q << "," << cells[i].r;
  return os.str();
}

// Coordinates for a triangular-lattice patch: start at a deepest vertex and
// propagate through the degree-6 fans.  Fails if the patch is not locally
// lattice-like, which is exactly when the verification should fail.
std::map<Cell, Vertex> lattice_coordinates(const DiscTriangulation& patch) {
  auto dist = distances_from_boundary(patch);
  Vertex center = 0;
  for (Vertex v = 0; v < patch.vertex_count(); ++v)
    if (dist[static_cast<size_t>(v)] > dist[static_cast<size_t>(center)])
      center = v;

  std::vector<char> placed(static_cast<size_t>(patch.vertex_count()), 0);
  std::vector<Cell> coord(static_cast<size_t>(patch.vertex_count()));
  coord[static_cast<size_t>(center)] = {0, 0};
  placed[static_cast<size_t>(center)] = 1;

  // Queue of internal vertices whose fan can be laid out: we know their
  // coordinate and the coordinate of at least one neighbor.
  std::queue<Vertex> q;
  q.push(center);
  // Seed: center's first neighbor gets direction 0.
  {
    Vertex w = patch.neighbors(center)[0];
    coord[static_cast<size_t>(w)] = {kDirs[0].q, kDirs[0].r};
    placed[static_cast<size_t>(w)] = 1;
    q.push(w);
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    if (patch.is_boundary(v)) continue;
    const auto& rot = patch.rotations()[static_cast<size_t>(v)];
    if (rot.size() != 6)
      throw InputError("patch is not a triangular-lattice ball");
    int known = -1;
    for (size_t i = 0; i < 6; ++i)
      if (placed[static_cast<size_t>(rot[i])]) known = static_cast<int>(i);
    if (known < 0) throw std::logic_error("lattice layout: no anchor");
    // Direction of the known neighbor; successive rotation entries advance
    // by +60 degrees.
    Cell base = {coord[static_cast<size_t>(rot[static_cast<size_t>(known)])].q -
                     coord[static_cast<size_t>(v)].q,
                 coord[static_cast<size_t>(rot[static_cast<size_t>(known)])].r -
                     coord[static_cast<size_t>(v)].r};
    int dir0 = -1;
    for (int d = 0; d < 6; ++d)
      if (kDirs[static_cast<size_t>(d)] == base) dir0 = d;
    if (dir0 < 0) throw InputError("patch is not a triangular-lattice ball");
    for (int i = 0; i < 6; ++i) {
      int d = (dir0 + i) % 6;
      Vertex w = rot[static_cast<size_t>((known + i) % 6)];
      Cell want = {coord[static_cast<size_t>(v)].q + kDirs[static_cast<size_t>(d)].q,
                   coord[static_cast<size_t>(v)].r + kDirs[static_cast<size_t>(d)].r};
      if (placed[static_cast<size_t>(w)]) {
        if (!(coord[static_cast<size_t>(w)] == want))
          throw InputError("patch is not a triangular-lattice ball");
      } else {
        coord[static_cast<size_t>(w)] = want;
        placed[static_cast<size_t>(w)] = 1;
        q.push(w);
      }
    }
  }
  std::map<Cell, Vertex> index;
  for (Vertex v = 0; v < patch.vertex_count(); ++v) {
    if (!placed[static_cast<size_t>(v)])
      throw InputError("patch is not connected through internal fans");
    index.emplace(coord[static_cast<size_t>(v)], v);
  }
  return index;
}

}  // namespace

AnimalTable min_boundary_by_volume(const DiscTriangulation& patch, int v_max) {
  if (v_max < 1) throw InputError("v_max must be >= 1");
  auto index = lattice_coordinates(patch);

  AnimalTable table;
  table.v_max = v_max;

  std::set<std::vector<Cell>> level = {{{0, 0}}};
  for (int volume = 1; volume <= v_max; ++volume) {
    long long best = -1;
    std::vector<Cell> best_witness;
    for (const auto& animal : level) {
      long long b = animal_edge_boundary(animal);
      if (best < 0 || b < best ||
          (b == best && animal < best_witness)) {
        best = b;
        best_witness = animal;
      }
    }

    // Verify the minimizer against the ambient patch, recentered on the
    // patch middle.
    {
      int qmax = 0, rmax = 0;
      for (const Cell& c : best_witness) {
        qmax = std::max(qmax, c.q);
        rmax = std::max(rmax, c.r);
      }
      std::vector<Vertex> subset;
      for (const Cell& c : best_witness) {
        auto it = index.find({c.q - qmax / 2, c.r - rmax / 2});
        if (it == index.end())
          throw InputError("patch too small for witness of volume " +
                           std::to_string(volume));
        subset.push_back(it->second);
      }
      long long via_patch = edge_boundary(patch, subset, 2);
      if (via_patch != best)
        throw std::logic_error("animal boundary disagrees with the patch");
    }

    AnimalRow row;
    row.volume = volume;
    row.min_boundary = best;
    row.witness = witness_string(best_witness);
    row.animal_classes = static_cast<long long>(level.size());
    table.rows.push_back(std::move(row));
    table.bound_checks.push_back(check_edge_bound(volume, best));

    if (volume == v_max) break;
    std::set<std::vector<Cell>> next;
    for (const auto& animal : level) {
      std::set<Cell> in(animal.begin(), animal.end());
      for (const Cell& c : animal) {
        for (const Cell& d : kDirs) {
          Cell grown{c.q + d.q, c.r + d.r};
          if (in.count(grown)) continue;
          std::vector<Cell> bigger = animal;
          bigger.push_back(grown);
          next.insert(canonical_animal(bigger));
        }
      }
    }
    level = std::move(next);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Coverage and isoperimetric profile

Ratio Ratio::of(long long num, long long den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string Ratio::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

IsoProfile coverage_and_profile(const DiscTriangulation& t, int radius,
                                ProfileFamily family, int size_limit) {
  if (radius < 1) throw InputError("coverage radius must be >= 1");
  IsoProfile out;
  out.radius = radius;
  out.family = family;
  out.family_size_limit = size_limit;

  auto depth = distances_from_boundary(t);
  std::vector<Vertex> deep;  // interior test centers: depth > radius
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    if (depth[static_cast<size_t>(v)] > radius) deep.push_back(v);
  if (deep.empty())
    throw InputError("no interior vertex at depth > " +
                     std::to_string(radius));

  auto ball_of = [&t](Vertex center, int r) {
    std::vector<Vertex> ball;
    std::map<Vertex, int> d;
    std::queue<Vertex> q;
    d[center] = 0;
    q.push(center);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      ball.push_back(u);
      if (d[u] == r) continue;
      for (Vertex w : t.neighbors(u))
        if (!d.count(w)) {
          d[w] = d[u] + 1;
          q.push(w);
        }
    }
    std::sort(ball.begin(), ball.end());
    return ball;
  };

  bool have_ratio = false;
  auto consider = [&](const std::vector<Vertex>& subset) {
    long long b = edge_boundary(t, subset, 1);
    Ratio r = Ratio::of(b, static_cast<long long>(subset.size()));
    ++out.subsets_scanned;
    if (!have_ratio || r < out.min_ratio) {
      out.min_ratio = r;
      out.argmin = subset;
      have_ratio = true;
    }
  };

  for (Vertex v : deep) {
    auto ball = ball_of(v, radius);
    ++out.balls_scanned;
    bool covered = false;
    for (Vertex w : ball)
      if (t.degree(w) >= out.degree_threshold) covered = true;
    out.coverage = out.coverage && covered;
    if (family == ProfileFamily::kBalls) consider(ball);
  }

  if (family == ProfileFamily::kConnectedSets) {
    if (size_limit < 1) throw InputError("size limit must be >= 1 for sets");
    // All connected subsets of interior vertices (depth >= 1) up to the
    // size limit, deduplicated by sorted id list.
    std::set<std::vector<Vertex>> level;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
      if (depth[static_cast<size_t>(v)] >= 1) level.insert({v});
    for (int size = 1; size <= size_limit && !level.empty(); ++size) {
      for (const auto& subset : level) consider(subset);
      std::set<std::vector<Vertex>> next;
      for (const auto& subset : level) {
        std::set<Vertex> in(subset.begin(), subset.end());
        for (Vertex v : subset)
          for (Vertex w : t.neighbors(v)) {
            if (in.count(w) || depth[static_cast<size_t>(w)] < 1) continue;
            std::vector<Vertex> bigger = subset;
            bigger.push_back(w);
            std::sort(bigger.begin(), bigger.end());
            next.insert(std::move(bigger));
          }
      }
      level = std::move(next);
    }
  }
  return out;
}

}  // namespace disciso
