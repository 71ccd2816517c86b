#include "disciso/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "disciso/bounds.hpp"

namespace disciso {

namespace {

std::uint64_t ekey(Vertex a, Vertex b) {
  Vertex lo = std::min(a, b), hi = std::max(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lo)) << 32) |
         static_cast<std::uint32_t>(hi);
}

// Partial triangulation: placed faces plus the still-unfilled pocket
// cycles.  Pocket cycles keep the unfilled region on their left; the next
// triangle is always placed on the first pocket's edge (cycle[0], cycle[1]).
struct State {
  int v_count = 0;
  std::vector<std::array<Vertex, 3>> faces;        // counterclockwise
  std::unordered_set<std::uint64_t> edges;
  std::vector<int> degree;
  std::vector<int> pocket_count;                   // pockets containing v
  std::vector<std::vector<Vertex>> pockets;        // processed LIFO
};

struct Accumulator {
  std::set<std::string> codes;
  long long labeled = 0;
  long long cap_pruned = 0;
};

class Searcher {
 public:
  Searcher(const EnumSpec& spec, long long cap) : spec_(spec), cap_(cap) {}

  State initial() const {
    const int n = spec_.n;
    State s;
    s.v_count = n;
    s.degree.assign(static_cast<size_t>(n), 2);
    s.pocket_count.assign(static_cast<size_t>(n), 1);
    std::vector<Vertex> cycle(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      cycle[static_cast<size_t>(i)] = i;
      s.edges.insert(ekey(i, (i + 1) % n));
    }
    s.pockets.push_back(std::move(cycle));
    return s;
  }

  void dfs(const State& s, Accumulator& acc) const {
    if (s.pockets.empty()) {
      emit(s, acc);
      return;
    }
    expand(s, [this, &acc](const State& child) { dfs(child, acc); }, acc);
  }

  // Applies every legal branch of the deterministic root edge to visit().
  template <typename Visit>
  void expand(const State& s, Visit visit, Accumulator& acc) const {
    const std::vector<Vertex>& cycle = s.pockets.back();
    const int L = static_cast<int>(cycle.size());
    const Vertex u = cycle[0];
    const Vertex w = cycle[1];

    // Existing apex at cycle position j.
    for (int j = 2; j < L; ++j) {
      Vertex x = cycle[static_cast<size_t>(j)];
      bool right_pocket_edge = j == 2;       // (w, x) on the cycle
      bool left_pocket_edge = j == L - 1;    // (x, u) on the cycle
      if (!right_pocket_edge && s.edges.count(ekey(w, x))) continue;
      if (!left_pocket_edge && s.edges.count(ekey(x, u))) continue;

      State c = s;
      c.pockets.pop_back();
      c.faces.push_back({u, w, x});
      if (!right_pocket_edge) {
        c.edges.insert(ekey(w, x));
        ++c.degree[static_cast<size_t>(w)];
        ++c.degree[static_cast<size_t>(x)];
      }
      if (!left_pocket_edge) {
        c.edges.insert(ekey(x, u));
        ++c.degree[static_cast<size_t>(x)];
        ++c.degree[static_cast<size_t>(u)];
      }
      for (Vertex v : cycle) --c.pocket_count[static_cast<size_t>(v)];

      // Sub-pockets [x, ..., c_{L-1}, u] and [w, c2, ..., x]; length-2
      // leftovers are fully triangulated and vanish.  All membership counts
      // are settled before any feasibility check reads them.
      const size_t first_new = c.pockets.size();
      if (j <= L - 2) {
        std::vector<Vertex> left;
        left.reserve(static_cast<size_t>(L - j + 1));
        for (int i = j; i < L; ++i)
          left.push_back(cycle[static_cast<size_t>(i)]);
        left.push_back(u);
        for (Vertex v : left) ++c.pocket_count[static_cast<size_t>(v)];
        c.pockets.push_back(std::move(left));
      }
      if (j >= 3) {
        std::vector<Vertex> right;
        right.reserve(static_cast<size_t>(j));
        for (int i = 1; i <= j; ++i)
          right.push_back(cycle[static_cast<size_t>(i)]);
        for (Vertex v : right) ++c.pocket_count[static_cast<size_t>(v)];
        c.pockets.push_back(std::move(right));
      }

      bool ok = true;
      for (size_t p = first_new; p < c.pockets.size() && ok; ++p)
        ok = pocket_feasible(c, c.pockets[p]);
      if (ok) ok = global_feasible(c);
      if (ok)
        for (Vertex v : cycle)
          if (c.pocket_count[static_cast<size_t>(v)] == 0 &&
              !finalized_ok(c, v)) {
            ok = false;
            break;
          }
      if (ok) visit(c);
    }

    // Fresh internal apex.
    {
      State c = s;
      Vertex v = static_cast<Vertex>(c.v_count);
      // Feasibility before the cap: a branch that no filling can complete
      // is dropped silently, not charged to the cap.
      bool feasible = true;
      if (spec_.delta_min >= 6) {
        // The new pocket gains v with deficit delta_min - 2.
        long long sum = spec_.delta_min - 2;
        for (Vertex t : cycle) {
          if (s.pocket_count[static_cast<size_t>(t)] != 1) continue;
          long long gain = (t == u || t == w) ? 1 : 0;
          sum += deficit(s.degree[static_cast<size_t>(t)] + gain, t);
        }
        feasible = sum <= 2 * (L + 1) - 6;
      }
      if (feasible) {
        if (c.v_count + 1 > cap_) {
          ++acc.cap_pruned;
        } else {
          ++c.v_count;
          c.degree.push_back(2);
          c.pocket_count.push_back(1);
          c.edges.insert(ekey(u, v));
          c.edges.insert(ekey(v, w));
          ++c.degree[static_cast<size_t>(u)];
          ++c.degree[static_cast<size_t>(w)];
          c.faces.push_back({u, w, v});
          std::vector<Vertex> grown;
          grown.reserve(static_cast<size_t>(L + 1));
          grown.push_back(u);
          grown.push_back(v);
          for (int i = 1; i < L; ++i)
            grown.push_back(cycle[static_cast<size_t>(i)]);
          c.pockets.pop_back();
          c.pockets.push_back(std::move(grown));
          if (pocket_feasible(c, c.pockets.back()) && global_feasible(c))
            visit(c);
        }
      }
    }
  }

  void emit(const State& s, Accumulator& acc) const {
    DiscTriangulation t = reconstruct(s);
    auto profile = t.degree_profile();
    if (profile.internal_vertex_count > 0 &&
        profile.min_internal_degree < spec_.delta_min)
      throw std::logic_error("enumerate: degree pruning missed an instance");
    ++acc.labeled;
    acc.codes.insert(canonical_code(t));
  }

  DiscTriangulation reconstruct(const State& s) const {
    const int V = s.v_count;
    // succ[v]: w -> next neighbor after w in the rotation at v.
    std::vector<std::unordered_map<Vertex, Vertex>> succ(
        static_cast<size_t>(V));
    std::vector<std::unordered_set<Vertex>> has_pred(static_cast<size_t>(V));
    std::vector<std::vector<Vertex>> nbrs(static_cast<size_t>(V));
    auto link = [&](Vertex at, Vertex from, Vertex to) {
      if (!succ[static_cast<size_t>(at)].emplace(from, to).second)
        throw std::logic_error("enumerate: conflicting face corners");
      has_pred[static_cast<size_t>(at)].insert(to);
    };
    for (const auto& f : s.faces) {
      link(f[0], f[1], f[2]);
      link(f[1], f[2], f[0]);
      link(f[2], f[0], f[1]);
    }
    for (std::uint64_t key : s.edges) {
      Vertex a = static_cast<Vertex>(key >> 32);
      Vertex b = static_cast<Vertex>(key & 0xffffffffu);
      nbrs[static_cast<size_t>(a)].push_back(b);
      nbrs[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<std::vector<Vertex>> rot(static_cast<size_t>(V));
    for (Vertex v = 0; v < V; ++v) {
      auto& nb = nbrs[static_cast<size_t>(v)];
      std::sort(nb.begin(), nb.end());
      Vertex start = -1;
      for (Vertex w : nb)
        if (!has_pred[static_cast<size_t>(v)].count(w)) {
          start = w;
          break;
        }
      if (start == -1) start = nb[0];  // internal vertex, full cycle
      Vertex cur = start;
      auto& out = rot[static_cast<size_t>(v)];
      for (size_t k = 0; k < nb.size(); ++k) {
        out.push_back(cur);
        auto it = succ[static_cast<size_t>(v)].find(cur);
        if (it == succ[static_cast<size_t>(v)].end()) {
          if (k + 1 != nb.size())
            throw std::logic_error("enumerate: broken rotation chain");
          break;
        }
        cur = it->second;
      }
      if (out.size() != nb.size())
        throw std::logic_error("enumerate: rotation size mismatch");
    }
    std::vector<Vertex> boundary(static_cast<size_t>(spec_.n));
    for (int i = 0; i < spec_.n; ++i) boundary[static_cast<size_t>(i)] = i;
    return DiscTriangulation::validate(std::move(rot), std::move(boundary));
  }

 private:
  long long deficit(int current_degree, Vertex v) const {
    if (v < spec_.n) return 0;  // original boundary vertex: unconstrained
    return std::max(0, spec_.delta_min - current_degree);
  }

  // Euler-based necessary condition for a pocket to admit any filling when
  // all fresh interior degrees must reach delta_min >= 6: the degree gains
  // available to the cycle satisfy sum(gains) <= 2L - 6, and gains must
  // cover the deficits of vertices exclusive to this pocket.
  bool pocket_feasible(const State& s, const std::vector<Vertex>& cycle) const {
    if (spec_.delta_min < 6) return true;
    long long sum = 0;
    for (Vertex v : cycle) {
      if (s.pocket_count[static_cast<size_t>(v)] != 1) continue;
      sum += deficit(s.degree[static_cast<size_t>(v)], v);
    }
    return sum <= 2 * static_cast<long long>(cycle.size()) - 6;
  }

  // Same bound aggregated over all pockets, deficits counted once per
  // vertex (cut vertices may be fed from any pocket they lie on).
  bool global_feasible(const State& s) const {
    if (spec_.delta_min < 6) return true;
    long long budget = 0;
    for (const auto& p : s.pockets)
      budget += 2 * static_cast<long long>(p.size()) - 6;
    long long need = 0;
    for (Vertex v = 0; v < s.v_count; ++v)
      if (s.pocket_count[static_cast<size_t>(v)] > 0)
        need += deficit(s.degree[static_cast<size_t>(v)], v);
    return need <= budget;
  }

  bool finalized_ok(const State& s, Vertex v) const {
    if (v < spec_.n) return true;
    return s.degree[static_cast<size_t>(v)] >= spec_.delta_min;
  }

  EnumSpec spec_;
  long long cap_;
};

}  // namespace

EnumResult enumerate_triangulations(const EnumSpec& spec) {
  if (spec.n < 3) throw InputError("enumeration needs n >= 3");
  if (spec.delta_min < 1) throw InputError("delta_min must be >= 1");
  const long long cap =
      spec.vertex_cap > 0 ? spec.vertex_cap : weil_bound(spec.n) + 2;
  if (cap < spec.n) throw InputError("vertex cap below n");

  Searcher searcher(spec, cap);
  const int threads = std::max(1, spec.threads);

  Accumulator root_acc;
  std::vector<State> frontier{searcher.initial()};

  // Grow a frontier of independent subtrees, emitting any completions found
  // on the way, then process subtrees in parallel.  The merge is a set
  // union, so the result does not depend on the schedule.
  const size_t target = static_cast<size_t>(threads) * 16;
  while (threads > 1 && frontier.size() < target) {
    std::vector<State> next;
    bool grew = false;
    for (const State& s : frontier) {
      if (s.pockets.empty()) {
        searcher.emit(s, root_acc);
        continue;
      }
      searcher.expand(
          s, [&next](const State& child) { next.push_back(child); },
          root_acc);
      grew = true;
    }
    frontier = std::move(next);
    if (!grew) break;
  }

  std::vector<Accumulator> accs(static_cast<size_t>(threads));
  if (threads == 1) {
    for (const State& s : frontier) searcher.dfs(s, accs[0]);
  } else {
    std::atomic<size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (;;) {
          size_t i = cursor.fetch_add(1);
          if (i >= frontier.size()) break;
          searcher.dfs(frontier[i], accs[static_cast<size_t>(t)]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  EnumResult out;
  out.spec = spec;
  out.cap = cap;
  out.labeled_count = root_acc.labeled;
  out.cap_pruned = root_acc.cap_pruned;
  std::set<std::string> all = std::move(root_acc.codes);
  for (auto& a : accs) {
    out.labeled_count += a.labeled;
    out.cap_pruned += a.cap_pruned;
    all.insert(a.codes.begin(), a.codes.end());
  }
  out.class_count = static_cast<long long>(all.size());
  for (const auto& code : all) {
    long long v = std::stoll(code.substr(0, code.find(' ')));
    out.max_v = std::max(out.max_v, v);
  }
  for (const auto& code : all) {
    long long v = std::stoll(code.substr(0, code.find(' ')));
    if (v == out.max_v) out.extremal_codes.push_back(code);
  }
  if (spec.collect) out.codes.assign(all.begin(), all.end());
  out.cap_hit = out.cap_pruned > 0 && out.max_v >= cap - 1;
  return out;
}

MaxVolumeResult max_volume(int n, int delta_min, int escalation_limit,
                           int threads) {
  MaxVolumeResult r;
  r.n = n;
  r.delta_min = delta_min;
  long long cap = weil_bound(n) + 2;
  for (int round = 0; round <= escalation_limit; ++round) {
    EnumSpec spec;
    spec.n = n;
    spec.delta_min = delta_min;
    spec.vertex_cap = cap;
    spec.collect = false;
    spec.threads = threads;
    EnumResult e = enumerate_triangulations(spec);
    r.cap_history.push_back(cap);
    r.max_v = e.max_v;
    r.class_count = e.class_count;
    r.extremal_codes = e.extremal_codes;
    if (!e.cap_hit) {
      r.decided = true;
      return r;
    }
    cap += 2;
  }
  r.decided = false;
  return r;
}

}  // namespace disciso
