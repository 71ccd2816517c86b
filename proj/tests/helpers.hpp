#pragma once

// Shared test fixtures and independent oracles.  Everything here is
// deliberately written without reusing the library's traversal machinery so
// the checks stay independent of the code paths under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "disciso/planar_map.hpp"

namespace disciso::testing {

// Single triangle, boundary 0,1,2 counterclockwise.
inline DiscTriangulation triangle() {
  return DiscTriangulation::validate({{1, 2}, {2, 0}, {0, 1}},
                                     {0, 1, 2});
}

// Square 0,1,2,3 with diagonal 0-2 (a fan from 0).
inline DiscTriangulation square_fan() {
  return DiscTriangulation::validate(
      {{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}}, {0, 1, 2, 3});
}

// Fan triangulation of an n-gon: all diagonals from vertex 0.
inline DiscTriangulation fan(int n) {
  std::vector<std::vector<Vertex>> rot(static_cast<size_t>(n));
  std::vector<Vertex> bnd(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) bnd[static_cast<size_t>(i)] = i;
  for (int i = 1; i <= n - 1; ++i) rot[0].push_back(i);
  rot[1] = {2, 0};
  rot[static_cast<size_t>(n - 1)] = {0, n - 2};
  for (int i = 2; i <= n - 2; ++i)
    rot[static_cast<size_t>(i)] = {i + 1, 0, i - 1};
  return DiscTriangulation::validate(std::move(rot), std::move(bnd));
}

// Side-1 hexagon: center 6 with ring 0..5.
inline DiscTriangulation hexagon1() {
  std::vector<std::vector<Vertex>> rot(7);
  for (int i = 0; i < 6; ++i) {
    int prev = (i + 5) % 6, next = (i + 1) % 6;
    rot[static_cast<size_t>(i)] = {prev, next, 6};
  }
  rot[6] = {0, 1, 2, 3, 4, 5};
  return DiscTriangulation::validate(std::move(rot), {0, 1, 2, 3, 4, 5});
}

// Brute-force boundary-respecting isomorphism: tries all 2n rooted
// alignments of the boundary cycles and propagates over rotations.
inline bool aligned_isomorphic(const DiscTriangulation& a,
                               const DiscTriangulation& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (a.boundary_length() != b.boundary_length()) return false;
  const int V = a.vertex_count();
  const int n = a.boundary_length();
  if (V == 1) return true;

  for (int dir : {+1, -1}) {
    for (int off = 0; off < n; ++off) {
      std::vector<Vertex> map_ab(static_cast<size_t>(V), -1);
      std::vector<Vertex> map_ba(static_cast<size_t>(V), -1);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        Vertex va = a.boundary()[static_cast<size_t>(i)];
        Vertex vb =
            b.boundary()[static_cast<size_t>(((off + dir * i) % n + n) % n)];
        if (map_ab[static_cast<size_t>(va)] != -1 ||
            map_ba[static_cast<size_t>(vb)] != -1)
          ok = false;
        else {
          map_ab[static_cast<size_t>(va)] = vb;
          map_ba[static_cast<size_t>(vb)] = va;
        }
      }
      if (!ok) continue;
      // Propagate: repeatedly, for every mapped vertex with a mapped
      // neighbor, align rotations around the pair.
      std::vector<Vertex> stack;
      for (int i = 0; i < n; ++i)
        stack.push_back(a.boundary()[static_cast<size_t>(i)]);
      while (!stack.empty() && ok) {
        Vertex va = stack.back();
        stack.pop_back();
        Vertex vb = map_ab[static_cast<size_t>(va)];
        const auto& ra = a.neighbors(va);
        const auto& rb = b.neighbors(vb);
        if (ra.size() != rb.size()) {
          ok = false;
          break;
        }
        if (ra.empty()) continue;
        // Find one mapped neighbor to anchor the rotation alignment.
        int ia = -1, ib = -1;
        for (size_t k = 0; k < ra.size() && ia < 0; ++k) {
          Vertex wa = ra[k];
          Vertex wb = map_ab[static_cast<size_t>(wa)];
          if (wb == -1) continue;
          for (size_t l = 0; l < rb.size(); ++l)
            if (rb[l] == wb) {
              ia = static_cast<int>(k);
              ib = static_cast<int>(l);
              break;
            }
          if (ia >= 0 && ib < 0) ok = false;
        }
        if (!ok) break;
        if (ia < 0) continue;  // no mapped neighbor yet; boundary seeds cover connectivity
        const int deg = static_cast<int>(ra.size());
        for (int k = 0; k < deg && ok; ++k) {
          Vertex wa = ra[static_cast<size_t>((ia + k) % deg)];
          Vertex wb =
              rb[static_cast<size_t>(((ib + dir * k) % deg + deg) % deg)];
          Vertex cur = map_ab[static_cast<size_t>(wa)];
          if (cur == -1) {
            if (map_ba[static_cast<size_t>(wb)] != -1) {
              ok = false;
              break;
            }
            map_ab[static_cast<size_t>(wa)] = wb;
            map_ba[static_cast<size_t>(wb)] = wa;
            stack.push_back(wa);
          } else if (cur != wb) {
            ok = false;
          }
        }
      }
      if (!ok) continue;
      // Full check: every vertex mapped and all rotations consistent.
      bool all = true;
      for (Vertex v = 0; v < V && all; ++v)
        if (map_ab[static_cast<size_t>(v)] == -1) all = false;
      if (!all) continue;
      bool consistent = true;
      for (Vertex va = 0; va < V && consistent; ++va) {
        Vertex vb = map_ab[static_cast<size_t>(va)];
        const auto& ra = a.neighbors(va);
        const auto& rb = b.neighbors(vb);
        if (ra.size() != rb.size()) {
          consistent = false;
          break;
        }
        if (ra.empty()) continue;
        Vertex w0 = map_ab[static_cast<size_t>(ra[0])];
        int ib = -1;
        for (size_t l = 0; l < rb.size(); ++l)
          if (rb[l] == w0) ib = static_cast<int>(l);
        if (ib < 0) {
          consistent = false;
          break;
        }
        const int deg = static_cast<int>(ra.size());
        for (int k = 0; k < deg; ++k) {
          Vertex wa = ra[static_cast<size_t>(k)];
          Vertex wb =
              rb[static_cast<size_t>(((ib + dir * k) % deg + deg) % deg)];
          if (map_ab[static_cast<size_t>(wa)] != wb) {
            consistent = false;
            break;
          }
        }
      }
      if (consistent) return true;
    }
  }
  return false;
}

inline std::vector<Vertex> random_permutation(int v_count, unsigned seed) {
  std::vector<Vertex> perm(static_cast<size_t>(v_count));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace disciso::testing
