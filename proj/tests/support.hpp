#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tilegap.hpp"

namespace tilegap::testing {

// The five-vertex example: 1->2, 1->4, 4->3, 3->2, 2->5, 3->5, s=1, t=5.
inline Digraph g5() {
  return Digraph(5, {{0, 1}, {0, 3}, {3, 2}, {2, 1}, {1, 4}, {2, 4}}, 0, 4);
}

inline Digraph without_edge(const Digraph& g, int u, int v) {
  std::vector<std::pair<int, int>> e;
  for (auto x : g.edges()) {
    if (x != std::make_pair(u, v)) e.push_back(x);
  }
  return Digraph(g.vertex_count(), e, g.source(), g.sink());
}

// Unsigned G5 board that picks two paths: e32 v2 e25 e35(turned) _ v1 e14 v4
// e43 v3 _ e12. Tile ids: vertex v -> v, edges 6..11 in edge order, bridge 12.
inline Tiling two_path_tiling() {
  Tiling t = Tiling::empty(1, 12);
  auto put = [&](int slot, int id, int r) { t.slots[static_cast<std::size_t>(slot)] = Placement{id, r}; };
  put(0, 9, 0);   // e32
  put(1, 2, 0);   // v2
  put(2, 10, 0);  // e25
  put(3, 11, 2);  // e35
  put(5, 1, 0);   // v1
  put(6, 7, 0);   // e14
  put(7, 4, 0);   // v4
  put(8, 8, 0);   // e43
  put(9, 3, 0);   // v3
  put(11, 6, 0);  // e12
  return t;
}

inline Tile plain(int id, const std::string& l, const std::string& t, const std::string& r,
                  const std::string& b) {
  return make_tile(id, EdgeLabel::plain(l), EdgeLabel::plain(t), EdgeLabel::plain(r),
                   EdgeLabel::plain(b));
}

inline PuzzleInstance row(std::vector<Tile> tiles, Mode m = Mode::Unsigned) {
  int n = static_cast<int>(tiles.size());
  return PuzzleInstance(m, 1, n, std::move(tiles));
}

// Every full zero-violation 1 x n tiling, by DFS over slots.
inline void for_each_full_tiling(const PuzzleInstance& p, const std::function<void(const Tiling&)>& fn) {
  const int n = p.size();
  Tiling t = Tiling::empty(1, n);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int slot) {
    if (slot == n) {
      fn(t);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      for (int r = 0; r < 4; ++r) {
        if (slot > 0) {
          const auto& prev = *t.slots[static_cast<std::size_t>(slot - 1)];
          if (!compatible(p.by_id(prev.tile_id).at(prev.rotation, kRight), p.tile(i).at(r, kLeft),
                          p.mode())) {
            continue;
          }
        }
        used[static_cast<std::size_t>(i)] = 1;
        t.slots[static_cast<std::size_t>(slot)] = Placement{p.tile(i).id, r};
        rec(slot + 1);
        used[static_cast<std::size_t>(i)] = 0;
      }
    }
    t.slots[static_cast<std::size_t>(slot)].reset();
  };
  rec(0);
}

// Random full tiling: every tile, shuffled, random rotations.
inline Tiling random_full_tiling(const PuzzleInstance& p, Rng& rng) {
  std::vector<int> ids;
  for (const auto& t : p.tiles()) ids.push_back(t.id);
  std::shuffle(ids.begin(), ids.end(), rng);
  Tiling t = Tiling::empty(1, p.size());
  std::uniform_int_distribution<int> rot(0, 3);
  for (std::size_t k = 0; k < ids.size(); ++k) t.slots[k] = Placement{ids[k], rot(rng)};
  return t;
}

// Exhaustive maximum matching size by recursion over the lowest free node.
inline int brute_force_matching(const UndirectedGraph& g) {
  std::vector<char> used(static_cast<std::size_t>(g.n), 0);
  std::function<int(int)> rec = [&](int v) -> int {
    while (v < g.n && used[static_cast<std::size_t>(v)]) ++v;
    if (v >= g.n) return 0;
    used[static_cast<std::size_t>(v)] = 1;
    int best = rec(v + 1);
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      best = std::max(best, 1 + rec(v + 1));
      used[static_cast<std::size_t>(w)] = 0;
    }
    used[static_cast<std::size_t>(v)] = 0;
    return best;
  };
  return rec(0);
}

// Full rows with rotation 0 only, over all tile orders.
inline bool no_rotation_brute_force(const PuzzleInstance& p) {
  std::vector<int> idx(static_cast<std::size_t>(p.size()));
  std::iota(idx.begin(), idx.end(), 0);
  do {
    bool ok = true;
    for (std::size_t k = 1; k < idx.size() && ok; ++k) {
      ok = compatible(p.tile(idx[k - 1]).right(), p.tile(idx[k]).left(), p.mode());
    }
    if (ok) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

}  // namespace tilegap::testing
