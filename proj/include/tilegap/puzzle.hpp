#pragma once

// Verification, exact small-n solvers and approximation algorithms for 1 x n
// edge-matching puzzles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tilegap/core.hpp"
#include "tilegap/matching.hpp"

namespace tilegap {

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct Violation {
  int slot_a = 0;  // left or upper slot
  int slot_b = 0;  // right or lower slot
  EdgeLabel label_a;
  EdgeLabel label_b;
};

struct VerifyReport {
  int placed_count = 0;
  int matched_edges = 0;
  std::vector<Violation> violations;
  std::vector<int> duplicate_ids;
  std::vector<int> unknown_ids;

  bool ids_ok() const { return duplicate_ids.empty() && unknown_ids.empty(); }
  bool ok() const { return ids_ok() && violations.empty(); }
  std::string summary() const {
    return "placed=" + std::to_string(placed_count) +
           " matched=" + std::to_string(matched_edges) +
           " violations=" + std::to_string(violations.size());
  }
};

// Checks every horizontal and vertical adjacency of nonblank slots. With
// strict=true any violation or bad tile id throws invalid_witness.
inline VerifyReport verify_tiling(const PuzzleInstance& inst, const Tiling& t,
                                  bool strict = false) {
  if (t.height != inst.height() || t.width != inst.width() ||
      t.slots.size() != static_cast<std::size_t>(inst.size())) {
    throw Error(ErrorKind::invalid_witness,
                "tiling shape " + std::to_string(t.height) + "x" +
                    std::to_string(t.width) + " does not fit the board");
  }
  VerifyReport rep;
  std::vector<const Tile*> at(t.slots.size(), nullptr);
  std::map<int, int> seen;
  for (std::size_t k = 0; k < t.slots.size(); ++k) {
    const auto& s = t.slots[k];
    if (!s) continue;
    if (s->rotation < 0 || s->rotation > 3) {
      throw Error(ErrorKind::invalid_witness,
                  "slot " + std::to_string(k + 1) + ": rotation out of range");
    }
    ++rep.placed_count;
    if (seen[s->tile_id]++ == 1) rep.duplicate_ids.push_back(s->tile_id);
    int idx = inst.index_of(s->tile_id);
    if (idx < 0) {
      rep.unknown_ids.push_back(s->tile_id);
      continue;
    }
    at[k] = &inst.tile(idx);
  }
  auto check = [&](int a, int b, int side_a, int side_b) {
    const auto& pa = t.slots[static_cast<std::size_t>(a)];
    const auto& pb = t.slots[static_cast<std::size_t>(b)];
    const Tile* ta = at[static_cast<std::size_t>(a)];
    const Tile* tb = at[static_cast<std::size_t>(b)];
    if (!ta || !tb) return;
    const auto& la = ta->at(pa->rotation, side_a);
    const auto& lb = tb->at(pb->rotation, side_b);
    if (compatible(la, lb, inst.mode())) {
      ++rep.matched_edges;
    } else {
      rep.violations.push_back({a, b, la, lb});
    }
  };
  const int h = t.height, w = t.width;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      int k = r * w + c;
      if (c + 1 < w) check(k, k + 1, kRight, kLeft);
      if (r + 1 < h) check(k, k + w, kBottom, kTop);
    }
  }
  if (strict && !rep.ok()) {
    std::string msg = "tiling rejected: " + rep.summary();
    if (!rep.unknown_ids.empty()) {
      msg += ", unknown tile id " + std::to_string(rep.unknown_ids.front());
    }
    if (!rep.duplicate_ids.empty()) {
      msg += ", duplicate tile id " + std::to_string(rep.duplicate_ids.front());
    }
    throw Error(ErrorKind::invalid_witness, msg);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Label classes: every (tile, rotation) is reduced to the class ids of its
// left and right labels; compat(a, b) iff mate[a] == b.
// ---------------------------------------------------------------------------

namespace detail {

struct ChainModel {
  int n = 0;
  int classes = 0;
  std::vector<int> order;  // instance index per position, ascending tile id
  std::vector<std::array<int, 4>> left, right;  // per position, per rotation
  std::vector<int> mate;                        // -1 when absent

  explicit ChainModel(const PuzzleInstance& inst) {
    n = inst.size();
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return inst.tile(a).id < inst.tile(b).id;
    });
    std::map<std::pair<std::string, int>, int> ids;
    auto key = [](const EdgeLabel& l) {
      return std::make_pair(l.color, l.sign ? static_cast<int>(*l.sign) : -1);
    };
    auto intern = [&](const EdgeLabel& l) {
      auto [it, fresh] = ids.emplace(key(l), static_cast<int>(ids.size()));
      return it->second;
    };
    left.resize(static_cast<std::size_t>(n));
    right.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      const Tile& t = inst.tile(order[static_cast<std::size_t>(p)]);
      for (int r = 0; r < 4; ++r) {
        left[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)] =
            intern(t.at(r, kLeft));
        right[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)] =
            intern(t.at(r, kRight));
      }
    }
    classes = static_cast<int>(ids.size());
    mate.assign(static_cast<std::size_t>(classes), -1);
    for (const auto& [k, id] : ids) {
      auto m = k;
      if (m.second >= 0) m.second = 1 - m.second;
      auto it = ids.find(m);
      if (it != ids.end()) mate[static_cast<std::size_t>(id)] = it->second;
    }
  }

  int tile_id(const PuzzleInstance& inst, int p) const {
    return inst.tile(order[static_cast<std::size_t>(p)]).id;
  }
  int L(int p, int r) const {
    return left[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)];
  }
  int R(int p, int r) const {
    return right[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)];
  }
  bool fits(int prev_right, int p, int r) const {
    return mate[static_cast<std::size_t>(prev_right)] == L(p, r);
  }
};

inline void require_row(const PuzzleInstance& inst, const char* what) {
  if (inst.height() != 1) {
    throw Error(ErrorKind::precondition,
                std::string(what) + " supports 1 x n boards only");
  }
}

inline void require_limit(const PuzzleInstance& inst, int limit,
                          const char* what) {
  if (inst.size() > limit) {
    throw Error(ErrorKind::size_limit,
                std::string(what) + " limited to " + std::to_string(limit) +
                    " tiles, instance has " + std::to_string(inst.size()));
  }
}

}  // namespace detail

inline constexpr int kExactLimit = 20;

struct PuzzleSolution {
  int value = 0;
  Tiling tiling;
};

// ---------------------------------------------------------------------------
// Exact Max-Placement
//
// cost[M][c]: fewest slots for a zero-violation row holding exactly the tile
// set M whose leftmost tile shows label class c on its left. Prepending tile
// (i, r) to a nonempty M costs 1 + min(best[M] + 1, cost[M][mate[right]]),
// the first term paying for a separating blank. The optimum is the largest M
// with best[M] <= n.
// ---------------------------------------------------------------------------

inline PuzzleSolution solve_exact_max_placement(const PuzzleInstance& inst,
                                                int limit = kExactLimit) {
  detail::require_row(inst, "exact max-placement");
  detail::require_limit(inst, limit, "exact max-placement");
  const detail::ChainModel cm(inst);
  const int n = cm.n;
  const int K = cm.classes;
  const std::size_t masks = std::size_t{1} << n;
  constexpr std::uint8_t INF = 255;
  std::vector<std::uint8_t> cost(masks * static_cast<std::size_t>(K), INF);
  std::vector<std::uint8_t> best(masks, INF);
  best[0] = 0;

  auto cell = [&](std::size_t m, int c) -> std::uint8_t& {
    return cost[m * static_cast<std::size_t>(K) + static_cast<std::size_t>(c)];
  };
  // slots needed by the rest of the row after a tile with right class rc
  auto rest = [&](std::size_t m, int rc) -> int {
    if (m == 0) return 0;
    int extra = best[m] == INF ? INF : best[m] + 1;
    int mc = cm.mate[static_cast<std::size_t>(rc)];
    if (mc >= 0 && cell(m, mc) != INF) extra = std::min<int>(extra, cell(m, mc));
    return extra;
  };

  for (std::size_t m = 0; m < masks; ++m) {
    if (m != 0) {
      std::uint8_t b = INF;
      for (int c = 0; c < K; ++c) b = std::min(b, cell(m, c));
      best[m] = b;
    }
    if (best[m] == INF || best[m] >= n) continue;
    for (int p = 0; p < n; ++p) {
      if (m >> p & 1u) continue;
      std::size_t nm = m | (std::size_t{1} << p);
      for (int r = 0; r < 4; ++r) {
        int c = 1 + rest(m, cm.R(p, r));
        if (c > n) continue;
        auto& dst = cell(nm, cm.L(p, r));
        if (c < dst) dst = static_cast<std::uint8_t>(c);
      }
    }
  }

  std::size_t final_mask = 0;
  int value = 0;
  for (std::size_t m = 0; m < masks; ++m) {
    if (best[m] > n) continue;
    int pc = std::popcount(m);
    if (pc > value) {
      value = pc;
      final_mask = m;
    }
  }

  PuzzleSolution sol{value, Tiling::empty(1, n)};
  std::size_t remaining = final_mask;
  int budget = n;
  int slot = 0;
  int prev = -1;  // right class of the previous tile, -1 after a blank
  while (remaining) {
    int pick_p = -1, pick_r = -1;
    if (prev >= 0) {
      for (int p = 0; p < n && pick_p < 0; ++p) {
        if (!(remaining >> p & 1u)) continue;
        for (int r = 0; r < 4; ++r) {
          if (!cm.fits(prev, p, r)) continue;
          if (1 + rest(remaining & ~(std::size_t{1} << p), cm.R(p, r)) <= budget) {
            pick_p = p;
            pick_r = r;
            break;
          }
        }
      }
      if (pick_p < 0) {
        ++slot;
        --budget;
      }
    }
    if (pick_p < 0) {
      for (int p = 0; p < n && pick_p < 0; ++p) {
        if (!(remaining >> p & 1u)) continue;
        for (int r = 0; r < 4; ++r) {
          if (1 + rest(remaining & ~(std::size_t{1} << p), cm.R(p, r)) <= budget) {
            pick_p = p;
            pick_r = r;
            break;
          }
        }
      }
    }
    if (pick_p < 0) {
      throw Error(ErrorKind::internal, "max-placement reconstruction failed");
    }
    sol.tiling.slots[static_cast<std::size_t>(slot)] =
        Placement{cm.tile_id(inst, pick_p), pick_r};
    remaining &= ~(std::size_t{1} << pick_p);
    prev = cm.R(pick_p, pick_r);
    ++slot;
    --budget;
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Exact Max-Matched: the same subset recursion maximizing matched adjacencies
// over full rows.
// ---------------------------------------------------------------------------

inline PuzzleSolution solve_exact_max_matched(const PuzzleInstance& inst,
                                              int limit = kExactLimit) {
  detail::require_row(inst, "exact max-matched");
  detail::require_limit(inst, limit, "exact max-matched");
  const detail::ChainModel cm(inst);
  const int n = cm.n;
  const int K = cm.classes;
  const std::size_t masks = std::size_t{1} << n;
  constexpr std::int8_t NONE = -1;
  std::vector<std::int8_t> val(masks * static_cast<std::size_t>(K), NONE);
  std::vector<std::int8_t> bestv(masks, NONE);
  bestv[0] = 0;

  auto cell = [&](std::size_t m, int c) -> std::int8_t& {
    return val[m * static_cast<std::size_t>(K) + static_cast<std::size_t>(c)];
  };
  auto rest = [&](std::size_t m, int rc) -> int {
    if (m == 0) return 0;
    int v = bestv[m];
    int mc = cm.mate[static_cast<std::size_t>(rc)];
    if (mc >= 0 && cell(m, mc) != NONE) v = std::max(v, cell(m, mc) + 1);
    return v;
  };

  for (std::size_t m = 0; m < masks; ++m) {
    if (m != 0) {
      std::int8_t b = NONE;
      for (int c = 0; c < K; ++c) b = std::max(b, cell(m, c));
      bestv[m] = b;
    }
    for (int p = 0; p < n; ++p) {
      if (m >> p & 1u) continue;
      std::size_t nm = m | (std::size_t{1} << p);
      for (int r = 0; r < 4; ++r) {
        int v = rest(m, cm.R(p, r));
        auto& dst = cell(nm, cm.L(p, r));
        if (v > dst) dst = static_cast<std::int8_t>(v);
      }
    }
  }

  const std::size_t full = masks - 1;
  PuzzleSolution sol{bestv[full], Tiling::empty(1, n)};
  std::size_t remaining = full;
  int need = sol.value;
  int prev = -1;
  for (int slot = 0; slot < n; ++slot) {
    int pick_p = -1, pick_r = -1, gain = 0;
    for (int p = 0; p < n && pick_p < 0; ++p) {
      if (!(remaining >> p & 1u)) continue;
      for (int r = 0; r < 4; ++r) {
        int g = (prev >= 0 && cm.fits(prev, p, r)) ? 1 : 0;
        if (g + rest(remaining & ~(std::size_t{1} << p), cm.R(p, r)) >= need) {
          pick_p = p;
          pick_r = r;
          gain = g;
          break;
        }
      }
    }
    if (pick_p < 0) {
      throw Error(ErrorKind::internal, "max-matched reconstruction failed");
    }
    sol.tiling.slots[static_cast<std::size_t>(slot)] =
        Placement{cm.tile_id(inst, pick_p), pick_r};
    remaining &= ~(std::size_t{1} << pick_p);
    need -= gain;
    prev = cm.R(pick_p, pick_r);
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Brute-force oracles (small n): plain DFS over every slot choice.
// ---------------------------------------------------------------------------

inline constexpr int kBruteForceLimit = 8;

inline int brute_force_max_placement(const PuzzleInstance& inst,
                                     int limit = kBruteForceLimit) {
  detail::require_row(inst, "brute-force max-placement");
  detail::require_limit(inst, limit, "brute-force max-placement");
  const detail::ChainModel cm(inst);
  const int n = cm.n;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  int best = 0;
  auto rec = [&](auto&& self, int slot, int prev, int placed) -> void {
    best = std::max(best, placed);
    if (slot == n || placed + (n - slot) <= best) return;
    for (int p = 0; p < n; ++p) {
      if (used[static_cast<std::size_t>(p)]) continue;
      for (int r = 0; r < 4; ++r) {
        if (prev >= 0 && !cm.fits(prev, p, r)) continue;
        used[static_cast<std::size_t>(p)] = 1;
        self(self, slot + 1, cm.R(p, r), placed + 1);
        used[static_cast<std::size_t>(p)] = 0;
      }
    }
    self(self, slot + 1, -1, placed);
  };
  rec(rec, 0, -1, 0);
  return best;
}

inline int brute_force_max_matched(const PuzzleInstance& inst,
                                   int limit = kBruteForceLimit) {
  detail::require_row(inst, "brute-force max-matched");
  detail::require_limit(inst, limit, "brute-force max-matched");
  const detail::ChainModel cm(inst);
  const int n = cm.n;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  int best = 0;
  auto rec = [&](auto&& self, int slot, int prev, int matched) -> void {
    if (slot == n) {
      best = std::max(best, matched);
      return;
    }
    if (matched + (n - slot) - (slot == 0 ? 1 : 0) <= best) return;
    for (int p = 0; p < n; ++p) {
      if (used[static_cast<std::size_t>(p)]) continue;
      for (int r = 0; r < 4; ++r) {
        int g = (prev >= 0 && cm.fits(prev, p, r)) ? 1 : 0;
        used[static_cast<std::size_t>(p)] = 1;
        self(self, slot + 1, cm.R(p, r), matched + g);
        used[static_cast<std::size_t>(p)] = 0;
      }
    }
  };
  rec(rec, 0, -1, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Compatibility graph and the matching-based approximations
// ---------------------------------------------------------------------------

// Node k is instance tile k; an edge joins two tiles when any label of one is
// compatible with any label of the other.
inline UndirectedGraph build_compatibility_graph(const PuzzleInstance& inst) {
  UndirectedGraph g(inst.size());
  for (int a = 0; a < inst.size(); ++a) {
    for (int b = a + 1; b < inst.size(); ++b) {
      bool any = false;
      for (const auto& x : inst.tile(a).edges) {
        for (const auto& y : inst.tile(b).edges) {
          if (compatible(x, y, inst.mode())) {
            any = true;
            break;
          }
        }
        if (any) break;
      }
      if (any) g.add_edge(a, b);
    }
  }
  return g;
}

namespace detail {

struct OrientedPair {
  int first = 0, second = 0;  // instance indices, first has the lower id
  int r_first = 0, r_second = 0;
};

// Matched pairs ordered by their lower tile id, each oriented by the
// lexicographically smallest (r_first, r_second) that makes them match.
inline std::vector<OrientedPair> oriented_matching(const PuzzleInstance& inst,
                                                   std::vector<char>& matched) {
  auto pairs = max_cardinality_matching(build_compatibility_graph(inst));
  matched.assign(static_cast<std::size_t>(inst.size()), 0);
  std::vector<OrientedPair> out;
  for (auto [a, b] : pairs) {
    if (inst.tile(b).id < inst.tile(a).id) std::swap(a, b);
    OrientedPair op{a, b, -1, -1};
    for (int ra = 0; ra < 4 && op.r_first < 0; ++ra) {
      for (int rb = 0; rb < 4; ++rb) {
        if (compatible(inst.tile(a).at(ra, kRight), inst.tile(b).at(rb, kLeft),
                       inst.mode())) {
          op.r_first = ra;
          op.r_second = rb;
          break;
        }
      }
    }
    if (op.r_first < 0) {
      throw Error(ErrorKind::internal, "matched pair has no compatible side");
    }
    matched[static_cast<std::size_t>(a)] = matched[static_cast<std::size_t>(b)] = 1;
    out.push_back(op);
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return inst.tile(x.first).id < inst.tile(y.first).id;
  });
  return out;
}

inline std::vector<int> unmatched_by_id(const PuzzleInstance& inst,
                                        const std::vector<char>& matched) {
  std::vector<int> rest;
  for (int k = 0; k < inst.size(); ++k) {
    if (!matched[static_cast<std::size_t>(k)]) rest.push_back(k);
  }
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    return inst.tile(a).id < inst.tile(b).id;
  });
  return rest;
}

}  // namespace detail

// Tiles in ascending id order on every other slot, rotation 0.
inline Tiling approx_alternate(const PuzzleInstance& inst) {
  detail::require_row(inst, "approx_alternate");
  const int n = inst.size();
  std::vector<int> ids;
  for (const auto& t : inst.tiles()) ids.push_back(t.id);
  std::sort(ids.begin(), ids.end());
  Tiling out = Tiling::empty(1, n);
  for (int k = 0; 2 * k < n; ++k) {
    out.slots[static_cast<std::size_t>(2 * k)] =
        Placement{ids[static_cast<std::size_t>(k)], 0};
  }
  return out;
}

// Matched pairs first, then singletons, groups separated by one blank. When
// only one slot is left for a pair, its first tile goes there alone.
inline Tiling approx_matching_two_thirds(const PuzzleInstance& inst) {
  detail::require_row(inst, "approx_matching_two_thirds");
  const int n = inst.size();
  std::vector<char> matched;
  auto pairs = detail::oriented_matching(inst, matched);
  Tiling out = Tiling::empty(1, n);
  int slot = 0;
  auto put = [&](int idx, int r) {
    out.slots[static_cast<std::size_t>(slot++)] = Placement{inst.tile(idx).id, r};
  };
  for (const auto& p : pairs) {
    if (slot >= n) break;
    put(p.first, p.r_first);
    if (slot < n) put(p.second, p.r_second);
    ++slot;  // separator
  }
  for (int idx : detail::unmatched_by_id(inst, matched)) {
    if (slot >= n) break;
    put(idx, 0);
    ++slot;
  }
  return out;
}

// Full row: oriented matched pairs side by side, then the rest at rotation 0.
inline Tiling approx_matched_half(const PuzzleInstance& inst) {
  detail::require_row(inst, "approx_matched_half");
  std::vector<char> matched;
  auto pairs = detail::oriented_matching(inst, matched);
  Tiling out = Tiling::empty(1, inst.size());
  int slot = 0;
  auto put = [&](int idx, int r) {
    out.slots[static_cast<std::size_t>(slot++)] = Placement{inst.tile(idx).id, r};
  };
  for (const auto& p : pairs) {
    put(p.first, p.r_first);
    put(p.second, p.r_second);
  }
  for (int idx : detail::unmatched_by_id(inst, matched)) put(idx, 0);
  return out;
}

// ---------------------------------------------------------------------------
// No rotations: each tile is an arc from its left label to the mate of its
// right label, and a full row is an Eulerian trail (Hierholzer).
// ---------------------------------------------------------------------------

inline std::optional<Tiling> solve_no_rotation(const PuzzleInstance& inst) {
  detail::require_row(inst, "solve_no_rotation");
  const detail::ChainModel cm(inst);
  const int n = cm.n;
  // Mates missing from the instance still need nodes.
  int nodes = cm.classes;
  std::vector<int> head(static_cast<std::size_t>(n));
  std::map<int, int> extra;
  for (int p = 0; p < n; ++p) {
    int m = cm.mate[static_cast<std::size_t>(cm.R(p, 0))];
    if (m < 0) {
      auto [it, fresh] = extra.emplace(cm.R(p, 0), nodes);
      if (fresh) ++nodes;
      m = it->second;
    }
    head[static_cast<std::size_t>(p)] = m;
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  std::vector<int> indeg(static_cast<std::size_t>(nodes), 0);
  for (int p = 0; p < n; ++p) {  // positions are already in id order
    adj[static_cast<std::size_t>(cm.L(p, 0))].push_back(p);
    ++indeg[static_cast<std::size_t>(head[static_cast<std::size_t>(p)])];
  }
  int start = cm.L(0, 0);
  int plus = 0, minus = 0;
  for (int v = 0; v < nodes; ++v) {
    int d = static_cast<int>(adj[static_cast<std::size_t>(v)].size()) -
            indeg[static_cast<std::size_t>(v)];
    if (d == 1) {
      ++plus;
      start = v;
    } else if (d == -1) {
      ++minus;
    } else if (d != 0) {
      return std::nullopt;
    }
  }
  if (plus > 1 || minus > 1 || plus != minus) return std::nullopt;

  std::vector<std::size_t> next(static_cast<std::size_t>(nodes), 0);
  std::vector<std::pair<int, int>> stack{{start, -1}};  // (node, arc into it)
  std::vector<int> trail;
  while (!stack.empty()) {
    int v = stack.back().first;
    auto& i = next[static_cast<std::size_t>(v)];
    if (i < adj[static_cast<std::size_t>(v)].size()) {
      int p = adj[static_cast<std::size_t>(v)][i++];
      stack.emplace_back(head[static_cast<std::size_t>(p)], p);
    } else {
      if (stack.back().second >= 0) trail.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  if (static_cast<int>(trail.size()) != n) return std::nullopt;
  std::reverse(trail.begin(), trail.end());
  Tiling out = Tiling::empty(1, n);
  for (int k = 0; k < n; ++k) {
    out.slots[static_cast<std::size_t>(k)] =
        Placement{cm.tile_id(inst, trail[static_cast<std::size_t>(k)]), 0};
  }
  return out;
}

}  // namespace tilegap
