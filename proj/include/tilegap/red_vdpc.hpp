#pragma once

// Max vertex-disjoint path cover (degree <= 2) -> 1 x n Max-Placement, with
// the cover lift, the three-step extraction and the Max-Matched conversion.
// The unsigned tiles are the signed ones with the signs dropped.

#include <algorithm>
#include <string>
#include <vector>

#include "tilegap/core.hpp"
#include "tilegap/graph.hpp"
#include "tilegap/puzzle.hpp"
#include "tilegap/red_ham.hpp"

namespace tilegap {

inline PuzzleInstance build_puzzle(const Digraph& g, Mode mode) {
  if (!check_degree_bound(g, 2)) {
    throw Error(ErrorKind::precondition,
                "path-cover reduction needs in- and out-degrees at most 2");
  }
  detail::require_source_sink(g);
  return detail::build_reduction(g, mode);
}

// Paths in cover order with the one ending at t last, then the bridge, then
// the leftover edge tiles chained on X. Each of the k-1 separating blanks
// costs a slot; they are paid for by dropping, in order, leftover edge tiles
// (from the back), singleton non-t paths (which also frees their separator),
// and finally tail tiles of the last remaining non-t path.
inline Tiling lift_path_cover(const PuzzleInstance& inst, const PathCover& cover) {
  const auto& meta = detail::require_meta(inst);
  const auto& g = meta.source_graph;
  verify_path_cover(g, cover);
  std::vector<std::vector<int>> others;
  std::vector<int> tpath;
  for (const auto& p : cover.paths) {
    if (p.back() == g.sink()) {
      tpath = p;
    } else {
      others.push_back(p);
    }
  }
  if (tpath.empty()) {
    throw Error(ErrorKind::invalid_witness, "no path ends at t");
  }
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& p : cover.paths) {
    for (std::size_t k = 1; k < p.size(); ++k) {
      used[static_cast<std::size_t>(g.edge_index(p[k - 1], p[k]))] = 1;
    }
  }
  std::vector<int> leftovers;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!used[static_cast<std::size_t>(e)]) leftovers.push_back(e);
  }

  // Each non-t path occupies 2|p|-1 tiles plus one separator.
  auto slots_needed = [&]() {
    long long s = 2LL * static_cast<long long>(tpath.size()) - 1 + 1 +
                  static_cast<long long>(leftovers.size());
    for (const auto& p : others) s += 2LL * static_cast<long long>(p.size());
    return s;
  };
  const long long n = inst.size();
  while (slots_needed() > n && !leftovers.empty()) leftovers.pop_back();
  for (std::size_t k = others.size(); k-- > 0 && slots_needed() > n;) {
    if (others[k].size() == 1) others.erase(others.begin() + static_cast<long>(k));
  }
  // tail trimming works on partial runs, tracked as tile counts
  std::vector<int> keep;
  for (const auto& p : others) keep.push_back(2 * static_cast<int>(p.size()) - 1);
  long long need = slots_needed() - n;
  for (std::size_t k = keep.size(); k-- > 0 && need > 0;) {
    while (need > 0 && keep[k] > 0) {
      --keep[k];
      --need;
      if (keep[k] == 0) --need;  // its separator goes too
    }
  }

  Tiling out = Tiling::empty(1, inst.size());
  int slot = 0;
  for (std::size_t k = 0; k < others.size(); ++k) {
    if (keep[k] <= 0) continue;
    Tiling run = Tiling::empty(1, 2 * static_cast<int>(others[k].size()));
    detail::place_path(run, 0, meta, others[k]);
    for (int x = 0; x < keep[k]; ++x) {
      out.slots[static_cast<std::size_t>(slot++)] = run.slots[static_cast<std::size_t>(x)];
    }
    ++slot;
  }
  slot = detail::place_path(out, slot, meta, tpath);
  out.slots[static_cast<std::size_t>(slot++)] = Placement{meta.bridge_tile, 0};
  for (int e : leftovers) {
    out.slots[static_cast<std::size_t>(slot++)] = Placement{
        meta.edge_tile[static_cast<std::size_t>(e)], detail::kGarbageRotation};
  }
  return out;
}

struct ExtractionDiagnostics {
  int blanks_initial = 0;
  int blanks_after_step1 = 0;
  int blanks_after_step2 = 0;
  int step2_removals = 0;
  int unplaced_vertex_tiles = 0;
  int cover_edges = 0;

  // Step-2 removals are at most 14b + 16 for b initial blanks.
  bool removal_bound_ok() const {
    return step2_removals <= 14 * blanks_initial + 16;
  }
  bool edge_bound_ok(int num_vertices) const {
    return cover_edges >=
           num_vertices - 1 - blanks_after_step2 - unplaced_vertex_tiles;
  }
};

struct ExtractionResult {
  PathCover cover;
  ExtractionDiagnostics diag;
};

inline ExtractionResult extract_path_cover_diag(const PuzzleInstance& inst,
                                                const Tiling& tiling) {
  const auto& meta = detail::require_meta(inst);
  const auto& g = meta.source_graph;
  if (inst.height() != 1) {
    throw Error(ErrorKind::precondition, "extraction reads 1 x n boards");
  }
  verify_tiling(inst, tiling, true);
  ExtractionResult res;
  auto& d = res.diag;
  const int n = inst.size();
  std::vector<const Tile*> tile(static_cast<std::size_t>(n), nullptr);
  std::vector<int> rot(static_cast<std::size_t>(n), 0);
  std::vector<char> placed_vertex(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int k = 0; k < n; ++k) {
    const auto& s = tiling.slots[static_cast<std::size_t>(k)];
    if (!s) continue;
    tile[static_cast<std::size_t>(k)] = &inst.by_id(s->tile_id);
    rot[static_cast<std::size_t>(k)] = s->rotation;
  }
  auto blanks = [&]() {
    return static_cast<int>(std::count(tile.begin(), tile.end(), nullptr));
  };
  auto type_at = [&](int k) {
    return tile[static_cast<std::size_t>(k)]->kind.type;
  };
  d.blanks_initial = blanks();

  // Step 1
  for (auto& t : tile) {
    if (t && t->kind.type == TileKind::Type::bridge) t = nullptr;
  }
  d.blanks_after_step1 = blanks();

  // Step 2: vertex-oriented edge tiles beside a blank, the border or another
  // edge tile, all judged on the board left by Step 1.
  auto is_edge = [&](int k) {
    return k >= 0 && k < n && tile[static_cast<std::size_t>(k)] &&
           type_at(k) == TileKind::Type::edge;
  };
  auto open = [&](int k) {
    return k < 0 || k >= n || !tile[static_cast<std::size_t>(k)] || is_edge(k);
  };
  std::vector<int> doomed;
  for (int k = 0; k < n; ++k) {
    if (!is_edge(k) || rot[static_cast<std::size_t>(k)] % 2 != 0) continue;
    if (open(k - 1) || open(k + 1)) doomed.push_back(k);
  }
  for (int k : doomed) tile[static_cast<std::size_t>(k)] = nullptr;
  d.step2_removals = static_cast<int>(doomed.size());
  d.blanks_after_step2 = blanks();

  // Step 3: maximal runs; those holding vertex tiles alternate V E V ... V.
  for (int k = 0; k < n;) {
    if (!tile[static_cast<std::size_t>(k)]) {
      ++k;
      continue;
    }
    int end = k;
    while (end < n && tile[static_cast<std::size_t>(end)]) ++end;
    bool has_vertex = false;
    for (int x = k; x < end; ++x) {
      if (type_at(x) == TileKind::Type::vertex) has_vertex = true;
    }
    if (has_vertex) {
      if ((end - k) % 2 == 0) {
        throw Error(ErrorKind::internal, "vertex run of even length");
      }
      std::vector<int> path;
      int dir = -1;
      for (int x = k; x < end; ++x) {
        bool want_vertex = (x - k) % 2 == 0;
        if ((type_at(x) == TileKind::Type::vertex) != want_vertex) {
          throw Error(ErrorKind::internal,
                      "run at slot " + std::to_string(k + 1) +
                          " does not alternate vertex and edge tiles");
        }
        if (!want_vertex) continue;
        int r = rot[static_cast<std::size_t>(x)];
        if (end - k > 1) {
          if (r % 2 != 0) {
            throw Error(ErrorKind::internal, "sideways vertex tile inside a run");
          }
          if (dir >= 0 && r != dir) {
            throw Error(ErrorKind::internal, "run mixes directions");
          }
          dir = r;
        }
        int v = tile[static_cast<std::size_t>(x)]->kind.u;
        path.push_back(v);
        placed_vertex[static_cast<std::size_t>(v)] = 1;
      }
      if (dir == 2) std::reverse(path.begin(), path.end());
      res.cover.paths.push_back(std::move(path));
    }
    k = end;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (placed_vertex[static_cast<std::size_t>(v)]) continue;
    bool on_board = false;
    for (const auto& s : tiling.slots) {
      if (s && s->tile_id == meta.vertex_tile[static_cast<std::size_t>(v)]) {
        on_board = true;
      }
    }
    if (on_board) throw Error(ErrorKind::internal, "placed vertex tile not read");
    ++d.unplaced_vertex_tiles;
    res.cover.paths.push_back({v});
  }
  std::sort(res.cover.paths.begin(), res.cover.paths.end());
  d.cover_edges = verify_path_cover(g, res.cover);
  return res;
}

inline PathCover extract_path_cover(const PuzzleInstance& inst,
                                    const Tiling& tiling) {
  return extract_path_cover_diag(inst, tiling).cover;
}

// Drops every tile whose right neighbour does not match it.
inline Tiling matched_to_placement(const PuzzleInstance& inst,
                                   const Tiling& full) {
  if (inst.height() != 1) {
    throw Error(ErrorKind::precondition, "conversion works on 1 x n boards");
  }
  auto rep = verify_tiling(inst, full, false);
  if (!rep.ids_ok()) {
    throw Error(ErrorKind::invalid_witness, "bad tile ids in tiling");
  }
  if (rep.placed_count != inst.size()) {
    throw Error(ErrorKind::invalid_witness, "tiling is not full");
  }
  Tiling out = full;
  for (const auto& v : rep.violations) {
    out.slots[static_cast<std::size_t>(v.slot_a)].reset();
  }
  return out;
}

inline Rational derive_alpha_emp(const Rational& alpha_mpc) {
  if (alpha_mpc < 0 || alpha_mpc > 1) {
    throw Error(ErrorKind::contract, "alpha_mpc must lie in [0, 1]");
  }
  return alpha_mpc / 48;
}

}  // namespace tilegap
