#pragma once

// Hamiltonian s->t path <-> 1 x n signed edge-matching puzzle.
//
// Tiles, written T(left, top, right, bottom):
//   vertex v      T(+I:v, +U:v, +O:v, +U:v)
//   edge (i, j)   T(-O:i, +X,   -I:j, -X)
//   bridge        T(-O:t, +U:B, -X,   +U:B)
// A Hamiltonian path lays out as v1 e12 v2 ... vk | bridge | leftover edges,
// the leftovers turned a quarter so their X sides chain.

#include <algorithm>
#include <string>
#include <vector>

#include "tilegap/core.hpp"
#include "tilegap/graph.hpp"
#include "tilegap/puzzle.hpp"

namespace tilegap {

namespace detail {

inline std::string vname(int v) { return std::to_string(v + 1); }

inline EdgeLabel label(Mode m, Sign s, std::string color) {
  if (m == Mode::Unsigned) return EdgeLabel::plain(std::move(color));
  return {std::move(color), s};
}

// Shared by the signed and unsigned constructions; tile ids are vertex v ->
// v+1, edge k -> |V|+1+k, bridge -> |V|+|E|+1.
inline PuzzleInstance build_reduction(const Digraph& g, Mode mode) {
  const int nv = g.vertex_count();
  const int ne = g.edge_count();
  const auto P = Sign::plus, M = Sign::minus;
  ReductionMeta meta;
  meta.source_graph = g;
  std::vector<Tile> tiles;
  tiles.reserve(static_cast<std::size_t>(nv + ne + 1));
  for (int v = 0; v < nv; ++v) {
    meta.in_color.push_back("I:" + vname(v));
    meta.out_color.push_back("O:" + vname(v));
    meta.unmatched_color.push_back("U:" + vname(v));
    meta.vertex_tile.push_back(v + 1);
    tiles.push_back(make_tile(v + 1, label(mode, P, meta.in_color.back()),
                              label(mode, P, meta.unmatched_color.back()),
                              label(mode, P, meta.out_color.back()),
                              label(mode, P, meta.unmatched_color.back()),
                              TileKind::vertex(v)));
  }
  for (int k = 0; k < ne; ++k) {
    auto [i, j] = g.edges()[static_cast<std::size_t>(k)];
    int id = nv + 1 + k;
    meta.edge_tile.push_back(id);
    tiles.push_back(make_tile(
        id, label(mode, M, meta.out_color[static_cast<std::size_t>(i)]),
        label(mode, P, meta.garbage_color),
        label(mode, M, meta.in_color[static_cast<std::size_t>(j)]),
        label(mode, M, meta.garbage_color), TileKind::edge(i, j)));
  }
  meta.bridge_tile = nv + ne + 1;
  tiles.push_back(make_tile(
      meta.bridge_tile,
      label(mode, M, meta.out_color[static_cast<std::size_t>(g.sink())]),
      label(mode, P, meta.bridge_color), label(mode, M, meta.garbage_color),
      label(mode, P, meta.bridge_color), TileKind::bridge()));
  const int n = static_cast<int>(tiles.size());
  return PuzzleInstance(mode, 1, n, std::move(tiles), std::move(meta));
}

inline const ReductionMeta& require_meta(const PuzzleInstance& inst) {
  if (!inst.meta()) {
    throw Error(ErrorKind::contract, "instance carries no reduction metadata");
  }
  return *inst.meta();
}

inline void require_source_sink(const Digraph& g) {
  if (!g.source_sink_ok()) {
    throw Error(ErrorKind::precondition,
                "s must have in-degree 0 and t out-degree 0");
  }
}

// Edge tiles turned so the garbage color faces left and right.
inline constexpr int kGarbageRotation = 3;

// Places `path` as alternating vertex / edge tiles starting at `slot`.
inline int place_path(Tiling& out, int slot, const ReductionMeta& meta,
                      const std::vector<int>& path) {
  const auto& g = meta.source_graph;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k > 0) {
      int e = g.edge_index(path[k - 1], path[k]);
      out.slots[static_cast<std::size_t>(slot++)] =
          Placement{meta.edge_tile[static_cast<std::size_t>(e)], 0};
    }
    out.slots[static_cast<std::size_t>(slot++)] =
        Placement{meta.vertex_tile[static_cast<std::size_t>(path[k])], 0};
  }
  return slot;
}

}  // namespace detail

inline PuzzleInstance build_signed_puzzle(const Digraph& g) {
  detail::require_source_sink(g);
  return detail::build_reduction(g, Mode::Signed);
}

inline Tiling lift_ham_path(const PuzzleInstance& inst,
                            const std::vector<int>& path) {
  const auto& meta = detail::require_meta(inst);
  const auto& g = meta.source_graph;
  verify_path_cover(g, PathCover{{path}});
  if (path.front() != g.source() || path.back() != g.sink()) {
    throw Error(ErrorKind::invalid_witness, "path must run from s to t");
  }
  Tiling out = Tiling::empty(1, inst.size());
  int slot = detail::place_path(out, 0, meta, path);
  out.slots[static_cast<std::size_t>(slot++)] = Placement{meta.bridge_tile, 0};
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  for (std::size_t k = 1; k < path.size(); ++k) {
    used[static_cast<std::size_t>(g.edge_index(path[k - 1], path[k]))] = 1;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (used[static_cast<std::size_t>(e)]) continue;
    out.slots[static_cast<std::size_t>(slot++)] =
        Placement{meta.edge_tile[static_cast<std::size_t>(e)],
                  detail::kGarbageRotation};
  }
  return out;
}

// Turns the board so the bridge reads upright, then walks left from it.
inline std::vector<int> extract_ham_path(const PuzzleInstance& inst,
                                         const Tiling& tiling) {
  const auto& meta = detail::require_meta(inst);
  const auto& g = meta.source_graph;
  auto rep = verify_tiling(inst, tiling, true);
  if (rep.placed_count != inst.size()) {
    throw Error(ErrorKind::invalid_witness, "tiling is not full");
  }
  Tiling t = tiling;
  auto bridge_at = [&](const Tiling& x) {
    for (std::size_t k = 0; k < x.slots.size(); ++k) {
      if (x.slots[k]->tile_id == meta.bridge_tile) return static_cast<int>(k);
    }
    return -1;
  };
  int b = bridge_at(t);
  int rot = t.slots[static_cast<std::size_t>(b)]->rotation;
  if (rot == 2) {
    t = rotate_half_turn(t);
    b = bridge_at(t);
  } else if (rot != 0) {
    throw Error(ErrorKind::internal, "bridge shows its unmatched color sideways");
  }
  std::vector<int> path;
  for (int k = 0; k < b; ++k) {
    const auto& p = *t.slots[static_cast<std::size_t>(k)];
    const Tile& tile = inst.by_id(p.tile_id);
    bool even = (k % 2 == 0);
    if (even != (tile.kind.type == TileKind::Type::vertex) || p.rotation != 0) {
      throw Error(ErrorKind::internal,
                  "slot " + std::to_string(k + 1) +
                      " breaks the vertex/edge alternation left of the bridge");
    }
    if (even) path.push_back(tile.kind.u);
  }
  if (static_cast<int>(path.size()) != g.vertex_count() ||
      path.front() != g.source() || path.back() != g.sink()) {
    throw Error(ErrorKind::internal, "tiles left of the bridge are not an s-t path");
  }
  verify_path_cover(g, PathCover{{path}});
  return path;
}

}  // namespace tilegap
