#pragma once

// Seeded instance generators. Output is a pure function of the arguments.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tilegap/core.hpp"
#include "tilegap/graph.hpp"

namespace tilegap {

using Rng = std::mt19937_64;

struct PlantedGraph {
  Digraph graph;
  std::vector<int> path;  // Hamiltonian s -> t
};

struct PlantedFormula {
  CnfFormula formula;
  Assignment assignment;
};

namespace detail {

inline int uniform(Rng& rng, int lo, int hi) {  // inclusive
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Adds up to `attempts` random arcs that keep degrees <= 2, s a source and t
// a sink, and the graph simple.
inline void sprinkle_arcs(int nv, int s, int t, std::vector<std::pair<int, int>>& edges,
                          int attempts, Rng& rng) {
  std::vector<int> indeg(static_cast<std::size_t>(nv), 0), outdeg(static_cast<std::size_t>(nv), 0);
  std::set<std::pair<int, int>> has(edges.begin(), edges.end());
  for (auto [u, v] : edges) {
    ++outdeg[static_cast<std::size_t>(u)];
    ++indeg[static_cast<std::size_t>(v)];
  }
  if (nv < 2) return;
  for (int k = 0; k < attempts; ++k) {
    int u = uniform(rng, 0, nv - 1);
    int v = uniform(rng, 0, nv - 1);
    if (u == v || u == t || v == s) continue;
    auto U = static_cast<std::size_t>(u), V = static_cast<std::size_t>(v);
    if (outdeg[U] >= 2 || indeg[V] >= 2 || !has.emplace(u, v).second) continue;
    ++outdeg[U];
    ++indeg[V];
    edges.emplace_back(u, v);
  }
}

}  // namespace detail

inline void require_size(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::precondition, "invalid size: " + what);
}

// A random Hamiltonian path plus extra arcs, all degrees <= 2.
inline PlantedGraph gen_planted_ham(int nv, std::uint64_t seed, int extra = -1) {
  require_size(nv >= 1 && nv <= 1'000'000, "planted-ham needs 1 <= |V| <= 10^6");
  Rng rng(seed);
  std::vector<int> order(static_cast<std::size_t>(nv));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 1; k < order.size(); ++k) edges.emplace_back(order[k - 1], order[k]);
  int s = order.front(), t = order.back();
  detail::sprinkle_arcs(nv, s, t, edges, extra < 0 ? nv : extra, rng);
  return {Digraph(nv, std::move(edges), s, t), order};
}

// Random simple digraph with degrees <= 2, s = 1 a source and t = |V| a sink.
inline Digraph gen_random_degree2(int nv, std::uint64_t seed, int attempts = -1) {
  require_size(nv >= 1 && nv <= 1'000'000, "random-degree2 needs 1 <= |V| <= 10^6");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  detail::sprinkle_arcs(nv, 0, nv - 1, edges, attempts < 0 ? 2 * nv : attempts, rng);
  return Digraph(nv, std::move(edges), 0, nv - 1);
}

// Three literals per clause, each clause made true by the hidden assignment,
// no variable used more than `max_occ` times.
inline PlantedFormula gen_planted_3sat(int n, int m, std::uint64_t seed, int max_occ = 29) {
  require_size(n >= 1 && m >= 0 && 3LL * m <= static_cast<long long>(n) * max_occ,
               "planted-3sat needs n >= 1 and 3m <= n * max_occ");
  Rng rng(seed);
  PlantedFormula out;
  out.formula.num_vars = n;
  for (int i = 0; i < n; ++i) out.assignment.values.push_back(detail::uniform(rng, 0, 1) == 1);
  std::vector<int> occ(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < m; ++j) {
    std::vector<Literal> c;
    for (int p = 0; p < 3; ++p) {
      int v;
      do {
        v = detail::uniform(rng, 0, n - 1);
      } while (occ[static_cast<std::size_t>(v)] >= max_occ);
      ++occ[static_cast<std::size_t>(v)];
      c.push_back({v, detail::uniform(rng, 0, 1) == 1});
    }
    bool sat = false;
    for (const auto& l : c) sat = sat || out.assignment.values[static_cast<std::size_t>(l.var)] == l.positive;
    if (!sat) {
      auto& l = c[static_cast<std::size_t>(detail::uniform(rng, 0, 2))];
      l.positive = !l.positive;
    }
    out.formula.clauses.push_back(std::move(c));
  }
  return out;
}

// 1 x n puzzle with labels drawn from `colors` colors (and random signs).
inline PuzzleInstance gen_random_tiles(int n, int colors, Mode mode, std::uint64_t seed) {
  require_size(n >= 1 && n <= 100'000 && colors >= 1, "random-tiles needs n >= 1, colors >= 1");
  Rng rng(seed);
  std::vector<Tile> tiles;
  for (int id = 1; id <= n; ++id) {
    Tile t;
    t.id = id;
    for (auto& e : t.edges) {
      e.color = "c" + std::to_string(detail::uniform(rng, 1, colors));
      if (mode == Mode::Signed) e.sign = detail::uniform(rng, 0, 1) ? Sign::plus : Sign::minus;
    }
    tiles.push_back(std::move(t));
  }
  return PuzzleInstance(mode, 1, n, std::move(tiles));
}

// Arcs taken in random order whenever they keep the selection a set of
// vertex-disjoint paths; `keep` is the chance of trying each arc.
inline PathCover random_path_cover(const Digraph& g, Rng& rng, double keep = 1.0) {
  const int n = g.vertex_count();
  std::vector<int> succ(static_cast<std::size_t>(n), -1), pred(static_cast<std::size_t>(n), -1);
  std::vector<int> head(static_cast<std::size_t>(n)), tail(static_cast<std::size_t>(n));
  std::iota(head.begin(), head.end(), 0);
  std::iota(tail.begin(), tail.end(), 0);
  std::vector<int> arcs(static_cast<std::size_t>(g.edge_count()));
  std::iota(arcs.begin(), arcs.end(), 0);
  std::shuffle(arcs.begin(), arcs.end(), rng);
  std::bernoulli_distribution take(keep);
  for (int e : arcs) {
    if (!take(rng)) continue;
    auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
    auto U = static_cast<std::size_t>(u), V = static_cast<std::size_t>(v);
    if (succ[U] >= 0 || pred[V] >= 0) continue;
    int h = head[U];  // u is the tail of the path starting at h
    if (h == v) continue;
    int vt = tail[V];
    succ[U] = v;
    pred[V] = u;
    tail[static_cast<std::size_t>(h)] = vt;
    head[static_cast<std::size_t>(vt)] = h;
  }
  return cover_from_successors(succ);
}

}  // namespace tilegap
