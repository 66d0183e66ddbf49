#pragma once

// Path-cover checking, exhaustive oracles and Hamiltonian search on digraphs.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilegap/core.hpp"

namespace tilegap {

// Validates coverage, disjointness and edge membership; returns the number of
// cover edges, which is |V| minus the number of paths.
inline int verify_path_cover(const Digraph& g, const PathCover& c) {
  std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& p : c.paths) {
    if (p.empty()) throw Error(ErrorKind::invalid_witness, "empty path");
    for (std::size_t k = 0; k < p.size(); ++k) {
      int v = p[k];
      if (v < 0 || v >= g.vertex_count()) {
        throw Error(ErrorKind::invalid_witness,
                    "vertex " + std::to_string(v + 1) + " out of range");
      }
      if (seen[static_cast<std::size_t>(v)]++) {
        throw Error(ErrorKind::invalid_witness,
                    "vertex " + std::to_string(v + 1) + " covered twice");
      }
      if (k > 0 && !g.has_edge(p[k - 1], v)) {
        throw Error(ErrorKind::invalid_witness,
                    "non-edge " + std::to_string(p[k - 1] + 1) + "->" +
                        std::to_string(v + 1));
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::invalid_witness,
                  "vertex " + std::to_string(v + 1) + " not covered");
    }
  }
  return g.vertex_count() - static_cast<int>(c.paths.size());
}

inline bool check_degree_bound(const Digraph& g, int d) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(g.out(v).size()) > d ||
        static_cast<int>(g.in(v).size()) > d) {
      return false;
    }
  }
  return true;
}

// Adds s' -> s and t -> t'. New vertices take ids |V| and |V|+1.
inline Digraph normalize_source_sink(const Digraph& g, int s, int t) {
  int n = g.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) {
    throw Error(ErrorKind::contract, "source/sink out of range");
  }
  auto edges = g.edges();
  edges.emplace_back(n, s);
  edges.emplace_back(t, n + 1);
  return Digraph(n + 2, std::move(edges), n, n + 1);
}

inline Digraph normalize_source_sink(const Digraph& g) {
  return normalize_source_sink(g, g.source(), g.sink());
}

// Builds the cover whose edges are `succ` (succ[v] = next vertex or -1).
inline PathCover cover_from_successors(const std::vector<int>& succ) {
  std::vector<int> pred(succ.size(), -1);
  for (std::size_t v = 0; v < succ.size(); ++v) {
    if (succ[v] >= 0) pred[static_cast<std::size_t>(succ[v])] = static_cast<int>(v);
  }
  PathCover c;
  for (std::size_t v = 0; v < succ.size(); ++v) {
    if (pred[v] >= 0) continue;
    std::vector<int> p;
    for (int x = static_cast<int>(v); x >= 0; x = succ[static_cast<std::size_t>(x)]) {
      p.push_back(x);
    }
    c.paths.push_back(std::move(p));
  }
  return c;
}

inline constexpr int kPathCoverOracleLimit = 12;

struct PathCoverOptimum {
  int value = 0;
  PathCover cover;
};

// Exhaustive search over successor choices (each a subset of edges forming
// vertex-disjoint paths).
inline PathCoverOptimum brute_force_max_path_cover(
    const Digraph& g, int limit = kPathCoverOracleLimit) {
  const int n = g.vertex_count();
  if (n > limit) {
    throw Error(ErrorKind::size_limit,
                "path-cover oracle limited to " + std::to_string(limit) +
                    " vertices");
  }
  std::vector<int> succ(static_cast<std::size_t>(n), -1);
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  std::vector<int> tail(static_cast<std::size_t>(n));  // path head -> path tail
  std::vector<int> head(static_cast<std::size_t>(n));  // path tail -> path head
  for (int v = 0; v < n; ++v) tail[static_cast<std::size_t>(v)] = head[static_cast<std::size_t>(v)] = v;

  std::vector<int> best_succ = succ;
  int best = 0;
  int cur = 0;

  auto rec = [&](auto&& self, int v) -> void {
    if (v < n && cur + (n - v) <= best) return;
    if (v == n) {
      if (cur > best) {
        best = cur;
        best_succ = succ;
      }
      return;
    }
    for (int w : g.out(v)) {
      if (pred[static_cast<std::size_t>(w)] >= 0) continue;
      // v is the tail of the path starting at head[v]; w heads its own path.
      int h = head[static_cast<std::size_t>(v)];
      if (h == w) continue;  // would close a cycle
      int wt = tail[static_cast<std::size_t>(w)];
      succ[static_cast<std::size_t>(v)] = w;
      pred[static_cast<std::size_t>(w)] = v;
      tail[static_cast<std::size_t>(h)] = wt;
      head[static_cast<std::size_t>(wt)] = h;
      ++cur;
      self(self, v + 1);
      --cur;
      head[static_cast<std::size_t>(wt)] = w;
      tail[static_cast<std::size_t>(h)] = v;
      pred[static_cast<std::size_t>(w)] = -1;
      succ[static_cast<std::size_t>(v)] = -1;
    }
    self(self, v + 1);
  };
  rec(rec, 0);
  return {best, cover_from_successors(best_succ)};
}

// ---------------------------------------------------------------------------
// Hamiltonian s -> t path search
// ---------------------------------------------------------------------------

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 0.0;  // 0 disables the wall-clock limit
};

enum class SearchStatus { found, none, budget_exhausted };

struct HamSearchResult {
  SearchStatus status = SearchStatus::none;
  std::vector<int> path;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

namespace detail {

class HamSearch {
 public:
  HamSearch(const Digraph& g, SearchBudget budget)
      : g_(g), budget_(budget), n_(g.vertex_count()),
        visited_(static_cast<std::size_t>(n_), 0),
        mark_(static_cast<std::size_t>(n_), 0) {}

  HamSearchResult run() {
    start_ = std::chrono::steady_clock::now();
    HamSearchResult res;
    const int s = g_.source();
    const int t = g_.sink();
    if (n_ == 1) {
      res.status = (s == t) ? SearchStatus::found : SearchStatus::none;
      if (s == t) res.path = {s};
      return res;
    }
    if (s == t) return res;
    path_.push_back(s);
    visited_[static_cast<std::size_t>(s)] = 1;
    bool ok = dfs(s);
    res.nodes = nodes_;
    res.seconds = elapsed();
    if (ok) {
      res.status = SearchStatus::found;
      res.path = path_;
    } else {
      res.status = exhausted_ ? SearchStatus::budget_exhausted
                              : SearchStatus::none;
    }
    return res;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if (budget_.max_seconds > 0 && (nodes_ & 0x3ff) == 0 &&
        elapsed() > budget_.max_seconds) {
      return true;
    }
    return false;
  }

  // Every unvisited vertex must keep an available predecessor and (unless it
  // is t) an available successor, and must stay reachable from `cur`.
  // Returns false on a dead end; sets `forced` to a vertex whose only
  // available predecessor is `cur`.
  bool feasible(int cur, int& forced) {
    forced = -1;
    const int t = g_.sink();
    int remaining = 0;
    for (int v = 0; v < n_; ++v) {
      if (visited_[static_cast<std::size_t>(v)]) continue;
      ++remaining;
      int preds = 0;
      bool from_cur = false;
      for (int u : g_.in(v)) {
        if (u == cur) {
          ++preds;
          from_cur = true;
        } else if (!visited_[static_cast<std::size_t>(u)]) {
          ++preds;
        }
      }
      if (preds == 0) return false;
      if (preds == 1 && from_cur) {
        if (forced >= 0 && forced != v) return false;
        forced = v;
      }
      if (v != t) {
        bool succ = false;
        for (int w : g_.out(v)) {
          if (!visited_[static_cast<std::size_t>(w)]) {
            succ = true;
            break;
          }
        }
        if (!succ) return false;
      }
    }
    if (forced >= 0 && forced == t && remaining > 1) return false;
    // reachability over unvisited vertices
    ++stamp_;
    stack_.clear();
    stack_.push_back(cur);
    int reached = 0;
    while (!stack_.empty()) {
      int x = stack_.back();
      stack_.pop_back();
      for (int w : g_.out(x)) {
        if (visited_[static_cast<std::size_t>(w)] ||
            mark_[static_cast<std::size_t>(w)] == stamp_) {
          continue;
        }
        mark_[static_cast<std::size_t>(w)] = stamp_;
        ++reached;
        stack_.push_back(w);
      }
    }
    return reached == remaining;
  }

  bool dfs(int cur) {
    if (static_cast<int>(path_.size()) == n_) return cur == g_.sink();
    if (cur == g_.sink()) return false;
    ++nodes_;
    if (out_of_budget()) {
      exhausted_ = true;
      return false;
    }
    int forced = -1;
    if (!feasible(cur, forced)) return false;
    for (int w : g_.out(cur)) {
      if (visited_[static_cast<std::size_t>(w)]) continue;
      if (forced >= 0 && w != forced) continue;
      visited_[static_cast<std::size_t>(w)] = 1;
      path_.push_back(w);
      if (dfs(w)) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(w)] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  const Digraph& g_;
  SearchBudget budget_;
  int n_;
  std::vector<char> visited_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<int> stack_;
  std::vector<int> path_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Depth-first search from the source with reachability and degree pruning.
// A budget stop is reported as budget_exhausted, never as none.
inline HamSearchResult find_hamiltonian_path(const Digraph& g,
                                             SearchBudget budget = {}) {
  return detail::HamSearch(g, budget).run();
}

}  // namespace tilegap
