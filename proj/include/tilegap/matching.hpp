#pragma once

// Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm,
// O(V^3) with BFS augmentation and blossom contraction via base labels).

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

namespace tilegap {

struct UndirectedGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  explicit UndirectedGraph(int nodes = 0)
      : n(nodes), adj(static_cast<std::size_t>(nodes)) {}

  void add_edge(int a, int b) {
    if (a == b) return;
    auto& la = adj[static_cast<std::size_t>(a)];
    if (std::find(la.begin(), la.end(), b) != la.end()) return;
    la.push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  bool has_edge(int a, int b) const {
    const auto& la = adj[static_cast<std::size_t>(a)];
    return std::find(la.begin(), la.end(), b) != la.end();
  }
  int edge_count() const {
    std::size_t e = 0;
    for (const auto& l : adj) e += l.size();
    return static_cast<int>(e / 2);
  }
};

namespace detail {

class Blossom {
 public:
  explicit Blossom(const UndirectedGraph& g)
      : g_(g), n_(g.n), match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)), base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_)), blossom_(static_cast<std::size_t>(n_)) {}

  std::vector<int> solve() {
    // greedy warm start, lowest indices first
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] != -1) continue;
      for (int w : sorted(v)) {
        if (match_[idx(w)] == -1) {
          match_[idx(v)] = w;
          match_[idx(w)] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        int pv = parent_[idx(u)];
        int ppv = match_[idx(pv)];
        match_[idx(u)] = pv;
        match_[idx(pv)] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  std::vector<int> sorted(int v) const {
    auto l = g_.adj[idx(v)];
    std::sort(l.begin(), l.end());
    return l;
  }

  int lca(int a, int b) {
    std::vector<char> seen(idx(n_), 0);
    while (true) {
      a = base_[idx(a)];
      seen[idx(a)] = 1;
      if (match_[idx(a)] == -1) break;
      a = parent_[idx(match_[idx(a)])];
    }
    while (true) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = 1;
      blossom_[idx(base_[idx(match_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[idx(i)] = i;
    used_[idx(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.adj[idx(v)]) {
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root ||
            (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!used_[idx(i)]) {
                used_[idx(i)] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] == -1) return to;
          used_[idx(match_[idx(to)])] = 1;
          q.push(match_[idx(to)]);
        }
      }
    }
    return -1;
  }

  const UndirectedGraph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace detail

// Returns the matched pairs (a < b), sorted.
inline std::vector<std::pair<int, int>> max_cardinality_matching(
    const UndirectedGraph& g) {
  auto mate = detail::Blossom(g).solve();
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < g.n; ++v) {
    int w = mate[static_cast<std::size_t>(v)];
    if (w > v) pairs.emplace_back(v, w);
  }
  return pairs;
}

}  // namespace tilegap
