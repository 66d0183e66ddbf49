#pragma once

// Domain types shared by every module: edge labels, tiles, boards, digraphs,
// CNF formulas and the gap-constant record.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace tilegap {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorKind {
  contract,         // caller broke a documented precondition on argument shape
  precondition,     // input is well formed but outside the operation's domain
  size_limit,       // exact or brute-force routine asked to go past its limit
  parse,            // malformed text input
  invalid_witness,  // a path/cover/tiling/assignment does not fit its instance
  internal,         // structural case that valid inputs can never reach
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Edge labels and tiles
// ---------------------------------------------------------------------------

enum class Sign : std::uint8_t { plus, minus };
enum class Mode : std::uint8_t { Unsigned, Signed };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

inline const char* mode_name(Mode m) {
  return m == Mode::Signed ? "signed" : "unsigned";
}

struct EdgeLabel {
  std::string color;
  std::optional<Sign> sign;

  static EdgeLabel plain(std::string c) { return {std::move(c), std::nullopt}; }
  static EdgeLabel pos(std::string c) { return {std::move(c), Sign::plus}; }
  static EdgeLabel neg(std::string c) { return {std::move(c), Sign::minus}; }

  bool fits(Mode m) const { return sign.has_value() == (m == Mode::Signed); }

  std::string str() const {
    if (!sign) return color;
    return (*sign == Sign::plus ? "+" : "-") + color;
  }

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

// Unsigned: equal colors. Signed: equal colors and opposite signs.
inline bool compatible(const EdgeLabel& a, const EdgeLabel& b, Mode mode) {
  if (!a.fits(mode) || !b.fits(mode)) {
    throw Error(ErrorKind::contract,
                "label '" + a.str() + "' / '" + b.str() + "' does not match " +
                    mode_name(mode) + " mode");
  }
  if (a.color != b.color) return false;
  return mode == Mode::Unsigned || *a.sign != *b.sign;
}

enum Side : int { kLeft = 0, kTop = 1, kRight = 2, kBottom = 3 };

struct TileKind {
  enum class Type : std::uint8_t { vertex, edge, bridge, generic };
  Type type = Type::generic;
  int u = -1;  // vertex id for vertex tiles, tail for edge tiles
  int v = -1;  // head for edge tiles

  static TileKind vertex(int x) { return {Type::vertex, x, -1}; }
  static TileKind edge(int a, int b) { return {Type::edge, a, b}; }
  static TileKind bridge() { return {Type::bridge, -1, -1}; }

  friend bool operator==(const TileKind&, const TileKind&) = default;
};

struct Tile {
  int id = 0;
  std::array<EdgeLabel, 4> edges;  // indexed by Side
  TileKind kind;

  const EdgeLabel& left() const { return edges[kLeft]; }
  const EdgeLabel& top() const { return edges[kTop]; }
  const EdgeLabel& right() const { return edges[kRight]; }
  const EdgeLabel& bottom() const { return edges[kBottom]; }

  // Label showing on `side` after `r` clockwise quarter-turns.
  const EdgeLabel& at(int r, int side) const {
    return edges[static_cast<std::size_t>(((side - r) % 4 + 4) % 4)];
  }

  friend bool operator==(const Tile&, const Tile&) = default;
};

inline Tile make_tile(int id, EdgeLabel l, EdgeLabel t, EdgeLabel r,
                      EdgeLabel b, TileKind kind = {}) {
  return Tile{id, {std::move(l), std::move(t), std::move(r), std::move(b)},
              kind};
}

// Clockwise quarter-turns: the new top is the old left.
inline Tile rotate(const Tile& tile, int r) {
  if (r < 0 || r > 3) {
    throw Error(ErrorKind::contract, "rotation must be in 0..3");
  }
  Tile out = tile;
  for (int side = 0; side < 4; ++side) {
    out.edges[static_cast<std::size_t>(side)] = tile.at(r, side);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Digraphs and path covers (vertices are 0-based internally)
// ---------------------------------------------------------------------------

class Digraph {
 public:
  Digraph() = default;

  Digraph(int num_vertices, std::vector<std::pair<int, int>> edges, int source,
          int sink)
      : n_(num_vertices), edges_(std::move(edges)), s_(source), t_(sink) {
    if (n_ < 1) throw Error(ErrorKind::contract, "digraph needs a vertex");
    if (s_ < 0 || s_ >= n_ || t_ < 0 || t_ >= n_) {
      throw Error(ErrorKind::contract, "source/sink out of range");
    }
    out_.assign(static_cast<std::size_t>(n_), {});
    in_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      auto [u, v] = edges_[k];
      if (u < 0 || u >= n_ || v < 0 || v >= n_) {
        throw Error(ErrorKind::contract, "edge endpoint out of range");
      }
      if (u == v) throw Error(ErrorKind::contract, "self-loop");
      if (index_.count(key(u, v))) {
        throw Error(ErrorKind::contract, "parallel edge");
      }
      index_.emplace(key(u, v), static_cast<int>(k));
      out_[static_cast<std::size_t>(u)].push_back(v);
      in_[static_cast<std::size_t>(v)].push_back(u);
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int source() const { return s_; }
  int sink() const { return t_; }
  const std::vector<int>& out(int v) const {
    return out_[static_cast<std::size_t>(v)];
  }
  const std::vector<int>& in(int v) const {
    return in_[static_cast<std::size_t>(v)];
  }
  bool has_edge(int u, int v) const { return index_.count(key(u, v)) != 0; }
  // Position of (u,v) in edges(), or -1.
  int edge_index(int u, int v) const {
    auto it = index_.find(key(u, v));
    return it == index_.end() ? -1 : it->second;
  }

  // s has in-degree 0 and t has out-degree 0.
  bool source_sink_ok() const { return in(s_).empty() && out(t_).empty(); }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.s_ == b.s_ &&
           a.t_ == b.t_;
  }

 private:
  static std::int64_t key(int u, int v) {
    return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  int s_ = 0;
  int t_ = 0;
  std::vector<std::vector<int>> out_, in_;
  std::unordered_map<std::int64_t, int> index_;
};

struct PathCover {
  std::vector<std::vector<int>> paths;

  int edge_total() const {
    int e = 0;
    for (const auto& p : paths) e += static_cast<int>(p.size()) - 1;
    return e;
  }
  friend bool operator==(const PathCover&, const PathCover&) = default;
};

// First and last vertex of every path; a single-vertex path contributes one.
inline std::vector<int> cover_endpoints(const PathCover& c) {
  std::vector<int> ends;
  for (const auto& p : c.paths) {
    if (p.empty()) continue;
    ends.push_back(p.front());
    if (p.size() > 1) ends.push_back(p.back());
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  return ends;
}

// ---------------------------------------------------------------------------
// Puzzle instances and tilings
// ---------------------------------------------------------------------------

// Records the vertex/edge naming so extraction can invert a reduction.
struct ReductionMeta {
  Digraph source_graph;
  std::vector<std::string> in_color, out_color, unmatched_color;
  std::string garbage_color = "X";
  std::string bridge_color = "U:B";
  std::vector<int> vertex_tile;  // tile id per vertex
  std::vector<int> edge_tile;    // tile id per edge (source_graph.edges order)
  int bridge_tile = -1;

  friend bool operator==(const ReductionMeta&, const ReductionMeta&) = default;
};

class PuzzleInstance {
 public:
  PuzzleInstance() = default;

  PuzzleInstance(Mode mode, int height, int width, std::vector<Tile> tiles,
                 std::optional<ReductionMeta> meta = std::nullopt)
      : mode_(mode), h_(height), w_(width), tiles_(std::move(tiles)),
        meta_(std::move(meta)) {
    if (h_ < 1 || w_ < 1) throw Error(ErrorKind::contract, "empty board");
    if (static_cast<long long>(h_) * w_ !=
        static_cast<long long>(tiles_.size())) {
      throw Error(ErrorKind::contract,
                  "tile count " + std::to_string(tiles_.size()) +
                      " differs from board size " + std::to_string(h_) + "x" +
                      std::to_string(w_));
    }
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
      for (const auto& e : tiles_[i].edges) {
        if (!e.fits(mode_)) {
          throw Error(ErrorKind::contract, "label '" + e.str() +
                                               "' mixes signed and unsigned");
        }
        if (e.color.empty()) throw Error(ErrorKind::contract, "empty color");
      }
      if (!index_.emplace(tiles_[i].id, static_cast<int>(i)).second) {
        throw Error(ErrorKind::contract,
                    "duplicate tile id " + std::to_string(tiles_[i].id));
      }
    }
  }

  Mode mode() const { return mode_; }
  int height() const { return h_; }
  int width() const { return w_; }
  int size() const { return static_cast<int>(tiles_.size()); }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const Tile& tile(int index) const {
    return tiles_[static_cast<std::size_t>(index)];
  }
  const std::optional<ReductionMeta>& meta() const { return meta_; }

  // Index into tiles() for a tile id, or -1.
  int index_of(int id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
  }
  const Tile& by_id(int id) const {
    int i = index_of(id);
    if (i < 0) {
      throw Error(ErrorKind::invalid_witness,
                  "unknown tile id " + std::to_string(id));
    }
    return tile(i);
  }

  friend bool operator==(const PuzzleInstance& a, const PuzzleInstance& b) {
    return a.mode_ == b.mode_ && a.h_ == b.h_ && a.w_ == b.w_ &&
           a.tiles_ == b.tiles_ && a.meta_ == b.meta_;
  }

 private:
  Mode mode_ = Mode::Unsigned;
  int h_ = 0;
  int w_ = 0;
  std::vector<Tile> tiles_;
  std::optional<ReductionMeta> meta_;
  std::unordered_map<int, int> index_;
};

struct Placement {
  int tile_id = 0;
  int rotation = 0;
  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Tiling {
  int height = 1;
  int width = 0;
  std::vector<std::optional<Placement>> slots;  // row-major

  static Tiling empty(int h, int w) {
    return Tiling{h, w,
                  std::vector<std::optional<Placement>>(
                      static_cast<std::size_t>(h) * static_cast<std::size_t>(w))};
  }
  int placed() const {
    return static_cast<int>(
        std::count_if(slots.begin(), slots.end(),
                      [](const auto& s) { return s.has_value(); }));
  }
  int blanks() const { return static_cast<int>(slots.size()) - placed(); }

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

// The same board turned 180 degrees.
inline Tiling rotate_half_turn(const Tiling& t) {
  Tiling out = t;
  std::reverse(out.slots.begin(), out.slots.end());
  for (auto& s : out.slots) {
    if (s) s->rotation = (s->rotation + 2) % 4;
  }
  return out;
}

// ---------------------------------------------------------------------------
// CNF formulas
// ---------------------------------------------------------------------------

struct Literal {
  int var = 0;  // 0-based
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  void validate() const {
    if (num_vars < 0) throw Error(ErrorKind::contract, "negative var count");
    for (const auto& c : clauses) {
      if (c.empty() || c.size() > 3) {
        throw Error(ErrorKind::contract, "clause length must be 1..3");
      }
      for (const auto& l : c) {
        if (l.var < 0 || l.var >= num_vars) {
          throw Error(ErrorKind::contract, "literal variable out of range");
        }
      }
    }
  }
  int clause_count() const { return static_cast<int>(clauses.size()); }
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

struct Assignment {
  std::vector<bool> values;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// ---------------------------------------------------------------------------
// Gap constants
// ---------------------------------------------------------------------------

using Rational = boost::rational<std::int64_t>;

// Thresholds of the gap chain. Each alpha is the exclusive supremum: the
// hardness statements hold for every strictly smaller constant.
struct GapParams {
  Rational alpha_3sat;
  Rational alpha_mpc;
  Rational alpha_emp;

  Rational placement_factor() const { return Rational(1) - alpha_emp; }
  Rational path_cover_factor() const { return Rational(1) - alpha_mpc; }
};

}  // namespace tilegap
