#pragma once

// Text formats (one record per line, '#' starts a comment) and the JSON
// metadata sidecar.
//
//   dgraph <|V|> <|E|> s=<id> t=<id>      e <u> <v>          (1-based ids)
//   emp <unsigned|signed> h=<h> w=<w>     tile <id> <l> <t> <r> <b>
//   tiling <h> <w>                        . | <id> r<0..3>   (one per slot)
//   path <v1> <v2> ...
//   assign <0|1>...

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilegap/core.hpp"
#include "tilegap/red_ham.hpp"
#include "tilegap/red_sat.hpp"

namespace tilegap {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what, int line) {
  throw Error(ErrorKind::parse,
              what + (line > 0 ? " (line " + std::to_string(line) + ")" : ""));
}

// Non-empty lines with comments stripped, tokenized.
struct Record {
  int line = 0;
  std::vector<std::string> tok;
};

inline std::vector<Record> records(const std::string& text) {
  std::vector<Record> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Record r{no, {}};
    std::string t;
    while (ls >> t) r.tok.push_back(t);
    if (!r.tok.empty()) out.push_back(std::move(r));
  }
  return out;
}

inline long long to_int(const std::string& s, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    parse_fail("expected an integer, got '" + s + "'", line);
  }
  if (used != s.size()) parse_fail("expected an integer, got '" + s + "'", line);
  return v;
}

inline long long keyed_int(const std::string& tok, const std::string& key,
                           int line) {
  if (tok.rfind(key + "=", 0) != 0) parse_fail("expected '" + key + "=<n>'", line);
  return to_int(tok.substr(key.size() + 1), line);
}

inline EdgeLabel parse_label(const std::string& tok, Mode mode, int line) {
  if (mode == Mode::Unsigned) return EdgeLabel::plain(tok);
  if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
    parse_fail("signed label '" + tok + "' needs a +/- prefix", line);
  }
  return {tok.substr(1), tok[0] == '+' ? Sign::plus : Sign::minus};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Digraph
// ---------------------------------------------------------------------------

inline std::string write_digraph(const Digraph& g) {
  std::ostringstream out;
  out << "dgraph " << g.vertex_count() << ' ' << g.edge_count()
      << " s=" << g.source() + 1 << " t=" << g.sink() + 1 << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

inline Digraph parse_digraph(const std::string& text) {
  auto rec = detail::records(text);
  if (rec.empty() || rec[0].tok[0] != "dgraph" || rec[0].tok.size() != 5) {
    detail::parse_fail("missing 'dgraph <V> <E> s=<id> t=<id>' header", 0);
  }
  const auto& h = rec[0];
  long long nv = detail::to_int(h.tok[1], h.line);
  long long ne = detail::to_int(h.tok[2], h.line);
  long long s = detail::keyed_int(h.tok[3], "s", h.line);
  long long t = detail::keyed_int(h.tok[4], "t", h.line);
  if (nv < 1) detail::parse_fail("digraph needs at least one vertex", h.line);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 1; k < rec.size(); ++k) {
    const auto& r = rec[k];
    if (r.tok[0] != "e" || r.tok.size() != 3) detail::parse_fail("expected 'e <u> <v>'", r.line);
    long long u = detail::to_int(r.tok[1], r.line);
    long long v = detail::to_int(r.tok[2], r.line);
    if (u < 1 || u > nv || v < 1 || v > nv) detail::parse_fail("vertex id out of range", r.line);
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (static_cast<long long>(edges.size()) != ne) {
    detail::parse_fail("header declares " + std::to_string(ne) + " edges, found " +
                           std::to_string(edges.size()),
                       h.line);
  }
  if (s < 1 || s > nv || t < 1 || t > nv) detail::parse_fail("s/t out of range", h.line);
  try {
    return Digraph(static_cast<int>(nv), std::move(edges), static_cast<int>(s - 1),
                   static_cast<int>(t - 1));
  } catch (const Error& e) {
    detail::parse_fail(e.what(), h.line);
  }
}

// ---------------------------------------------------------------------------
// Puzzle
// ---------------------------------------------------------------------------

inline std::string write_puzzle(const PuzzleInstance& p) {
  std::ostringstream out;
  out << "emp " << mode_name(p.mode()) << " h=" << p.height() << " w=" << p.width() << '\n';
  for (const auto& t : p.tiles()) {
    out << "tile " << t.id;
    for (const auto& e : t.edges) out << ' ' << e.str();
    out << '\n';
  }
  return out.str();
}

inline PuzzleInstance parse_puzzle(const std::string& text) {
  auto rec = detail::records(text);
  if (rec.empty() || rec[0].tok[0] != "emp" || rec[0].tok.size() != 4) {
    detail::parse_fail("missing 'emp <mode> h=<h> w=<w>' header", 0);
  }
  const auto& h = rec[0];
  Mode mode;
  if (h.tok[1] == "unsigned") {
    mode = Mode::Unsigned;
  } else if (h.tok[1] == "signed") {
    mode = Mode::Signed;
  } else {
    detail::parse_fail("mode must be 'unsigned' or 'signed'", h.line);
  }
  long long hh = detail::keyed_int(h.tok[2], "h", h.line);
  long long ww = detail::keyed_int(h.tok[3], "w", h.line);
  std::vector<Tile> tiles;
  for (std::size_t k = 1; k < rec.size(); ++k) {
    const auto& r = rec[k];
    if (r.tok[0] != "tile" || r.tok.size() != 6) {
      detail::parse_fail("expected 'tile <id> <left> <top> <right> <bottom>'", r.line);
    }
    Tile t;
    t.id = static_cast<int>(detail::to_int(r.tok[1], r.line));
    for (int s = 0; s < 4; ++s) {
      t.edges[static_cast<std::size_t>(s)] =
          detail::parse_label(r.tok[static_cast<std::size_t>(s + 2)], mode, r.line);
    }
    tiles.push_back(std::move(t));
  }
  try {
    return PuzzleInstance(mode, static_cast<int>(hh), static_cast<int>(ww), std::move(tiles));
  } catch (const Error& e) {
    detail::parse_fail(e.what(), h.line);
  }
}

// ---------------------------------------------------------------------------
// Tiling, cover, assignment
// ---------------------------------------------------------------------------

inline std::string write_tiling(const Tiling& t) {
  std::ostringstream out;
  out << "tiling " << t.height << ' ' << t.width << '\n';
  for (const auto& s : t.slots) {
    if (s) {
      out << s->tile_id << " r" << s->rotation << '\n';
    } else {
      out << ".\n";
    }
  }
  return out.str();
}

inline Tiling parse_tiling(const std::string& text) {
  auto rec = detail::records(text);
  if (rec.empty() || rec[0].tok[0] != "tiling" || rec[0].tok.size() != 3) {
    detail::parse_fail("missing 'tiling <h> <w>' header", 0);
  }
  long long h = detail::to_int(rec[0].tok[1], rec[0].line);
  long long w = detail::to_int(rec[0].tok[2], rec[0].line);
  if (h < 1 || w < 1) detail::parse_fail("empty board", rec[0].line);
  Tiling t{static_cast<int>(h), static_cast<int>(w), {}};
  for (std::size_t k = 1; k < rec.size(); ++k) {
    const auto& r = rec[k];
    if (r.tok.size() == 1 && r.tok[0] == ".") {
      t.slots.emplace_back();
      continue;
    }
    if (r.tok.size() != 2 || r.tok[1].size() != 2 || r.tok[1][0] != 'r' ||
        r.tok[1][1] < '0' || r.tok[1][1] > '3') {
      detail::parse_fail("expected '.' or '<tile> r<0..3>'", r.line);
    }
    t.slots.push_back(Placement{static_cast<int>(detail::to_int(r.tok[0], r.line)),
                                r.tok[1][1] - '0'});
  }
  if (static_cast<long long>(t.slots.size()) != h * w) {
    detail::parse_fail("tiling lists " + std::to_string(t.slots.size()) + " slots for " +
                           std::to_string(h) + "x" + std::to_string(w),
                       rec[0].line);
  }
  return t;
}

inline std::string write_cover(const PathCover& c) {
  std::ostringstream out;
  for (const auto& p : c.paths) {
    out << "path";
    for (int v : p) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

inline PathCover parse_cover(const std::string& text) {
  PathCover c;
  for (const auto& r : detail::records(text)) {
    if (r.tok[0] != "path" || r.tok.size() < 2) detail::parse_fail("expected 'path <v>...'", r.line);
    std::vector<int> p;
    for (std::size_t k = 1; k < r.tok.size(); ++k) {
      long long v = detail::to_int(r.tok[k], r.line);
      if (v < 1) detail::parse_fail("vertex ids are 1-based", r.line);
      p.push_back(static_cast<int>(v - 1));
    }
    c.paths.push_back(std::move(p));
  }
  return c;
}

inline std::string write_assignment(const Assignment& a) {
  std::string s = "assign ";
  for (bool b : a.values) s += b ? '1' : '0';
  return s + '\n';
}

inline Assignment parse_assignment(const std::string& text) {
  auto rec = detail::records(text);
  if (rec.size() != 1 || rec[0].tok[0] != "assign" || rec[0].tok.size() > 2) {
    detail::parse_fail("expected a single 'assign <bits>' line", rec.empty() ? 0 : rec[0].line);
  }
  Assignment a;
  if (rec[0].tok.size() == 2) {
    for (char ch : rec[0].tok[1]) {
      if (ch != '0' && ch != '1') detail::parse_fail("assignment bits must be 0 or 1", rec[0].line);
      a.values.push_back(ch == '1');
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Sidecar metadata
// ---------------------------------------------------------------------------

inline json digraph_json(const Digraph& g) {
  json e = json::array();
  for (auto [u, v] : g.edges()) e.push_back({u, v});
  return {{"vertices", g.vertex_count()}, {"s", g.source()}, {"t", g.sink()}, {"edges", e}};
}

inline Digraph digraph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Digraph(j.at("vertices").get<int>(), std::move(edges), j.at("s").get<int>(),
                 j.at("t").get<int>());
}

inline json meta_json(const ReductionMeta& m, Mode mode) {
  return {{"kind", "emp"},
          {"mode", mode_name(mode)},
          {"source_graph", digraph_json(m.source_graph)},
          {"in_color", m.in_color},
          {"out_color", m.out_color},
          {"unmatched_color", m.unmatched_color},
          {"garbage_color", m.garbage_color},
          {"bridge_color", m.bridge_color},
          {"vertex_tile", m.vertex_tile},
          {"edge_tile", m.edge_tile},
          {"bridge_tile", m.bridge_tile}};
}

inline ReductionMeta meta_from_json(const json& j) {
  ReductionMeta m;
  m.source_graph = digraph_from_json(j.at("source_graph"));
  m.in_color = j.at("in_color").get<std::vector<std::string>>();
  m.out_color = j.at("out_color").get<std::vector<std::string>>();
  m.unmatched_color = j.at("unmatched_color").get<std::vector<std::string>>();
  m.garbage_color = j.at("garbage_color").get<std::string>();
  m.bridge_color = j.at("bridge_color").get<std::string>();
  m.vertex_tile = j.at("vertex_tile").get<std::vector<int>>();
  m.edge_tile = j.at("edge_tile").get<std::vector<int>>();
  m.bridge_tile = j.at("bridge_tile").get<int>();
  return m;
}

// Reattaches sidecar metadata to a parsed puzzle. The construction is
// replayed from the recorded graph, and a puzzle that no longer matches it is
// reported as stale.
inline PuzzleInstance attach_meta(const PuzzleInstance& p, const json& j) {
  try {
    if (j.at("kind") != "emp") throw Error(ErrorKind::contract, "sidecar is not a puzzle sidecar");
    ReductionMeta m = meta_from_json(j);
    PuzzleInstance rebuilt = detail::build_reduction(m.source_graph, p.mode());
    // parsed tiles carry no kind, so only ids and labels are compared
    auto same_labels = [](const Tile& a, const Tile& b) { return a.id == b.id && a.edges == b.edges; };
    if (!std::equal(rebuilt.tiles().begin(), rebuilt.tiles().end(), p.tiles().begin(),
                    p.tiles().end(), same_labels) ||
        !(*rebuilt.meta() == m) ||
        p.height() != rebuilt.height() || p.width() != rebuilt.width()) {
      throw Error(ErrorKind::contract, "metadata sidecar is stale for this puzzle");
    }
    return rebuilt;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad sidecar: ") + e.what());
  }
}

inline json layout_json(const GadgetLayout& L) {
  json clauses = json::array();
  for (const auto& c : L.formula.clauses) {
    json lits = json::array();
    for (const auto& l : c) lits.push_back(l.positive ? l.var + 1 : -(l.var + 1));
    clauses.push_back(lits);
  }
  json xors = json::array();
  for (const auto& x : L.xors) xors.push_back(x.vertices);
  json vars = json::array();
  for (const auto& v : L.variables) {
    vars.push_back({{"top", v.top}, {"bottom", v.bottom}, {"xor", v.xor_line},
                    {"positive_occ", v.positive_occ}, {"negative_occ", v.negative_occ}});
  }
  json occ = json::array();
  for (const auto& o : L.occurrences) {
    occ.push_back({{"clause", o.clause}, {"position", o.position}, {"xor", o.xor_line}});
  }
  json cls = json::array();
  for (const auto& c : L.clauses) {
    cls.push_back({{"spine", c.spine}, {"a", c.a}, {"b", c.b}, {"occ", c.occ}});
  }
  return {{"kind", "sat2vdpc"}, {"num_vars", L.formula.num_vars}, {"formula", clauses},
          {"s", L.source},      {"t", L.sink},                    {"xors", xors},
          {"variables", vars},  {"occurrences", occ},             {"clauses", cls}};
}

// Rebuilds the reduction from the recorded (padded) formula and checks that
// the stored layout and the given graph still agree with it.
inline SatReduction reduction_from_json(const json& j, const Digraph& g) {
  try {
    if (j.at("kind") != "sat2vdpc") {
      throw Error(ErrorKind::contract, "sidecar is not a sat2vdpc sidecar");
    }
    CnfFormula f;
    f.num_vars = j.at("num_vars").get<int>();
    for (const auto& c : j.at("formula")) {
      std::vector<Literal> lits;
      for (const auto& x : c) {
        int v = x.get<int>();
        lits.push_back({(v > 0 ? v : -v) - 1, v > 0});
      }
      f.clauses.push_back(std::move(lits));
    }
    SatReduction red = build_vdpc(f);
    if (!(red.graph == g) || layout_json(red.layout) != j) {
      throw Error(ErrorKind::contract, "metadata sidecar is stale for this graph");
    }
    return red;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad sidecar: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::contract, "cannot write '" + path + "'");
  out << body;
}

// Board rendering for `dump --ascii`: each tile as a 3-line cell.
inline std::string render_ascii(const PuzzleInstance& p, const Tiling& t) {
  const int w = t.width;
  std::string out;
  for (int r = 0; r < t.height; ++r) {
    std::size_t cw = 3;
    std::vector<std::array<std::string, 4>> cells;
    for (int c = 0; c < w; ++c) {
      const auto& s = t.slots[static_cast<std::size_t>(r * w + c)];
      std::array<std::string, 4> cell{"", "", "", ""};
      if (s) {
        const Tile& tile = p.by_id(s->tile_id);
        for (int side = 0; side < 4; ++side) {
          cell[static_cast<std::size_t>(side)] = tile.at(s->rotation, side).str();
        }
        cw = std::max({cw, cell[kTop].size(), cell[kBottom].size(),
                       cell[kLeft].size() + cell[kRight].size() + 4 +
                           std::to_string(s->tile_id).size()});
      }
      cells.push_back(cell);
    }
    auto pad = [](const std::string& x, std::size_t n) {
      std::size_t l = (n - x.size()) / 2;
      return std::string(l, ' ') + x + std::string(n - x.size() - l, ' ');
    };
    std::string l1, l2, l3;
    for (int c = 0; c < w; ++c) {
      const auto& s = t.slots[static_cast<std::size_t>(r * w + c)];
      const auto& cell = cells[static_cast<std::size_t>(c)];
      if (!s) {
        l1 += "|" + std::string(cw, ' ');
        l2 += "|" + pad(".", cw);
        l3 += "|" + std::string(cw, ' ');
        continue;
      }
      std::string id = std::to_string(s->tile_id);
      std::string middle = cell[kLeft] + " ";
      middle += pad(id, cw - cell[kLeft].size() - cell[kRight].size() - 2);
      middle += " " + cell[kRight];
      l1 += "|" + pad(cell[kTop], cw);
      l2 += "|" + middle;
      l3 += "|" + pad(cell[kBottom], cw);
    }
    out += l1 + "|\n" + l2 + "|\n" + l3 + "|\n";
  }
  return out;
}

}  // namespace tilegap
