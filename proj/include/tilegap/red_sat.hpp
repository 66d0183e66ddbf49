#pragma once

// Max-3SAT(29) -> Max vertex-disjoint path cover(2) via variable, clause and
// XOR gadgets.
//
// XOR line, internal vertices 0..7 (A = 0, B = 5, C = 4, D = 1):
//
//        a            c
//        |            |
//        v            v
//   +--> 0 --> 1      4 --> 5
//   |          |      ^     |
//   |          v      |     v
//   3 <------- 2 <--- 7 <-- 6
//   |                       ^
//   +-----------------------+
//
//   arcs 0-1 1-2 2-3 3-6 6-7 7-4 4-5 5-6 7-2 3-0, stubs a->0, 5->b, c->4, 1->d
//   L side  a 0 1 2 3 6 7 4 5 b
//   R side  c 4 5 6 7 2 3 0 1 d
// With no endpoint among 0..7 a cover uses exactly one of the two sides.
//
// Variable x: T -> C(int) ... D(int) -> positive occurrences' L sides -> Bt
//             T -> A(int) ... B(int) -> negative occurrences' L sides -> Bt
// The branch taken at T is the truth value; the internal XOR keeps the other
// branch from being walked as well.
//
// Clause with spine r0 r1 r2 r3 and region a1 b1 a2 b2 a3 b3:
//   r(p-1) -> C(occ p) ... D(occ p) -> r(p)   literal p false
//   r(p-1) -> a(p)  ~~~>  b(p)      -> r(p)   literal p true
//   a1 -> a2 -> a3 -> a1,  b1 -> b3 -> b2 -> b1,  a(p) -> b(p)
// Any nonempty set of true positions splits the region into a(p) ~> b(p)
// paths; with none true the region is cut off and must hold endpoints.
//
// Chain: s -> T1, Bt(i) -> T(i+1), Bt(n) -> r0 of clause 1,
//        r3 of clause j -> r0 of clause j+1, r3 of the last clause -> t.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tilegap/core.hpp"
#include "tilegap/graph.hpp"
#include "tilegap/sat.hpp"

namespace tilegap {

inline constexpr int kOccurrenceBound = 29;

struct XorLine {
  std::array<int, 8> vertices{};  // graph ids of internal vertices 0..7
  int l_entry() const { return vertices[0]; }
  int l_exit() const { return vertices[5]; }
  int r_entry() const { return vertices[4]; }
  int r_exit() const { return vertices[1]; }

  // Internal arcs in local numbering.
  static constexpr std::array<std::pair<int, int>, 10> kArcs{{
      {0, 1}, {1, 2}, {2, 3}, {3, 6}, {6, 7}, {7, 4}, {4, 5}, {5, 6}, {7, 2}, {3, 0}}};
  static constexpr std::array<int, 8> kLeftWalk{0, 1, 2, 3, 6, 7, 4, 5};
  static constexpr std::array<int, 8> kRightWalk{4, 5, 6, 7, 2, 3, 0, 1};

  std::vector<int> walk(bool left_side) const {
    std::vector<int> out;
    for (int k : left_side ? kLeftWalk : kRightWalk) {
      out.push_back(vertices[static_cast<std::size_t>(k)]);
    }
    return out;
  }
};

struct Occurrence {
  int clause = 0;
  int position = 0;  // 0..2
  Literal literal;
  int xor_line = 0;  // index into GadgetLayout::xors
};

struct VariableGadget {
  int top = 0;       // T
  int bottom = 0;    // Bt
  int xor_line = 0;  // internal XOR
  std::pair<int, int> positive_edge;  // T -> C(int)
  std::pair<int, int> negative_edge;  // T -> A(int)
  std::vector<int> positive_occ, negative_occ;  // indices into occurrences
};

struct ClauseGadget {
  std::array<int, 4> spine{};
  std::array<int, 3> a{}, b{};
  std::array<int, 3> occ{};  // indices into occurrences
};

struct GadgetLayout {
  CnfFormula formula;  // padded to three literals per clause
  int source = 0;
  int sink = 0;
  std::vector<XorLine> xors;
  std::vector<Occurrence> occurrences;
  std::vector<VariableGadget> variables;
  std::vector<ClauseGadget> clauses;

  friend bool operator==(const GadgetLayout& x, const GadgetLayout& y) {
    auto key = [](const GadgetLayout& g) {
      std::vector<int> k{g.source, g.sink};
      for (const auto& x : g.xors) k.insert(k.end(), x.vertices.begin(), x.vertices.end());
      for (const auto& o : g.occurrences) {
        k.insert(k.end(), {o.clause, o.position, o.literal.var,
                           o.literal.positive ? 1 : 0, o.xor_line});
      }
      for (const auto& v : g.variables) {
        k.insert(k.end(), {v.top, v.bottom, v.xor_line});
        k.insert(k.end(), v.positive_occ.begin(), v.positive_occ.end());
        k.push_back(-1);
        k.insert(k.end(), v.negative_occ.begin(), v.negative_occ.end());
        k.push_back(-1);
      }
      for (const auto& c : g.clauses) {
        k.insert(k.end(), c.spine.begin(), c.spine.end());
        k.insert(k.end(), c.a.begin(), c.a.end());
        k.insert(k.end(), c.b.begin(), c.b.end());
        k.insert(k.end(), c.occ.begin(), c.occ.end());
      }
      return k;
    };
    return x.formula == y.formula && key(x) == key(y);
  }
};

struct TerritoryIndex {
  std::vector<std::vector<int>> variable;  // sorted vertex ids
  std::vector<std::vector<int>> clause;    // sorted vertex ids
  std::vector<int> owner;                  // vertex -> variable, or -1
};

struct SatReduction {
  Digraph graph;
  GadgetLayout layout;
  TerritoryIndex territories;
};

inline CnfFormula pad_clauses(const CnfFormula& f) {
  CnfFormula out = f;
  for (auto& c : out.clauses) {
    while (c.size() < 3) c.push_back(c.back());
  }
  return out;
}

namespace detail {

inline TerritoryIndex build_territories(const GadgetLayout& L, int num_vertices) {
  TerritoryIndex ti;
  ti.owner.assign(static_cast<std::size_t>(num_vertices), -1);
  for (std::size_t i = 0; i < L.variables.size(); ++i) {
    const auto& vg = L.variables[i];
    std::vector<int> vs{vg.top, vg.bottom};
    auto add_xor = [&](int x) {
      const auto& xv = L.xors[static_cast<std::size_t>(x)].vertices;
      vs.insert(vs.end(), xv.begin(), xv.end());
    };
    add_xor(vg.xor_line);
    for (int o : vg.positive_occ) add_xor(L.occurrences[static_cast<std::size_t>(o)].xor_line);
    for (int o : vg.negative_occ) add_xor(L.occurrences[static_cast<std::size_t>(o)].xor_line);
    std::sort(vs.begin(), vs.end());
    for (int v : vs) ti.owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    ti.variable.push_back(std::move(vs));
  }
  for (const auto& cg : L.clauses) {
    std::vector<int> vs(cg.spine.begin(), cg.spine.end());
    vs.insert(vs.end(), cg.a.begin(), cg.a.end());
    vs.insert(vs.end(), cg.b.begin(), cg.b.end());
    std::set<int> vars;
    for (int o : cg.occ) vars.insert(L.occurrences[static_cast<std::size_t>(o)].literal.var);
    for (int x : vars) {
      const auto& tv = ti.variable[static_cast<std::size_t>(x)];
      vs.insert(vs.end(), tv.begin(), tv.end());
    }
    std::sort(vs.begin(), vs.end());
    ti.clause.push_back(std::move(vs));
  }
  return ti;
}

}  // namespace detail

inline SatReduction build_vdpc(const CnfFormula& input) {
  input.validate();
  CnfFormula f = pad_clauses(input);
  if (!check_occurrence_bound(f, kOccurrenceBound)) {
    throw Error(ErrorKind::precondition,
                "a variable occurs more than 29 times (after padding)");
  }
  GadgetLayout L;
  L.formula = f;
  int next = 0;
  std::vector<std::pair<int, int>> edges;
  auto fresh = [&]() { return next++; };
  auto arc = [&](int u, int v) { edges.emplace_back(u, v); };
  auto new_xor = [&]() {
    XorLine x;
    for (auto& v : x.vertices) v = fresh();
    for (auto [u, v] : XorLine::kArcs) {
      arc(x.vertices[static_cast<std::size_t>(u)], x.vertices[static_cast<std::size_t>(v)]);
    }
    L.xors.push_back(x);
    return static_cast<int>(L.xors.size()) - 1;
  };

  L.source = fresh();
  for (int i = 0; i < f.num_vars; ++i) {
    VariableGadget vg;
    vg.top = fresh();
    vg.bottom = fresh();
    vg.xor_line = new_xor();
    L.variables.push_back(vg);
  }
  for (int j = 0; j < f.clause_count(); ++j) {
    ClauseGadget cg;
    for (auto& v : cg.spine) v = fresh();
    for (int p = 0; p < 3; ++p) {
      cg.a[static_cast<std::size_t>(p)] = fresh();
      cg.b[static_cast<std::size_t>(p)] = fresh();
    }
    for (int p = 0; p < 3; ++p) {
      Occurrence o{j, p, f.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)],
                   new_xor()};
      cg.occ[static_cast<std::size_t>(p)] = static_cast<int>(L.occurrences.size());
      auto& vg = L.variables[static_cast<std::size_t>(o.literal.var)];
      (o.literal.positive ? vg.positive_occ : vg.negative_occ)
          .push_back(cg.occ[static_cast<std::size_t>(p)]);
      L.occurrences.push_back(o);
    }
    L.clauses.push_back(cg);
  }
  L.sink = fresh();

  auto X = [&](int idx) -> const XorLine& { return L.xors[static_cast<std::size_t>(idx)]; };
  int cursor = L.source;
  for (auto& vg : L.variables) {
    const auto& in = X(vg.xor_line);
    arc(cursor, vg.top);
    vg.positive_edge = {vg.top, in.r_entry()};
    vg.negative_edge = {vg.top, in.l_entry()};
    arc(vg.top, in.r_entry());
    arc(vg.top, in.l_entry());
    auto chain = [&](int from, const std::vector<int>& occs) {
      for (int o : occs) {
        const auto& x = X(L.occurrences[static_cast<std::size_t>(o)].xor_line);
        arc(from, x.l_entry());
        from = x.l_exit();
      }
      arc(from, vg.bottom);
    };
    chain(in.r_exit(), vg.positive_occ);
    chain(in.l_exit(), vg.negative_occ);
    cursor = vg.bottom;
  }
  for (const auto& cg : L.clauses) {
    arc(cursor, cg.spine[0]);
    for (std::size_t p = 0; p < 3; ++p) {
      const auto& x = X(L.occurrences[static_cast<std::size_t>(cg.occ[p])].xor_line);
      arc(cg.spine[p], x.r_entry());
      arc(x.r_exit(), cg.spine[p + 1]);
      arc(cg.spine[p], cg.a[p]);
      arc(cg.b[p], cg.spine[p + 1]);
      arc(cg.a[p], cg.b[p]);
    }
    arc(cg.a[0], cg.a[1]);
    arc(cg.a[1], cg.a[2]);
    arc(cg.a[2], cg.a[0]);
    arc(cg.b[0], cg.b[2]);
    arc(cg.b[2], cg.b[1]);
    arc(cg.b[1], cg.b[0]);
    cursor = cg.spine[3];
  }
  arc(cursor, L.sink);

  SatReduction red{Digraph(next, std::move(edges), L.source, L.sink), L, {}};
  red.territories = detail::build_territories(red.layout, next);
  return red;
}

// |V| without s and t, as counted by the size bound 11n + 37m.
inline bool size_bound_ok(const SatReduction& red) {
  const auto& f = red.layout.formula;
  return red.graph.vertex_count() - 2 <= 11 * f.num_vars + 37 * f.clause_count();
}

inline bool territories_disjoint(const SatReduction& red) {
  std::vector<int> seen(static_cast<std::size_t>(red.graph.vertex_count()), 0);
  for (const auto& t : red.territories.variable) {
    for (int v : t) {
      if (seen[static_cast<std::size_t>(v)]++) return false;
    }
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (const auto& cg : red.layout.clauses) {
    for (const auto* part : {&cg.a, &cg.b}) {
      for (int v : *part) {
        if (seen[static_cast<std::size_t>(v)]++) return false;
      }
    }
    for (int v : cg.spine) {
      if (seen[static_cast<std::size_t>(v)]++) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Endpoint-free covers of a small gadget
// ---------------------------------------------------------------------------

// All arc subsets of h that form vertex-disjoint paths in which every vertex
// of `internal` has both a predecessor and a successor. Exhaustive, so meant
// for gadgets only.
inline std::vector<std::vector<std::pair<int, int>>> enumerate_endpoint_free_covers(
    const Digraph& h, const std::vector<int>& internal) {
  const auto& arcs = h.edges();
  if (arcs.size() > 24) {
    throw Error(ErrorKind::size_limit, "gadget enumeration limited to 24 arcs");
  }
  const int nv = h.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint32_t mask = 0; mask < (1u << arcs.size()); ++mask) {
    std::vector<int> succ(static_cast<std::size_t>(nv), -1), pred(static_cast<std::size_t>(nv), -1);
    bool ok = true;
    for (std::size_t k = 0; k < arcs.size() && ok; ++k) {
      if (!(mask >> k & 1u)) continue;
      auto [u, v] = arcs[k];
      if (succ[static_cast<std::size_t>(u)] >= 0 || pred[static_cast<std::size_t>(v)] >= 0) ok = false;
      succ[static_cast<std::size_t>(u)] = v;
      pred[static_cast<std::size_t>(v)] = u;
    }
    if (!ok) continue;
    for (int v : internal) {
      if (succ[static_cast<std::size_t>(v)] < 0 || pred[static_cast<std::size_t>(v)] < 0) ok = false;
    }
    if (!ok) continue;
    for (int v = 0; v < nv && ok; ++v) {  // reject cycles
      int x = v;
      for (int steps = 0; x >= 0 && steps <= nv; ++steps) {
        x = succ[static_cast<std::size_t>(x)];
        if (x == v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> chosen;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (mask >> k & 1u) chosen.push_back(arcs[k]);
    }
    out.push_back(std::move(chosen));
  }
  return out;
}

// An isolated XOR line with stub vertices a=8 -> A, B -> b=9, c=10 -> C,
// D -> d=11. Internal vertices are 0..7.
inline Digraph xor_gadget_graph() {
  std::vector<std::pair<int, int>> e(XorLine::kArcs.begin(), XorLine::kArcs.end());
  e.emplace_back(8, 0);
  e.emplace_back(5, 9);
  e.emplace_back(10, 4);
  e.emplace_back(1, 11);
  return Digraph(12, std::move(e), 8, 9);
}

// The two expected configurations of xor_gadget_graph(), as sorted arc lists.
inline std::array<std::vector<std::pair<int, int>>, 2> xor_expected_configs() {
  std::array<std::vector<std::pair<int, int>>, 2> out;
  auto walk = [](int in, const std::array<int, 8>& w, int outv) {
    std::vector<std::pair<int, int>> arcs{{in, w[0]}};
    for (std::size_t k = 1; k < w.size(); ++k) arcs.emplace_back(w[k - 1], w[k]);
    arcs.emplace_back(w.back(), outv);
    std::sort(arcs.begin(), arcs.end());
    return arcs;
  };
  out[0] = walk(8, XorLine::kLeftWalk, 9);
  out[1] = walk(10, XorLine::kRightWalk, 11);
  return out;
}

// ---------------------------------------------------------------------------
// Lift and extraction
// ---------------------------------------------------------------------------

namespace detail {

// Paths a(p) ~> b(p) for each p in `positions` (nonempty) covering the six
// region vertices, found by DFS over the region's arcs. Local indices: a(p) =
// 2p, b(p) = 2p+1. Returns successor arcs.
inline std::vector<std::pair<int, int>> clause_region_paths(
    const std::vector<int>& positions) {
  static const std::vector<std::pair<int, int>> arcs{
      {0, 1}, {2, 3}, {4, 5}, {0, 2}, {2, 4}, {4, 0}, {1, 5}, {5, 3}, {3, 1}};
  std::vector<char> used(6, 0);
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto&& self, std::size_t idx, int cur) -> bool {
    int target = 2 * positions[idx] + 1;
    if (cur == target) {
      if (idx + 1 == positions.size()) {
        return std::all_of(used.begin(), used.end(), [](char c) { return c; });
      }
      int a = 2 * positions[idx + 1];
      if (used[static_cast<std::size_t>(a)]) return false;
      used[static_cast<std::size_t>(a)] = 1;
      if (self(self, idx + 1, a)) return true;
      used[static_cast<std::size_t>(a)] = 0;
      return false;
    }
    for (auto [u, v] : arcs) {
      if (u != cur || used[static_cast<std::size_t>(v)]) continue;
      // another requested start or end may not be passed through
      bool reserved = false;
      for (int p : positions) {
        if (p != positions[idx] && (v == 2 * p || v == 2 * p + 1)) reserved = true;
      }
      if (reserved) continue;
      used[static_cast<std::size_t>(v)] = 1;
      chosen.emplace_back(u, v);
      if (self(self, idx, v)) return true;
      chosen.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  int a0 = 2 * positions[0];
  used[static_cast<std::size_t>(a0)] = 1;
  if (!rec(rec, 0, a0)) {
    throw Error(ErrorKind::internal, "clause region cannot be split");
  }
  return chosen;
}

}  // namespace detail

inline PathCover lift_assignment(const SatReduction& red, const Assignment& a) {
  const auto& L = red.layout;
  if (static_cast<int>(a.values.size()) != L.formula.num_vars) {
    throw Error(ErrorKind::contract, "assignment length differs from variable count");
  }
  std::vector<int> succ(static_cast<std::size_t>(red.graph.vertex_count()), -1);
  auto link = [&](int u, int v) { succ[static_cast<std::size_t>(u)] = v; };
  auto run = [&](const std::vector<int>& w) {
    for (std::size_t k = 1; k < w.size(); ++k) link(w[k - 1], w[k]);
  };
  auto X = [&](int idx) -> const XorLine& { return L.xors[static_cast<std::size_t>(idx)]; };
  auto occ_true = [&](int o) {
    const auto& lit = L.occurrences[static_cast<std::size_t>(o)].literal;
    return a.values[static_cast<std::size_t>(lit.var)] == lit.positive;
  };

  int cursor = L.source;
  for (std::size_t i = 0; i < L.variables.size(); ++i) {
    const auto& vg = L.variables[i];
    const auto& in = X(vg.xor_line);
    bool val = a.values[i];
    link(cursor, vg.top);
    // the true branch walks the internal XOR's R side
    link(vg.top, val ? in.r_entry() : in.l_entry());
    auto w = in.walk(!val);
    run(w);
    int from = w.back();
    for (int o : val ? vg.positive_occ : vg.negative_occ) {
      auto ow = X(L.occurrences[static_cast<std::size_t>(o)].xor_line).walk(true);
      link(from, ow.front());
      run(ow);
      from = ow.back();
    }
    link(from, vg.bottom);
    cursor = vg.bottom;
  }
  for (const auto& cg : L.clauses) {
    link(cursor, cg.spine[0]);
    std::vector<int> truep;
    for (int p = 0; p < 3; ++p) {
      if (occ_true(cg.occ[static_cast<std::size_t>(p)])) truep.push_back(p);
    }
    auto region = [&](int local) {
      return local % 2 == 0 ? cg.a[static_cast<std::size_t>(local / 2)]
                            : cg.b[static_cast<std::size_t>(local / 2)];
    };
    for (std::size_t p = 0; p < 3; ++p) {
      if (occ_true(cg.occ[p])) {
        link(cg.spine[p], cg.a[p]);
        link(cg.b[p], cg.spine[p + 1]);
      } else {
        auto w = X(L.occurrences[static_cast<std::size_t>(cg.occ[p])].xor_line).walk(false);
        link(cg.spine[p], w.front());
        run(w);
        link(w.back(), cg.spine[p + 1]);
      }
    }
    if (truep.empty()) {
      // cut-off region: one extra path a1 a2 a3 b3 b2 b1
      run({cg.a[0], cg.a[1], cg.a[2], cg.b[2], cg.b[1], cg.b[0]});
    } else {
      for (auto [u, v] : detail::clause_region_paths(truep)) link(region(u), region(v));
    }
    cursor = cg.spine[3];
  }
  link(cursor, L.sink);
  PathCover c = cover_from_successors(succ);
  verify_path_cover(red.graph, c);
  return c;
}

// Endpoints of the cover other than s and t.
inline std::vector<int> inner_endpoints(const SatReduction& red, const PathCover& c) {
  std::vector<int> out;
  for (int v : cover_endpoints(c)) {
    if (v != red.layout.source && v != red.layout.sink) out.push_back(v);
  }
  return out;
}

// Reads x = true from the arc T -> C(int) for every variable whose territory
// holds no endpoint; all other variables are set false.
inline Assignment extract_assignment(const SatReduction& red, const PathCover& c) {
  verify_path_cover(red.graph, c);
  const auto& L = red.layout;
  std::vector<char> touched(L.variables.size(), 0);
  for (int v : inner_endpoints(red, c)) {
    int owner = red.territories.owner[static_cast<std::size_t>(v)];
    if (owner >= 0) touched[static_cast<std::size_t>(owner)] = 1;
  }
  std::vector<int> succ(static_cast<std::size_t>(red.graph.vertex_count()), -1);
  for (const auto& p : c.paths) {
    for (std::size_t k = 1; k < p.size(); ++k) succ[static_cast<std::size_t>(p[k - 1])] = p[k];
  }
  Assignment a;
  a.values.assign(L.variables.size(), false);
  for (std::size_t i = 0; i < L.variables.size(); ++i) {
    if (touched[i]) continue;
    const auto& [t, c_int] = L.variables[i].positive_edge;
    a.values[i] = succ[static_cast<std::size_t>(t)] == c_int;
  }
  return a;
}

inline Rational derive_alpha_mpc(const Rational& alpha_3sat) {
  if (alpha_3sat < 0 || alpha_3sat > 1) {
    throw Error(ErrorKind::contract, "alpha_3sat must lie in [0, 1]");
  }
  return alpha_3sat / 4060;
}

// The full chain starting from the Max-3SAT(29) threshold 1/344.
inline GapParams gap_chain(const Rational& alpha_3sat = Rational(1, 344)) {
  GapParams g;
  g.alpha_3sat = alpha_3sat;
  g.alpha_mpc = derive_alpha_mpc(alpha_3sat);
  g.alpha_emp = g.alpha_mpc / 48;
  return g;
}

}  // namespace tilegap
