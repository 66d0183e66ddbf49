#pragma once

// The `tilegap` command line: reduce, solve, lift, extract, gen, verify, dump.
//
// Exit codes: 0 ok, 1 invalid witness, 2 precondition / size / usage,
// 3 budget exhausted (indeterminate), 4 parse error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tilegap/core.hpp"
#include "tilegap/gen.hpp"
#include "tilegap/graph.hpp"
#include "tilegap/io.hpp"
#include "tilegap/puzzle.hpp"
#include "tilegap/red_ham.hpp"
#include "tilegap/red_sat.hpp"
#include "tilegap/red_vdpc.hpp"
#include "tilegap/sat.hpp"

namespace tilegap {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitPrecondition = 2,
  kExitBudget = 3,
  kExitParse = 4,
};

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_witness: return kExitInvalid;
    case ErrorKind::parse: return kExitParse;
    default: return kExitPrecondition;
  }
}

namespace detail {

struct CliContext {
  std::ostream& out;
  std::ostream& err;
};

inline std::string sidecar(const std::string& path) { return path + ".meta"; }

inline json load_sidecar(const std::string& instance_path) {
  std::string p = sidecar(instance_path);
  std::string body;
  try {
    body = read_file(p);
  } catch (const Error&) {
    throw Error(ErrorKind::contract, "missing metadata sidecar '" + p + "'");
  }
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, "bad sidecar '" + p + "': " + e.what());
  }
}

inline PuzzleInstance load_reduced_puzzle(const std::string& path) {
  return attach_meta(parse_puzzle(read_file(path)), load_sidecar(path));
}

inline SatReduction load_reduced_graph(const std::string& path) {
  return reduction_from_json(load_sidecar(path), parse_digraph(read_file(path)));
}

// Writes to `path`, or to the context's stdout when empty.
inline void emit(CliContext& ctx, const std::string& path, const std::string& body) {
  if (path.empty()) {
    ctx.out << body;
  } else {
    write_file(path, body);
  }
}

inline void require_output(const std::string& path, const char* what) {
  if (path.empty()) {
    throw Error(ErrorKind::precondition, std::string(what) + " needs -o <file>");
  }
}

inline Mode parse_mode(const std::string& m) {
  if (m == "unsigned") return Mode::Unsigned;
  if (m == "signed") return Mode::Signed;
  throw Error(ErrorKind::precondition, "mode must be unsigned or signed");
}

inline void cmd_reduce(CliContext& ctx, const std::string& kind, const std::string& input,
                       const std::string& output, const std::string& mode) {
  require_output(output, "reduce");
  if (kind == "sat2vdpc") {
    auto red = build_vdpc(parse_dimacs(read_file(input)));
    write_file(output, write_digraph(red.graph));
    write_file(sidecar(output), layout_json(red.layout).dump(1) + "\n");
    ctx.out << "vertices=" << red.graph.vertex_count() << " edges=" << red.graph.edge_count()
            << "\n";
    return;
  }
  if (kind == "vdpc2emp" || kind == "ham2semp") {
    Digraph g = parse_digraph(read_file(input));
    PuzzleInstance p = kind == "ham2semp" ? build_signed_puzzle(g) : build_puzzle(g, parse_mode(mode));
    write_file(output, write_puzzle(p));
    write_file(sidecar(output), meta_json(*p.meta(), p.mode()).dump(1) + "\n");
    ctx.out << "tiles=" << p.size() << " mode=" << mode_name(p.mode()) << "\n";
    return;
  }
  throw Error(ErrorKind::precondition, "unknown reduction '" + kind + "'");
}

struct SolveFlags {
  int limit = kExactLimit;
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  double max_seconds = 0.0;
};

inline int cmd_solve(CliContext& ctx, const std::string& kind, const std::string& input,
                     const std::string& output, const SolveFlags& fl) {
  auto puzzle_out = [&](const Tiling& t, const PuzzleInstance& p, bool matched) {
    auto rep = verify_tiling(p, t);
    emit(ctx, output, write_tiling(t));
    ctx.out << "value=" << (matched ? rep.matched_edges : rep.placed_count) << ' '
            << rep.summary() << "\n";
  };
  if (kind == "exact-placement" || kind == "exact-matched" || kind == "alt" ||
      kind == "two-thirds" || kind == "matched-half" || kind == "eulerian") {
    PuzzleInstance p = parse_puzzle(read_file(input));
    if (kind == "exact-placement") {
      puzzle_out(solve_exact_max_placement(p, fl.limit).tiling, p, false);
    } else if (kind == "exact-matched") {
      puzzle_out(solve_exact_max_matched(p, fl.limit).tiling, p, true);
    } else if (kind == "alt") {
      puzzle_out(approx_alternate(p), p, false);
    } else if (kind == "two-thirds") {
      puzzle_out(approx_matching_two_thirds(p), p, false);
    } else if (kind == "matched-half") {
      puzzle_out(approx_matched_half(p), p, true);
    } else {
      auto t = solve_no_rotation(p);
      if (!t) {
        ctx.out << "value=none\n";
      } else {
        puzzle_out(*t, p, false);
      }
    }
    return kExitOk;
  }
  if (kind == "hampath") {
    Digraph g = parse_digraph(read_file(input));
    auto res = find_hamiltonian_path(g, SearchBudget{fl.max_nodes, fl.max_seconds});
    if (res.status == SearchStatus::budget_exhausted) {
      ctx.out << "value=indeterminate nodes=" << res.nodes << "\n";
      return kExitBudget;
    }
    if (res.status == SearchStatus::none) {
      ctx.out << "value=none nodes=" << res.nodes << "\n";
      return kExitOk;
    }
    emit(ctx, output, write_cover(PathCover{{res.path}}));
    ctx.out << "value=" << res.path.size() - 1 << " nodes=" << res.nodes << "\n";
    return kExitOk;
  }
  if (kind == "maxcover") {
    Digraph g = parse_digraph(read_file(input));
    auto opt = brute_force_max_path_cover(g, fl.limit);
    emit(ctx, output, write_cover(opt.cover));
    ctx.out << "value=" << opt.value << "\n";
    return kExitOk;
  }
  if (kind == "max3sat") {
    CnfFormula f = parse_dimacs(read_file(input));
    auto opt = brute_force_max3sat(f, std::max(fl.limit, kMaxSatOracleLimit));
    emit(ctx, output, write_assignment(opt.assignment));
    ctx.out << "value=" << opt.value << " clauses=" << f.clause_count() << "\n";
    return kExitOk;
  }
  throw Error(ErrorKind::precondition, "unknown solver '" + kind + "'");
}

inline void cmd_lift(CliContext& ctx, const std::string& kind, const std::string& instance,
                     const std::string& witness, const std::string& output) {
  if (kind == "ham2semp" || kind == "vdpc2emp") {
    PuzzleInstance p = load_reduced_puzzle(instance);
    PathCover c = parse_cover(read_file(witness));
    Tiling t;
    if (kind == "ham2semp") {
      if (c.paths.size() != 1) throw Error(ErrorKind::invalid_witness, "expected one path");
      t = lift_ham_path(p, c.paths[0]);
    } else {
      t = lift_path_cover(p, c);
    }
    auto rep = verify_tiling(p, t);
    emit(ctx, output, write_tiling(t));
    ctx.out << rep.summary() << "\n";
    return;
  }
  if (kind == "sat2vdpc") {
    SatReduction red = load_reduced_graph(instance);
    PathCover c = lift_assignment(red, parse_assignment(read_file(witness)));
    emit(ctx, output, write_cover(c));
    ctx.out << "edges=" << c.edge_total() << " paths=" << c.paths.size()
            << " endpoints=" << inner_endpoints(red, c).size() << "\n";
    return;
  }
  throw Error(ErrorKind::precondition, "unknown reduction '" + kind + "'");
}

inline void cmd_extract(CliContext& ctx, const std::string& kind, const std::string& instance,
                        const std::string& witness, const std::string& output) {
  if (kind == "ham2semp") {
    PuzzleInstance p = load_reduced_puzzle(instance);
    auto path = extract_ham_path(p, parse_tiling(read_file(witness)));
    emit(ctx, output, write_cover(PathCover{{path}}));
    ctx.out << "edges=" << path.size() - 1 << "\n";
    return;
  }
  if (kind == "vdpc2emp") {
    PuzzleInstance p = load_reduced_puzzle(instance);
    auto res = extract_path_cover_diag(p, parse_tiling(read_file(witness)));
    emit(ctx, output, write_cover(res.cover));
    const auto& d = res.diag;
    ctx.out << "edges=" << d.cover_edges << " paths=" << res.cover.paths.size()
            << " blanks=" << d.blanks_initial << "/" << d.blanks_after_step1 << "/"
            << d.blanks_after_step2 << " step2_removals=" << d.step2_removals
            << " unplaced_vertex_tiles=" << d.unplaced_vertex_tiles << "\n";
    return;
  }
  if (kind == "sat2vdpc") {
    SatReduction red = load_reduced_graph(instance);
    PathCover c = parse_cover(read_file(witness));
    Assignment a = extract_assignment(red, c);
    emit(ctx, output, write_assignment(a));
    ctx.out << "satisfied=" << evaluate(red.layout.formula, a) << "/"
            << red.layout.formula.clause_count()
            << " endpoints=" << inner_endpoints(red, c).size() << "\n";
    return;
  }
  throw Error(ErrorKind::precondition, "unknown reduction '" + kind + "'");
}

struct GenFlags {
  int size = 0;
  int clauses = 0;
  int colors = 3;
  std::uint64_t seed = 1;
  std::string mode = "unsigned";
};

inline void cmd_gen(CliContext& ctx, const std::string& kind, const GenFlags& fl,
                    const std::string& output) {
  auto witness = [&](const std::string& body) {
    if (!output.empty()) write_file(output + ".witness", body);
  };
  if (kind == "planted-ham") {
    auto pg = gen_planted_ham(fl.size, fl.seed);
    emit(ctx, output, write_digraph(pg.graph));
    witness(write_cover(PathCover{{pg.path}}));
  } else if (kind == "random-degree2") {
    emit(ctx, output, write_digraph(gen_random_degree2(fl.size, fl.seed)));
  } else if (kind == "planted-3sat") {
    auto pf = gen_planted_3sat(fl.size, fl.clauses, fl.seed);
    emit(ctx, output, to_dimacs(pf.formula));
    witness(write_assignment(pf.assignment));
  } else if (kind == "random-tiles") {
    emit(ctx, output, write_puzzle(gen_random_tiles(fl.size, fl.colors, parse_mode(fl.mode), fl.seed)));
  } else {
    throw Error(ErrorKind::precondition, "unknown generator '" + kind + "'");
  }
}

inline int cmd_verify(CliContext& ctx, const std::string& kind, const std::string& instance,
                      const std::string& witness) {
  if (kind == "tiling") {
    PuzzleInstance p = parse_puzzle(read_file(instance));
    auto rep = verify_tiling(p, parse_tiling(read_file(witness)));
    ctx.out << rep.summary() << "\n";
    for (const auto& v : rep.violations) {
      ctx.out << "violation slots " << v.slot_a + 1 << "-" << v.slot_b + 1 << ": "
              << v.label_a.str() << " vs " << v.label_b.str() << "\n";
    }
    for (int id : rep.unknown_ids) ctx.out << "unknown tile id " << id << "\n";
    for (int id : rep.duplicate_ids) ctx.out << "duplicate tile id " << id << "\n";
    return rep.ok() ? kExitOk : kExitInvalid;
  }
  if (kind == "cover") {
    Digraph g = parse_digraph(read_file(instance));
    PathCover c = parse_cover(read_file(witness));
    int e = verify_path_cover(g, c);
    ctx.out << "valid edges=" << e << " paths=" << c.paths.size() << "\n";
    return kExitOk;
  }
  if (kind == "assign") {
    CnfFormula f = parse_dimacs(read_file(instance));
    int s = evaluate(f, parse_assignment(read_file(witness)));
    ctx.out << "satisfied=" << s << "/" << f.clause_count() << "\n";
    return kExitOk;
  }
  throw Error(ErrorKind::precondition, "unknown witness kind '" + kind + "'");
}

}  // namespace detail

// Runs one command; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  detail::CliContext ctx{out, err};
  CLI::App app{"Reductions between Max-3SAT, path covers and edge-matching puzzles", "tilegap"};
  app.require_subcommand(1);

  std::string kind, input, witness, output, mode = "unsigned";
  detail::SolveFlags sf;
  detail::GenFlags gf;
  bool ascii = false;

  auto* reduce = app.add_subcommand("reduce", "build an instance of the next problem");
  reduce->add_option("kind", kind, "sat2vdpc | vdpc2emp | ham2semp")->required();
  reduce->add_option("input", input)->required();
  reduce->add_option("-o,--output", output);
  reduce->add_option("--mode", mode, "unsigned | signed (vdpc2emp)");

  auto* solve = app.add_subcommand("solve", "run a solver or approximation");
  solve->add_option("kind", kind,
                    "exact-placement | exact-matched | alt | two-thirds | matched-half | "
                    "eulerian | hampath | maxcover | max3sat")
      ->required();
  solve->add_option("input", input)->required();
  solve->add_option("-o,--output", output);
  solve->add_option("--limit", sf.limit, "size limit for exact solvers");
  solve->add_option("--max-nodes", sf.max_nodes, "search node budget");
  solve->add_option("--max-seconds", sf.max_seconds, "search time budget (0 = none)");

  auto* lift = app.add_subcommand("lift", "map a witness forward through a reduction");
  auto* extract = app.add_subcommand("extract", "map a witness back through a reduction");
  for (auto* sc : {lift, extract}) {
    sc->add_option("kind", kind, "sat2vdpc | vdpc2emp | ham2semp")->required();
    sc->add_option("instance", input)->required();
    sc->add_option("witness", witness)->required();
    sc->add_option("-o,--output", output);
  }

  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("kind", kind, "planted-ham | random-degree2 | planted-3sat | random-tiles")
      ->required();
  gen->add_option("--size", gf.size, "|V|, variables or tiles")->required();
  gen->add_option("--clauses", gf.clauses, "clause count (planted-3sat)");
  gen->add_option("--colors", gf.colors, "palette size (random-tiles)");
  gen->add_option("--mode", gf.mode, "unsigned | signed (random-tiles)");
  gen->add_option("--seed", gf.seed);
  gen->add_option("-o,--output", output);

  auto* verify = app.add_subcommand("verify", "check a witness against an instance");
  verify->add_option("kind", kind, "tiling | cover | assign")->required();
  verify->add_option("instance", input)->required();
  verify->add_option("witness", witness)->required();

  auto* dump = app.add_subcommand("dump", "render a tiling");
  dump->add_flag("--ascii", ascii, "text rendering")->required();
  dump->add_option("instance", input)->required();
  dump->add_option("tiling", witness)->required();

  std::vector<const char*> argv{"tilegap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitPrecondition;
  }

  try {
    if (*reduce) {
      detail::cmd_reduce(ctx, kind, input, output, mode);
    } else if (*solve) {
      return detail::cmd_solve(ctx, kind, input, output, sf);
    } else if (*lift) {
      detail::cmd_lift(ctx, kind, input, witness, output);
    } else if (*extract) {
      detail::cmd_extract(ctx, kind, input, witness, output);
    } else if (*gen) {
      detail::cmd_gen(ctx, kind, gf, output);
    } else if (*verify) {
      return detail::cmd_verify(ctx, kind, input, witness);
    } else if (*dump) {
      PuzzleInstance p = parse_puzzle(read_file(input));
      Tiling t = parse_tiling(read_file(witness));
      verify_tiling(p, t);
      out << render_ascii(p, t);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

}  // namespace tilegap
