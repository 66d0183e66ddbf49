// Walks the five-vertex example graph and a small formula through every
// reduction, printing what each step produces.

#include <iostream>

#include "tilegap.hpp"

using namespace tilegap;

int main() {
  Digraph g(5, {{0, 1}, {0, 3}, {3, 2}, {2, 1}, {1, 4}, {2, 4}}, 0, 4);
  auto ham = find_hamiltonian_path(g);
  std::cout << "hamiltonian path:";
  for (int v : ham.path) std::cout << ' ' << v + 1;
  std::cout << "\n";

  auto signed_puzzle = build_signed_puzzle(g);
  auto lifted = lift_ham_path(signed_puzzle, ham.path);
  std::cout << "signed lift: " << verify_tiling(signed_puzzle, lifted).summary() << "\n"
            << render_ascii(signed_puzzle, lifted);

  auto unsigned_puzzle = build_puzzle(g, Mode::Unsigned);
  auto best = solve_exact_max_placement(unsigned_puzzle);
  std::cout << "exact max placement: " << best.value << " of " << unsigned_puzzle.size() << "\n";
  std::cout << "two-thirds approximation places "
            << approx_matching_two_thirds(unsigned_puzzle).placed() << "\n";

  // (x1 v x2) ^ (x1 v -x3 v x4) ^ (-x2 v x4)
  CnfFormula f = parse_dimacs("p cnf 4 3\n1 2 0\n1 -3 4 0\n-2 4 0\n");
  auto red = build_vdpc(f);
  Assignment a{{true, true, true, true}};
  auto cover = lift_assignment(red, a);
  std::cout << "gadget graph: |V|=" << red.graph.vertex_count() << " |E|=" << red.graph.edge_count()
            << ", lifted cover has " << cover.edge_total() << " edges\n";
  auto puzzle = build_puzzle(red.graph, Mode::Unsigned);
  auto tiling = lift_path_cover(puzzle, cover);
  std::cout << "puzzle of " << puzzle.size() << " tiles: " << verify_tiling(puzzle, tiling).summary() << "\n";
  Assignment back = extract_assignment(red, extract_path_cover(puzzle, tiling));
  std::cout << "extracted assignment satisfies " << evaluate(f, back) << "/" << f.clause_count() << "\n";

  auto gap = gap_chain();
  std::cout << "alpha_mpc=" << gap.alpha_mpc << " alpha_emp=" << gap.alpha_emp << "\n";
}
