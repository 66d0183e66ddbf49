#include <gtest/gtest.h>

#include "support.hpp"

using namespace tilegap;
using tilegap::testing::g5;

TEST(BuildSignedPuzzle, G5HasTwelveTiles) {
  auto p = build_signed_puzzle(g5());
  EXPECT_EQ(p.size(), 12);
  EXPECT_EQ(p.mode(), Mode::Signed);
  int vertex = 0, edge = 0, bridge = 0;
  for (const auto& t : p.tiles()) {
    vertex += t.kind.type == TileKind::Type::vertex;
    edge += t.kind.type == TileKind::Type::edge;
    bridge += t.kind.type == TileKind::Type::bridge;
  }
  EXPECT_EQ(vertex, 5);
  EXPECT_EQ(edge, 6);
  EXPECT_EQ(bridge, 1);
}

TEST(BuildSignedPuzzle, TileShapes) {
  auto p = build_signed_puzzle(g5());
  EXPECT_EQ(p.by_id(6), make_tile(6, EdgeLabel::neg("O:1"), EdgeLabel::pos("X"), EdgeLabel::neg("I:2"),
                                  EdgeLabel::neg("X"), TileKind::edge(0, 1)));
  EXPECT_EQ(p.by_id(1), make_tile(1, EdgeLabel::pos("I:1"), EdgeLabel::pos("U:1"), EdgeLabel::pos("O:1"),
                                  EdgeLabel::pos("U:1"), TileKind::vertex(0)));
  EXPECT_EQ(p.by_id(12), make_tile(12, EdgeLabel::neg("O:5"), EdgeLabel::pos("U:B"), EdgeLabel::neg("X"),
                                   EdgeLabel::pos("U:B"), TileKind::bridge()));
}

TEST(BuildSignedPuzzle, SingleVertex) {
  auto p = build_signed_puzzle(Digraph(1, {}, 0, 0));
  EXPECT_EQ(p.size(), 2);
  auto t = lift_ham_path(p, {0});
  EXPECT_EQ(t.slots[0]->tile_id, 1);
  EXPECT_EQ(t.slots[1]->tile_id, 2);
  EXPECT_TRUE(verify_tiling(p, t).ok());
}

TEST(BuildSignedPuzzle, RejectsBadSourceSink) {
  EXPECT_THROW(build_signed_puzzle(Digraph(2, {{0, 1}, {1, 0}}, 0, 1)), Error);
}

TEST(LiftHamPath, G5Layout) {
  auto p = build_signed_puzzle(g5());
  auto t = lift_ham_path(p, {0, 3, 2, 1, 4});
  std::vector<int> ids;
  for (const auto& s : t.slots) ids.push_back(s->tile_id);
  // 1 e14 4 e43 3 e32 2 e25 5 bridge e12 e35
  EXPECT_EQ(ids, (std::vector<int>{1, 7, 4, 8, 3, 9, 2, 10, 5, 12, 6, 11}));
  EXPECT_EQ(t.slots[10]->rotation, 3);
  auto rep = verify_tiling(p, t);
  EXPECT_EQ(rep.placed_count, 12);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(LiftHamPath, RejectsNonPaths) {
  auto p = build_signed_puzzle(g5());
  EXPECT_THROW(lift_ham_path(p, {0, 1, 4}), Error);
  EXPECT_THROW(lift_ham_path(p, {0, 2, 3, 1, 4}), Error);
}

TEST(ExtractHamPath, RoundTripAndHalfTurn) {
  auto p = build_signed_puzzle(g5());
  auto t = lift_ham_path(p, {0, 3, 2, 1, 4});
  EXPECT_EQ(extract_ham_path(p, t), (std::vector<int>{0, 3, 2, 1, 4}));
  EXPECT_EQ(extract_ham_path(p, rotate_half_turn(t)), (std::vector<int>{0, 3, 2, 1, 4}));
}

TEST(ExtractHamPath, RejectsPartialTilings) {
  auto p = build_signed_puzzle(g5());
  auto t = lift_ham_path(p, {0, 3, 2, 1, 4});
  t.slots[11].reset();
  EXPECT_THROW(extract_ham_path(p, t), Error);
}

TEST(ExtractHamPath, EveryFullTilingOfSmallGraphs) {
  std::vector<Digraph> graphs{Digraph(3, {{0, 1}, {1, 2}, {0, 2}}, 0, 2), Digraph(3, {{0, 1}, {1, 2}}, 0, 2),
                              Digraph(3, {{0, 2}, {0, 1}}, 0, 2)};
  for (const auto& g : graphs) {
    auto p = build_signed_puzzle(g);
    int count = 0;
    tilegap::testing::for_each_full_tiling(p, [&](const Tiling& t) {
      ++count;
      for (const auto& s : t.slots) {
        if (s->tile_id == p.meta()->bridge_tile) {
          EXPECT_EQ(s->rotation % 2, 0);
        }
      }
      auto path = extract_ham_path(p, t);
      EXPECT_EQ(verify_path_cover(g, {{path}}), g.vertex_count() - 1);
    });
    bool ham = find_hamiltonian_path(g).status == SearchStatus::found;
    EXPECT_EQ(count > 0, ham);
  }
}

TEST(HamiltonianIffFullPlacement, PlantedAndBroken) {
  for (int seed = 0; seed < 20; ++seed) {
    auto pg = gen_planted_ham(4, static_cast<std::uint64_t>(seed), 2);
    auto p = build_signed_puzzle(pg.graph);
    EXPECT_EQ(solve_exact_max_placement(p).value, p.size());
  }
  auto broken = tilegap::testing::without_edge(g5(), 1, 4);
  auto p = build_signed_puzzle(broken);
  EXPECT_LT(solve_exact_max_placement(p).value, p.size());
}
