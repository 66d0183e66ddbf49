#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace tilegap;
using tilegap::testing::plain;

TEST(Rotate, IdentityAndQuarterTurn) {
  Tile t = plain(1, "1", "2", "3", "4");
  EXPECT_EQ(rotate(t, 0), t);
  EXPECT_EQ(rotate(t, 1), plain(1, "4", "1", "2", "3"));
  EXPECT_EQ(rotate(rotate(plain(2, "a", "b", "c", "d"), 2), 2), plain(2, "a", "b", "c", "d"));
}

TEST(Rotate, GroupAction) {
  Tile t = plain(7, "a", "b", "c", "d");
  t.kind = TileKind::edge(0, 1);
  for (int r1 = 0; r1 < 4; ++r1) {
    for (int r2 = 0; r2 < 4; ++r2) {
      EXPECT_EQ(rotate(t, (r1 + r2) % 4), rotate(rotate(t, r1), r2));
    }
  }
  EXPECT_EQ(rotate(t, 3).kind, t.kind);
  EXPECT_EQ(rotate(t, 3).id, 7);
}

TEST(Rotate, RejectsBadRotation) {
  EXPECT_THROW(rotate(plain(1, "a", "b", "c", "d"), 4), Error);
}

TEST(Compatible, Unsigned) {
  EXPECT_TRUE(compatible(EdgeLabel::plain("X"), EdgeLabel::plain("X"), Mode::Unsigned));
  EXPECT_FALSE(compatible(EdgeLabel::plain("I:v1"), EdgeLabel::plain("O:v1"), Mode::Unsigned));
}

TEST(Compatible, Signed) {
  EXPECT_TRUE(compatible(EdgeLabel::pos("A"), EdgeLabel::neg("A"), Mode::Signed));
  EXPECT_FALSE(compatible(EdgeLabel::pos("A"), EdgeLabel::pos("A"), Mode::Signed));
  EXPECT_FALSE(compatible(EdgeLabel::pos("A"), EdgeLabel::neg("B"), Mode::Signed));
}

TEST(Compatible, ModeMismatchIsContractError) {
  try {
    compatible(EdgeLabel::plain("A"), EdgeLabel::neg("A"), Mode::Signed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::contract);
  }
}

TEST(Compatible, Symmetric) {
  std::vector<EdgeLabel> signed_labels{EdgeLabel::pos("A"), EdgeLabel::neg("A"), EdgeLabel::pos("B"),
                                       EdgeLabel::neg("B")};
  for (const auto& a : signed_labels) {
    for (const auto& b : signed_labels) {
      EXPECT_EQ(compatible(a, b, Mode::Signed), compatible(b, a, Mode::Signed));
    }
  }
  for (const char* a : {"A", "B"}) {
    for (const char* b : {"A", "B"}) {
      EXPECT_EQ(compatible(EdgeLabel::plain(a), EdgeLabel::plain(b), Mode::Unsigned),
                compatible(EdgeLabel::plain(b), EdgeLabel::plain(a), Mode::Unsigned));
    }
  }
}

TEST(PuzzleInstance, RejectsMixedLabels) {
  Tile t = make_tile(1, EdgeLabel::pos("A"), EdgeLabel::plain("B"), EdgeLabel::pos("C"), EdgeLabel::pos("D"));
  EXPECT_THROW(PuzzleInstance(Mode::Signed, 1, 1, {t}), Error);
}

TEST(PuzzleInstance, RejectsWrongCountAndDuplicateIds) {
  Tile a = plain(1, "a", "b", "c", "d");
  EXPECT_THROW(PuzzleInstance(Mode::Unsigned, 1, 2, {a}), Error);
  EXPECT_THROW(PuzzleInstance(Mode::Unsigned, 1, 2, {a, a}), Error);
}

TEST(Digraph, RejectsLoopsAndParallelEdges) {
  EXPECT_THROW(Digraph(2, {{0, 0}}, 0, 1), Error);
  EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}, 0, 1), Error);
  EXPECT_TRUE(tilegap::testing::g5().source_sink_ok());
}

TEST(ReductionMeta, ColorTablesInjectiveAndGarbageOnlyOnEdgeTiles) {
  for (Mode m : {Mode::Unsigned, Mode::Signed}) {
    auto p = build_puzzle(tilegap::testing::g5(), m);
    const auto& meta = *p.meta();
    std::set<std::string> colors;
    for (const auto* table : {&meta.in_color, &meta.out_color, &meta.unmatched_color}) {
      for (const auto& c : *table) EXPECT_TRUE(colors.insert(c).second) << c;
    }
    EXPECT_FALSE(colors.count(meta.garbage_color));
    EXPECT_FALSE(colors.count(meta.bridge_color));
    for (const auto& t : p.tiles()) {
      bool garbage = std::any_of(t.edges.begin(), t.edges.end(),
                                 [&](const EdgeLabel& e) { return e.color == meta.garbage_color; });
      EXPECT_EQ(garbage, t.kind.type != TileKind::Type::vertex);
    }
  }
}

TEST(Tiling, HalfTurnIsAnInvolution) {
  Tiling t = tilegap::testing::two_path_tiling();
  EXPECT_EQ(rotate_half_turn(rotate_half_turn(t)), t);
  EXPECT_EQ(rotate_half_turn(t).placed(), t.placed());
}
