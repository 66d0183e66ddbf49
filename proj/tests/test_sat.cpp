#include <gtest/gtest.h>

#include "support.hpp"

using namespace tilegap;

namespace {

CnfFormula cnf(int n, std::vector<std::vector<int>> clauses) {
  CnfFormula f;
  f.num_vars = n;
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (int x : c) lits.push_back({std::abs(x) - 1, x > 0});
    f.clauses.push_back(lits);
  }
  return f;
}

}  // namespace

TEST(Dimacs, ParsesCommentsAndRoundTrips) {
  auto f = parse_dimacs("c hello\np cnf 3 2\n1 -2 3 0\n-1 2 0\n");
  EXPECT_EQ(f, cnf(3, {{1, -2, 3}, {-1, 2}}));
  EXPECT_EQ(parse_dimacs(to_dimacs(f)), f);
}

TEST(Dimacs, Errors) {
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), Error);
  EXPECT_THROW(parse_dimacs("1 2 0\n"), Error);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), Error);
  EXPECT_THROW(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), Error);
  try {
    parse_dimacs("p cnf 2 1\n1 x 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
  }
}

TEST(Evaluate, Examples) {
  auto f = cnf(2, {{1, 2}, {-1}, {-2}});
  EXPECT_EQ(evaluate(f, {{true, false}}), 2);
  EXPECT_EQ(evaluate(f, {{false, false}}), 2);
  EXPECT_EQ(evaluate(cnf(1, {{1}, {-1}}), {{true}}), 1);
  EXPECT_THROW(evaluate(f, {{true}}), Error);
}

TEST(BruteForceMax3Sat, Examples) {
  EXPECT_EQ(brute_force_max3sat(cnf(1, {{1}, {-1}})).value, 1);
  auto s = brute_force_max3sat(cnf(3, {{1, 2, 3}, {-1, -2}, {-3}}));
  EXPECT_EQ(s.value, 3);
  EXPECT_EQ(evaluate(cnf(3, {{1, 2, 3}, {-1, -2}, {-3}}), s.assignment), 3);
  CnfFormula big;
  big.num_vars = 26;
  EXPECT_THROW(brute_force_max3sat(big), Error);
}

TEST(BruteForceMax3Sat, PlantedFormulasAreSatisfiable) {
  for (int seed = 0; seed < 30; ++seed) {
    auto pf = gen_planted_3sat(6, 12, static_cast<std::uint64_t>(seed));
    auto best = brute_force_max3sat(pf.formula);
    EXPECT_EQ(best.value, 12);
    EXPECT_EQ(evaluate(pf.formula, pf.assignment), 12);
  }
}

TEST(OccurrenceBound, Examples) {
  auto f = cnf(2, {{1, -1, 2}, {1}});
  EXPECT_EQ(occurrence_counts(f), (std::vector<int>{3, 1}));
  EXPECT_TRUE(check_occurrence_bound(f, 3));
  EXPECT_FALSE(check_occurrence_bound(f, 2));
  for (int seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(check_occurrence_bound(gen_planted_3sat(3, 29, static_cast<std::uint64_t>(seed)).formula, 29));
  }
  EXPECT_THROW(gen_planted_3sat(1, 10, 1), Error);
}
