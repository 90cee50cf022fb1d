#include <gtest/gtest.h>

#include "wordchains/solver.hpp"

using namespace wordchains;

TEST(Solve, Examples) {
  SolveResult semi = solve_bounded(parse_equation("xx = x"), Mode::semigroup, Budget{});
  EXPECT_EQ(semi.status, SolveStatus::no_solution_within_budget);
  EXPECT_TRUE(semi.proven_unsatisfiable);
  SolveResult deep = solve_bounded(parse_equation("xx = x"), Mode::semigroup, Budget{200, 200});
  EXPECT_TRUE(deep.proven_unsatisfiable);

  SolveResult mono = solve_bounded(parse_equation("xx = x"), Mode::monoid, Budget{});
  ASSERT_EQ(mono.status, SolveStatus::solution);
  EXPECT_EQ(format_assignment(*mono.solution), "x=1");

  for (Mode mode : {Mode::monoid, Mode::semigroup}) {
    Equation eq = parse_equation("xyz = zxy");
    SolveResult r = solve_bounded(eq, mode, Budget{});
    ASSERT_EQ(r.status, SolveStatus::solution);
    EXPECT_TRUE(solves(*r.solution, eq));
    EXPECT_EQ(r.solution->mode(), mode);
  }
}

TEST(Solve, NonunaryBranches) {
  // Needs x -> yx style substitutions before the sides meet.
  Equation eq = parse_equation("xyx = yxy");
  SolveResult r = solve_bounded(eq, Mode::semigroup, Budget{});
  ASSERT_EQ(r.status, SolveStatus::solution);
  EXPECT_TRUE(solves(*r.solution, eq));
}

TEST(Solve, BudgetExhaustionIsNotAProof) {
  // Balanced, so the length argument never closes a branch, and the depth
  // cap stops the search before any solution in semigroup mode.
  Equation eq = parse_equation("xyz = zyx");
  SolveResult r = solve_bounded(eq, Mode::semigroup, Budget{1, 32});
  if (r.status != SolveStatus::solution) EXPECT_FALSE(r.proven_unsatisfiable);
  EXPECT_THROW(solve_bounded(eq, Mode::monoid, Budget{0, 1}), std::invalid_argument);
}

TEST(Solve, Deterministic) {
  Equation eq = parse_equation("xxyz = zyxx");
  SolveResult a = solve_bounded(eq, Mode::semigroup, Budget{});
  SolveResult b = solve_bounded(eq, Mode::semigroup, Budget{});
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.solution, b.solution);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(CrossValidate, Examples) {
  Bound b{3, Alphabet("ab"), Mode::monoid};
  Agreement trivial = cross_validate(parse_equation("xy = xy"), Mode::semigroup, b, Budget{});
  EXPECT_TRUE(trivial.oracle_satisfiable);
  EXPECT_TRUE(trivial.solver_satisfiable);
  EXPECT_TRUE(trivial.agree);

  Agreement unit = cross_validate(Equation{VarWord("x"), VarWord("xx")}, Mode::semigroup, b,
                                  Budget{});
  EXPECT_FALSE(unit.oracle_satisfiable);
  EXPECT_FALSE(unit.solver_satisfiable);
  EXPECT_TRUE(unit.agree);
}
