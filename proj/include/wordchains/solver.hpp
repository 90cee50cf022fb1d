#pragma once

// A small bounded solver for single constant-free equations, branching on the
// leading variables of both sides (Levi's lemma). It exists to cross-check the
// enumeration oracle along an unrelated code path.

#include <cstdint>
#include <optional>

#include "wordchains/oracle.hpp"
#include "wordchains/semantics.hpp"
#include "wordchains/words.hpp"

namespace wordchains {

struct Budget {
  /// Maximum number of elementary substitutions along one branch.
  std::size_t max_depth = 16;
  /// Solutions with a longer image are not reported.
  std::size_t max_image_len = 32;

  void validate() const;
};

enum class SolveStatus { solution, no_solution_within_budget };

struct SolveResult {
  SolveStatus status = SolveStatus::no_solution_within_budget;
  std::optional<Assignment> solution;
  /// Set only when every branch was closed by the length argument (the image
  /// lengths cannot balance), so no budget could ever help.
  bool proven_unsatisfiable = false;
  std::uint64_t nodes = 0;
};

/// Branch order at a node with leading variables x (left) and y (right):
/// cancel equal leading variables; in monoid mode try x -> 1, then y -> 1;
/// then x -> y, x -> yx, y -> xy. Variables left free at a trivial equation
/// become the empty word (monoid) or `letter` (semigroup).
SolveResult solve_bounded(const Equation& eq, Mode mode, const Budget& budget,
                          ConstantId letter = 'a');

struct Agreement {
  bool oracle_satisfiable = false;
  bool solver_satisfiable = false;
  bool solver_proven_unsatisfiable = false;
  /// False only when the oracle holds a solution the solver could not find,
  /// or the solver claims a proof the oracle contradicts.
  bool agree = true;
  std::optional<Assignment> oracle_witness;
  std::optional<Assignment> solver_solution;
};

/// Runs both procedures on `eq` over its own variables, in `mode`.
Agreement cross_validate(const Equation& eq, Mode mode, const Bound& bound, const Budget& budget);

}  // namespace wordchains
