#include "wordchains/solver.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordchains {

void Budget::validate() const {
  if (max_depth == 0 || max_image_len == 0) {
    throw std::invalid_argument("solver budget must be positive");
  }
}

namespace {

// Replaces every occurrence of `var` in `s` by `image`.
void substitute(std::string& s, char var, const std::string& image) {
  std::string out;
  out.reserve(s.size() + image.size());
  for (char c : s) {
    if (c == var) {
      out += image;
    } else {
      out.push_back(c);
    }
  }
  s = std::move(out);
}

// In a free semigroup every variable has length >= 1, so the equation needs
// sum_v d_v |h(v)| = 0 with positive lengths, where d_v is the occurrence
// difference. That fails exactly when all nonzero d_v share a sign.
bool length_unsatisfiable(const std::string& lhs, const std::string& rhs) {
  std::array<int, 128> diff{};
  for (char v : lhs) ++diff[static_cast<unsigned char>(v) & 0x7f];
  for (char v : rhs) --diff[static_cast<unsigned char>(v) & 0x7f];
  bool pos = false;
  bool neg = false;
  for (int d : diff) {
    pos = pos || d > 0;
    neg = neg || d < 0;
  }
  return pos != neg;
}

class LeviSearch {
 public:
  LeviSearch(const Equation& eq, Mode mode, const Budget& budget, ConstantId letter)
      : original_(eq), mode_(mode), budget_(budget), letter_(letter) {
    universe_ = variables_of(eq);
    for (char v : universe_) sigma_.push_back(std::string(1, v));
  }

  SolveResult run() {
    SolveResult result;
    std::optional<Assignment> found =
        dfs(original_.lhs.symbols(), original_.rhs.symbols(), sigma_, 0);
    result.nodes = nodes_;
    if (found) {
      if (!solves(*found, original_)) {
        throw std::logic_error("solver produced a non-solution for " +
                               format_equation(original_));
      }
      result.status = SolveStatus::solution;
      result.solution = std::move(found);
    } else {
      result.proven_unsatisfiable = !cutoff_;
    }
    return result;
  }

 private:
  using Sigma = std::vector<std::string>;

  std::optional<Assignment> finish(const Sigma& sigma) {
    std::vector<ConstWord> images;
    for (const auto& word : sigma) {
      const std::size_t len = mode_ == Mode::semigroup ? word.size() : 0;
      if (len > budget_.max_image_len) {
        cutoff_ = true;
        return std::nullopt;
      }
      images.emplace_back(std::string(len, letter_));
    }
    return Assignment(universe_, std::move(images), mode_);
  }

  std::optional<Assignment> branch(std::string lhs, std::string rhs, Sigma sigma, char var,
                                   const std::string& image, std::size_t depth) {
    substitute(lhs, var, image);
    substitute(rhs, var, image);
    for (auto& w : sigma) substitute(w, var, image);
    return dfs(std::move(lhs), std::move(rhs), std::move(sigma), depth + 1);
  }

  std::optional<Assignment> dfs(std::string lhs, std::string rhs, Sigma sigma,
                                std::size_t depth) {
    ++nodes_;
    std::size_t common = 0;
    while (common < lhs.size() && common < rhs.size() && lhs[common] == rhs[common]) ++common;
    lhs.erase(0, common);
    rhs.erase(0, common);

    if (lhs.empty() && rhs.empty()) return finish(sigma);
    if (mode_ == Mode::semigroup && length_unsatisfiable(lhs, rhs)) return std::nullopt;
    if (depth >= budget_.max_depth) {
      cutoff_ = true;
      return std::nullopt;
    }

    if (lhs.empty() || rhs.empty()) {
      // Monoid only: the nonempty side must vanish variable by variable.
      const char v = lhs.empty() ? rhs[0] : lhs[0];
      return branch(std::move(lhs), std::move(rhs), std::move(sigma), v, "", depth);
    }

    const char x = lhs[0];
    const char y = rhs[0];
    if (mode_ == Mode::monoid) {
      if (auto h = branch(lhs, rhs, sigma, x, "", depth)) return h;
      if (auto h = branch(lhs, rhs, sigma, y, "", depth)) return h;
    }
    if (auto h = branch(lhs, rhs, sigma, x, std::string(1, y), depth)) return h;
    if (auto h = branch(lhs, rhs, sigma, x, std::string{y, x}, depth)) return h;
    return branch(std::move(lhs), std::move(rhs), std::move(sigma), y, std::string{x, y}, depth);
  }

  Equation original_;
  Mode mode_;
  Budget budget_;
  ConstantId letter_;
  Alphabet universe_;
  Sigma sigma_;
  std::uint64_t nodes_ = 0;
  bool cutoff_ = false;
};

}  // namespace

SolveResult solve_bounded(const Equation& eq, Mode mode, const Budget& budget,
                          ConstantId letter) {
  budget.validate();
  return LeviSearch(eq, mode, budget, letter).run();
}

Agreement cross_validate(const Equation& eq, Mode mode, const Bound& bound,
                         const Budget& budget) {
  Bound b = bound;
  b.mode = mode;

  WitnessQuery q;
  q.universe = variables_of(eq);
  q.equations = {eq};
  q.requirements = {{0, true}};
  SearchResult oracle = least_witness(q, b);
  SolveResult solver = solve_bounded(eq, mode, budget, b.alphabet[0]);

  Agreement a;
  a.oracle_satisfiable = oracle.status == SearchStatus::found;
  a.oracle_witness = oracle.witness;
  a.solver_satisfiable = solver.status == SolveStatus::solution;
  a.solver_solution = solver.solution;
  a.solver_proven_unsatisfiable = solver.proven_unsatisfiable;
  const bool solution_checks = !solver.solution || solves(*solver.solution, eq);
  const bool proof_holds = !(solver.proven_unsatisfiable && a.oracle_satisfiable);
  a.agree = solution_checks && proof_holds && !(a.oracle_satisfiable && !a.solver_satisfiable);
  return a;
}

}  // namespace wordchains
