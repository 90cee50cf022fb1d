#pragma once

// Explicit constructions of long chains and large independent systems, each
// paired with a certificate that the oracle re-checks exactly.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wordchains/oracle.hpp"
#include "wordchains/semantics.hpp"
#include "wordchains/words.hpp"

namespace wordchains {

using Certificate = std::variant<ChainCertificate, IndependenceCertificate>;

struct FamilyOutput {
  std::string name;
  EquationSystem system;
  Certificate certificate;
  /// Indexed symbol (e.g. "z_2") to the single-letter variable generated for it.
  std::vector<std::pair<std::string, VariableId>> name_map;
  std::size_t claimed_size = 0;
  /// A nonperiodic common solution, when the construction provides one.
  std::optional<Assignment> common_solution;
  /// Bound under which the searched witnesses were found.
  Bound search_bound;
};

/// Witnesses not written out explicitly are the least ones in this bound:
/// images up to length 4 over {a, b}.
Bound default_search_bound(Mode mode = Mode::monoid);

/// Exact certificate check of `out` (no search).
VerifyResult verify_family(const FamilyOutput& out);

/// Pool of variable names for indexed families: every ASCII letter except
/// the constants a and b, lower case first.
inline constexpr std::string_view kVariablePool =
    "xyztuvwpqrsmnoklhijgfedcABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// The 7-equation decreasing chain over x, y, z in free monoids.
FamilyOutput chain_dc3(const SearchOptions& options = {});
/// The 7-equation decreasing chain over x, y, z in free semigroups, ending
/// with xx = x, which has no solution there.
FamilyOutput chain_dc3_semigroup(const SearchOptions& options = {});
/// The 12-equation decreasing chain over x, y, z, t in free monoids.
FamilyOutput chain_dc4(const SearchOptions& options = {});

/// Variables x_i, y_i, z_i, t_i (i = 1..m) and one equation
///   x_i x_j x_k y_i y_j y_k z_i z_j z_k t_l = t_l x_i x_j x_k y_i y_j y_k z_i z_j z_k
/// per i < j < k and l, in lexicographic order of (i, j, k, l). The witness
/// for E(i,j,k,l) maps x_r, y_r, z_r (r in {i,j,k}) to ab, a, ba, t_l to ababa
/// and everything else to the empty word: the left factor is then
/// (ab)^c a^c (ba)^c with c = |{i',j',k'} & {i,j,k}|, a power of ababa exactly
/// when c < 3.
FamilyOutput quartic_independent_system(std::size_t m);

/// Variables x, y, z_1..z_{n-2} and, per i < j, x y x z_i z_j y z_i z_j =
/// z_i z_j x z_i z_j y x y. Witnesses by bounded search.
FamilyOutput quadratic_independent_system(std::size_t n, const SearchOptions& options = {});

/// The chain of (n^2 + 3n - 4)/2 equations over x, y, z_1..z_{n-2}, in row
/// groups: x y z_k = z_k x y; x y x z_k y z_k = z_k x z_k y x y; the z_i z_j
/// row; x z_k = z_k x; xy = yx; x = 1; y = 1; z_k = 1. Witnesses by bounded
/// search. For n = 3 and 4 the equations are those of chain_dc3/chain_dc4.
FamilyOutput quadratic_chain(std::size_t n, const SearchOptions& options = {});

/// {xx = y, yy = z, zz = x} and {xyz = zyx, xyyz = zyyx} in free semigroups,
/// with searched independence certificates; the pair also carries a
/// nonperiodic common solution.
std::vector<FamilyOutput> toy_systems(const SearchOptions& options = {});

/// Whether (u_1 ... u_m)^k = u_1^k ... u_m^k.
bool power_identity_holds(std::span<const ConstWord> us, std::size_t k);

/// Least certificate within `bound`, or nullopt if some witness is missing.
std::optional<IndependenceCertificate> find_independence_certificate(
    const EquationSystem& sys, const Bound& bound, const SearchOptions& options = {});

/// Least common solution within `bound` that is not periodic.
std::optional<Assignment> find_nonperiodic_solution(const EquationSystem& sys, const Bound& bound,
                                                    const SearchOptions& options = {});

/// Extends an independent system with a nonperiodic solution into a longer
/// decreasing chain (free monoid): the system in order, then the pairwise
/// commutation equations v w = w v, then v = 1 for each variable, keeping an
/// appended equation only when a witness within `bound` shows it strictly
/// shrinks the solution set. Without `nonperiodic` one is searched.
/// Throws std::invalid_argument when the system is empty, the certificate
/// does not verify, or no nonperiodic solution is available.
FamilyOutput chainify(const EquationSystem& sys, const IndependenceCertificate& cert,
                      const std::optional<Assignment>& nonperiodic, const Bound& bound,
                      const SearchOptions& options = {});

struct BoundsReport {
  std::size_t n = 0;
  std::size_t is_lower = 0;
  std::size_t is_prime_lower = 0;
  std::size_t dc_lower = 0;
  /// Every construction that applies, e.g. "3 is' (quadratic system, ...)".
  std::vector<std::string> sources;
};

/// Lower bounds on the maximal independent system (with and without a
/// nonperiodic solution) and the maximal decreasing chain for n unknowns,
/// taken from the constructions implemented here. Zero means no construction
/// applies. dc_lower is the quadratic chain length only; it does not fold in
/// dc >= is + 1, which overtakes it once the quartic system dominates.
BoundsReport lower_bounds(std::size_t n);

struct Q5Candidate {
  std::vector<Equation> equations;
  IndependenceCertificate certificate;
  Assignment nonperiodic_solution;
};

struct Q5Report {
  std::size_t equations_considered = 0;
  std::size_t triples_considered = 0;
  std::vector<Q5Candidate> candidates;
};

/// Representative of `eq` under exchanging its sides: the lesser orientation.
Equation orient(const Equation& eq);

/// Balanced nontrivial equations over x, y, z with both sides of length at
/// most `max_side_len`, oriented, sorted and deduplicated.
std::vector<Equation> balanced_equations(std::size_t max_side_len);

/// Searches unordered triples of distinct balanced nontrivial equations over
/// x, y, z for an independent system with a nonperiodic solution, both
/// witnessed within `bound`. Triples are taken up to renaming the variables
/// (the lexicographically least image of a triple under the six renamings,
/// with each equation oriented, is its representative). Output is sorted.
Q5Report q5_search(std::size_t max_side_len, const Bound& bound,
                   const SearchOptions& options = {});

}  // namespace wordchains
