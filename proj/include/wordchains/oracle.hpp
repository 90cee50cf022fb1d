#pragma once

// Bounded exhaustive enumeration of morphisms and the certificate checks for
// independent systems and decreasing/increasing chains.
//
// Canonical assignment order. Assignments are compared by
//   1. the length of their longest image,
//   2. their total image length,
//   3. their images in variable order, each image compared by length and
//      then lexicographically in the alphabet's letter order.
// Every search in this module returns the least witness under that order, so
// results do not depend on thread count and a witness found at some bound is
// still the least witness at every larger max_len.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordchains/semantics.hpp"
#include "wordchains/words.hpp"

namespace wordchains {

/// Finite slice of the morphism space: image lengths in
/// [min_image_length(mode), max_len] over `alphabet`.
struct Bound {
  std::size_t max_len = 3;
  Alphabet alphabet{"ab"};
  Mode mode = Mode::monoid;

  std::size_t min_len() const { return min_image_length(mode); }
  /// Throws std::invalid_argument for an empty alphabet or max_len < min_len.
  void validate() const;
};

struct SearchOptions {
  /// Worker threads for witness searches. 0 means hardware concurrency.
  unsigned threads = 1;
  /// Stop once the searched part of the space would exceed this many
  /// assignments (0 = no limit). Checked per layer, so the cutoff point is
  /// independent of `threads`.
  std::uint64_t limit = 0;
};

/// Number of assignments of `variables` variables within `bound`.
/// Saturates at UINT64_MAX.
std::uint64_t count_assignments(std::size_t variables, const Bound& bound);

/// Visits every assignment over `universe` within `bound` exactly once, in
/// canonical order, until `visit` returns false.
void for_each_assignment(const Alphabet& universe, const Bound& bound,
                         const std::function<bool(const Assignment&)>& visit);

std::vector<Assignment> enumerate_assignments(const Alphabet& universe, const Bound& bound);

/// A condition on one equation of a WitnessQuery.
struct Requirement {
  std::size_t equation;
  bool solved;
};

/// Describes the assignments sought: every requirement holds and, when set,
/// `accept` returns true for the images (indexed by universe position).
struct WitnessQuery {
  Alphabet universe;
  std::vector<Equation> equations;
  std::vector<Requirement> requirements;
  std::function<bool(std::span<const ConstWord>)> accept;
};

enum class SearchStatus { found, exhausted, limit_reached };

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Assignment> witness;
  /// Size of the part of the space that was searched (whole layers).
  std::uint64_t visited = 0;
};

/// Least assignment within `bound` satisfying `query`.
SearchResult least_witness(const WitnessQuery& query, const Bound& bound,
                           const SearchOptions& options = {});

enum class VerdictKind { inequivalent_witness, no_witness_within_bound };

/// Outcome of a bounded equivalence query. A missing witness is evidence of
/// equivalence, never proof.
struct Verdict {
  VerdictKind kind = VerdictKind::no_witness_within_bound;
  std::optional<Assignment> witness;
  Bound bound;
};

/// Least assignment within `bound` that solves exactly one of `a` and `b`.
/// Throws std::invalid_argument unless both share universe and mode.
Verdict find_distinguishing(const EquationSystem& a, const EquationSystem& b, const Bound& bound,
                            const SearchOptions& options = {});

/// Witness w_i solves E_1..E_i and fails E_{i+1}, for i = 0..m-1 (decreasing
/// reading). Read as an increasing chain, entry j fails E_{j+1} and solves
/// E_{j+2}..E_m.
struct ChainCertificate {
  std::vector<Assignment> witnesses;
  friend bool operator==(const ChainCertificate&, const ChainCertificate&) = default;
};

/// Witness h_i fails E_i and solves every other equation.
struct IndependenceCertificate {
  std::vector<Assignment> witnesses;
  friend bool operator==(const IndependenceCertificate&, const IndependenceCertificate&) = default;
};

/// Certificate length does not match the system.
class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Outcome { verified, refuted, inconclusive };

enum class Refutation {
  none,
  /// A supplied certificate entry breaks its condition.
  certificate_violated,
  /// The bound was searched completely without finding a witness.
  witness_exhausted,
};

struct VerifyResult {
  Outcome outcome = Outcome::verified;
  /// The complete certificate when verified.
  std::vector<Assignment> witnesses;
  /// Index i of the failing condition as in the definitions: 0..m-1 for a
  /// decreasing chain (E_1..E_i vs E_1..E_{i+1}); 1..m for an increasing chain
  /// (E_i..E_m vs E_{i+1}..E_m) and for independence (h_i fails E_i).
  std::optional<std::size_t> index;
  Refutation reason = Refutation::none;
  std::string detail;
  /// The certificate entry that violated its condition.
  std::optional<Assignment> offending;
};

struct VerifyOptions {
  SearchOptions search;
  /// Decreasing chains only: additionally require a common solution of all
  /// equations (entry m of the certificate, or searched within the bound).
  bool strict = false;
};

/// With a certificate the check is exact; without one, each witness is
/// searched within `bound`. Throws CertificateError on a length mismatch.
VerifyResult verify_independence(const EquationSystem& sys,
                                 const std::optional<IndependenceCertificate>& cert,
                                 const Bound& bound, const VerifyOptions& options = {});

VerifyResult verify_decreasing_chain(const EquationSystem& sys,
                                     const std::optional<ChainCertificate>& cert,
                                     const Bound& bound, const VerifyOptions& options = {});

VerifyResult verify_increasing_chain(const EquationSystem& sys,
                                     const std::optional<ChainCertificate>& cert,
                                     const Bound& bound, const VerifyOptions& options = {});

/// The same system with the equation order reversed.
EquationSystem reversed(const EquationSystem& sys);

/// Turns a certificate of the decreasing chain `chain` into one for the
/// increasing chain reversed(chain). Throws std::invalid_argument when `cert`
/// does not verify for `chain`.
ChainCertificate reverse_certificate(const ChainCertificate& cert, const EquationSystem& chain);

/// An independent system is a chain of either kind in any order: entry i of
/// the result is h_{order[i]}. It certifies the system permuted by `order`
/// both as a decreasing and as an increasing chain.
ChainCertificate chain_certificate_from_independence(const IndependenceCertificate& cert,
                                                     std::span<const std::size_t> order);

/// The system with equations permuted: result[i] = sys[order[i]].
EquationSystem permuted(const EquationSystem& sys, std::span<const std::size_t> order);

}  // namespace wordchains
