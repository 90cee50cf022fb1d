#pragma once

// Morphisms from variable words into the free monoid/semigroup over the
// constants, and the periodicity predicates built on them.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordchains/words.hpp"

namespace wordchains {

/// A total map from a universe of variables to constant words: the morphism
/// h. In semigroup mode every image is nonempty.
class Assignment {
 public:
  Assignment() = default;
  Assignment(Alphabet universe, std::vector<ConstWord> images, Mode mode = Mode::monoid);

  /// Maps every variable of `universe` to `image`.
  static Assignment uniform(const Alphabet& universe, const ConstWord& image,
                            Mode mode = Mode::monoid);

  const Alphabet& universe() const noexcept { return universe_; }
  const std::vector<ConstWord>& images() const noexcept { return images_; }
  Mode mode() const noexcept { return mode_; }

  bool maps(VariableId v) const { return universe_.contains(v); }
  /// Throws UnmappedVariable.
  const ConstWord& image(VariableId v) const;
  std::size_t total_length() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  Alphabet universe_;
  std::vector<ConstWord> images_;
  Mode mode_ = Mode::monoid;
};

/// h(w): concatenation of the images of the symbols of `w`.
ConstWord apply(const Assignment& h, const VarWord& w);

bool solves(const Assignment& h, const Equation& eq);
/// True for an empty system.
bool solves_system(const Assignment& h, const EquationSystem& sys);
bool solves_all(const Assignment& h, std::span<const Equation> equations);

bool commutes(const ConstWord& u, const ConstWord& v);

/// Shortest t with w = t^k. Throws std::invalid_argument on the empty word,
/// which has no least period.
ConstWord primitive_root(const ConstWord& w);

/// Whether all images are powers of one word, decided by pairwise
/// commutation of the nonempty images. All-empty counts as periodic.
bool is_periodic(const Assignment& h);
bool is_periodic(std::span<const ConstWord> images);

/// Same predicate, decided by comparing primitive roots of nonempty images.
bool is_periodic_by_root(const Assignment& h);

/// `x=a, y=b, z=abab`, with `1` for the empty word. The universe is the
/// variables in the order written.
Assignment parse_assignment(std::string_view text, Mode mode = Mode::monoid);
/// As above but reordered onto `universe`, which the text must cover exactly.
Assignment parse_assignment(std::string_view text, const Alphabet& universe,
                            Mode mode = Mode::monoid);
std::string format_assignment(const Assignment& h);

}  // namespace wordchains
