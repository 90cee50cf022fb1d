#pragma once

// Value types and line syntax for constant-free word equations.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordchains {

/// Malformed equation, assignment, corpus or certificate text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A variable was looked up in an assignment whose domain lacks it.
class UnmappedVariable : public std::out_of_range {
 public:
  explicit UnmappedVariable(char variable);
  char variable() const noexcept { return variable_; }

 private:
  char variable_;
};

enum class Mode { monoid, semigroup };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Smallest image length a morphism may use: the semigroup has no empty word.
constexpr std::size_t min_image_length(Mode mode) {
  return mode == Mode::semigroup ? 1 : 0;
}

using VariableId = char;
using ConstantId = char;

/// Variables and constants are single ASCII letters.
constexpr bool is_symbol_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

/// An ordered set of distinct symbols. Order is the order of insertion and is
/// significant: it fixes variable order for enumeration and letter order for
/// lexicographic comparison.
class Alphabet {
 public:
  Alphabet() { index_.fill(-1); }
  explicit Alphabet(std::string_view letters);

  bool contains(char c) const { return index_of(c) >= 0; }
  int index_of(char c) const {
    auto u = static_cast<unsigned char>(c);
    return u < index_.size() ? index_[u] : -1;
  }
  /// Appends `c` unless already present.
  void insert(char c);

  char operator[](std::size_t i) const { return letters_[i]; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::string& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::string letters_;
  std::array<std::int16_t, 128> index_;
};

struct VariableTag {};
struct ConstantTag {};

/// A finite word. The tag keeps words over variables and words over constants
/// from being mixed up.
template <typename Tag>
class Word {
 public:
  Word() = default;
  explicit Word(std::string symbols) : symbols_(std::move(symbols)) {}
  explicit Word(const char* symbols) : symbols_(symbols) {}

  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  char back() const { return symbols_.back(); }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  void push_back(char c) { symbols_.push_back(c); }
  void pop_back() { symbols_.pop_back(); }
  void clear() noexcept { symbols_.clear(); }
  void resize(std::size_t n, char c) { symbols_.resize(n, c); }
  char& operator[](std::size_t i) { return symbols_[i]; }

  Word& operator+=(const Word& other) {
    symbols_ += other.symbols_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.symbols_.compare(b.symbols_) <=> 0;
  }

 private:
  std::string symbols_;
};

using VarWord = Word<VariableTag>;
using ConstWord = Word<ConstantTag>;

/// w^k.
ConstWord power(const ConstWord& w, std::size_t k);

struct Equation {
  VarWord lhs;
  VarWord rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
  friend std::strong_ordering operator<=>(const Equation& a, const Equation& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

/// The equation with its sides exchanged.
Equation swapped(const Equation& eq);

/// An ordered list of equations. Order matters for chains.
struct EquationSystem {
  std::vector<Equation> equations;
  Mode mode = Mode::monoid;
  Alphabet universe;
  Alphabet constants{"ab"};

  std::size_t size() const noexcept { return equations.size(); }

  /// Throws std::invalid_argument when a variable lies outside the universe,
  /// a side is empty in semigroup mode, or variables and constants overlap.
  void validate() const;
};

/// Parses `side = side`, where a side is a juxtaposition of variables
/// (whitespace between them is ignored) or the literal `1` for the empty word.
Equation parse_equation(std::string_view text, const Alphabet& universe,
                        Mode mode = Mode::monoid);
/// As above, accepting any letter as a variable.
Equation parse_equation(std::string_view text, Mode mode = Mode::monoid);

std::string format_word(const VarWord& w);
std::string format_equation(const Equation& eq);

/// Variables occurring in `eq`, in universe order.
Alphabet variables_of(const Equation& eq, const Alphabet& universe);
/// Variables occurring in `eq`, in order of first occurrence.
Alphabet variables_of(const Equation& eq);
Alphabet variables_of(const EquationSystem& sys);

bool is_trivial(const Equation& eq);
bool is_balanced(const Equation& eq);

/// Per-variable occurrence count of lhs minus that of rhs, indexed by char.
std::array<int, 128> occurrence_difference(const Equation& eq);

}  // namespace wordchains
