#include "wordchains/words.hpp"

#include <cctype>

namespace wordchains {

UnmappedVariable::UnmappedVariable(char variable)
    : std::out_of_range(std::string("variable '") + variable + "' is not mapped by the assignment"),
      variable_(variable) {}

std::string_view to_string(Mode mode) {
  return mode == Mode::semigroup ? "semigroup" : "monoid";
}

Mode parse_mode(std::string_view text) {
  if (text == "monoid") return Mode::monoid;
  if (text == "semigroup") return Mode::semigroup;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected monoid or semigroup)");
}

Alphabet::Alphabet(std::string_view letters) : Alphabet() {
  for (char c : letters) {
    if (!is_symbol_char(c)) {
      throw ParseError(std::string("invalid symbol '") + c + "' (symbols are ASCII letters)");
    }
    if (contains(c)) throw ParseError(std::string("duplicate symbol '") + c + "'");
    insert(c);
  }
}

void Alphabet::insert(char c) {
  if (contains(c)) return;
  if (!is_symbol_char(c)) {
    throw ParseError(std::string("invalid symbol '") + c + "' (symbols are ASCII letters)");
  }
  index_[static_cast<unsigned char>(c)] = static_cast<std::int16_t>(letters_.size());
  letters_.push_back(c);
}

ConstWord power(const ConstWord& w, std::size_t k) {
  std::string out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += w.symbols();
  return ConstWord(std::move(out));
}

Equation swapped(const Equation& eq) { return Equation{eq.rhs, eq.lhs}; }

void EquationSystem::validate() const {
  for (char c : constants) {
    if (universe.contains(c)) {
      throw std::invalid_argument(std::string("symbol '") + c +
                                  "' is both a variable and a constant");
    }
  }
  for (const auto& eq : equations) {
    for (const VarWord* side : {&eq.lhs, &eq.rhs}) {
      if (mode == Mode::semigroup && side->empty()) {
        throw std::invalid_argument("empty side in semigroup mode: " + format_equation(eq));
      }
      for (char v : *side) {
        if (!universe.contains(v)) {
          throw std::invalid_argument(std::string("variable '") + v +
                                      "' is not declared in the universe");
        }
      }
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

VarWord parse_side(std::string_view text, const Alphabet* universe, Mode mode,
                   std::string_view whole) {
  text = trim(text);
  if (text.empty()) {
    throw ParseError("malformed equation '" + std::string(whole) + "': missing side");
  }
  if (text == "1") {
    if (mode == Mode::semigroup) {
      throw ParseError("empty side '1' is not allowed in semigroup mode: '" +
                       std::string(whole) + "'");
    }
    return VarWord{};
  }
  std::string symbols;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!is_symbol_char(c)) {
      throw ParseError("malformed equation '" + std::string(whole) + "': unexpected '" +
                       std::string(1, c) + "'");
    }
    if (universe != nullptr && !universe->contains(c)) {
      throw ParseError("unknown variable '" + std::string(1, c) + "' in '" +
                       std::string(whole) + "'");
    }
    symbols.push_back(c);
  }
  return VarWord(std::move(symbols));
}

Equation parse_equation_impl(std::string_view text, const Alphabet* universe, Mode mode) {
  auto eq_pos = text.find('=');
  if (eq_pos == std::string_view::npos) {
    throw ParseError("malformed equation '" + std::string(text) + "': expected '='");
  }
  if (text.find('=', eq_pos + 1) != std::string_view::npos) {
    throw ParseError("malformed equation '" + std::string(text) + "': more than one '='");
  }
  return Equation{parse_side(text.substr(0, eq_pos), universe, mode, text),
                  parse_side(text.substr(eq_pos + 1), universe, mode, text)};
}

}  // namespace

Equation parse_equation(std::string_view text, const Alphabet& universe, Mode mode) {
  return parse_equation_impl(text, &universe, mode);
}

Equation parse_equation(std::string_view text, Mode mode) {
  return parse_equation_impl(text, nullptr, mode);
}

std::string format_word(const VarWord& w) { return w.empty() ? "1" : w.symbols(); }

std::string format_equation(const Equation& eq) {
  return format_word(eq.lhs) + " = " + format_word(eq.rhs);
}

Alphabet variables_of(const Equation& eq, const Alphabet& universe) {
  Alphabet out;
  for (char v : universe) {
    if (eq.lhs.symbols().find(v) != std::string::npos ||
        eq.rhs.symbols().find(v) != std::string::npos) {
      out.insert(v);
    }
  }
  return out;
}

Alphabet variables_of(const Equation& eq) {
  Alphabet out;
  for (char v : eq.lhs) out.insert(v);
  for (char v : eq.rhs) out.insert(v);
  return out;
}

Alphabet variables_of(const EquationSystem& sys) {
  Alphabet out;
  for (char v : sys.universe) {
    for (const auto& eq : sys.equations) {
      if (eq.lhs.symbols().find(v) != std::string::npos ||
          eq.rhs.symbols().find(v) != std::string::npos) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

bool is_trivial(const Equation& eq) { return eq.lhs == eq.rhs; }

std::array<int, 128> occurrence_difference(const Equation& eq) {
  std::array<int, 128> diff{};
  for (char v : eq.lhs) ++diff[static_cast<unsigned char>(v) & 0x7f];
  for (char v : eq.rhs) --diff[static_cast<unsigned char>(v) & 0x7f];
  return diff;
}

bool is_balanced(const Equation& eq) {
  for (int d : occurrence_difference(eq)) {
    if (d != 0) return false;
  }
  return true;
}

}  // namespace wordchains
