#include "wordchains/semantics.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace wordchains {

Assignment::Assignment(Alphabet universe, std::vector<ConstWord> images, Mode mode)
    : universe_(std::move(universe)), images_(std::move(images)), mode_(mode) {
  if (images_.size() != universe_.size()) {
    throw std::invalid_argument("assignment needs exactly one image per variable");
  }
  if (mode_ == Mode::semigroup) {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i].empty()) {
        throw std::invalid_argument(std::string("empty image for '") + universe_[i] +
                                    "' in semigroup mode");
      }
    }
  }
}

Assignment Assignment::uniform(const Alphabet& universe, const ConstWord& image, Mode mode) {
  return Assignment(universe, std::vector<ConstWord>(universe.size(), image), mode);
}

const ConstWord& Assignment::image(VariableId v) const {
  int i = universe_.index_of(v);
  if (i < 0) throw UnmappedVariable(v);
  return images_[static_cast<std::size_t>(i)];
}

std::size_t Assignment::total_length() const {
  std::size_t n = 0;
  for (const auto& w : images_) n += w.size();
  return n;
}

ConstWord apply(const Assignment& h, const VarWord& w) {
  ConstWord out;
  for (char v : w) out += h.image(v);
  return out;
}

namespace {

// Compares h(lhs) with h(rhs) without materializing either side.
bool sides_equal(const Assignment& h, const Equation& eq) {
  std::size_t left_len = 0;
  std::size_t right_len = 0;
  for (char v : eq.lhs) left_len += h.image(v).size();
  for (char v : eq.rhs) right_len += h.image(v).size();
  if (left_len != right_len) return false;

  std::size_t li = 0, lo = 0, ri = 0, ro = 0;
  for (std::size_t k = 0; k < left_len; ++k) {
    while (lo == h.image(eq.lhs[li]).size()) ++li, lo = 0;
    while (ro == h.image(eq.rhs[ri]).size()) ++ri, ro = 0;
    if (h.image(eq.lhs[li])[lo] != h.image(eq.rhs[ri])[ro]) return false;
    ++lo;
    ++ro;
  }
  return true;
}

}  // namespace

bool solves(const Assignment& h, const Equation& eq) { return sides_equal(h, eq); }

bool solves_all(const Assignment& h, std::span<const Equation> equations) {
  for (const auto& eq : equations) {
    if (!solves(h, eq)) return false;
  }
  return true;
}

bool solves_system(const Assignment& h, const EquationSystem& sys) {
  return solves_all(h, sys.equations);
}

bool commutes(const ConstWord& u, const ConstWord& v) {
  const std::size_t n = u.size() + v.size();
  auto uv = [&](std::size_t i) { return i < u.size() ? u[i] : v[i - u.size()]; };
  auto vu = [&](std::size_t i) { return i < v.size() ? v[i] : u[i - v.size()]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (uv(i) != vu(i)) return false;
  }
  return true;
}

ConstWord primitive_root(const ConstWord& w) {
  if (w.empty()) throw std::invalid_argument("the empty word has no primitive root");
  // The least p > 0 with w a prefix of (ww)[p..] is the primitive root length.
  const std::string doubled = w.symbols() + w.symbols();
  const std::size_t p = doubled.find(w.symbols(), 1);
  return ConstWord(w.symbols().substr(0, p));
}

bool is_periodic(std::span<const ConstWord> images) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].empty()) continue;
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (!images[j].empty() && !commutes(images[i], images[j])) return false;
    }
  }
  return true;
}

bool is_periodic(const Assignment& h) { return is_periodic(h.images()); }

bool is_periodic_by_root(const Assignment& h) {
  std::optional<ConstWord> root;
  for (const auto& w : h.images()) {
    if (w.empty()) continue;
    ConstWord r = primitive_root(w);
    if (!root) {
      root = std::move(r);
    } else if (r != *root) {
      return false;
    }
  }
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Assignment parse_assignment(std::string_view text, Mode mode) {
  Alphabet universe;
  std::vector<ConstWord> images;
  const std::string whole(text);
  text = trim(text);
  if (text.empty()) return Assignment(universe, images, mode);

  while (true) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("malformed assignment '" + whole + "': expected var=word");
    }
    std::string_view var = trim(item.substr(0, eq));
    std::string_view word = trim(item.substr(eq + 1));
    if (var.size() != 1 || !is_symbol_char(var[0])) {
      throw ParseError("malformed assignment '" + whole + "': bad variable '" + std::string(var) +
                       "'");
    }
    if (universe.contains(var[0])) {
      throw ParseError("malformed assignment '" + whole + "': '" + std::string(var) +
                       "' assigned twice");
    }
    if (word.empty()) {
      throw ParseError("malformed assignment '" + whole + "': missing image for '" +
                       std::string(var) + "'");
    }
    ConstWord image;
    if (word != "1") {
      for (char c : word) {
        if (!is_symbol_char(c)) {
          throw ParseError("malformed assignment '" + whole + "': bad letter '" +
                           std::string(1, c) + "'");
        }
      }
      image = ConstWord(std::string(word));
    }
    universe.insert(var[0]);
    images.push_back(std::move(image));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  try {
    return Assignment(std::move(universe), std::move(images), mode);
  } catch (const std::invalid_argument& e) {
    throw ParseError("malformed assignment '" + whole + "': " + e.what());
  }
}

Assignment parse_assignment(std::string_view text, const Alphabet& universe, Mode mode) {
  Assignment raw = parse_assignment(text, mode);
  if (raw.universe().size() != universe.size()) {
    throw ParseError("assignment '" + std::string(text) + "' does not cover the universe " +
                     universe.letters());
  }
  std::vector<ConstWord> images;
  images.reserve(universe.size());
  for (char v : universe) {
    if (!raw.maps(v)) {
      throw ParseError("assignment '" + std::string(text) + "' does not map '" +
                       std::string(1, v) + "'");
    }
    images.push_back(raw.image(v));
  }
  return Assignment(universe, std::move(images), mode);
}

std::string format_assignment(const Assignment& h) {
  std::string out;
  for (std::size_t i = 0; i < h.universe().size(); ++i) {
    if (i > 0) out += ", ";
    out += h.universe()[i];
    out += '=';
    out += h.images()[i].empty() ? std::string("1") : h.images()[i].symbols();
  }
  return out;
}

}  // namespace wordchains
