#include "wordchains/corpus.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace wordchains {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

}  // namespace

EquationSystem parse_corpus(std::string_view text) {
  EquationSystem sys;
  std::optional<Alphabet> declared_vars;
  std::vector<std::pair<std::size_t, std::string>> equation_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() != '@') {
      equation_lines.emplace_back(line_no, std::string(line));
      continue;
    }
    if (!equation_lines.empty()) fail(line_no, "directive after the first equation");
    auto space = line.find_first_of(" \t");
    std::string_view key = line.substr(0, space);
    std::string_view value =
        space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    if (key != "@mode" && key != "@vars" && key != "@alphabet") {
      fail(line_no, "unknown directive '" + std::string(key) + "'");
    }
    if (key == "@alphabet" && value.empty()) fail(line_no, "empty @alphabet");
    try {
      if (key == "@mode") {
        sys.mode = parse_mode(value);
      } else if (key == "@vars") {
        declared_vars = Alphabet(value);
      } else {
        sys.constants = Alphabet(value);
      }
    } catch (const ParseError& e) {
      fail(line_no, e.what());
    }
  }

  for (const auto& [no, line] : equation_lines) {
    try {
      Equation eq = declared_vars ? parse_equation(line, *declared_vars, sys.mode)
                                  : parse_equation(line, sys.mode);
      if (!declared_vars) {
        for (char v : eq.lhs) sys.universe.insert(v);
        for (char v : eq.rhs) sys.universe.insert(v);
      }
      sys.equations.push_back(std::move(eq));
    } catch (const ParseError& e) {
      fail(no, e.what());
    }
  }
  if (declared_vars) sys.universe = *declared_vars;

  try {
    sys.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return sys;
}

EquationSystem load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_corpus(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_corpus(const EquationSystem& sys, std::span<const std::string> comments) {
  std::string out;
  out += "@mode " + std::string(to_string(sys.mode)) + "\n";
  out += "@vars " + sys.universe.letters() + "\n";
  out += "@alphabet " + sys.constants.letters() + "\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  for (const auto& eq : sys.equations) out += format_equation(eq) + "\n";
  return out;
}

}  // namespace wordchains
