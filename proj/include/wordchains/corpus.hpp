#pragma once

// Equation corpus files: one equation per line, `#` comments, and header
// directives `@mode`, `@vars`, `@alphabet` before the first equation.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "wordchains/words.hpp"

namespace wordchains {

/// Without `@vars` the universe is the variables in order of first occurrence.
/// Without `@mode` the mode is monoid; without `@alphabet` it is `ab`.
/// Errors carry the 1-based line number.
EquationSystem parse_corpus(std::string_view text);

EquationSystem load_corpus(const std::filesystem::path& path);

/// Emits the header directives, then `comments` as `# ` lines, then one
/// equation per line.
std::string format_corpus(const EquationSystem& sys, std::span<const std::string> comments = {});

}  // namespace wordchains
