#include "wordchains/exotic.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "wordchains/words.hpp"

namespace wordchains::exotic {

CappedElement::CappedElement(std::map<std::size_t, std::size_t> exponents) {
  for (auto [index, e] : exponents) {
    if (index == 0) throw std::invalid_argument("generator indices start at 1");
    if (e == 0) continue;
    exps_.emplace(index, std::min(e, index));
  }
}

CappedElement CappedElement::generator(std::size_t index, std::size_t exponent) {
  return CappedElement(std::map<std::size_t, std::size_t>{{index, exponent}});
}

std::size_t CappedElement::exponent(std::size_t index) const {
  auto it = exps_.find(index);
  return it == exps_.end() ? 0 : it->second;
}

CappedElement multiply(const CappedElement& u, const CappedElement& v) {
  std::map<std::size_t, std::size_t> sum = u.exponents();
  for (auto [index, e] : v.exponents()) sum[index] += e;
  return CappedElement(std::move(sum));
}

CappedElement power(const CappedElement& u, std::size_t k) {
  std::map<std::size_t, std::size_t> out;
  for (auto [index, e] : u.exponents()) {
    // min(k * e, index) without overflowing k * e.
    out[index] = k >= index ? index : std::min(k * e, index);
  }
  return CappedElement(std::move(out));
}

bool solves_one_unknown(const CappedElement& u, std::size_t p, std::size_t q) {
  return power(u, p) == power(u, q);
}

std::vector<ChainStep> demonstrate_increasing_chain(std::size_t max_p) {
  std::vector<ChainStep> steps;
  for (std::size_t p = 1; p <= max_p; ++p) {
    ChainStep s;
    s.p = p;
    s.witness = CappedElement::generator(p);
    s.solves_current = solves_one_unknown(s.witness, p, p + 1);
    s.fails_previous = !solves_one_unknown(s.witness, p - 1, p);
    steps.push_back(s);
  }
  return steps;
}

std::string format_element(const CappedElement& u) {
  if (u.is_identity()) return "1";
  std::string out;
  for (auto [index, e] : u.exponents()) {
    if (!out.empty()) out += ' ';
    out += 'a' + std::to_string(index) + '^' + std::to_string(e);
  }
  return out;
}

CappedElement parse_element(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::map<std::size_t, std::size_t> exps;
  bool identity = false;
  bool any = false;
  auto bad = [&](const std::string& why) {
    return ParseError("malformed element '" + std::string(text) + "': " + why);
  };
  auto number = [&](std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw bad("expected a number, got '" + std::string(s) + "'");
    }
    return value;
  };
  while (in >> token) {
    any = true;
    if (token == "1") {
      identity = true;
      continue;
    }
    if (token.size() < 2 || token[0] != 'a') throw bad("expected aI^E, got '" + token + "'");
    std::string_view rest(token);
    rest.remove_prefix(1);
    auto caret = rest.find('^');
    std::size_t index = number(rest.substr(0, caret));
    std::size_t e = caret == std::string_view::npos ? 1 : number(rest.substr(caret + 1));
    if (index == 0) throw bad("generator indices start at 1");
    exps[index] += e;
  }
  if (!any) throw bad("empty");
  if (identity && !exps.empty()) throw bad("'1' cannot be combined with generators");
  return CappedElement(std::move(exps));
}

}  // namespace wordchains::exotic
