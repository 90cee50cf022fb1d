#pragma once

// Deliberately naive reference implementations for the tests: plain strings,
// full cartesian products and an explicit sort. Nothing here calls into the
// library, so agreement with it is evidence rather than tautology.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace brute {

using Images = std::vector<std::string>;

inline std::vector<std::string> words_up_to(const std::string& alphabet, std::size_t min_len,
                                            std::size_t max_len) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : alphabet) next.push_back(w + c);
    }
    layer = std::move(next);
  }
  return out;
}

inline std::vector<Images> all_assignments(std::size_t vars, const std::string& alphabet,
                                           std::size_t min_len, std::size_t max_len) {
  const auto words = words_up_to(alphabet, min_len, max_len);
  std::vector<Images> out{Images{}};
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Images> next;
    for (const auto& partial : out) {
      for (const auto& w : words) {
        Images grown = partial;
        grown.push_back(w);
        next.push_back(std::move(grown));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Canonical order: longest image, total length, then images one by one by
// length and then letter order.
inline bool canonical_less(const Images& a, const Images& b, const std::string& alphabet) {
  auto longest = [](const Images& im) {
    std::size_t m = 0;
    for (const auto& w : im) m = std::max(m, w.size());
    return m;
  };
  auto total = [](const Images& im) {
    std::size_t t = 0;
    for (const auto& w : im) t += w.size();
    return t;
  };
  if (longest(a) != longest(b)) return longest(a) < longest(b);
  if (total(a) != total(b)) return total(a) < total(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return a[i].size() < b[i].size();
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      auto ra = alphabet.find(a[i][k]);
      auto rb = alphabet.find(b[i][k]);
      if (ra != rb) return ra < rb;
    }
  }
  return false;
}

inline std::vector<Images> sorted_assignments(std::size_t vars, const std::string& alphabet,
                                              std::size_t min_len, std::size_t max_len) {
  auto all = all_assignments(vars, alphabet, min_len, max_len);
  std::sort(all.begin(), all.end(), [&](const Images& a, const Images& b) {
    return canonical_less(a, b, alphabet);
  });
  return all;
}

// Substitutes images for the variables of `side` (`vars[i]` maps to im[i]).
inline std::string substitute(const std::string& side, const std::string& vars,
                              const Images& im) {
  std::string out;
  for (char c : side) out += im[vars.find(c)];
  return out;
}

struct Eq {
  std::string lhs;
  std::string rhs;
};

inline bool solves(const Eq& e, const std::string& vars, const Images& im) {
  return substitute(e.lhs, vars, im) == substitute(e.rhs, vars, im);
}

inline std::string repeat(const std::string& w, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < k; ++i) out += w;
  return out;
}

// Least period by trying every divisor.
inline std::string root(const std::string& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p == 0 && repeat(w.substr(0, p), w.size() / p) == w) return w.substr(0, p);
  }
  return w;
}

}  // namespace brute
