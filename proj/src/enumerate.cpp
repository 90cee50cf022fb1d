#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "wordchains/oracle.hpp"

namespace wordchains {

void Bound::validate() const {
  if (alphabet.empty()) throw std::invalid_argument("bound alphabet is empty");
  if (max_len < min_len()) {
    throw std::invalid_argument("max_len " + std::to_string(max_len) +
                                " is below the minimum image length for " +
                                std::string(to_string(mode)));
  }
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

// Number of length vectors of `n` entries in [lo, hi] summing to `total`.
std::uint64_t compositions(std::size_t n, std::size_t lo, std::size_t hi, std::size_t total) {
  if (hi < lo) return n == 0 && total == 0 ? 1 : 0;
  std::vector<std::uint64_t> ways(total + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(total + 1, 0);
    for (std::size_t t = 0; t <= total; ++t) {
      if (ways[t] == 0) continue;
      for (std::size_t len = lo; len <= hi && t + len <= total; ++len) {
        next[t + len] = sat_add(next[t + len], ways[t]);
      }
    }
    ways = std::move(next);
  }
  return ways[total];
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

// Assignments whose longest image has length exactly `layer` and whose total
// length is `total`.
std::uint64_t layer_count(std::size_t n, const Bound& bound, std::size_t layer,
                          std::size_t total) {
  const std::size_t lo = bound.min_len();
  std::uint64_t with = compositions(n, lo, layer, total);
  std::uint64_t without = layer == 0 ? 0 : compositions(n, lo, layer - 1, total);
  if (layer == lo) without = 0;
  std::uint64_t vectors = with == kSaturated ? kSaturated : with - without;
  return sat_mul(vectors, sat_pow(bound.alphabet.size(), total));
}

struct CompiledEquation {
  std::vector<std::uint8_t> lhs;
  std::vector<std::uint8_t> rhs;
};

CompiledEquation compile(const Equation& eq, const Alphabet& universe) {
  CompiledEquation out;
  for (char v : eq.lhs) {
    int i = universe.index_of(v);
    if (i < 0) throw UnmappedVariable(v);
    out.lhs.push_back(static_cast<std::uint8_t>(i));
  }
  for (char v : eq.rhs) {
    int i = universe.index_of(v);
    if (i < 0) throw UnmappedVariable(v);
    out.rhs.push_back(static_cast<std::uint8_t>(i));
  }
  return out;
}

bool holds(const CompiledEquation& eq, const std::vector<ConstWord>& images) {
  std::size_t left = 0;
  std::size_t right = 0;
  for (auto v : eq.lhs) left += images[v].size();
  for (auto v : eq.rhs) right += images[v].size();
  if (left != right) return false;
  std::size_t li = 0, lo = 0, ri = 0, ro = 0;
  for (std::size_t k = 0; k < left; ++k) {
    while (lo == images[eq.lhs[li]].size()) ++li, lo = 0;
    while (ro == images[eq.rhs[ri]].size()) ++ri, ro = 0;
    if (images[eq.lhs[li]][lo] != images[eq.rhs[ri]][ro]) return false;
    ++lo;
    ++ro;
  }
  return true;
}

struct Check {
  CompiledEquation equation;
  bool solved;
};

// A compiled WitnessQuery over the variables actually searched.
struct Problem {
  Alphabet universe;
  // checks_at[k]: checks that become decidable once variable k is assigned.
  std::vector<std::vector<Check>> checks_at;
  std::vector<Check> constant_checks;
  std::function<bool(std::span<const ConstWord>)> accept;
  Bound bound;
};

// Depth-first walk over one layer (longest image = layer, total = total).
class LayerWalker {
 public:
  LayerWalker(const Problem& p, std::size_t layer, std::size_t total)
      : p_(p),
        n_(p.universe.size()),
        layer_(layer),
        total_(total),
        lo_(p.bound.min_len()),
        letters_(p.bound.alphabet.letters()),
        images_(n_) {}

  // The (length, word) choices for variable 0, in canonical order.
  std::vector<ConstWord> first_choices() const {
    std::vector<ConstWord> out;
    for (std::size_t len = lo_; len <= std::min(layer_, total_); ++len) {
      if (!feasible(0, total_, false, len)) continue;
      for_each_word(len, [&](const ConstWord& w) {
        out.push_back(w);
        return false;
      });
    }
    return out;
  }

  // Tries the subtree rooted at image `first` for variable 0.
  bool search_branch(const ConstWord& first) {
    images_[0] = first;
    if (!checks_pass(0)) return false;
    return dfs(1, total_ - first.size(), first.size() == layer_);
  }

  bool search_all() {
    for (const auto& first : first_choices()) {
      if (search_branch(first)) return true;
    }
    return false;
  }

  const std::vector<ConstWord>& images() const { return images_; }

 private:
  bool feasible(std::size_t k, std::size_t remaining, bool hit, std::size_t len) const {
    if (len > remaining) return false;
    const std::size_t rest = remaining - len;
    const std::size_t after = n_ - k - 1;
    if (rest > after * layer_ || rest < after * lo_) return false;
    if (!hit && len != layer_) {
      if (after == 0) return false;
      if (rest < layer_ + (after - 1) * lo_) return false;
    }
    return true;
  }

  // Words of length `len` in letter order; stops early when `f` returns true.
  template <typename F>
  bool for_each_word(std::size_t len, F&& f) const {
    ConstWord w;
    w.resize(len, letters_[0]);
    std::vector<std::size_t> digits(len, 0);
    const std::size_t base = letters_.size();
    while (true) {
      if (f(w)) return true;
      std::size_t pos = len;
      while (true) {
        if (pos == 0) return false;
        --pos;
        if (++digits[pos] < base) {
          w[pos] = letters_[digits[pos]];
          break;
        }
        digits[pos] = 0;
        w[pos] = letters_[0];
      }
    }
  }

  bool checks_pass(std::size_t k) const {
    for (const auto& c : p_.checks_at[k]) {
      if (holds(c.equation, images_) != c.solved) return false;
    }
    return true;
  }

  bool dfs(std::size_t k, std::size_t remaining, bool hit) {
    if (k == n_) {
      if (remaining != 0 || !hit) return false;
      return !p_.accept || p_.accept(images_);
    }
    for (std::size_t len = lo_; len <= std::min(layer_, remaining); ++len) {
      if (!feasible(k, remaining, hit, len)) continue;
      const bool next_hit = hit || len == layer_;
      bool found = for_each_word(len, [&](const ConstWord& w) {
        images_[k] = w;
        if (!checks_pass(k)) return false;
        return dfs(k + 1, remaining - len, next_hit);
      });
      if (found) return true;
    }
    return false;
  }

  const Problem& p_;
  std::size_t n_;
  std::size_t layer_;
  std::size_t total_;
  std::size_t lo_;
  const std::string& letters_;
  std::vector<ConstWord> images_;
};

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Finds the least satisfying assignment of one layer, splitting the choices
// for variable 0 across workers. The least branch index with a hit wins.
std::optional<std::vector<ConstWord>> search_layer(const Problem& p, std::size_t layer,
                                                   std::size_t total, unsigned threads) {
  if (threads <= 1) {
    LayerWalker walker(p, layer, total);
    if (walker.search_all()) return walker.images();
    return std::nullopt;
  }

  const std::vector<ConstWord> branches = LayerWalker(p, layer, total).first_choices();
  if (branches.empty()) return std::nullopt;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(branches.size()));

  std::atomic<std::size_t> best{branches.size()};
  std::mutex mutex;
  std::optional<std::vector<ConstWord>> best_images;

  auto work = [&](unsigned worker) {
    LayerWalker walker(p, layer, total);
    for (std::size_t b = worker; b < branches.size(); b += threads) {
      if (b > best.load(std::memory_order_acquire)) return;
      if (!walker.search_branch(branches[b])) continue;
      std::lock_guard lock(mutex);
      if (b < best.load(std::memory_order_relaxed)) {
        best.store(b, std::memory_order_release);
        best_images = walker.images();
      }
      return;
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return best_images;
}

Problem compile_query(const WitnessQuery& query, const Bound& bound) {
  Problem p;
  p.bound = bound;
  p.accept = query.accept;

  // Without an extra predicate, variables outside the constrained equations
  // only ever take their least image, so they are left out of the search.
  if (query.accept) {
    p.universe = query.universe;
  } else {
    for (char v : query.universe) {
      for (const auto& r : query.requirements) {
        const Equation& eq = query.equations.at(r.equation);
        if (eq.lhs.symbols().find(v) != std::string::npos ||
            eq.rhs.symbols().find(v) != std::string::npos) {
          p.universe.insert(v);
          break;
        }
      }
    }
  }

  p.checks_at.resize(p.universe.size());
  for (const auto& r : query.requirements) {
    const Equation& eq = query.equations.at(r.equation);
    for (char v : eq.lhs) {
      if (!query.universe.contains(v)) throw UnmappedVariable(v);
    }
    for (char v : eq.rhs) {
      if (!query.universe.contains(v)) throw UnmappedVariable(v);
    }
    Check check{compile(eq, p.universe), r.solved};
    int ready = -1;
    for (auto v : check.equation.lhs) ready = std::max<int>(ready, v);
    for (auto v : check.equation.rhs) ready = std::max<int>(ready, v);
    if (ready < 0) {
      p.constant_checks.push_back(std::move(check));
    } else {
      p.checks_at[static_cast<std::size_t>(ready)].push_back(std::move(check));
    }
  }
  return p;
}

Assignment widen(const Problem& p, const std::vector<ConstWord>& images,
                 const Alphabet& universe, const Bound& bound) {
  ConstWord least;
  if (bound.min_len() > 0) least.resize(bound.min_len(), bound.alphabet[0]);
  std::vector<ConstWord> full;
  full.reserve(universe.size());
  for (char v : universe) {
    int i = p.universe.index_of(v);
    full.push_back(i >= 0 ? images[static_cast<std::size_t>(i)] : least);
  }
  return Assignment(universe, std::move(full), bound.mode);
}

}  // namespace

std::uint64_t count_assignments(std::size_t variables, const Bound& bound) {
  bound.validate();
  std::uint64_t words = 0;
  for (std::size_t len = bound.min_len(); len <= bound.max_len; ++len) {
    words = sat_add(words, sat_pow(bound.alphabet.size(), len));
  }
  return sat_pow(words, variables);
}

SearchResult least_witness(const WitnessQuery& query, const Bound& bound,
                           const SearchOptions& options) {
  bound.validate();
  const Problem p = compile_query(query, bound);
  SearchResult result;

  const std::vector<ConstWord> none;
  for (const auto& c : p.constant_checks) {
    if (holds(c.equation, none) != c.solved) return result;
  }

  const std::size_t n = p.universe.size();
  if (n == 0) {
    result.visited = 1;
    if (!p.accept || p.accept(std::span<const ConstWord>{})) {
      result.status = SearchStatus::found;
      result.witness = widen(p, {}, query.universe, bound);
    }
    return result;
  }

  const unsigned threads = resolve_threads(options.threads);
  const std::size_t lo = bound.min_len();
  for (std::size_t layer = lo; layer <= bound.max_len; ++layer) {
    const std::size_t first_total = layer + (n - 1) * lo;
    const std::size_t last_total = n * layer;
    for (std::size_t total = first_total; total <= last_total; ++total) {
      const std::uint64_t size = layer_count(n, bound, layer, total);
      if (options.limit != 0 && sat_add(result.visited, size) > options.limit) {
        result.status = SearchStatus::limit_reached;
        return result;
      }
      result.visited = sat_add(result.visited, size);
      if (auto images = search_layer(p, layer, total, threads)) {
        result.status = SearchStatus::found;
        result.witness = widen(p, *images, query.universe, bound);
        return result;
      }
    }
  }
  return result;
}

void for_each_assignment(const Alphabet& universe, const Bound& bound,
                         const std::function<bool(const Assignment&)>& visit) {
  WitnessQuery query;
  query.universe = universe;
  query.accept = [&](std::span<const ConstWord> images) {
    return !visit(Assignment(universe, std::vector<ConstWord>(images.begin(), images.end()),
                             bound.mode));
  };
  least_witness(query, bound);
}

std::vector<Assignment> enumerate_assignments(const Alphabet& universe, const Bound& bound) {
  std::vector<Assignment> out;
  for_each_assignment(universe, bound, [&](const Assignment& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

}  // namespace wordchains
