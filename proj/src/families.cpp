#include "wordchains/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>

namespace wordchains {

Bound default_search_bound(Mode mode) { return Bound{4, Alphabet("ab"), mode}; }

VerifyResult verify_family(const FamilyOutput& out) {
  if (const auto* chain = std::get_if<ChainCertificate>(&out.certificate)) {
    return verify_decreasing_chain(out.system, *chain, out.search_bound);
  }
  return verify_independence(out.system, std::get<IndependenceCertificate>(out.certificate),
                             out.search_bound);
}

namespace {

EquationSystem make_system(std::string_view vars, Mode mode,
                           std::initializer_list<std::string_view> equations) {
  EquationSystem sys;
  sys.mode = mode;
  sys.universe = Alphabet(vars);
  for (auto text : equations) sys.equations.push_back(parse_equation(text, sys.universe, mode));
  sys.validate();
  return sys;
}

// Least w with w solving E_1..E_i and failing E_{i+1}.
Assignment search_chain_witness(const EquationSystem& sys, std::size_t i, const Bound& bound,
                                const SearchOptions& options, std::string_view family) {
  WitnessQuery q;
  q.universe = sys.universe;
  q.equations = sys.equations;
  q.requirements.push_back({i, false});
  for (std::size_t j = 0; j < i; ++j) q.requirements.push_back({j, true});
  SearchResult r = least_witness(q, bound, options);
  if (r.status != SearchStatus::found) {
    throw std::runtime_error(std::string(family) + ": no chain witness for index " +
                             std::to_string(i) + " within max_len " +
                             std::to_string(bound.max_len));
  }
  return *r.witness;
}

// A chain whose witnesses w_1..w_{m-1} are given; w_0 is searched.
FamilyOutput printed_chain(std::string name, EquationSystem sys,
                           std::initializer_list<std::string_view> witnesses,
                           const SearchOptions& options) {
  FamilyOutput out;
  out.name = std::move(name);
  out.search_bound = default_search_bound(sys.mode);
  ChainCertificate cert;
  cert.witnesses.push_back(search_chain_witness(sys, 0, out.search_bound, options, out.name));
  for (auto text : witnesses) {
    cert.witnesses.push_back(parse_assignment(text, sys.universe, sys.mode));
  }
  out.claimed_size = sys.size();
  out.system = std::move(sys);
  out.certificate = std::move(cert);
  return out;
}

ChainCertificate searched_chain_certificate(const EquationSystem& sys, const Bound& bound,
                                            const SearchOptions& options,
                                            std::string_view family) {
  ChainCertificate cert;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    cert.witnesses.push_back(search_chain_witness(sys, i, bound, options, family));
  }
  return cert;
}

std::string indexed(std::string_view base, std::size_t i) {
  return std::string(base) + "_" + std::to_string(i);
}

// Names for the indexed symbols, taken from kVariablePool in listing order.
class NameAllocator {
 public:
  char next(std::string symbol) {
    if (used_ >= kVariablePool.size()) {
      throw std::invalid_argument("family needs more than " +
                                  std::to_string(kVariablePool.size()) + " variables");
    }
    char c = kVariablePool[used_++];
    map_.emplace_back(std::move(symbol), c);
    return c;
  }
  const std::vector<std::pair<std::string, VariableId>>& map() const { return map_; }

 private:
  std::size_t used_ = 0;
  std::vector<std::pair<std::string, VariableId>> map_;
};

VarWord word_of(std::initializer_list<std::string_view> parts) {
  std::string s;
  for (auto p : parts) s += p;
  return VarWord(std::move(s));
}

// Variables and equation sides shared by the quadratic constructions.
struct QuadraticNames {
  char x;
  char y;
  std::vector<char> z;  // z[k] is z_{k+1}
  Alphabet universe;
  std::vector<std::pair<std::string, VariableId>> name_map;
};

QuadraticNames quadratic_names(std::size_t n) {
  if (n < 3) throw std::invalid_argument("quadratic families need n >= 3");
  NameAllocator names;
  QuadraticNames q;
  q.x = names.next("x");
  q.y = names.next("y");
  for (std::size_t k = 1; k <= n - 2; ++k) q.z.push_back(names.next(indexed("z", k)));
  for (const auto& [symbol, c] : names.map()) q.universe.insert(c);
  q.name_map = names.map();
  return q;
}

// x y x w y w = w x w y x y for a word w over the z variables.
Equation square_commutation(char x, char y, const std::string& w) {
  const std::string xs(1, x);
  const std::string ys(1, y);
  return Equation{word_of({xs, ys, xs, w, ys, w}), word_of({w, xs, w, ys, xs, ys})};
}

Equation commutation(const std::string& u, const std::string& v) {
  return Equation{VarWord(u + v), VarWord(v + u)};
}

}  // namespace

FamilyOutput chain_dc3(const SearchOptions& options) {
  EquationSystem sys = make_system(
      "xyz", Mode::monoid,
      {"xyz = zxy", "xyxzyz = zxzyxy", "xz = zx", "xy = yx", "x = 1", "y = 1", "z = 1"});
  // The witness for the x = 1 row is x=1, y=a, z=a as in dc4; the variant
  // x=1, y=b, z=a fails xyz = zxy.
  return printed_chain("dc3", std::move(sys),
                       {"x=a, y=b, z=abab", "x=a, y=b, z=ab", "x=a, y=b, z=1", "x=a, y=a, z=a",
                        "x=1, y=a, z=a", "x=1, y=1, z=a"},
                       options);
}

FamilyOutput chain_dc3_semigroup(const SearchOptions& options) {
  EquationSystem sys = make_system(
      "xyz", Mode::semigroup,
      {"xxyz = zxyx", "xxyxzyz = zzyxxyx", "xz = zx", "xy = yx", "x = y", "x = z", "xx = x"});
  return printed_chain("dc3plus", std::move(sys),
                       {"x=a, y=b, z=aabaaba", "x=a, y=b, z=aaba", "x=a, y=b, z=a",
                        "x=a, y=aa, z=a", "x=a, y=a, z=aa", "x=a, y=a, z=a"},
                       options);
}

FamilyOutput chain_dc4(const SearchOptions& options) {
  EquationSystem sys = make_system("xyzt", Mode::monoid,
                                   {"xyz = zxy", "xyt = txy", "xyxzyz = zxzyxy",
                                    "xyxtyt = txtyxy", "xyxztyzt = ztxztyxy", "xz = zx",
                                    "xt = tx", "xy = yx", "x = 1", "y = 1", "z = 1", "t = 1"});
  return printed_chain(
      "dc4", std::move(sys),
      {"x=a, y=b, z=abab, t=a", "x=a, y=b, z=abab, t=abab", "x=a, y=b, z=ab, t=abab",
       "x=a, y=b, z=ab, t=ab", "x=a, y=b, z=ab, t=1", "x=a, y=b, z=1, t=ab",
       "x=a, y=b, z=1, t=1", "x=a, y=a, z=a, t=a", "x=1, y=a, z=a, t=a", "x=1, y=1, z=a, t=a",
       "x=1, y=1, z=1, t=a"},
      options);
}

FamilyOutput quartic_independent_system(std::size_t m) {
  if (m == 0) throw std::invalid_argument("quartic family needs m >= 1");
  NameAllocator names;
  std::vector<char> x, y, z, t;
  for (std::size_t i = 1; i <= m; ++i) x.push_back(names.next(indexed("x", i)));
  for (std::size_t i = 1; i <= m; ++i) y.push_back(names.next(indexed("y", i)));
  for (std::size_t i = 1; i <= m; ++i) z.push_back(names.next(indexed("z", i)));
  for (std::size_t i = 1; i <= m; ++i) t.push_back(names.next(indexed("t", i)));

  FamilyOutput out;
  out.name = "quartic";
  out.name_map = names.map();
  out.search_bound = default_search_bound(Mode::monoid);
  EquationSystem& sys = out.system;
  for (const auto& [symbol, c] : names.map()) sys.universe.insert(c);

  IndependenceCertificate cert;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const std::string core{x[i], x[j], x[k], y[i], y[j], y[k], z[i], z[j], z[k]};
        for (std::size_t l = 0; l < m; ++l) {
          sys.equations.push_back(Equation{VarWord(core + t[l]), VarWord(t[l] + core)});

          std::vector<ConstWord> images(sys.universe.size());
          for (std::size_t r : {i, j, k}) {
            images[static_cast<std::size_t>(sys.universe.index_of(x[r]))] = ConstWord("ab");
            images[static_cast<std::size_t>(sys.universe.index_of(y[r]))] = ConstWord("a");
            images[static_cast<std::size_t>(sys.universe.index_of(z[r]))] = ConstWord("ba");
          }
          images[static_cast<std::size_t>(sys.universe.index_of(t[l]))] = ConstWord("ababa");
          cert.witnesses.emplace_back(sys.universe, std::move(images), Mode::monoid);
        }
      }
    }
  }
  sys.validate();
  out.claimed_size = m * m * (m - 1) * (m >= 2 ? m - 2 : 0) / 6;
  out.certificate = std::move(cert);
  return out;
}

FamilyOutput quadratic_independent_system(std::size_t n, const SearchOptions& options) {
  QuadraticNames names = quadratic_names(n);
  FamilyOutput out;
  out.name = "quadratic";
  out.name_map = names.name_map;
  out.search_bound = default_search_bound(Mode::monoid);
  out.system.universe = names.universe;
  const std::size_t K = n - 2;
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t j = i + 1; j < K; ++j) {
      out.system.equations.push_back(
          square_commutation(names.x, names.y, std::string{names.z[i], names.z[j]}));
    }
  }
  out.system.validate();
  out.claimed_size = (n * n + 6 - 5 * n) / 2;

  auto cert = find_independence_certificate(out.system, out.search_bound, options);
  if (!cert) {
    throw std::runtime_error("quadratic family: independence witness search failed for n=" +
                             std::to_string(n));
  }
  out.certificate = std::move(*cert);
  return out;
}

FamilyOutput quadratic_chain(std::size_t n, const SearchOptions& options) {
  QuadraticNames names = quadratic_names(n);
  FamilyOutput out;
  out.name = "chain";
  out.name_map = names.name_map;
  out.search_bound = default_search_bound(Mode::monoid);
  EquationSystem& sys = out.system;
  sys.universe = names.universe;

  const std::string xs(1, names.x);
  const std::string ys(1, names.y);
  const std::size_t K = n - 2;
  for (char z : names.z) {
    sys.equations.push_back(Equation{word_of({xs, ys, std::string(1, z)}),
                                     word_of({std::string(1, z), xs, ys})});
  }
  for (char z : names.z) {
    sys.equations.push_back(square_commutation(names.x, names.y, std::string(1, z)));
  }
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t j = i + 1; j < K; ++j) {
      sys.equations.push_back(
          square_commutation(names.x, names.y, std::string{names.z[i], names.z[j]}));
    }
  }
  for (char z : names.z) sys.equations.push_back(commutation(xs, std::string(1, z)));
  sys.equations.push_back(commutation(xs, ys));
  sys.equations.push_back(Equation{VarWord(xs), VarWord()});
  sys.equations.push_back(Equation{VarWord(ys), VarWord()});
  for (char z : names.z) sys.equations.push_back(Equation{VarWord(std::string(1, z)), VarWord()});
  sys.validate();
  out.claimed_size = (n * n + 3 * n - 4) / 2;
  out.certificate = searched_chain_certificate(sys, out.search_bound, options, "chain");
  return out;
}

std::optional<IndependenceCertificate> find_independence_certificate(
    const EquationSystem& sys, const Bound& bound, const SearchOptions& options) {
  Bound b = bound;
  b.mode = sys.mode;
  IndependenceCertificate cert;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    WitnessQuery q;
    q.universe = sys.universe;
    q.equations = sys.equations;
    q.requirements.push_back({i, false});
    for (std::size_t j = 0; j < sys.size(); ++j) {
      if (j != i) q.requirements.push_back({j, true});
    }
    SearchResult r = least_witness(q, b, options);
    if (r.status != SearchStatus::found) return std::nullopt;
    cert.witnesses.push_back(*r.witness);
  }
  return cert;
}

std::optional<Assignment> find_nonperiodic_solution(const EquationSystem& sys, const Bound& bound,
                                                    const SearchOptions& options) {
  Bound b = bound;
  b.mode = sys.mode;
  WitnessQuery q;
  q.universe = sys.universe;
  q.equations = sys.equations;
  for (std::size_t j = 0; j < sys.size(); ++j) q.requirements.push_back({j, true});
  q.accept = [](std::span<const ConstWord> images) { return !is_periodic(images); };
  SearchResult r = least_witness(q, b, options);
  return r.witness;
}

std::vector<FamilyOutput> toy_systems(const SearchOptions& options) {
  std::vector<FamilyOutput> out;
  const Bound bound = default_search_bound(Mode::semigroup);

  FamilyOutput triple;
  triple.name = "toy-triple";
  triple.system = make_system("xyz", Mode::semigroup, {"xx = y", "yy = z", "zz = x"});
  triple.claimed_size = 3;
  triple.search_bound = bound;
  auto triple_cert = find_independence_certificate(triple.system, bound, options);
  if (!triple_cert) throw std::runtime_error("toy-triple: independence witness search failed");
  triple.certificate = std::move(*triple_cert);
  out.push_back(std::move(triple));

  FamilyOutput pair;
  pair.name = "toy-pair";
  pair.system = make_system("xyz", Mode::semigroup, {"xyz = zyx", "xyyz = zyyx"});
  pair.claimed_size = 2;
  pair.search_bound = bound;
  auto pair_cert = find_independence_certificate(pair.system, bound, options);
  if (!pair_cert) throw std::runtime_error("toy-pair: independence witness search failed");
  pair.certificate = std::move(*pair_cert);
  pair.common_solution = find_nonperiodic_solution(pair.system, bound, options);
  if (!pair.common_solution) throw std::runtime_error("toy-pair: no nonperiodic solution found");
  out.push_back(std::move(pair));
  return out;
}

bool power_identity_holds(std::span<const ConstWord> us, std::size_t k) {
  ConstWord product;
  for (const auto& u : us) product += u;
  ConstWord powers;
  for (const auto& u : us) powers += power(u, k);
  return power(product, k) == powers;
}

FamilyOutput chainify(const EquationSystem& sys, const IndependenceCertificate& cert,
                      const std::optional<Assignment>& nonperiodic, const Bound& bound,
                      const SearchOptions& options) {
  if (sys.equations.empty()) throw std::invalid_argument("chainify needs a nonempty system");
  VerifyResult check = verify_independence(sys, cert, bound);
  if (check.outcome != Outcome::verified) {
    throw std::invalid_argument("chainify needs an independent system: " + check.detail);
  }

  EquationSystem chain = sys;
  chain.mode = Mode::monoid;
  Bound b = bound;
  b.mode = Mode::monoid;

  std::optional<Assignment> h = nonperiodic;
  if (h) {
    if (!solves_system(*h, sys) || is_periodic(*h)) {
      throw std::invalid_argument("supplied solution is not a nonperiodic solution: " +
                                  format_assignment(*h));
    }
  } else {
    h = find_nonperiodic_solution(chain, b, options);
    if (!h) throw std::invalid_argument("chainify: no nonperiodic solution found within bound");
  }

  ChainCertificate chain_cert;
  for (const auto& w : check.witnesses) {
    chain_cert.witnesses.emplace_back(w.universe(), w.images(), Mode::monoid);
  }

  std::vector<Equation> candidates;
  const std::string& vars = sys.universe.letters();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      candidates.push_back(commutation(std::string(1, vars[i]), std::string(1, vars[j])));
    }
  }
  for (char v : vars) candidates.push_back(Equation{VarWord(std::string(1, v)), VarWord()});

  for (const auto& candidate : candidates) {
    chain.equations.push_back(candidate);
    WitnessQuery q;
    q.universe = chain.universe;
    q.equations = chain.equations;
    const std::size_t last = chain.size() - 1;
    q.requirements.push_back({last, false});
    for (std::size_t j = 0; j < last; ++j) q.requirements.push_back({j, true});
    SearchResult r = least_witness(q, b, options);
    if (r.status == SearchStatus::found) {
      chain_cert.witnesses.push_back(*r.witness);
    } else {
      chain.equations.pop_back();
    }
  }

  FamilyOutput out;
  out.name = "chainify";
  out.claimed_size = chain.size();
  out.system = std::move(chain);
  out.certificate = std::move(chain_cert);
  out.search_bound = b;
  return out;
}

BoundsReport lower_bounds(std::size_t n) {
  if (n == 0) throw std::invalid_argument("lower_bounds needs n >= 1");
  BoundsReport r;
  r.n = n;
  auto consider = [&](std::size_t& slot, std::size_t value, std::string_view kind,
                      const std::string& how) {
    if (value == 0) return;
    if (value > slot) slot = value;
    r.sources.push_back(std::string(kind) + " >= " + std::to_string(value) + ": " + how);
  };

  if (n >= 3) {
    consider(r.is_prime_lower, (n * n + 6 - 5 * n) / 2,
             "is'", "quadratic system, (n^2-5n+6)/2");
  }
  if (n % 4 == 0) {
    const std::size_t m = n / 4;
    consider(r.is_prime_lower, m >= 2 ? m * m * (m - 1) * (m - 2) / 6 : 0,
             "is'", "quartic system, m=" + std::to_string(m) + ", m^2(m-1)(m-2)/6");
  }
  if (n == 3) consider(r.is_prime_lower, 2, "is'", "pair xyz=zyx, xyyz=zyyx");

  r.is_lower = r.is_prime_lower;
  if (n == 3) consider(r.is_lower, 3, "is", "system xx=y, yy=z, zz=x");

  if (n >= 3) {
    consider(r.dc_lower, (n * n + 3 * n - 4) / 2, "dc", "quadratic chain, (n^2+3n-4)/2");
  }
  return r;
}

Equation orient(const Equation& eq) { return eq.rhs < eq.lhs ? swapped(eq) : eq; }

std::vector<Equation> balanced_equations(std::size_t max_side_len) {
  std::vector<Equation> out;
  const std::string letters = "xyz";
  for (std::size_t len = 1; len <= max_side_len; ++len) {
    std::vector<std::string> words{""};
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::string> next;
      for (const auto& w : words) {
        for (char c : letters) next.push_back(w + c);
      }
      words = std::move(next);
    }
    for (std::size_t a = 0; a < words.size(); ++a) {
      for (std::size_t b = a + 1; b < words.size(); ++b) {
        Equation eq{VarWord(words[a]), VarWord(words[b])};
        if (is_balanced(eq)) out.push_back(eq);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

using Triple = std::array<Equation, 3>;

Equation rename(const Equation& eq, const std::string& perm) {
  auto map = [&](const VarWord& w) {
    std::string s = w.symbols();
    for (char& c : s) c = perm[static_cast<std::size_t>(c - 'x')];
    return VarWord(std::move(s));
  };
  return orient(Equation{map(eq.lhs), map(eq.rhs)});
}

Triple canonical(const Triple& t) {
  std::string perm = "xyz";
  std::optional<Triple> best;
  do {
    Triple image{rename(t[0], perm), rename(t[1], perm), rename(t[2], perm)};
    std::sort(image.begin(), image.end());
    if (!best || image < *best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace

Q5Report q5_search(std::size_t max_side_len, const Bound& bound, const SearchOptions& options) {
  if (max_side_len == 0) throw std::invalid_argument("q5 search needs max_side_len >= 1");
  Q5Report report;
  const std::vector<Equation> equations = balanced_equations(max_side_len);
  report.equations_considered = equations.size();

  std::vector<Triple> triples;
  for (std::size_t a = 0; a < equations.size(); ++a) {
    for (std::size_t b = a + 1; b < equations.size(); ++b) {
      for (std::size_t c = b + 1; c < equations.size(); ++c) {
        Triple t{equations[a], equations[b], equations[c]};
        if (canonical(t) == t) triples.push_back(t);
      }
    }
  }
  report.triples_considered = triples.size();

  auto examine = [&](const Triple& t) -> std::optional<Q5Candidate> {
    EquationSystem sys;
    sys.mode = bound.mode;
    sys.universe = Alphabet("xyz");
    sys.equations.assign(t.begin(), t.end());
    SearchOptions inner;
    auto cert = find_independence_certificate(sys, bound, inner);
    if (!cert) return std::nullopt;
    auto h = find_nonperiodic_solution(sys, bound, inner);
    if (!h) return std::nullopt;
    return Q5Candidate{sys.equations, std::move(*cert), std::move(*h)};
  };

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(triples.size())));
  std::vector<std::vector<Q5Candidate>> found(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < triples.size(); i += threads) {
          if (auto c = examine(triples[i])) found[w].push_back(std::move(*c));
        }
      });
    }
  }
  for (auto& part : found) {
    for (auto& c : part) report.candidates.push_back(std::move(c));
  }
  std::sort(report.candidates.begin(), report.candidates.end(),
            [](const Q5Candidate& a, const Q5Candidate& b) { return a.equations < b.equations; });
  return report;
}

}  // namespace wordchains
