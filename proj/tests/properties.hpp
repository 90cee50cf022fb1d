#pragma once

// Randomized invariant suites shared by the unit tests and the acceptance
// runner. Each suite reports how many cases it ran and the first failure.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "brute_oracle.hpp"
#include "wordchains/exotic.hpp"
#include "wordchains/families.hpp"
#include "wordchains/oracle.hpp"
#include "wordchains/semantics.hpp"

namespace props {

using namespace wordchains;

struct Report {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void check(bool holds, const std::string& what) {
    ++cases;
    if (holds) return;
    if (failures++ == 0) first_failure = what;
  }
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 0; }

  std::string word(const std::string& letters, std::size_t min_len, std::size_t max_len) {
    std::string w;
    for (std::size_t n = min_len + below(max_len - min_len + 1); n > 0; --n) {
      w += letters[below(letters.size())];
    }
    return w;
  }

  std::vector<ConstWord> images(std::size_t n, std::size_t min_len, std::size_t max_len) {
    std::vector<ConstWord> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(word("ab", min_len, max_len));
    return out;
  }

  // Images that are often powers of one root, so periodic cases are common.
  std::vector<ConstWord> maybe_periodic_images(std::size_t n, std::size_t max_len) {
    if (coin()) return images(n, 0, max_len);
    const std::string root = word("ab", 1, 3);
    std::vector<ConstWord> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(power(ConstWord(root), below(max_len / root.size() + 1)));
    }
    return out;
  }

  std::string shuffled(std::string s) {
    std::shuffle(s.begin(), s.end(), rng_);
    return s;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Report morphism_law(std::size_t cases, std::uint64_t seed = 1) {
  Report r{"morphism law apply(uv) = apply(u)apply(v)"};
  Gen g(seed);
  const std::string vars = "xyzt";
  for (std::size_t i = 0; i < cases; ++i) {
    Assignment h(Alphabet(vars), g.images(vars.size(), 0, 5));
    VarWord u(g.word(vars, 0, 6));
    VarWord v(g.word(vars, 0, 6));
    r.check(apply(h, u + v) == apply(h, u) + apply(h, v),
            format_assignment(h) + " on " + format_word(u) + "|" + format_word(v));
  }
  return r;
}

inline Report solve_symmetry(std::size_t cases, std::uint64_t seed = 2) {
  Report r{"solves(U=V) iff solves(V=U)"};
  Gen g(seed);
  const std::string vars = "xyz";
  for (std::size_t i = 0; i < cases; ++i) {
    Assignment h(Alphabet(vars), g.maybe_periodic_images(vars.size(), 4));
    Equation e{VarWord(g.word(vars, 0, 5)), VarWord(g.word(vars, 0, 5))};
    r.check(solves(h, e) == solves(h, swapped(e)), format_equation(e));
  }
  return r;
}

inline Report commutation_iff_root(std::size_t cases, std::uint64_t seed = 3) {
  Report r{"commutes(u,v) iff equal primitive roots"};
  Gen g(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    auto im = g.maybe_periodic_images(2, 8);
    if (im[0].empty()) im[0] = ConstWord("a");
    if (im[1].empty()) im[1] = im[0];
    const bool lhs = commutes(im[0], im[1]);
    const bool rhs = primitive_root(im[0]) == primitive_root(im[1]);
    const bool brute = brute::root(im[0].symbols()) == brute::root(im[1].symbols());
    r.check(lhs == rhs && rhs == brute, im[0].symbols() + ", " + im[1].symbols());
  }
  return r;
}

// Exhaustive over `vars` images of length <= max_len over {a, b}.
inline Report periodicity_agree_exhaustive(std::size_t vars, std::size_t max_len) {
  Report r{"is_periodic by commutation agrees with shared root (exhaustive, " +
           std::to_string(vars) + " vars, len <= " + std::to_string(max_len) + ")"};
  const auto words = brute::words_up_to("ab", 0, max_len);
  std::vector<std::size_t> idx(vars, 0);
  std::vector<ConstWord> images(vars);
  while (true) {
    for (std::size_t i = 0; i < vars; ++i) images[i] = ConstWord(words[idx[i]]);
    Assignment h(Alphabet(std::string("xyz").substr(0, vars)), images);
    r.check(is_periodic(h) == is_periodic_by_root(h), format_assignment(h));
    std::size_t k = 0;
    while (k < vars && ++idx[k] == words.size()) idx[k++] = 0;
    if (k == vars) break;
  }
  return r;
}

inline Report balanced_length_law(std::size_t cases, std::uint64_t seed = 4) {
  Report r{"balanced equations preserve image length; unbalanced ones can break it"};
  Gen g(seed);
  const std::string vars = "xyz";
  for (std::size_t i = 0; i < cases; ++i) {
    const std::string lhs = g.word(vars, 1, 7);
    const Equation balanced{VarWord(lhs), VarWord(g.shuffled(lhs))};
    Assignment h(Alphabet(vars), g.images(vars.size(), 0, 5));
    r.check(is_balanced(balanced) &&
                apply(h, balanced.lhs).size() == apply(h, balanced.rhs).size(),
            format_equation(balanced) + " under " + format_assignment(h));

    const Equation other{VarWord(g.word(vars, 0, 6)), VarWord(g.word(vars, 0, 6))};
    if (is_balanced(other)) continue;
    // A long image on a variable with unequal counts separates the lengths.
    auto diff = occurrence_difference(other);
    std::vector<ConstWord> images(vars.size(), ConstWord("a"));
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (diff[static_cast<unsigned char>(vars[v])] != 0) {
        images[v] = ConstWord(std::string(64, 'a'));
        break;
      }
    }
    Assignment stretch(Alphabet(vars), images);
    r.check(apply(stretch, other.lhs).size() != apply(stretch, other.rhs).size(),
            format_equation(other));
  }
  return r;
}

inline WitnessQuery random_query(Gen& g, const std::string& vars) {
  WitnessQuery q;
  q.universe = Alphabet(vars);
  const std::size_t n = 1 + g.below(3);
  for (std::size_t i = 0; i < n; ++i) {
    q.equations.push_back(Equation{VarWord(g.word(vars, 1, 5)), VarWord(g.word(vars, 0, 5))});
    q.requirements.push_back({i, g.coin()});
  }
  return q;
}

inline std::string describe(const WitnessQuery& q) {
  std::string s;
  for (const auto& req : q.requirements) {
    s += (req.solved ? "+" : "-") + format_equation(q.equations[req.equation]) + "; ";
  }
  return s;
}

inline Report determinism(std::size_t cases, std::uint64_t seed = 5) {
  Report r{"least witness identical for 1 and 4 threads and across runs"};
  Gen g(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    WitnessQuery q = random_query(g, "xyz");
    Bound b{2 + g.below(2), Alphabet("ab"), g.coin() ? Mode::monoid : Mode::semigroup};
    SearchResult one = least_witness(q, b, SearchOptions{1, 0});
    SearchResult four = least_witness(q, b, SearchOptions{4, 0});
    SearchResult again = least_witness(q, b, SearchOptions{4, 0});
    r.check(one.status == four.status && one.witness == four.witness &&
                four.witness == again.witness && one.visited == four.visited,
            describe(q));
  }
  return r;
}

inline Report soundness_and_monotonicity(std::size_t cases, std::uint64_t seed = 6) {
  Report r{"witnesses satisfy their query and stay least at larger bounds"};
  Gen g(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    WitnessQuery q = random_query(g, "xyz");
    const Mode mode = g.coin() ? Mode::monoid : Mode::semigroup;
    Bound small{2, Alphabet("ab"), mode};
    Bound large{3, Alphabet("ab"), mode};
    SearchResult a = least_witness(q, small);
    if (a.status != SearchStatus::found) {
      r.check(a.status == SearchStatus::exhausted, describe(q));
      continue;
    }
    bool sound = true;
    for (const auto& req : q.requirements) {
      sound = sound && solves(*a.witness, q.equations[req.equation]) == req.solved;
    }
    SearchResult b = least_witness(q, large);
    r.check(sound && b.witness == a.witness, describe(q));
  }
  return r;
}

// Independence certificates read as chains in random orders (both kinds).
inline Report independence_gives_chains(std::size_t orders_per_family, std::uint64_t seed = 7) {
  Report r{"independent systems are decreasing and increasing chains in any order"};
  Gen g(seed);
  std::vector<FamilyOutput> fams{quartic_independent_system(3), quartic_independent_system(4),
                                 quartic_independent_system(5), quadratic_independent_system(5),
                                 quadratic_independent_system(6)};
  for (auto& t : toy_systems()) fams.push_back(std::move(t));
  for (const auto& f : fams) {
    const auto& cert = std::get<IndependenceCertificate>(f.certificate);
    std::vector<std::size_t> order(f.system.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t k = 0; k < orders_per_family; ++k) {
      std::shuffle(order.begin(), order.end(), g.engine());
      EquationSystem s = permuted(f.system, order);
      ChainCertificate chain = chain_certificate_from_independence(cert, order);
      r.check(verify_decreasing_chain(s, chain, f.search_bound).outcome == Outcome::verified &&
                  verify_increasing_chain(s, chain, f.search_bound).outcome == Outcome::verified,
              f.name);
    }
  }
  return r;
}

// Every generated chain reversed, with its reversed certificate, verifies as
// an increasing chain.
inline Report reversal(std::size_t max_n = 8) {
  Report r{"reversed chains verify as increasing chains"};
  std::vector<FamilyOutput> fams{chain_dc3(), chain_dc3_semigroup(), chain_dc4()};
  for (std::size_t n = 3; n <= max_n; ++n) fams.push_back(quadratic_chain(n));
  FamilyOutput pair = toy_systems()[1];
  fams.push_back(chainify(pair.system, std::get<IndependenceCertificate>(pair.certificate),
                          std::nullopt, default_search_bound()));
  for (const auto& f : fams) {
    const auto& cert = std::get<ChainCertificate>(f.certificate);
    ChainCertificate back = reverse_certificate(cert, f.system);
    r.check(verify_increasing_chain(reversed(f.system), back, f.search_bound).outcome ==
                Outcome::verified,
            f.name);
  }
  return r;
}

inline exotic::CappedElement random_element(Gen& g) {
  std::map<std::size_t, std::size_t> exps;
  for (std::size_t n = g.below(4); n > 0; --n) exps[1 + g.below(6)] += g.below(8);
  return exotic::CappedElement(exps);
}

inline Report exotic_laws(std::size_t cases, std::uint64_t seed = 8) {
  Report r{"capped monoid is commutative and associative with unit 1"};
  Gen g(seed);
  using exotic::multiply;
  for (std::size_t i = 0; i < cases; ++i) {
    auto u = random_element(g), v = random_element(g), w = random_element(g);
    const bool comm = multiply(u, v) == multiply(v, u);
    const bool assoc = multiply(multiply(u, v), w) == multiply(u, multiply(v, w));
    const bool unit = multiply(u, exotic::CappedElement()) == u;
    const std::size_t k = g.below(12);
    const bool pow = exotic::power(u, k + 1) == multiply(exotic::power(u, k), u);
    r.check(comm && assoc && unit && pow,
            exotic::format_element(u) + ", " + exotic::format_element(v) + ", " +
                exotic::format_element(w));
  }
  return r;
}

// The suites run by the acceptance binary, each with at least `cases` cases.
inline std::vector<Report> all_suites(std::size_t cases) {
  return {morphism_law(cases),
          solve_symmetry(cases),
          commutation_iff_root(cases),
          periodicity_agree_exhaustive(2, 6),
          periodicity_agree_exhaustive(3, 4),
          balanced_length_law(cases),
          determinism(cases),
          soundness_and_monotonicity(cases),
          exotic_laws(cases)};
}

}  // namespace props
