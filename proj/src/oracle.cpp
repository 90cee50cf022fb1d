#include "wordchains/oracle.hpp"

#include <algorithm>

namespace wordchains {

namespace {

void require_same_space(const EquationSystem& a, const EquationSystem& b) {
  if (!(a.universe == b.universe)) {
    throw std::invalid_argument("systems are over different universes: " + a.universe.letters() +
                                " vs " + b.universe.letters());
  }
  if (a.mode != b.mode) throw std::invalid_argument("systems use different modes");
}

// One witness condition: the named equations must be solved, `failed` must not.
struct Condition {
  std::size_t index;  // reported index
  std::size_t failed;
  std::vector<std::size_t> solved;
};

std::string describe(const Condition& c) {
  std::string out = "needs a morphism failing E_" + std::to_string(c.failed + 1);
  if (!c.solved.empty()) {
    out += " and solving E_" + std::to_string(c.solved.front() + 1);
    if (c.solved.size() > 1) {
      const bool contiguous = c.solved.back() - c.solved.front() + 1 == c.solved.size();
      out += contiguous ? "..E_" + std::to_string(c.solved.back() + 1) : " and the others";
    }
  }
  return out;
}

// Checks one certificate entry exactly. Returns an empty string when it holds.
std::string check_entry(const EquationSystem& sys, const Condition& c, const Assignment& h) {
  for (char v : sys.universe) {
    if (!h.maps(v)) return std::string("witness does not map '") + v + "'";
  }
  if (sys.mode == Mode::semigroup) {
    for (const auto& w : h.images()) {
      if (w.empty()) return "witness uses the empty word in semigroup mode";
    }
  }
  if (solves(h, sys.equations[c.failed])) {
    return "witness solves E_" + std::to_string(c.failed + 1) + " (" +
           format_equation(sys.equations[c.failed]) + ")";
  }
  for (std::size_t j : c.solved) {
    if (!solves(h, sys.equations[j])) {
      return "witness fails E_" + std::to_string(j + 1) + " (" +
             format_equation(sys.equations[j]) + ")";
    }
  }
  return {};
}

Assignment with_universe(const Assignment& h, const EquationSystem& sys) {
  if (h.universe() == sys.universe) return Assignment(sys.universe, h.images(), sys.mode);
  std::vector<ConstWord> images;
  for (char v : sys.universe) images.push_back(h.image(v));
  return Assignment(sys.universe, std::move(images), sys.mode);
}

VerifyResult run_conditions(const EquationSystem& sys, const std::vector<Condition>& conditions,
                            const std::vector<Assignment>* cert, const Bound& bound,
                            const SearchOptions& search) {
  VerifyResult result;
  Bound b = bound;
  b.mode = sys.mode;

  for (std::size_t k = 0; k < conditions.size(); ++k) {
    const Condition& c = conditions[k];
    if (cert != nullptr) {
      const Assignment& h = (*cert)[k];
      std::string problem = check_entry(sys, c, h);
      if (!problem.empty()) {
        result.outcome = Outcome::refuted;
        result.index = c.index;
        result.reason = Refutation::certificate_violated;
        result.detail = problem;
        result.offending = h;
        result.witnesses.clear();
        return result;
      }
      result.witnesses.push_back(with_universe(h, sys));
      continue;
    }

    WitnessQuery q;
    q.universe = sys.universe;
    q.equations = sys.equations;
    q.requirements.push_back({c.failed, false});
    for (std::size_t j : c.solved) q.requirements.push_back({j, true});
    SearchResult found = least_witness(q, b, search);
    if (found.status != SearchStatus::found) {
      result.outcome =
          found.status == SearchStatus::exhausted ? Outcome::refuted : Outcome::inconclusive;
      result.index = c.index;
      result.reason = found.status == SearchStatus::exhausted ? Refutation::witness_exhausted
                                                              : Refutation::none;
      result.detail = describe(c) + (found.status == SearchStatus::exhausted
                                         ? "; none exists with images up to length " +
                                               std::to_string(b.max_len)
                                         : "; search limit reached");
      result.witnesses.clear();
      return result;
    }
    result.witnesses.push_back(*found.witness);
  }
  return result;
}

void require_length(std::size_t got, std::size_t want, std::string_view what) {
  if (got != want) {
    throw CertificateError(std::string(what) + " certificate has " + std::to_string(got) +
                           " witnesses for " + std::to_string(want) + " equations");
  }
}

}  // namespace

Verdict find_distinguishing(const EquationSystem& a, const EquationSystem& b, const Bound& bound,
                            const SearchOptions& options) {
  require_same_space(a, b);
  Bound bb = bound;
  bb.mode = a.mode;

  // Both systems are evaluated against one shared universe.
  WitnessQuery q;
  q.universe = a.universe;
  q.equations = a.equations;
  q.equations.insert(q.equations.end(), b.equations.begin(), b.equations.end());
  const std::size_t split = a.equations.size();
  const Alphabet universe = a.universe;
  const Mode mode = a.mode;
  const std::vector<Equation> all = q.equations;
  q.accept = [&, split](std::span<const ConstWord> images) {
    Assignment h(universe, std::vector<ConstWord>(images.begin(), images.end()), mode);
    bool in_a = solves_all(h, std::span(all).first(split));
    bool in_b = solves_all(h, std::span(all).subspan(split));
    return in_a != in_b;
  };

  SearchOptions unlimited = options;
  unlimited.limit = 0;
  SearchResult r = least_witness(q, bb, unlimited);
  Verdict v;
  v.bound = bb;
  if (r.status == SearchStatus::found) {
    v.kind = VerdictKind::inequivalent_witness;
    v.witness = r.witness;
  }
  return v;
}

VerifyResult verify_independence(const EquationSystem& sys,
                                 const std::optional<IndependenceCertificate>& cert,
                                 const Bound& bound, const VerifyOptions& options) {
  const std::size_t m = sys.size();
  if (cert) require_length(cert->witnesses.size(), m, "independence");
  std::vector<Condition> conditions;
  for (std::size_t i = 0; i < m; ++i) {
    Condition c{i + 1, i, {}};
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) c.solved.push_back(j);
    }
    conditions.push_back(std::move(c));
  }
  return run_conditions(sys, conditions, cert ? &cert->witnesses : nullptr, bound,
                        options.search);
}

VerifyResult verify_decreasing_chain(const EquationSystem& sys,
                                     const std::optional<ChainCertificate>& cert,
                                     const Bound& bound, const VerifyOptions& options) {
  const std::size_t m = sys.size();
  if (cert) {
    const std::size_t got = cert->witnesses.size();
    if (!(got == m || (options.strict && got == m + 1))) {
      require_length(got, m, "chain");
    }
  }
  std::vector<Condition> conditions;
  for (std::size_t i = 0; i < m; ++i) {
    Condition c{i, i, {}};
    for (std::size_t j = 0; j < i; ++j) c.solved.push_back(j);
    conditions.push_back(std::move(c));
  }

  std::vector<Assignment> prefix;
  const std::vector<Assignment>* entries = nullptr;
  if (cert) {
    prefix.assign(cert->witnesses.begin(), cert->witnesses.begin() + static_cast<long>(m));
    entries = &prefix;
  }
  VerifyResult result = run_conditions(sys, conditions, entries, bound, options.search);
  if (result.outcome != Outcome::verified || !options.strict) return result;

  // Strict reading: some morphism solves the whole chain.
  if (cert && cert->witnesses.size() == m + 1) {
    const Assignment& h = cert->witnesses.back();
    bool ok = true;
    for (char v : sys.universe) ok = ok && h.maps(v);
    if (ok && sys.mode == Mode::semigroup) {
      for (const auto& w : h.images()) ok = ok && !w.empty();
    }
    if (ok && solves_system(h, sys)) {
      result.witnesses.push_back(with_universe(h, sys));
      return result;
    }
    result.outcome = Outcome::refuted;
    result.index = m;
    result.reason = Refutation::certificate_violated;
    result.detail = "final witness is not a solution of the whole chain";
    result.offending = h;
    result.witnesses.clear();
    return result;
  }
  Bound b = bound;
  b.mode = sys.mode;
  WitnessQuery q;
  q.universe = sys.universe;
  q.equations = sys.equations;
  for (std::size_t j = 0; j < m; ++j) q.requirements.push_back({j, true});
  SearchResult found = least_witness(q, b, options.search);
  if (found.status == SearchStatus::found) {
    result.witnesses.push_back(*found.witness);
    return result;
  }
  result.outcome =
      found.status == SearchStatus::exhausted ? Outcome::refuted : Outcome::inconclusive;
  result.index = m;
  result.reason = found.status == SearchStatus::exhausted ? Refutation::witness_exhausted
                                                          : Refutation::none;
  result.detail = "strict mode needs a common solution of all equations";
  result.witnesses.clear();
  return result;
}

VerifyResult verify_increasing_chain(const EquationSystem& sys,
                                     const std::optional<ChainCertificate>& cert,
                                     const Bound& bound, const VerifyOptions& options) {
  const std::size_t m = sys.size();
  if (cert) require_length(cert->witnesses.size(), m, "chain");
  std::vector<Condition> conditions;
  for (std::size_t j = 0; j < m; ++j) {
    Condition c{j + 1, j, {}};
    for (std::size_t k = j + 1; k < m; ++k) c.solved.push_back(k);
    conditions.push_back(std::move(c));
  }
  return run_conditions(sys, conditions, cert ? &cert->witnesses : nullptr, bound,
                        options.search);
}

EquationSystem reversed(const EquationSystem& sys) {
  EquationSystem out = sys;
  std::reverse(out.equations.begin(), out.equations.end());
  return out;
}

ChainCertificate reverse_certificate(const ChainCertificate& cert, const EquationSystem& chain) {
  VerifyResult check = verify_decreasing_chain(chain, cert, Bound{});
  if (check.outcome != Outcome::verified) {
    throw std::invalid_argument("certificate does not verify for the decreasing chain: " +
                                check.detail);
  }
  ChainCertificate out = cert;
  std::reverse(out.witnesses.begin(), out.witnesses.end());
  return out;
}

ChainCertificate chain_certificate_from_independence(const IndependenceCertificate& cert,
                                                     std::span<const std::size_t> order) {
  if (order.size() != cert.witnesses.size()) {
    throw CertificateError("ordering and certificate differ in length");
  }
  ChainCertificate out;
  for (std::size_t i : order) out.witnesses.push_back(cert.witnesses.at(i));
  return out;
}

EquationSystem permuted(const EquationSystem& sys, std::span<const std::size_t> order) {
  if (order.size() != sys.size()) throw std::invalid_argument("ordering has the wrong length");
  std::vector<bool> seen(order.size(), false);
  EquationSystem out = sys;
  out.equations.clear();
  for (std::size_t i : order) {
    if (i >= sys.size() || seen[i]) throw std::invalid_argument("ordering is not a permutation");
    seen[i] = true;
    out.equations.push_back(sys.equations[i]);
  }
  return out;
}

}  // namespace wordchains
