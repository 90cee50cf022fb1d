#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordchains/certificate.hpp"
#include "wordchains/corpus.hpp"
#include "wordchains/exotic.hpp"
#include "wordchains/families.hpp"
#include "wordchains/oracle.hpp"
#include "wordchains/solver.hpp"

namespace wordchains::cli {

using nlohmann::json;

namespace {

// Raised for a command that cannot run; carries its exit code.
struct Failure {
  int code;
  std::string message;
};

void require_readable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kNoInput, "cannot read " + path};
}

struct BoundFlags {
  std::size_t max_len = 3;
  std::string alphabet = "ab";
  std::string mode;
  unsigned threads = 1;
  std::uint64_t limit = 0;

  void add(CLI::App* cmd, bool with_mode = true) {
    cmd->add_option("--max-len", max_len, "Longest image searched")->capture_default_str();
    cmd->add_option("--alphabet", alphabet, "Constant letters, in order")->capture_default_str();
    if (with_mode) {
      cmd->add_option("--mode", mode, "monoid or semigroup")
          ->check(CLI::IsMember({"monoid", "semigroup"}));
    }
    cmd->add_option("--threads", threads, "Search threads (0 = all cores)")
        ->capture_default_str();
    cmd->add_option("--limit", limit, "Give up beyond this many assignments (0 = never)")
        ->capture_default_str();
  }

  Bound bound(Mode m) const {
    Bound b;
    b.max_len = max_len;
    try {
      b.alphabet = Alphabet(alphabet);
    } catch (const ParseError& e) {
      throw Failure{kUsage, std::string("--alphabet: ") + e.what()};
    }
    b.mode = m;
    try {
      b.validate();
    } catch (const std::invalid_argument& e) {
      throw Failure{kUsage, e.what()};
    }
    return b;
  }

  SearchOptions search() const { return SearchOptions{threads, limit}; }
};

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::verified:
      return "verified";
    case Outcome::refuted:
      return "refuted";
    case Outcome::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view reason_name(Refutation r) {
  switch (r) {
    case Refutation::none:
      return "none";
    case Refutation::certificate_violated:
      return "certificate-violated";
    case Refutation::witness_exhausted:
      return "witness-exhausted";
  }
  return "none";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::verified:
      return kVerified;
    case Outcome::refuted:
      return kRefuted;
    case Outcome::inconclusive:
      return kInconclusive;
  }
  return kInternal;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string kind;
  std::string corpus;
  std::string cert;
  bool strict = false;
  bool json = false;
  BoundFlags flags;
};

CertificateKind certificate_kind_for(const std::string& kind) {
  if (kind == "chain-dec") return CertificateKind::chain_decreasing;
  if (kind == "chain-inc") return CertificateKind::chain_increasing;
  return CertificateKind::independence;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  require_readable(a.corpus);
  EquationSystem sys = load_corpus(a.corpus);
  if (!a.flags.mode.empty() && parse_mode(a.flags.mode) != sys.mode) {
    throw Failure{kDataError, "mode mismatch: corpus is " + std::string(to_string(sys.mode)) +
                                  ", --mode is " + a.flags.mode};
  }
  const Bound bound = a.flags.bound(sys.mode);
  const CertificateKind kind = certificate_kind_for(a.kind);

  std::vector<Assignment> supplied;
  bool have_cert = false;
  if (!a.cert.empty()) {
    require_readable(a.cert);
    CertificateDocument doc = load_certificate(a.cert);
    if (doc.system.mode != sys.mode) {
      throw Failure{kDataError, "mode mismatch: corpus is " + std::string(to_string(sys.mode)) +
                                    ", certificate is " +
                                    std::string(to_string(doc.system.mode))};
    }
    if (doc.kind != kind) {
      throw Failure{kDataError, "certificate kind " + std::string(to_string(doc.kind)) +
                                    " does not match " + a.kind};
    }
    if (!(doc.system.universe == sys.universe) || doc.system.equations != sys.equations) {
      throw Failure{kDataError, "certificate is for a different system"};
    }
    supplied = std::move(doc.witnesses);
    if (a.strict && doc.common_solution && supplied.size() == sys.size()) {
      supplied.push_back(*doc.common_solution);
    }
    have_cert = true;
  }

  VerifyOptions options{a.flags.search(), a.strict};
  VerifyResult r;
  try {
    switch (kind) {
      case CertificateKind::chain_decreasing:
        r = verify_decreasing_chain(sys,
                                    have_cert ? std::optional(ChainCertificate{supplied})
                                              : std::nullopt,
                                    bound, options);
        break;
      case CertificateKind::chain_increasing:
        r = verify_increasing_chain(sys,
                                    have_cert ? std::optional(ChainCertificate{supplied})
                                              : std::nullopt,
                                    bound, options);
        break;
      case CertificateKind::independence:
        r = verify_independence(sys,
                                have_cert ? std::optional(IndependenceCertificate{supplied})
                                          : std::nullopt,
                                bound, options);
        break;
    }
  } catch (const CertificateError& e) {
    throw Failure{kDataError, e.what()};
  }

  if (a.json) {
    json j;
    if (r.outcome == Outcome::verified) {
      CertificateDocument doc{kind, sys, r.witnesses, bound, std::nullopt};
      j = json::parse(dump_certificate(doc));
    }
    j["outcome"] = std::string(outcome_name(r.outcome));
    if (r.index) j["index"] = *r.index;
    if (r.reason != Refutation::none) j["reason"] = std::string(reason_name(r.reason));
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.offending) j["witness"] = format_assignment(*r.offending);
    out << j.dump(2) << "\n";
    return exit_code(r.outcome);
  }

  const std::string what = kind == CertificateKind::independence ? "independent system"
                           : kind == CertificateKind::chain_decreasing ? "decreasing chain"
                                                                      : "increasing chain";
  if (r.outcome == Outcome::verified) {
    out << "Verified: " << what << " of " << sys.size() << " equations ("
        << to_string(sys.mode) << ", "
        << (have_cert ? std::string("certificate checked exactly")
                      : "witnesses searched up to max_len " + std::to_string(bound.max_len))
        << ")\n";
    const bool independence = kind == CertificateKind::independence;
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      out << "  " << (independence ? "h_" : "w_") << (independence ? i + 1 : i) << ": "
          << format_assignment(r.witnesses[i]) << "\n";
    }
  } else {
    out << (r.outcome == Outcome::refuted ? "Refuted" : "Inconclusive");
    if (r.index) out << " at index " << *r.index;
    out << ": " << r.detail << "\n";
    if (r.offending) out << "  witness: " << format_assignment(*r.offending) << "\n";
  }
  return exit_code(r.outcome);
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::string out;
  std::string from_corpus;
  std::string from_cert;
  bool json = false;
  BoundFlags flags;
};

std::size_t param(const GenArgs& a, const std::string& key, std::size_t fallback) {
  for (const auto& p : a.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw Failure{kUsage, "parameter '" + p + "' is not key=value"};
    if (p.substr(0, eq) != key) continue;
    std::size_t value = 0;
    const char* first = p.data() + eq + 1;
    const char* last = p.data() + p.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc{} || ptr != last) {
      throw Failure{kUsage, "parameter '" + p + "' needs a nonnegative integer"};
    }
    return value;
  }
  return fallback;
}

void check_params(const GenArgs& a, std::initializer_list<std::string_view> allowed) {
  for (const auto& p : a.params) {
    auto key = std::string_view(p).substr(0, p.find('='));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Failure{kUsage, "family " + a.family + " takes no parameter '" + std::string(key) +
                                "'"};
    }
  }
}

FamilyOutput generate(const GenArgs& a, std::string& label) {
  const SearchOptions search = a.flags.search();
  label = a.family;
  if (a.family == "dc3") {
    check_params(a, {});
    return chain_dc3(search);
  }
  if (a.family == "dc3plus") {
    check_params(a, {});
    return chain_dc3_semigroup(search);
  }
  if (a.family == "dc4") {
    check_params(a, {});
    return chain_dc4(search);
  }
  if (a.family == "quartic") {
    check_params(a, {"m"});
    const std::size_t m = param(a, "m", 3);
    label += " m=" + std::to_string(m);
    return quartic_independent_system(m);
  }
  if (a.family == "quadratic" || a.family == "chain") {
    check_params(a, {"n"});
    const std::size_t n = param(a, "n", 5);
    label += " n=" + std::to_string(n);
    return a.family == "chain" ? quadratic_chain(n, search)
                               : quadratic_independent_system(n, search);
  }
  if (a.family == "toy-triple" || a.family == "toy-pair") {
    check_params(a, {});
    auto toys = toy_systems(search);
    return std::move(toys[a.family == "toy-triple" ? 0 : 1]);
  }
  if (a.family == "chainify") {
    check_params(a, {});
    EquationSystem sys;
    IndependenceCertificate cert;
    if (a.from_corpus.empty() != a.from_cert.empty()) {
      throw Failure{kUsage, "chainify needs both --from-corpus and --from-cert, or neither"};
    }
    if (a.from_corpus.empty()) {
      FamilyOutput pair = std::move(toy_systems(search)[1]);
      sys = pair.system;
      cert = std::get<IndependenceCertificate>(pair.certificate);
      label += " of toy-pair";
    } else {
      require_readable(a.from_corpus);
      require_readable(a.from_cert);
      sys = load_corpus(a.from_corpus);
      CertificateDocument doc = load_certificate(a.from_cert);
      if (doc.kind != CertificateKind::independence) {
        throw Failure{kDataError, "chainify needs an independence certificate"};
      }
      if (doc.system.mode != sys.mode) throw Failure{kDataError, "mode mismatch"};
      if (!(doc.system.universe == sys.universe) || doc.system.equations != sys.equations) {
        throw Failure{kDataError, "certificate is for a different system"};
      }
      cert.witnesses = std::move(doc.witnesses);
    }
    const Bound bound = a.flags.bound(Mode::monoid);
    try {
      return chainify(sys, cert, std::nullopt, bound, search);
    } catch (const CertificateError& e) {
      throw Failure{kDataError, e.what()};
    } catch (const std::invalid_argument& e) {
      throw Failure{kDataError, e.what()};
    }
  }
  throw Failure{kUsage, "unknown family '" + a.family +
                            "' (dc3, dc3plus, dc4, quartic, quadratic, chain, toy-triple, "
                            "toy-pair, chainify)"};
}

CertificateDocument document_of(const FamilyOutput& f) {
  CertificateDocument doc;
  doc.system = f.system;
  doc.bound = f.search_bound;
  doc.common_solution = f.common_solution;
  if (const auto* chain = std::get_if<ChainCertificate>(&f.certificate)) {
    doc.kind = CertificateKind::chain_decreasing;
    doc.witnesses = chain->witnesses;
  } else {
    doc.kind = CertificateKind::independence;
    doc.witnesses = std::get<IndependenceCertificate>(f.certificate).witnesses;
  }
  return doc;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Failure{kInternal, "cannot write " + path};
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  std::string label;
  FamilyOutput f;
  try {
    f = generate(a, label);
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, e.what()};
  }
  VerifyResult check = verify_family(f);
  if (check.outcome != Outcome::verified) {
    throw Failure{kInternal, "generated certificate does not verify: " + check.detail};
  }

  std::vector<std::string> comments{"family: " + label,
                                    "equations: " + std::to_string(f.system.size())};
  for (const auto& [symbol, v] : f.name_map) {
    comments.push_back("variable " + symbol + " is " + std::string(1, v));
  }
  const CertificateDocument doc = document_of(f);
  const std::string prefix = a.out.empty() ? a.family : a.out;
  write_file(prefix + ".eqs", format_corpus(f.system, comments));
  write_file(prefix + ".cert.json", dump_certificate(doc));

  if (a.json) {
    out << dump_certificate(doc);
  } else {
    out << label << ": " << f.system.size() << " equations over " << f.system.universe.size()
        << " variables (" << to_string(f.system.mode) << "), certificate verified\n";
    out << "wrote " << prefix << ".eqs and " << prefix << ".cert.json\n";
  }
  return kVerified;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string equation;
  std::string mode = "monoid";
  std::size_t budget = Budget{}.max_depth;
  std::size_t max_image_len = Budget{}.max_image_len;
  bool json = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Mode mode = parse_mode(a.mode);
  Equation eq = parse_equation(a.equation, mode);
  Budget budget{a.budget, a.max_image_len};
  try {
    budget.validate();
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, e.what()};
  }
  SolveResult r = solve_bounded(eq, mode, budget);
  int code = r.status == SolveStatus::solution ? kVerified
             : r.proven_unsatisfiable          ? kRefuted
                                               : kInconclusive;
  if (a.json) {
    json j;
    j["equation"] = format_equation(eq);
    j["mode"] = std::string(to_string(mode));
    j["status"] = code == kVerified ? "solution" : code == kRefuted ? "unsatisfiable" : "unknown";
    if (r.solution) j["solution"] = format_assignment(*r.solution);
    j["nodes"] = r.nodes;
    out << j.dump(2) << "\n";
    return code;
  }
  if (code == kVerified) {
    out << "solution: " << format_assignment(*r.solution) << "\n";
  } else if (code == kRefuted) {
    out << "unsatisfiable: image lengths cannot balance on any branch\n";
  } else {
    out << "no solution within budget (depth " << budget.max_depth << ", image length "
        << budget.max_image_len << ")\n";
  }
  return code;
}

// ---------------------------------------------------------------- reports

int cmd_bounds(std::size_t n, bool as_json, std::ostream& out) {
  if (n == 0) throw Failure{kUsage, "n must be at least 1"};
  BoundsReport r = lower_bounds(n);
  if (as_json) {
    json j{{"n", r.n},
           {"is", r.is_lower},
           {"is_prime", r.is_prime_lower},
           {"dc", r.dc_lower},
           {"sources", r.sources}};
    out << j.dump(2) << "\n";
    return kVerified;
  }
  out << "n=" << n << ": dc ≥ " << r.dc_lower << ", is ≥ " << r.is_lower
      << ", is' ≥ " << r.is_prime_lower << "\n";
  for (const auto& s : r.sources) out << "  " << s << "\n";
  return kVerified;
}

ConstWord parse_constant_word(const std::string& text) {
  if (text == "1") return ConstWord();
  for (char c : text) {
    if (!is_symbol_char(c)) throw Failure{kUsage, "'" + text + "' is not a word"};
  }
  return ConstWord(text);
}

int cmd_identity(const std::vector<std::string>& items, bool as_json, std::ostream& out) {
  if (items.size() < 2) throw Failure{kUsage, "identity needs words followed by k"};
  std::vector<ConstWord> words;
  for (std::size_t i = 0; i + 1 < items.size(); ++i) words.push_back(parse_constant_word(items[i]));
  std::size_t k = 0;
  const std::string& last = items.back();
  auto [ptr, ec] = std::from_chars(last.data(), last.data() + last.size(), k);
  if (last.empty() || ec != std::errc{} || ptr != last.data() + last.size()) {
    throw Failure{kUsage, "k must be a nonnegative integer, got '" + last + "'"};
  }

  std::optional<std::size_t> first_failure;
  for (std::size_t j = 0; j <= k && !first_failure; ++j) {
    if (!power_identity_holds(words, j)) first_failure = j;
  }
  if (as_json) {
    json j{{"k", k}, {"holds", !first_failure}};
    if (first_failure) j["fails_at"] = *first_failure;
    out << j.dump(2) << "\n";
    return kVerified;
  }
  if (first_failure) {
    if (*first_failure > 0) out << "holds for k < " << *first_failure << ", ";
    out << "fails at k=" << *first_failure << "\n";
  } else {
    out << "holds for every k ≤ " << k << "\n";
  }
  return kVerified;
}

int cmd_q5(std::size_t len, const BoundFlags& flags, bool as_json, std::ostream& out) {
  if (len == 0) throw Failure{kUsage, "side length must be at least 1"};
  const Mode mode = flags.mode.empty() ? Mode::monoid : parse_mode(flags.mode);
  const Bound bound = flags.bound(mode);
  Q5Report r = q5_search(len, bound, flags.search());
  if (as_json) {
    json j{{"equations", r.equations_considered}, {"triples", r.triples_considered}};
    j["candidates"] = json::array();
    for (const auto& c : r.candidates) {
      json e;
      for (const auto& eq : c.equations) e["equations"].push_back(format_equation(eq));
      for (const auto& h : c.certificate.witnesses) e["witnesses"].push_back(format_assignment(h));
      e["nonperiodic_solution"] = format_assignment(c.nonperiodic_solution);
      j["candidates"].push_back(e);
    }
    out << j.dump(2) << "\n";
    return kVerified;
  }
  out << r.equations_considered << " balanced equations, " << r.triples_considered
      << " triples up to renaming, searched up to max_len " << bound.max_len << "\n";
  if (r.candidates.empty()) {
    out << "no candidates\n";
    return kVerified;
  }
  for (const auto& c : r.candidates) {
    out << "candidate:";
    for (const auto& eq : c.equations) out << "  " << format_equation(eq) << ";";
    out << "\n  nonperiodic solution: " << format_assignment(c.nonperiodic_solution) << "\n";
    for (std::size_t i = 0; i < c.certificate.witnesses.size(); ++i) {
      out << "  h_" << i + 1 << ": " << format_assignment(c.certificate.witnesses[i]) << "\n";
    }
  }
  return kVerified;
}

int cmd_exotic(std::size_t p, bool as_json, std::ostream& out) {
  auto steps = exotic::demonstrate_increasing_chain(p);
  bool all = true;
  json j = json::array();
  for (const auto& s : steps) {
    const bool ok = s.solves_current && s.fails_previous;
    all = all && ok;
    if (as_json) {
      j.push_back({{"p", s.p},
                   {"witness", exotic::format_element(s.witness)},
                   {"separates", ok}});
      continue;
    }
    out << "p=" << s.p << ": " << exotic::format_element(s.witness)
        << (s.solves_current ? " solves" : " fails") << " x^" << s.p << " = x^" << s.p + 1
        << (s.fails_previous ? ", fails" : ", solves") << " x^" << s.p - 1 << " = x^" << s.p
        << "\n";
  }
  if (as_json) {
    out << j.dump(2) << "\n";
  } else if (steps.empty()) {
    out << "no steps\n";
  } else {
    out << steps.size() << (all ? " separating witnesses verified\n" : " steps, some failed\n");
  }
  return all ? kVerified : kRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates and bounded search for constant-free word equations", "wordchains"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an independent system or a chain");
  verify_cmd->add_option("kind", verify.kind, "chain-dec, chain-inc or independent")
      ->required()
      ->check(CLI::IsMember({"chain-dec", "chain-inc", "independent"}));
  verify_cmd->add_option("corpus", verify.corpus, "Equation corpus file")->required();
  verify_cmd->add_option("--cert", verify.cert, "Certificate JSON; without it witnesses are searched");
  verify_cmd->add_flag("--strict", verify.strict,
                       "Decreasing chains: also require a common solution of all equations");
  verify_cmd->add_flag("--json", verify.json, "Machine-readable report");
  verify.flags.add(verify_cmd);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a family with its certificate");
  gen_cmd->add_option("family", gen.family,
                      "dc3, dc3plus, dc4, quartic, quadratic, chain, toy-triple, toy-pair, "
                      "chainify")
      ->required();
  gen_cmd->add_option("params", gen.params, "m=M for quartic, n=N for quadratic and chain");
  gen_cmd->add_option("--out", gen.out, "Output prefix (default: the family name)");
  gen_cmd->add_option("--from-corpus", gen.from_corpus, "chainify: independent system");
  gen_cmd->add_option("--from-cert", gen.from_cert, "chainify: its independence certificate");
  gen_cmd->add_flag("--json", gen.json, "Print the certificate instead of a summary");
  gen.flags.max_len = default_search_bound().max_len;
  gen.flags.add(gen_cmd, false);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Look for a solution of one equation");
  solve_cmd->add_option("equation", solve.equation, "e.g. \"xyz = zxy\"")->required();
  solve_cmd->add_option("--mode", solve.mode, "monoid or semigroup")
      ->check(CLI::IsMember({"monoid", "semigroup"}))
      ->capture_default_str();
  solve_cmd->add_option("--budget", solve.budget, "Substitution depth per branch")
      ->capture_default_str();
  solve_cmd->add_option("--max-image-len", solve.max_image_len, "Longest image reported")
      ->capture_default_str();
  solve_cmd->add_flag("--json", solve.json, "Machine-readable report");

  std::size_t bounds_n = 0;
  bool bounds_json = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds from the implemented families");
  bounds_cmd->add_option("n", bounds_n, "Number of unknowns")->required();
  bounds_cmd->add_flag("--json", bounds_json, "Machine-readable report");

  std::vector<std::string> identity_items;
  bool identity_json = false;
  auto* identity_cmd =
      app.add_subcommand("identity", "Test (u_1...u_m)^j = u_1^j...u_m^j for j = 0..k");
  identity_cmd->add_option("items", identity_items, "Words u_1 .. u_m, then k")->required();
  identity_cmd->add_flag("--json", identity_json, "Machine-readable report");

  std::size_t q5_len = 0;
  bool q5_json = false;
  BoundFlags q5_flags;
  auto* q5_cmd = app.add_subcommand(
      "q5", "Search balanced 3-equation systems over x, y, z for independence with a "
            "nonperiodic solution");
  q5_cmd->add_option("len", q5_len, "Longest equation side")->required();
  q5_cmd->add_flag("--json", q5_json, "Machine-readable report");
  q5_flags.add(q5_cmd);

  std::size_t exotic_p = 0;
  bool exotic_json = false;
  auto* exotic_cmd =
      app.add_subcommand("exotic", "Separate x^p = x^(p+1) from x^(p-1) = x^p in the capped monoid");
  exotic_cmd->add_option("P", exotic_p, "Number of steps")->required();
  exotic_cmd->add_flag("--json", exotic_json, "Machine-readable report");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*bounds_cmd) return cmd_bounds(bounds_n, bounds_json, out);
    if (*identity_cmd) return cmd_identity(identity_items, identity_json, out);
    if (*q5_cmd) return cmd_q5(q5_len, q5_flags, q5_json, out);
    if (*exotic_cmd) return cmd_exotic(exotic_p, exotic_json, out);
  } catch (const Failure& f) {
    err << "wordchains: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "wordchains: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "wordchains: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "wordchains: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace wordchains::cli
