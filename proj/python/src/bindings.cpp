#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wordchains/certificate.hpp"
#include "wordchains/corpus.hpp"
#include "wordchains/exotic.hpp"
#include "wordchains/families.hpp"
#include "wordchains/oracle.hpp"
#include "wordchains/semantics.hpp"
#include "wordchains/solver.hpp"
#include "wordchains/words.hpp"

namespace py = pybind11;
using namespace wordchains;

namespace {

Bound make_bound(std::size_t max_len, const std::string& alphabet, Mode mode) {
  Bound b{max_len, Alphabet(alphabet), mode};
  b.validate();
  return b;
}

std::vector<Assignment> parse_witnesses(const std::vector<std::string>& texts,
                                        const EquationSystem& sys) {
  std::vector<Assignment> out;
  for (const auto& t : texts) out.push_back(parse_assignment(t, sys.universe, sys.mode));
  return out;
}

py::dict verify_report(const VerifyResult& r) {
  py::dict d;
  d["outcome"] = r.outcome == Outcome::verified  ? "verified"
                 : r.outcome == Outcome::refuted ? "refuted"
                                                 : "inconclusive";
  d["index"] = r.index ? py::cast(*r.index) : py::none();
  d["detail"] = r.detail;
  std::vector<std::string> ws;
  for (const auto& w : r.witnesses) ws.push_back(format_assignment(w));
  d["witnesses"] = ws;
  d["offending"] = r.offending ? py::cast(format_assignment(*r.offending)) : py::none();
  return d;
}

FamilyOutput generate(const std::string& family, std::size_t param) {
  if (family == "dc3") return chain_dc3();
  if (family == "dc3plus") return chain_dc3_semigroup();
  if (family == "dc4") return chain_dc4();
  if (family == "quartic") return quartic_independent_system(param == 0 ? 3 : param);
  if (family == "quadratic") return quadratic_independent_system(param == 0 ? 5 : param);
  if (family == "chain") return quadratic_chain(param == 0 ? 5 : param);
  if (family == "toy-triple") return toy_systems()[0];
  if (family == "toy-pair") return toy_systems()[1];
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Word equation certificates and bounded search";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::enum_<Mode>(m, "Mode").value("monoid", Mode::monoid).value("semigroup", Mode::semigroup);

  py::class_<Equation>(m, "Equation")
      .def_property_readonly("lhs", [](const Equation& e) { return e.lhs.symbols(); })
      .def_property_readonly("rhs", [](const Equation& e) { return e.rhs.symbols(); })
      .def("is_balanced", [](const Equation& e) { return is_balanced(e); })
      .def("__eq__", [](const Equation& a, const Equation& b) { return a == b; })
      .def("__str__", [](const Equation& e) { return format_equation(e); })
      .def("__repr__", [](const Equation& e) { return "Equation('" + format_equation(e) + "')"; });

  py::class_<Assignment>(m, "Assignment")
      .def_property_readonly("vars", [](const Assignment& h) { return h.universe().letters(); })
      .def_property_readonly("images",
                             [](const Assignment& h) {
                               std::vector<std::string> out;
                               for (const auto& w : h.images()) out.push_back(w.symbols());
                               return out;
                             })
      .def("__eq__", [](const Assignment& a, const Assignment& b) { return a == b; })
      .def("__str__", [](const Assignment& h) { return format_assignment(h); });

  m.def(
      "parse_equation",
      [](const std::string& text, Mode mode) { return parse_equation(text, mode); },
      py::arg("text"), py::arg("mode") = Mode::monoid);
  m.def(
      "parse_assignment",
      [](const std::string& text, Mode mode) { return parse_assignment(text, mode); },
      py::arg("text"), py::arg("mode") = Mode::monoid);
  m.def("apply", [](const Assignment& h, const std::string& w) {
    return apply(h, VarWord(w)).symbols();
  });
  m.def("solves", [](const Assignment& h, const Equation& e) { return solves(h, e); });
  m.def("primitive_root",
        [](const std::string& w) { return primitive_root(ConstWord(w)).symbols(); });
  m.def("is_periodic", [](const std::vector<std::string>& images) {
    std::vector<ConstWord> ws(images.begin(), images.end());
    return is_periodic(ws);
  });

  m.def(
      "verify",
      [](const std::string& kind, const std::string& corpus,
         std::optional<std::vector<std::string>> witnesses, std::size_t max_len,
         const std::string& alphabet, bool strict, unsigned threads) {
        if (kind != "independent" && kind != "chain-dec" && kind != "chain-inc") {
          throw std::invalid_argument("kind must be chain-dec, chain-inc or independent");
        }
        EquationSystem sys = parse_corpus(corpus);
        Bound bound = make_bound(max_len, alphabet, sys.mode);
        VerifyOptions options{SearchOptions{threads, 0}, strict};
        std::optional<std::vector<Assignment>> ws;
        if (witnesses) ws = parse_witnesses(*witnesses, sys);
        VerifyResult r;
        {
          py::gil_scoped_release release;
          if (kind == "independent") {
            std::optional<IndependenceCertificate> cert;
            if (ws) cert = IndependenceCertificate{*ws};
            r = verify_independence(sys, cert, bound, options);
          } else {
            std::optional<ChainCertificate> cert;
            if (ws) cert = ChainCertificate{*ws};
            r = kind == "chain-dec" ? verify_decreasing_chain(sys, cert, bound, options)
                                    : verify_increasing_chain(sys, cert, bound, options);
          }
        }
        return verify_report(r);
      },
      py::arg("kind"), py::arg("corpus"), py::arg("witnesses") = py::none(),
      py::arg("max_len") = 3, py::arg("alphabet") = "ab", py::arg("strict") = false,
      py::arg("threads") = 1);

  m.def(
      "generate",
      [](const std::string& family, std::size_t param) {
        FamilyOutput f = generate(family, param);
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
        py::dict d;
        d["name"] = f.name;
        d["size"] = f.system.size();
        d["claimed_size"] = f.claimed_size;
        d["corpus"] = format_corpus(f.system);
        d["certificate"] = dump_certificate(doc);
        std::vector<std::string> ws;
        for (const auto& w : doc.witnesses) ws.push_back(format_assignment(w));
        d["witnesses"] = ws;
        return d;
      },
      py::arg("family"), py::arg("param") = 0);

  m.def("lower_bounds", [](std::size_t n) {
    BoundsReport r = lower_bounds(n);
    py::dict d;
    d["n"] = r.n;
    d["is"] = r.is_lower;
    d["is_prime"] = r.is_prime_lower;
    d["dc"] = r.dc_lower;
    d["sources"] = r.sources;
    return d;
  });

  m.def("power_identity_holds", [](const std::vector<std::string>& words, std::size_t k) {
    std::vector<ConstWord> ws(words.begin(), words.end());
    return power_identity_holds(ws, k);
  });

  m.def(
      "solve",
      [](const std::string& text, Mode mode, std::size_t budget) {
        Equation eq = parse_equation(text, mode);
        SolveResult r = solve_bounded(eq, mode, Budget{budget, Budget{}.max_image_len});
        py::dict d;
        d["solution"] = r.solution ? py::cast(format_assignment(*r.solution)) : py::none();
        d["proven_unsatisfiable"] = r.proven_unsatisfiable;
        return d;
      },
      py::arg("equation"), py::arg("mode") = Mode::monoid, py::arg("budget") = Budget{}.max_depth);

  m.def("exotic_chain", [](std::size_t p) {
    std::vector<std::tuple<std::size_t, std::string, bool>> out;
    for (const auto& s : exotic::demonstrate_increasing_chain(p)) {
      out.emplace_back(s.p, exotic::format_element(s.witness),
                       s.solves_current && s.fails_previous);
    }
    return out;
  });
}
