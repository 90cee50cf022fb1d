#include "wordchains/certificate.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wordchains {

using nlohmann::json;

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::chain_decreasing:
      return "chain-decreasing";
    case CertificateKind::chain_increasing:
      return "chain-increasing";
    case CertificateKind::independence:
      return "independence";
  }
  return "chain-decreasing";
}

CertificateKind parse_certificate_kind(std::string_view text) {
  if (text == "chain-decreasing") return CertificateKind::chain_decreasing;
  if (text == "chain-increasing") return CertificateKind::chain_increasing;
  if (text == "independence") return CertificateKind::independence;
  throw ParseError("unknown certificate kind '" + std::string(text) + "'");
}

std::string dump_certificate(const CertificateDocument& doc) {
  json j;
  j["kind"] = std::string(to_string(doc.kind));
  j["mode"] = std::string(to_string(doc.system.mode));
  j["vars"] = doc.system.universe.letters();
  j["alphabet"] = doc.system.constants.letters();
  j["equations"] = json::array();
  for (const auto& eq : doc.system.equations) j["equations"].push_back(format_equation(eq));
  j["witnesses"] = json::array();
  for (const auto& h : doc.witnesses) j["witnesses"].push_back(format_assignment(h));
  j["bound"] = {{"max_len", doc.bound.max_len},
                {"alphabet", doc.bound.alphabet.letters()},
                {"mode", std::string(to_string(doc.bound.mode))}};
  if (doc.common_solution) j["common_solution"] = format_assignment(*doc.common_solution);
  return j.dump(2) + "\n";
}

namespace {

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("certificate lacks \"") + name + "\"");
  return *it;
}

std::string string_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string()) throw ParseError(std::string("certificate field \"") + name +
                                       "\" must be a string");
  return f.get<std::string>();
}

}  // namespace

CertificateDocument parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("certificate must be a JSON object");

  CertificateDocument doc;
  doc.kind = parse_certificate_kind(string_field(j, "kind"));
  doc.system.mode = parse_mode(string_field(j, "mode"));
  if (j.contains("alphabet")) doc.system.constants = Alphabet(string_field(j, "alphabet"));

  const json& equations = field(j, "equations");
  if (!equations.is_array()) throw ParseError("\"equations\" must be an array");
  const bool has_vars = j.contains("vars");
  if (has_vars) doc.system.universe = Alphabet(string_field(j, "vars"));
  for (const auto& e : equations) {
    if (!e.is_string()) throw ParseError("equations must be strings");
    Equation eq = has_vars ? parse_equation(e.get<std::string>(), doc.system.universe,
                                            doc.system.mode)
                           : parse_equation(e.get<std::string>(), doc.system.mode);
    if (!has_vars) {
      for (char v : eq.lhs) doc.system.universe.insert(v);
      for (char v : eq.rhs) doc.system.universe.insert(v);
    }
    doc.system.equations.push_back(std::move(eq));
  }

  const json& witnesses = field(j, "witnesses");
  if (!witnesses.is_array()) throw ParseError("\"witnesses\" must be an array");
  for (const auto& w : witnesses) {
    if (!w.is_string()) throw ParseError("witnesses must be strings");
    doc.witnesses.push_back(
        parse_assignment(w.get<std::string>(), doc.system.universe, doc.system.mode));
  }

  if (j.contains("bound")) {
    const json& b = j["bound"];
    if (!b.is_object()) throw ParseError("\"bound\" must be an object");
    if (b.contains("max_len")) {
      if (!b["max_len"].is_number_unsigned()) throw ParseError("bound max_len must be a count");
      doc.bound.max_len = b["max_len"].get<std::size_t>();
    }
    if (b.contains("alphabet")) doc.bound.alphabet = Alphabet(string_field(b, "alphabet"));
    if (b.contains("mode")) doc.bound.mode = parse_mode(string_field(b, "mode"));
  } else {
    doc.bound.mode = doc.system.mode;
  }
  if (j.contains("common_solution")) {
    doc.common_solution = parse_assignment(string_field(j, "common_solution"),
                                           doc.system.universe, doc.system.mode);
  }
  try {
    doc.system.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return doc;
}

CertificateDocument load_certificate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_certificate(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace wordchains
