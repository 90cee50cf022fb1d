#pragma once

// JSON certificate documents:
//   { "kind": "chain-decreasing" | "chain-increasing" | "independence",
//     "mode": "monoid" | "semigroup", "vars": "xyz", "alphabet": "ab",
//     "equations": ["xyz = zxy", ...], "witnesses": ["x=a, y=b, z=abab", ...],
//     "bound": {"max_len": 4, "alphabet": "ab", "mode": "monoid"},
//     "common_solution": "x=a, y=b, z=a" }      (optional)

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordchains/oracle.hpp"

namespace wordchains {

enum class CertificateKind { chain_decreasing, chain_increasing, independence };

std::string_view to_string(CertificateKind kind);
CertificateKind parse_certificate_kind(std::string_view text);

struct CertificateDocument {
  CertificateKind kind = CertificateKind::chain_decreasing;
  EquationSystem system;
  std::vector<Assignment> witnesses;
  /// Bound the witnesses were searched under (informational).
  Bound bound;
  std::optional<Assignment> common_solution;
};

std::string dump_certificate(const CertificateDocument& doc);
/// Throws ParseError on malformed JSON or fields.
CertificateDocument parse_certificate(std::string_view text);
CertificateDocument load_certificate(const std::filesystem::path& path);

}  // namespace wordchains
