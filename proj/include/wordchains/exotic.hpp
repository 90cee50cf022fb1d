#pragma once

// The commutative monoid generated by a_1, a_2, ... with a_i^{i+1} = a_i^i.
// One-unknown equations x^p = x^q there have strictly increasing solution
// sets along x = 1, x^2 = x, x^3 = x^2, ...

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wordchains::exotic {

/// Element a_{i1}^{e1} a_{i2}^{e2} ... stored sparsely, normalized so that
/// 1 <= e_i <= i. The empty map is the identity.
class CappedElement {
 public:
  CappedElement() = default;
  /// Normalizes: drops zero exponents and caps e_i at i. Index 0 is invalid.
  explicit CappedElement(std::map<std::size_t, std::size_t> exponents);

  /// a_index^exponent.
  static CappedElement generator(std::size_t index, std::size_t exponent = 1);

  const std::map<std::size_t, std::size_t>& exponents() const noexcept { return exps_; }
  std::size_t exponent(std::size_t index) const;
  bool is_identity() const noexcept { return exps_.empty(); }

  friend bool operator==(const CappedElement&, const CappedElement&) = default;

 private:
  std::map<std::size_t, std::size_t> exps_;
};

CappedElement multiply(const CappedElement& u, const CappedElement& v);
CappedElement power(const CappedElement& u, std::size_t k);

/// Whether u solves x^p = x^q.
bool solves_one_unknown(const CappedElement& u, std::size_t p, std::size_t q);

struct ChainStep {
  std::size_t p = 0;
  CappedElement witness;
  bool solves_current = false;   // witness solves x^p = x^{p+1}
  bool fails_previous = false;   // witness fails x^{p-1} = x^p
};

/// For p = 1..max_p, the generator a_p separating x^p = x^{p+1} from
/// x^{p-1} = x^p.
std::vector<ChainStep> demonstrate_increasing_chain(std::size_t max_p);

/// `a1^1 a3^2`; the identity is `1`.
std::string format_element(const CappedElement& u);
CappedElement parse_element(std::string_view text);

}  // namespace wordchains::exotic
