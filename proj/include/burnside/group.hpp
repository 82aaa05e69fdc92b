#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace burnside {

using Element = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image tuple.
using Permutation = std::vector<std::uint32_t>;

/// One permutation in cycle notation: a list of cycles of 1-based points.
using CycleList = std::vector<std::vector<int>>;

inline constexpr std::size_t kDefaultMaxOrder = 5040;

/// A finite group realized concretely by its full composition table.
///
/// Elements are indices 0..order-1, element 0 is the identity. When built from
/// permutations the composition convention is (f*g)(x) = f(g(x)): compose(f, g)
/// applies g first. Elements are numbered by sorting their image tuples
/// lexicographically, so numbering only depends on the set of permutations.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t domain_size() const noexcept { return domain_size_; }

  Element compose(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  Element conjugate(Element g, Element x) const noexcept {  // g x g^-1
    return compose(compose(g, x), inverse(g));
  }
  Element power(Element a, std::int64_t n) const;
  std::size_t element_order(Element a) const noexcept { return element_order_[a]; }
  /// Least common multiple of all element orders.
  std::size_t exponent() const noexcept { return exponent_; }

  const Permutation& permutation(Element a) const { return perms_[a]; }
  const std::vector<Permutation>& permutation_images() const noexcept { return perms_; }

  /// Element index of a permutation in this group, or order() when absent.
  Element find(const Permutation& p) const;

  bool is_abelian() const;

  /// Build from a set of permutations already closed under composition.
  static std::shared_ptr<const FiniteGroup> from_closed_permutations(std::size_t domain_size,
                                                                     std::vector<Permutation> perms,
                                                                     std::string name);

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::size_t domain_size_ = 0;
  std::size_t exponent_ = 1;
  std::string name_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Compose as maps: result(x) = f(g(x)).
Permutation compose_permutations(const Permutation& f, const Permutation& g);

/// Convert cycle notation (1-based points) into an image tuple on
/// {0, ..., domain_size-1}. Throws MalformedCycle on repeated or out-of-range
/// points.
Permutation permutation_from_cycles(std::size_t domain_size, const CycleList& cycles);

/// Parse text like "(1 2)(3 4 5)" or "()" into cycles.
CycleList parse_cycles(std::string_view text);

/// Closure of the generators under composition. Throws GroupTooLarge when
/// the closure exceeds max_order elements.
GroupPtr group_from_generators(std::size_t domain_size, const std::vector<CycleList>& generators,
                               std::string name = "", std::size_t max_order = kDefaultMaxOrder);

/// Named groups: cyclic:n, dihedral:n (order 2n), symmetric:n, alternating:n,
/// quaternion:8, product:A*B. Nested products associate to the right.
GroupPtr catalog_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);

/// Parse the JSON group document {"domain": int, "generators": [...], "name": str}.
GroupPtr group_from_json(std::string_view json_text, std::size_t max_order = kDefaultMaxOrder);

/// Either a catalog spec or "file:PATH".
GroupPtr load_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);

}  // namespace burnside
