#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

/// Dense bitset over the elements of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Element e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  std::size_t count() const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  std::vector<Element> indices() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

/// A subgroup as a sorted list of element indices plus a membership bitset.
class Subgroup {
 public:
  Subgroup() = default;
  /// Validates closure under composition and inversion; throws NotASubgroup.
  Subgroup(const FiniteGroup& group, std::span<const Element> elements);

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const ElementSet& members() const noexcept { return members_; }
  bool contains(Element e) const noexcept { return members_.contains(e); }
  std::size_t group_order() const noexcept { return members_.universe(); }

  static Subgroup trivial(const FiniteGroup& group);
  static Subgroup whole(const FiniteGroup& group);

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  friend Subgroup generated_subgroup(const FiniteGroup&, std::span<const Element>);
  friend Subgroup conjugate_subgroup(const FiniteGroup&, const Subgroup&, Element);
  Subgroup(ElementSet members, std::vector<Element> elements)
      : members_(std::move(members)), elements_(std::move(elements)) {}

  ElementSet members_;
  std::vector<Element> elements_;
};

/// Subgroup generated by a set of elements.
Subgroup generated_subgroup(const FiniteGroup& group, std::span<const Element> generators);

/// g H g^-1.
Subgroup conjugate_subgroup(const FiniteGroup& group, const Subgroup& h, Element g);

struct SubgroupClass {
  Subgroup representative;
  std::vector<std::size_t> members;  // indices into SubgroupClassTable::subgroups()
  std::size_t normalizer_order = 0;
  std::size_t weyl_order = 0;
  std::string label;  // "order.index", e.g. "2.1"
};

struct EnumerationCaps {
  std::size_t max_subgroups = 50000;
};

/// Conjugacy classes of subgroups (H_1), ..., (H_N) in a total order refining
/// the containment-up-to-conjugacy order. Class 0 is the trivial subgroup,
/// class N-1 is the whole group.
class SubgroupClassTable {
 public:
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }

  /// Every subgroup of G, grouped so that class members are contiguous.
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }

  /// n(H_i, H_j): number of members of class j containing the representative of class i.
  std::int64_t containment(std::size_t i, std::size_t j) const { return containment_[i * size() + j]; }
  /// (H_i) <= (H_j) in the natural partial order.
  bool below(std::size_t i, std::size_t j) const { return containment(i, j) > 0; }

  /// Class index of an arbitrary subgroup of G given by its member set.
  std::size_t class_of(const ElementSet& members) const;
  std::size_t class_of(const Subgroup& h) const { return class_of(h.members()); }

 private:
  friend std::shared_ptr<const SubgroupClassTable> subgroup_classes(const GroupPtr&, EnumerationCaps);

  GroupPtr group_;
  std::vector<SubgroupClass> classes_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::int64_t> containment_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> class_lookup_;
};

using ClassTablePtr = std::shared_ptr<const SubgroupClassTable>;

/// Enumerates every subgroup by closing the cyclic subgroups under joins
/// <H, g>, then groups them into conjugacy classes sorted by (order,
/// lexicographically smallest member tuple). Throws GroupTooLarge when the
/// subgroup count exceeds caps.max_subgroups.
ClassTablePtr subgroup_classes(const GroupPtr& group, EnumerationCaps caps = {});

}  // namespace burnside
