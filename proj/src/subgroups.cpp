#include "burnside/subgroups.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "burnside/error.hpp"

namespace burnside {

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<Element> ElementSet::indices() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : s.words()) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

Subgroup::Subgroup(const FiniteGroup& group, std::span<const Element> elements) : members_(group.order()) {
  for (Element e : elements) {
    if (e >= group.order()) fail(ErrorKind::NotASubgroup, "element index out of range");
    members_.insert(e);
  }
  elements_ = members_.indices();
  if (elements_.empty() || elements_[0] != 0) fail(ErrorKind::NotASubgroup, "identity missing");
  for (Element a : elements_) {
    if (!members_.contains(group.inverse(a))) fail(ErrorKind::NotASubgroup, "not closed under inverses");
    for (Element b : elements_)
      if (!members_.contains(group.compose(a, b))) fail(ErrorKind::NotASubgroup, "not closed under composition");
  }
}

Subgroup Subgroup::trivial(const FiniteGroup& group) {
  const Element e = 0;
  return Subgroup(group, std::span<const Element>(&e, 1));
}

Subgroup Subgroup::whole(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  for (Element i = 0; i < group.order(); ++i) all[i] = i;
  return Subgroup(group, all);
}

Subgroup generated_subgroup(const FiniteGroup& group, std::span<const Element> generators) {
  ElementSet members(group.order());
  std::vector<Element> found{0};
  members.insert(0);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Element s : generators) {
      const Element y = group.compose(found[i], s);
      if (!members.contains(y)) {
        members.insert(y);
        found.push_back(y);
      }
    }
  std::sort(found.begin(), found.end());
  return Subgroup(std::move(members), std::move(found));
}

Subgroup conjugate_subgroup(const FiniteGroup& group, const Subgroup& h, Element g) {
  ElementSet members(group.order());
  for (Element x : h.elements()) members.insert(group.conjugate(g, x));
  auto elements = members.indices();
  return Subgroup(std::move(members), std::move(elements));
}

std::size_t SubgroupClassTable::class_of(const ElementSet& members) const {
  auto it = class_lookup_.find(members);
  if (it == class_lookup_.end()) fail(ErrorKind::NotASubgroup, "set is not a subgroup of this group");
  return it->second;
}

ClassTablePtr subgroup_classes(const GroupPtr& group_ptr, EnumerationCaps caps) {
  const FiniteGroup& group = *group_ptr;

  struct Found {
    Subgroup subgroup;
    std::vector<Element> generators;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;

  auto add = [&](Subgroup s, std::vector<Element> gens) {
    if (index.count(s.members())) return;
    if (found.size() >= caps.max_subgroups)
      fail(ErrorKind::GroupTooLarge, "more than " + std::to_string(caps.max_subgroups) + " subgroups");
    index.emplace(s.members(), found.size());
    found.push_back({std::move(s), std::move(gens)});
  };

  // Seed with cyclic subgroups, keeping one generator per distinct subgroup.
  std::vector<Element> cyclic_generators;
  for (Element g = 0; g < group.order(); ++g) {
    Subgroup c = generated_subgroup(group, std::span<const Element>(&g, 1));
    if (!index.count(c.members())) {
      cyclic_generators.push_back(g);
      add(std::move(c), g == 0 ? std::vector<Element>{} : std::vector<Element>{g});
    }
  }

  // Close under joins <H, g> until no new subgroup appears.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element g : cyclic_generators) {
      if (found[i].subgroup.contains(g)) continue;
      std::vector<Element> gens = found[i].generators;
      gens.push_back(g);
      Subgroup joined = generated_subgroup(group, gens);
      add(std::move(joined), std::move(gens));
    }
  }

  // Partition into conjugacy classes.
  const std::size_t total = found.size();
  std::vector<std::size_t> class_id(total, total);
  std::vector<std::vector<std::size_t>> raw_classes;
  for (std::size_t s = 0; s < total; ++s) {
    if (class_id[s] != total) continue;
    const std::size_t id = raw_classes.size();
    raw_classes.emplace_back();
    for (Element g = 0; g < group.order(); ++g) {
      Subgroup c = conjugate_subgroup(group, found[s].subgroup, g);
      const std::size_t t = index.at(c.members());
      if (class_id[t] == total) {
        class_id[t] = id;
        raw_classes[id].push_back(t);
      }
    }
  }

  // Canonical order: subgroup order, then smallest sorted element tuple.
  for (auto& members : raw_classes)
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return found[a].subgroup.elements() < found[b].subgroup.elements();
    });
  std::sort(raw_classes.begin(), raw_classes.end(), [&](const auto& a, const auto& b) {
    const auto& ha = found[a.front()].subgroup;
    const auto& hb = found[b.front()].subgroup;
    if (ha.order() != hb.order()) return ha.order() < hb.order();
    return ha.elements() < hb.elements();
  });

  std::shared_ptr<SubgroupClassTable> table(new SubgroupClassTable());
  table->group_ = group_ptr;
  std::size_t label_order = 0, label_index = 0;
  for (const auto& members : raw_classes) {
    SubgroupClass cls;
    cls.representative = found[members.front()].subgroup;
    for (std::size_t t : members) {
      cls.members.push_back(table->subgroups_.size());
      table->class_lookup_.emplace(found[t].subgroup.members(), table->classes_.size());
      table->subgroups_.push_back(found[t].subgroup);
    }
    cls.normalizer_order = group.order() / members.size();
    cls.weyl_order = cls.normalizer_order / cls.representative.order();
    if (cls.representative.order() != label_order) {
      label_order = cls.representative.order();
      label_index = 0;
    }
    cls.label = std::to_string(label_order) + "." + std::to_string(++label_index);
    table->classes_.push_back(std::move(cls));
  }

  const std::size_t n = table->classes_.size();
  table->containment_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rep = table->classes_[i].representative.members();
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t count = 0;
      for (std::size_t t : table->classes_[j].members)
        if (rep.is_subset_of(table->subgroups_[t].members())) ++count;
      table->containment_[i * n + j] = count;
    }
  }
  return table;
}

}  // namespace burnside
