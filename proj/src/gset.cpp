#include "burnside/gset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "burnside/error.hpp"

namespace burnside {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a != b) fail(ErrorKind::GroupMismatch, "G-sets over different groups");
}

void require_subgroup_of(const GSet& x, const Subgroup& h) {
  if (h.group_order() != x.group()->order())
    fail(ErrorKind::GroupMismatch, "subgroup does not belong to the G-set's group");
}

}  // namespace

GSet::GSet(GroupPtr group, std::vector<Permutation> action, std::vector<std::string> labels)
    : group_(std::move(group)), action_(std::move(action)), labels_(std::move(labels)) {
  if (action_.size() != group_->order()) fail(ErrorKind::GroupMismatch, "one permutation per group element required");
  size_ = action_.empty() ? 0 : action_[0].size();
}

GSet coset_space(const GroupPtr& group, const Subgroup& h) {
  const FiniteGroup& g = *group;
  if (h.group_order() != g.order()) fail(ErrorKind::NotASubgroup, "subgroup of a different group");
  // Re-validate: h may have been built for a different group of the same order.
  Subgroup checked(g, h.elements());

  std::vector<std::size_t> coset_of(g.order(), g.order());
  std::vector<Element> representatives;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != g.order()) continue;
    const std::size_t id = representatives.size();
    representatives.push_back(x);
    for (Element y : checked.elements()) coset_of[g.compose(x, y)] = id;
  }

  const std::size_t n = representatives.size();
  std::vector<Permutation> action(g.order(), Permutation(n));
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t p = 0; p < n; ++p)
      action[a][p] = static_cast<std::uint32_t>(coset_of[g.compose(a, representatives[p])]);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element r : representatives) labels.push_back("g" + std::to_string(r) + "H");
  return GSet(group, std::move(action), std::move(labels));
}

GSet product(const GSet& x, const GSet& y) {
  require_same_group(x.group(), y.group());
  const std::size_t ny = y.size();
  const std::size_t order = x.group()->order();
  std::vector<Permutation> action(order, Permutation(x.size() * ny));
  for (Element g = 0; g < order; ++g)
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < ny; ++b)
        action[g][a * ny + b] = static_cast<std::uint32_t>(x.image(g, a) * ny + y.image(g, b));

  std::vector<std::string> labels;
  if (!x.labels().empty() && !y.labels().empty()) {
    labels.reserve(x.size() * ny);
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < ny; ++b) labels.push_back("(" + x.labels()[a] + "," + y.labels()[b] + ")");
  }
  return GSet(x.group(), std::move(action), std::move(labels));
}

GSet one_point(const GroupPtr& group) {
  return GSet(group, std::vector<Permutation>(group->order(), Permutation{0}), {"*"});
}

std::size_t fixed_points(const GSet& x, const Subgroup& h) {
  require_subgroup_of(x, h);
  std::size_t count = 0;
  for (std::size_t p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (Element e : h.elements())
      if (x.image(e, p) != p) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

Subgroup stabilizer(const GSet& x, std::size_t point) {
  const FiniteGroup& g = *x.group();
  std::vector<Element> members;
  for (Element e = 0; e < g.order(); ++e)
    if (x.image(e, point) == point) members.push_back(e);
  return Subgroup(g, members);
}

std::vector<std::size_t> orbit_ids(const GSet& x) {
  DisjointSets sets(x.size());
  for (Element e = 0; e < x.group()->order(); ++e)
    for (std::size_t p = 0; p < x.size(); ++p) sets.unite(p, x.image(e, p));
  std::vector<std::size_t> ids(x.size());
  std::unordered_map<std::size_t, std::size_t> numbering;
  for (std::size_t p = 0; p < x.size(); ++p) {
    auto [it, inserted] = numbering.emplace(sets.find(p), numbering.size());
    ids[p] = it->second;
  }
  return ids;
}

std::size_t orbit_count(const GSet& x, const Subgroup& h) {
  require_subgroup_of(x, h);
  DisjointSets sets(x.size());
  for (Element e : h.elements())
    for (std::size_t p = 0; p < x.size(); ++p) sets.unite(p, x.image(e, p));
  std::size_t count = 0;
  for (std::size_t p = 0; p < x.size(); ++p)
    if (sets.find(p) == p) ++count;
  return count;
}

std::vector<IsotropyCount> isotropy_census(const GSet& x, const SubgroupClassTable& classes) {
  if (classes.group() != x.group()) fail(ErrorKind::GroupMismatch, "class table of a different group");
  const FiniteGroup& g = *x.group();
  std::vector<IsotropyCount> census(classes.size());

  const auto ids = orbit_ids(x);
  std::vector<bool> orbit_seen(x.size(), false);
  for (std::size_t p = 0; p < x.size(); ++p) {
    ElementSet stab(g.order());
    for (Element e = 0; e < g.order(); ++e)
      if (x.image(e, p) == p) stab.insert(e);
    const std::size_t type = classes.class_of(stab);
    ++census[type].points;
    if (!orbit_seen[ids[p]]) {
      orbit_seen[ids[p]] = true;
      ++census[type].orbits;
    }
  }

  // Every orbit of type (H) has [G:H] points.
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (census[i].points * classes[i].representative.order() != census[i].orbits * g.order())
      fail(ErrorKind::Internal, "orbit census inconsistent with orbit sizes");
  return census;
}

BurnsideElement burnside_linearization(const GSet& x, const ClassTablePtr& classes) {
  const auto census = isotropy_census(x, *classes);
  std::vector<std::int64_t> coeffs(census.size());
  for (std::size_t i = 0; i < census.size(); ++i) coeffs[i] = static_cast<std::int64_t>(census[i].orbits);
  return BurnsideElement(classes, std::move(coeffs));
}

}  // namespace burnside
