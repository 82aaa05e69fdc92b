#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "burnside/element.hpp"
#include "burnside/group.hpp"
#include "burnside/subgroups.hpp"

namespace burnside {

/// A finite G-set. Only finite G-sets are modelled; they are all the Burnside
/// ring needs. action(g) is the permutation of points induced by g, and
/// action(compose(g, h)) = action(g) after action(h).
class GSet {
 public:
  GSet(GroupPtr group, std::vector<Permutation> action, std::vector<std::string> labels = {});

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }
  std::uint32_t image(Element g, std::size_t point) const { return action_[g][point]; }
  const Permutation& action(Element g) const { return action_[g]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<Permutation> action_;
  std::vector<std::string> labels_;
};

/// Left cosets gH under left translation. Point p is labelled by the smallest
/// element index of its coset; the coset H itself is point 0.
GSet coset_space(const GroupPtr& group, const Subgroup& h);

/// Cartesian product with the diagonal action. Point (x, y) has index
/// x * |Y| + y.
GSet product(const GSet& x, const GSet& y);

/// The one-point G-set G/G.
GSet one_point(const GroupPtr& group);

/// |X^H|.
std::size_t fixed_points(const GSet& x, const Subgroup& h);

/// G_p as a subgroup.
Subgroup stabilizer(const GSet& x, std::size_t point);

/// Orbit id of every point, numbered by first appearance.
std::vector<std::size_t> orbit_ids(const GSet& x);

/// Number of orbits of the restricted action of H.
std::size_t orbit_count(const GSet& x, const Subgroup& h);

struct IsotropyCount {
  std::size_t points = 0;  // |X_(H_i)|
  std::size_t orbits = 0;  // orbits of type (H_i)
};

/// Point and orbit counts of every orbit type.
std::vector<IsotropyCount> isotropy_census(const GSet& x, const SubgroupClassTable& classes);

/// The class [X] in A(G): coefficient k is the number of orbits of type (H_k).
BurnsideElement burnside_linearization(const GSet& x, const ClassTablePtr& classes);

}  // namespace burnside
