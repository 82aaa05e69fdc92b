#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/characters.hpp"
#include "burnside/degree.hpp"
#include "burnside/marks.hpp"
#include "burnside/subgroups.hpp"

namespace burnside {

struct PipelineCaps {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_subgroups = 50000;
  std::size_t max_classes = kDefaultMaxUnitClasses;
};

/// Lazily computes and memoizes every stage for one group: class table,
/// marks, multiplication table, characters, real irreps, D and basic degrees.
/// Not safe for concurrent use; the stage results themselves are immutable
/// and may be shared freely.
class Pipeline {
 public:
  explicit Pipeline(GroupPtr group, PipelineCaps caps = {});
  static Pipeline from_spec(std::string_view spec, PipelineCaps caps = {});

  const PipelineCaps& caps() const noexcept { return caps_; }
  const GroupPtr& group() const noexcept { return group_; }
  const ClassTablePtr& classes();
  const MarksPtr& marks();
  const TensorPtr& tensor();
  const CharTablePtr& characters();
  const RealIrrepsPtr& irreps();
  const FixedDimPtr& fixed_dims();
  const std::vector<BasicDegree>& basic_degrees();

 private:
  PipelineCaps caps_;
  GroupPtr group_;
  ClassTablePtr classes_;
  MarksPtr marks_;
  TensorPtr tensor_;
  CharTablePtr characters_;
  RealIrrepsPtr irreps_;
  FixedDimPtr fixed_dims_;
  std::optional<std::vector<BasicDegree>> basics_;
};

}  // namespace burnside
