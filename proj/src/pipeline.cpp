#include "burnside/pipeline.hpp"

namespace burnside {

Pipeline::Pipeline(GroupPtr group, PipelineCaps caps) : caps_(caps), group_(std::move(group)) {}

Pipeline Pipeline::from_spec(std::string_view spec, PipelineCaps caps) {
  return Pipeline(load_group(spec, caps.max_order), caps);
}

const ClassTablePtr& Pipeline::classes() {
  if (!classes_) classes_ = subgroup_classes(group_, {caps_.max_subgroups});
  return classes_;
}

const MarksPtr& Pipeline::marks() {
  if (!marks_) marks_ = table_of_marks(classes());
  return marks_;
}

const TensorPtr& Pipeline::tensor() {
  if (!tensor_) tensor_ = mult_tensor(*marks());
  return tensor_;
}

const CharTablePtr& Pipeline::characters() {
  if (!characters_) characters_ = character_table(group_, caps_.max_order);
  return characters_;
}

const RealIrrepsPtr& Pipeline::irreps() {
  if (!irreps_) irreps_ = real_irreducibles(characters());
  return irreps_;
}

const FixedDimPtr& Pipeline::fixed_dims() {
  if (!fixed_dims_) fixed_dims_ = fixed_dim_matrix(irreps(), classes());
  return fixed_dims_;
}

const std::vector<BasicDegree>& Pipeline::basic_degrees() {
  if (!basics_) basics_ = all_basic_degrees(*fixed_dims(), *marks(), *tensor());
  return *basics_;
}

}  // namespace burnside
