#include "burnside/marks.hpp"

#include "burnside/error.hpp"
#include "burnside/gset.hpp"

namespace burnside {

MarksMatrix::MarksMatrix(ClassTablePtr classes, std::vector<std::int64_t> entries)
    : classes_(std::move(classes)), n_(classes_->size()), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) fail(ErrorKind::MalformedInput, "marks matrix has wrong size");
}

std::int64_t MarksMatrix::determinant() const {
  std::int64_t det = 1;
  for (std::size_t i = 0; i < n_; ++i) det = checked_mul(det, (*this)(i, i));
  return det;
}

std::int64_t mark(const GroupPtr& group, const Subgroup& h, const Subgroup& k) {
  if (h.group_order() != group->order()) fail(ErrorKind::NotASubgroup, "H is not a subgroup of G");
  return static_cast<std::int64_t>(fixed_points(coset_space(group, k), h));
}

MarksPtr table_of_marks(const ClassTablePtr& classes) {
  const auto& group = classes->group();
  const std::size_t n = classes->size();
  std::vector<std::int64_t> entries(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const GSet cosets = coset_space(group, (*classes)[j].representative);
    for (std::size_t i = 0; i < n; ++i)
      entries[i * n + j] = static_cast<std::int64_t>(fixed_points(cosets, (*classes)[i].representative));
  }

  const auto order = static_cast<std::int64_t>(group->order());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cls = (*classes)[i];
    if (entries[i * n + i] != static_cast<std::int64_t>(cls.weyl_order))
      fail(ErrorKind::Internal, "mark diagonal differs from Weyl order");
    if (entries[i * n + n - 1] != 1) fail(ErrorKind::Internal, "last column of marks is not all ones");
    if (entries[i] != order / static_cast<std::int64_t>(cls.representative.order()))
      fail(ErrorKind::Internal, "first row of marks differs from the index");
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i * n + j] != 0) fail(ErrorKind::Internal, "table of marks is not upper triangular");
  }
  return std::make_shared<const MarksMatrix>(classes, std::move(entries));
}

}  // namespace burnside
