#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "burnside/subgroups.hpp"

namespace burnside {

/// The table of marks: entry (i, j) = m(H_i, H_j) = |(G/H_j)^{H_i}|.
/// Upper triangular with diagonal |W(H_i)| under the class table's order.
class MarksMatrix {
 public:
  MarksMatrix(ClassTablePtr classes, std::vector<std::int64_t> entries);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  const ClassTablePtr& classes() const noexcept { return classes_; }

  /// Product of the diagonal.
  std::int64_t determinant() const;

 private:
  ClassTablePtr classes_;
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

using MarksPtr = std::shared_ptr<const MarksMatrix>;

/// m(H, K) by direct fixed-point counting on G/K.
std::int64_t mark(const GroupPtr& group, const Subgroup& h, const Subgroup& k);

/// Builds the full table and checks its structural invariants (triangularity,
/// Weyl-order diagonal, first row [G:H_j], last column of ones).
MarksPtr table_of_marks(const ClassTablePtr& classes);

}  // namespace burnside
