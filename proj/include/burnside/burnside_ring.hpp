#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "burnside/element.hpp"
#include "burnside/marks.hpp"

namespace burnside {

/// Structure constants n_{ij}^k of A(G): (H_i)(H_j) = sum_k n_{ij}^k (H_k).
class MultTensor {
 public:
  MultTensor(ClassTablePtr classes, std::vector<std::int64_t> entries);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * n_ + j) * n_ + k];
  }
  /// The coefficient vector of (H_i)(H_j).
  std::span<const std::int64_t> row(std::size_t i, std::size_t j) const {
    return {entries_.data() + (i * n_ + j) * n_, n_};
  }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  const ClassTablePtr& classes() const noexcept { return classes_; }

 private:
  ClassTablePtr classes_;
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

using TensorPtr = std::shared_ptr<const MultTensor>;

/// Multiplication table from the table of marks by the descending-k
/// recurrence
///   M[i,j,k] = (Psi[k,i] Psi[k,j] - sum_{l>k} M[i,j,l] Psi[k,l]) / Psi[k,k].
/// Every division must be exact; otherwise InexactDivision is thrown.
TensorPtr mult_tensor(const MarksMatrix& psi);

/// c_k = sum_{i,j} a_i b_j M[i,j,k], with checked arithmetic.
BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b, const MultTensor& m);

/// Psi * a.
GhostVector ghost_map(const MarksMatrix& psi, const BurnsideElement& a);

struct PreimageResult {
  std::optional<BurnsideElement> element;
  /// Class index where back-substitution first failed to divide exactly.
  std::optional<std::size_t> failing_index;

  bool integral() const noexcept { return element.has_value(); }
};

/// Unique a with Psi a = v when it is integral. Back-substitution runs from
/// index N-1 down to 0; a non-integral v is reported, not thrown.
PreimageResult ghost_preimage(const MarksMatrix& psi, const GhostVector& v);

/// True iff every ghost component of a is +1 or -1.
bool is_unit(const BurnsideElement& a, const MarksMatrix& psi);

inline constexpr std::size_t kDefaultMaxUnitClasses = 25;

/// All units of A(G), sorted lexicographically by coefficient vector. Found by
/// depth-first assignment of ghost signs from the top class down, pruning at
/// the first inexact division. Throws CapExceeded when N > max_classes.
std::vector<BurnsideElement> enumerate_units(const MarksMatrix& psi,
                                             std::size_t max_classes = kDefaultMaxUnitClasses);

}  // namespace burnside
