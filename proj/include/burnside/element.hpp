#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "burnside/subgroups.hpp"

namespace burnside {

/// An element of A(G) in the basis (H_1), ..., (H_N) of a class table.
class BurnsideElement {
 public:
  BurnsideElement(ClassTablePtr basis, std::vector<std::int64_t> coeffs);

  static BurnsideElement zero(ClassTablePtr basis);
  /// (G), the multiplicative identity.
  static BurnsideElement identity(ClassTablePtr basis);
  /// The generator (H_i).
  static BurnsideElement generator(ClassTablePtr basis, std::size_t i);

  const ClassTablePtr& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

  BurnsideElement operator-() const;
  friend BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b);
  friend BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b);

  /// Same basis and same coefficients.
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

 private:
  ClassTablePtr basis_;
  std::vector<std::int64_t> coeffs_;
};

/// An element of the ghost ring Z^N under the componentwise product.
class GhostVector {
 public:
  GhostVector(ClassTablePtr basis, std::vector<std::int64_t> values);

  const ClassTablePtr& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  /// Hadamard product.
  friend GhostVector operator*(const GhostVector& a, const GhostVector& b);
  friend bool operator==(const GhostVector& a, const GhostVector& b) {
    return a.basis_ == b.basis_ && a.values_ == b.values_;
  }

 private:
  ClassTablePtr basis_;
  std::vector<std::int64_t> values_;
};

/// Throws GroupMismatch unless both objects live on the same class table.
void require_same_basis(const ClassTablePtr& a, const ClassTablePtr& b);

}  // namespace burnside
