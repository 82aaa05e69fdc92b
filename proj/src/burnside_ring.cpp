#include "burnside/burnside_ring.hpp"

#include <algorithm>

#include "burnside/error.hpp"

namespace burnside {

void require_same_basis(const ClassTablePtr& a, const ClassTablePtr& b) {
  if (a != b) fail(ErrorKind::GroupMismatch, "elements belong to different class tables");
}

BurnsideElement::BurnsideElement(ClassTablePtr basis, std::vector<std::int64_t> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size())
    fail(ErrorKind::GroupMismatch, "coefficient vector length " + std::to_string(coeffs_.size()) +
                                       " does not match " + std::to_string(basis_->size()) + " classes");
}

BurnsideElement BurnsideElement::zero(ClassTablePtr basis) {
  const auto n = basis->size();
  return BurnsideElement(std::move(basis), std::vector<std::int64_t>(n, 0));
}

BurnsideElement BurnsideElement::identity(ClassTablePtr basis) {
  return generator(basis, basis->size() - 1);
}

BurnsideElement BurnsideElement::generator(ClassTablePtr basis, std::size_t i) {
  std::vector<std::int64_t> c(basis->size(), 0);
  c.at(i) = 1;
  return BurnsideElement(std::move(basis), std::move(c));
}

BurnsideElement BurnsideElement::operator-() const {
  std::vector<std::int64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(0, coeffs_[i]);
  return BurnsideElement(basis_, std::move(c));
}

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
  require_same_basis(a.basis_, b.basis_);
  std::vector<std::int64_t> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
  return BurnsideElement(a.basis_, std::move(c));
}

BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b) { return a + (-b); }

GhostVector::GhostVector(ClassTablePtr basis, std::vector<std::int64_t> values)
    : basis_(std::move(basis)), values_(std::move(values)) {
  if (values_.size() != basis_->size()) fail(ErrorKind::GroupMismatch, "ghost vector length mismatch");
}

GhostVector operator*(const GhostVector& a, const GhostVector& b) {
  require_same_basis(a.basis_, b.basis_);
  std::vector<std::int64_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_mul(a.values_[i], b.values_[i]);
  return GhostVector(a.basis_, std::move(v));
}

MultTensor::MultTensor(ClassTablePtr classes, std::vector<std::int64_t> entries)
    : classes_(std::move(classes)), n_(classes_->size()), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_ * n_) fail(ErrorKind::MalformedInput, "tensor has wrong size");
}

TensorPtr mult_tensor(const MarksMatrix& psi) {
  const std::size_t n = psi.size();
  std::vector<std::int64_t> m(n * n * n, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> std::int64_t& { return m[(i * n + j) * n + k]; };

  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      for (std::size_t i = n; i-- > 0;) {
        std::int64_t value = checked_mul(psi(k, i), psi(k, j));
        for (std::size_t l = n - 1; l > k; --l) value = checked_sub(value, checked_mul(at(i, j, l), psi(k, l)));
        const std::int64_t diag = psi(k, k);
        if (value % diag != 0)
          fail(ErrorKind::InexactDivision, "multiplication table entry (" + std::to_string(i) + "," +
                                               std::to_string(j) + "," + std::to_string(k) + ") is not integral");
        at(i, j, k) = value / diag;
      }
    }
  }
  return std::make_shared<const MultTensor>(psi.classes(), std::move(m));
}

BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b, const MultTensor& m) {
  require_same_basis(a.basis(), m.classes());
  require_same_basis(b.basis(), m.classes());
  const std::size_t n = m.size();
  std::vector<std::int64_t> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const std::int64_t ab = checked_mul(a[i], b[j]);
      const auto row = m.row(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (row[k] != 0) c[k] = checked_add(c[k], checked_mul(ab, row[k]));
    }
  }
  return BurnsideElement(a.basis(), std::move(c));
}

GhostVector ghost_map(const MarksMatrix& psi, const BurnsideElement& a) {
  require_same_basis(a.basis(), psi.classes());
  const std::size_t n = psi.size();
  std::vector<std::int64_t> v(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) v[i] = checked_add(v[i], checked_mul(psi(i, j), a[j]));
  return GhostVector(a.basis(), std::move(v));
}

PreimageResult ghost_preimage(const MarksMatrix& psi, const GhostVector& v) {
  require_same_basis(v.basis(), psi.classes());
  const std::size_t n = psi.size();
  std::vector<std::int64_t> a(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    std::int64_t rest = v[i];
    for (std::size_t j = i + 1; j < n; ++j) rest = checked_sub(rest, checked_mul(psi(i, j), a[j]));
    if (rest % psi(i, i) != 0) return {std::nullopt, i};
    a[i] = rest / psi(i, i);
  }
  return {BurnsideElement(psi.classes(), std::move(a)), std::nullopt};
}

bool is_unit(const BurnsideElement& a, const MarksMatrix& psi) {
  const auto ghost = ghost_map(psi, a);
  return std::all_of(ghost.values().begin(), ghost.values().end(),
                     [](std::int64_t x) { return x == 1 || x == -1; });
}

std::vector<BurnsideElement> enumerate_units(const MarksMatrix& psi, std::size_t max_classes) {
  const std::size_t n = psi.size();
  if (n > max_classes)
    fail(ErrorKind::CapExceeded,
         std::to_string(n) + " subgroup classes exceed the unit enumeration cap of " + std::to_string(max_classes));

  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> a(n, 0);

  // Assign the sign of ghost component i and solve for a_i; recurse downward.
  auto descend = [&](auto&& self, std::size_t level) -> void {
    if (level == 0) {
      found.push_back(a);
      return;
    }
    const std::size_t i = level - 1;
    std::int64_t rest = 0;
    for (std::size_t j = i + 1; j < n; ++j) rest = checked_sub(rest, checked_mul(psi(i, j), a[j]));
    for (std::int64_t sign : {1, -1}) {
      const std::int64_t numerator = checked_add(rest, sign);
      if (numerator % psi(i, i) != 0) continue;
      a[i] = numerator / psi(i, i);
      self(self, i);
    }
    a[i] = 0;
  };
  descend(descend, n);

  std::sort(found.begin(), found.end());
  std::vector<BurnsideElement> units;
  units.reserve(found.size());
  for (auto& c : found) units.emplace_back(psi.classes(), std::move(c));
  return units;
}

}  // namespace burnside
