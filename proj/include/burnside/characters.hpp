#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "burnside/error.hpp"
#include "burnside/subgroups.hpp"

namespace burnside {

struct ElementClass {
  Element representative = 0;  // smallest element index in the class
  std::size_t size = 0;
};

/// Conjugacy classes of elements, ordered by (element order, size, smallest member); the
/// identity class is first.
class ConjugacyClasses {
 public:
  explicit ConjugacyClasses(const GroupPtr& group);

  std::size_t size() const noexcept { return classes_.size(); }
  const ElementClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ElementClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(Element e) const { return class_of_[e]; }
  const GroupPtr& group() const noexcept { return group_; }

 private:
  GroupPtr group_;
  std::vector<ElementClass> classes_;
  std::vector<std::size_t> class_of_;
};

std::vector<ElementClass> element_classes(const GroupPtr& group);

/// Tolerances for extracting integers from floating character sums.
inline constexpr double kIntegerTolerance = 1e-6;
inline constexpr double kOrthogonalityTolerance = 1e-8;

using Character = std::vector<std::complex<double>>;  // one value per element class

/// Complex irreducible characters, rows sorted by degree ascending and then by
/// value tuple descending (real part before imaginary part), so the trivial
/// character comes first.
class CharacterTable {
 public:
  CharacterTable(std::shared_ptr<const ConjugacyClasses> classes, std::vector<Character> chars);

  const ConjugacyClasses& element_classes() const noexcept { return *classes_; }
  const std::shared_ptr<const ConjugacyClasses>& element_classes_ptr() const noexcept { return classes_; }
  std::size_t size() const noexcept { return chars_.size(); }
  const Character& operator[](std::size_t k) const { return chars_[k]; }
  const std::vector<Character>& chars() const noexcept { return chars_; }
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }

  /// Value of character k at an arbitrary element.
  std::complex<double> value(std::size_t k, Element e) const { return chars_[k][classes_->class_of(e)]; }

  /// <chi_a, chi_b> = (1/|G|) sum_g chi_a(g) conj(chi_b(g)).
  std::complex<double> inner_product(const Character& a, const Character& b) const;

  /// Largest deviation of the row and column orthogonality relations.
  double orthogonality_residual() const;

 private:
  std::shared_ptr<const ConjugacyClasses> classes_;
  std::vector<Character> chars_;
  std::vector<std::int64_t> degrees_;
};

using CharTablePtr = std::shared_ptr<const CharacterTable>;

/// Dixon's method: common eigenvectors of the class multiplication matrices
/// over GF(p), p the smallest prime = 1 mod exp(G) above 2 sqrt|G|, lifted to
/// complex values through eigenvalue multiplicities. Throws CapExceeded when
/// |G| > max_order.
CharTablePtr character_table(const GroupPtr& group, std::size_t max_order = 5040);

/// Smallest prime p with p = 1 (mod exponent) and p > 2 sqrt(order).
std::int64_t dixon_prime(std::size_t order, std::size_t exponent);

/// (1/|G|) sum_g chi(g^2), rounded; NonIntegralIndicator when the residual
/// exceeds kIntegerTolerance.
int frobenius_schur(const CharacterTable& table, std::size_t k);

/// The unrounded indicator sum.
std::complex<double> frobenius_schur_value(const CharacterTable& table, std::size_t k);

enum class RealType { Orthogonal = 1, Complex = 0, Quaternionic = -1 };

struct RealIrrep {
  std::vector<double> real_character;  // per element class
  RealType type = RealType::Orthogonal;
  std::int64_t real_dimension = 0;
  std::vector<std::size_t> provenance;  // complex character indices
};

/// Real irreducible representations, in the order of their first complex
/// constituent (trivial first).
class RealIrrepSet {
 public:
  RealIrrepSet(CharTablePtr table, std::vector<RealIrrep> irreps)
      : table_(std::move(table)), irreps_(std::move(irreps)) {}

  std::size_t size() const noexcept { return irreps_.size(); }
  const RealIrrep& operator[](std::size_t k) const { return irreps_[k]; }
  const std::vector<RealIrrep>& irreps() const noexcept { return irreps_; }
  const CharTablePtr& table() const noexcept { return table_; }

 private:
  CharTablePtr table_;
  std::vector<RealIrrep> irreps_;
};

using RealIrrepsPtr = std::shared_ptr<const RealIrrepSet>;

/// Orthogonal type keeps chi, complex type merges chi with its conjugate,
/// quaternionic type doubles chi.
RealIrrepsPtr real_irreducibles(const CharTablePtr& table);

/// dim V^H = (1/|H|) sum_{h in H} chi(h) for a real character.
std::int64_t fixed_dim(const ConjugacyClasses& classes, const std::vector<double>& real_char, const Subgroup& h);

/// The unrounded average.
double fixed_dim_value(const ConjugacyClasses& classes, const std::vector<double>& real_char, const Subgroup& h);

/// Same for a complex character (the dimension of the complex invariants).
std::int64_t complex_fixed_dim(const CharacterTable& table, std::size_t k, const Subgroup& h);

/// D[i][k] = dim V_k^{H_i} over class representatives.
class FixedDimMatrix {
 public:
  FixedDimMatrix(ClassTablePtr classes, RealIrrepsPtr irreps, std::vector<std::int64_t> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t operator()(std::size_t i, std::size_t k) const { return entries_[i * cols_ + k]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  const ClassTablePtr& classes() const noexcept { return classes_; }
  const RealIrrepsPtr& irreps() const noexcept { return irreps_; }

 private:
  ClassTablePtr classes_;
  RealIrrepsPtr irreps_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> entries_;
};

using FixedDimPtr = std::shared_ptr<const FixedDimMatrix>;

FixedDimPtr fixed_dim_matrix(const RealIrrepsPtr& irreps, const ClassTablePtr& classes);

/// Permutation character of G/H: number of cosets fixed by each class
/// representative.
std::vector<std::int64_t> permutation_character(const ConjugacyClasses& classes, const Subgroup& h);

/// c[k][j] = <perm character of G/H_j, chi_k>, an r_C x N matrix.
std::vector<std::vector<std::int64_t>> perm_character_decomposition(const ClassTablePtr& classes,
                                                                    const CharacterTable& table);

/// Largest distance to the nearest integer among the inner products behind
/// perm_character_decomposition.
double perm_character_residual(const ClassTablePtr& classes, const CharacterTable& table);

/// Rounds x to the nearest integer, failing with kind when the residual is
/// at least kIntegerTolerance. The residual is reported through residual_out.
std::int64_t round_checked(double x, ErrorKind kind, const char* what, double* residual_out = nullptr);

}  // namespace burnside
