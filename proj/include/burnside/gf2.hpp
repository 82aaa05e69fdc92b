#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace burnside::gf2 {

/// A vector over GF(2) packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value) noexcept {
    const auto bit = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  BitVector& operator^=(const BitVector& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  bool any() const noexcept;
  std::size_t popcount() const noexcept;
  /// Parity of the popcount of (this AND other).
  bool dot(const BitVector& other) const noexcept;

  std::vector<std::int64_t> to_ints() const;
  static BitVector from_ints(const std::vector<std::int64_t>& values);  // each value taken mod 2

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A rows x cols matrix over GF(2), one BitVector per row.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }
  const BitVector& row(std::size_t i) const { return rows_[i]; }

  /// Columns as vectors of length rows().
  BitVector column(std::size_t j) const;
  BitVector multiply(const BitVector& x) const;  // A x

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

std::size_t rank(const BitMatrix& a);

struct SolveResult {
  /// A solution with every free variable set to zero, pivots chosen by
  /// ascending column index.
  std::optional<BitVector> solution;
  /// When inconsistent: a set of rows y with y^T A = 0 and y^T b = 1.
  std::optional<BitVector> certificate;
  std::size_t rank = 0;
  /// Basis of the null space of A, used to enumerate all solutions.
  std::vector<BitVector> kernel;
};

SolveResult solve(const BitMatrix& a, const BitVector& b);

/// Minimum-weight solution found by exhaustive search over the solution coset.
/// Returns nullopt when the system is inconsistent or the coset has more than
/// 2^max_free_bits elements.
std::optional<BitVector> solve_min_weight(const BitMatrix& a, const BitVector& b, std::size_t max_free_bits = 20);

}  // namespace burnside::gf2
