#include "burnside/gf2.hpp"

#include <bit>

namespace burnside::gf2 {

bool BitVector::any() const noexcept {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::dot(const BitVector& other) const noexcept {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::vector<std::int64_t> BitVector::to_ints() const {
  std::vector<std::int64_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

BitVector BitVector::from_ints(const std::vector<std::int64_t>& values) {
  BitVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v.set(i, (values[i] & 1) != 0);
  return v;
}

BitVector BitMatrix::column(std::size_t j) const {
  BitVector c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c.set(i, get(i, j));
  return c;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  BitVector y(rows());
  for (std::size_t i = 0; i < rows(); ++i) y.set(i, rows_[i].dot(x));
  return y;
}

std::size_t rank(const BitMatrix& a) { return solve(a, BitVector(a.rows())).rank; }

SolveResult solve(const BitMatrix& a, const BitVector& b) {
  const std::size_t m = a.rows(), n = a.cols();
  // Each working row carries its coefficients, right-hand side, and the
  // combination of original rows that produced it.
  struct Row {
    BitVector coeffs;
    bool rhs;
    BitVector origin;
  };
  std::vector<Row> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    BitVector origin(m);
    origin.set(i, true);
    rows.push_back({a.row(i), b.get(i), std::move(origin)});
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && !rows[p].coeffs.get(col)) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || !rows[i].coeffs.get(col)) continue;
      rows[i].coeffs ^= rows[r].coeffs;
      rows[i].rhs ^= rows[r].rhs;
      rows[i].origin ^= rows[r].origin;
    }
    pivot_cols.push_back(col);
    ++r;
  }

  SolveResult result;
  result.rank = r;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  for (std::size_t i = r; i < m; ++i)
    if (rows[i].rhs) {
      result.certificate = rows[i].origin;
      break;
    }
  if (!result.certificate) {
    BitVector x(n);
    for (std::size_t i = 0; i < r; ++i) x.set(pivot_cols[i], rows[i].rhs);
    result.solution = std::move(x);
  }

  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVector k(n);
    k.set(free, true);
    for (std::size_t i = 0; i < r; ++i)
      if (rows[i].coeffs.get(free)) k.set(pivot_cols[i], true);
    result.kernel.push_back(std::move(k));
  }
  return result;
}

std::optional<BitVector> solve_min_weight(const BitMatrix& a, const BitVector& b, std::size_t max_free_bits) {
  auto result = solve(a, b);
  if (!result.solution) return std::nullopt;
  const std::size_t free = result.kernel.size();
  if (free > max_free_bits) return std::nullopt;
  BitVector best = *result.solution;
  BitVector current = best;
  // Gray-code walk over the coset.
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << free); ++step) {
    current ^= result.kernel[static_cast<std::size_t>(std::countr_zero(step))];
    if (current.popcount() < best.popcount()) best = current;
  }
  return best;
}

}  // namespace burnside::gf2
