#pragma once

#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace burnside {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p", or "-p/q".
Rational parse_rational(std::string_view text);

/// Dense square matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  RationalMatrix(std::size_t n, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& d);

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

/// Polynomial with coefficients in ascending degree; the zero polynomial is empty.
using Polynomial = std::vector<Rational>;

/// det(x I - A) by the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const RationalMatrix& a);

Rational evaluate(const Polynomial& p, const Rational& x);
Polynomial derivative(const Polynomial& p);
/// Remainder of a divided by b (b nonzero).
Polynomial remainder(const Polynomial& a, const Polynomial& b);

/// p_0 = p, p_1 = p', p_{i+1} = -rem(p_{i-1}, p_i) until the remainder vanishes.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Number of distinct real roots of p that are < 0. Requires p(0) != 0.
std::size_t count_distinct_negative_roots(const Polynomial& p);

/// Number of real roots of p that are < 0, counted with multiplicity.
/// Requires p(0) != 0.
std::size_t count_negative_roots(const Polynomial& p);

}  // namespace burnside
