#include "burnside/polynomial.hpp"

#include <string>

#include "burnside/error.hpp"

namespace burnside {

namespace {

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::size_t variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) fail(ErrorKind::MalformedInput, "empty rational \"" + std::string(text) + "\"");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) fail(ErrorKind::MalformedInput, "bad rational \"" + std::string(text) + "\"");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') fail(ErrorKind::MalformedInput, "bad rational \"" + std::string(text) + "\"");
    boost::multiprecision::cpp_int v(std::string(part.substr(part[0] == '+' ? 1 : 0)));
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::MalformedInput, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(parse_int(text.substr(0, slash)), den);
}

RationalMatrix::RationalMatrix(std::size_t n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) fail(ErrorKind::MalformedInput, "matrix is not square");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Polynomial characteristic_polynomial(const RationalMatrix& a) {
  const std::size_t n = a.size();
  Polynomial c(n + 1);
  c[n] = 1;
  RationalMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const RationalMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  if (p.size() <= 1) return {};
  Polynomial d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  trim(d);
  return d;
}

Polynomial remainder(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  trim(r);
  Polynomial d = b;
  trim(d);
  if (d.empty()) fail(ErrorKind::Internal, "polynomial division by zero");
  while (r.size() >= d.size()) {
    const Rational factor = r.back() / d.back();
    const std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= factor * d[i];
    r.pop_back();
    trim(r);
  }
  return r;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  Polynomial p0 = p;
  trim(p0);
  if (p0.empty()) return chain;
  chain.push_back(p0);
  Polynomial p1 = derivative(p0);
  if (p1.empty()) return chain;
  chain.push_back(p1);
  for (;;) {
    Polynomial r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  return chain;
}

std::size_t count_distinct_negative_roots(const Polynomial& p) {
  const auto chain = sturm_chain(p);
  if (chain.empty()) fail(ErrorKind::Internal, "zero polynomial has no Sturm chain");
  if (chain.front()[0] == 0) fail(ErrorKind::SingularBlock, "zero is a root");
  std::vector<int> at_minus_infinity, at_zero;
  for (const auto& q : chain) {
    const int lead = sign(q.back());
    at_minus_infinity.push_back(((q.size() - 1) % 2 == 0) ? lead : -lead);
    at_zero.push_back(sign(q[0]));
  }
  return variations(at_minus_infinity) - variations(at_zero);
}

std::size_t count_negative_roots(const Polynomial& p) {
  const auto chain = sturm_chain(p);
  if (chain.empty()) fail(ErrorKind::Internal, "zero polynomial has no Sturm chain");
  std::size_t count = count_distinct_negative_roots(chain.front());
  // The last chain element is gcd(p, p') up to a constant; its roots are the
  // repeated roots of p with multiplicity lowered by one.
  if (chain.size() >= 2 && chain.back().size() > 1) count += count_negative_roots(chain.back());
  return count;
}

}  // namespace burnside
