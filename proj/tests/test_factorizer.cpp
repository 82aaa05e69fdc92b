#include <doctest.h>

#include <cmath>

#include "burnside/error.hpp"
#include "burnside/factorizer.hpp"
#include "burnside/gf2.hpp"
#include "support.hpp"

using namespace burnside;

namespace {

using Ints = std::vector<std::int64_t>;

gf2::BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  gf2::BitMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a.set(i, j, rng() & 1);
  return a;
}

/// Rank by exhaustive span size: 2^rank = number of distinct A x.
std::size_t rank_by_span(const gf2::BitMatrix& a) {
  std::set<std::vector<std::int64_t>> images;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.cols()); ++x) {
    gf2::BitVector v(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) v.set(j, (x >> j) & 1);
    images.insert(a.multiply(v).to_ints());
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < images.size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("bit vectors") {
  auto v = gf2::BitVector::from_ints({1, 0, 3, 2, -1});
  CHECK(v.to_ints() == Ints{1, 0, 1, 0, 1});
  CHECK(v.popcount() == 3);
  gf2::BitVector w(70);
  w.set(69, true);
  w.set(3, true);
  CHECK(w.popcount() == 2);
  CHECK_FALSE(w.dot(w));
  w.flip(3);
  CHECK(w.dot(w));
  CHECK_FALSE(w.dot(gf2::BitVector(70)));
  CHECK(w.any());
}

TEST_CASE("GF(2) rank and solving against exhaustive search") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    const auto a = random_matrix(rows, cols, rng);
    CHECK(gf2::rank(a) == rank_by_span(a));
    gf2::BitVector b(rows);
    for (std::size_t i = 0; i < rows; ++i) b.set(i, rng() & 1);
    const auto s = gf2::solve(a, b);
    bool solvable = false;
    std::size_t best = cols + 1;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
      gf2::BitVector v(cols);
      for (std::size_t j = 0; j < cols; ++j) v.set(j, (x >> j) & 1);
      if (a.multiply(v) == b) {
        solvable = true;
        best = std::min(best, v.popcount());
      }
    }
    REQUIRE(s.solution.has_value() == solvable);
    if (solvable) {
      CHECK(a.multiply(*s.solution) == b);
      const auto light = gf2::solve_min_weight(a, b);
      REQUIRE(light.has_value());
      CHECK(a.multiply(*light) == b);
      CHECK(light->popcount() == best);
      for (const auto& k : s.kernel) CHECK_FALSE(a.multiply(k).any());
      CHECK(s.kernel.size() == cols - s.rank);
    } else {
      REQUIRE(s.certificate.has_value());
      // y^T A = 0 and y^T b = 1.
      for (std::size_t j = 0; j < cols; ++j) CHECK_FALSE(s.certificate->dot(a.column(j)));
      CHECK(s.certificate->dot(b));
    }
  }
}

TEST_CASE("wide systems use multi-word rows") {
  std::mt19937_64 rng(17);
  gf2::BitMatrix a(80, 130);
  for (std::size_t i = 0; i < 80; ++i) a.set(i, i + 40, true);  // full row rank
  for (int k = 0; k < 500; ++k) a.set(rng() % 80, rng() % 40, true);
  CHECK(gf2::rank(a) == 80);
  gf2::BitVector b(80);
  for (std::size_t i = 0; i < 80; ++i) b.set(i, rng() & 1);
  const auto s = gf2::solve(a, b);
  REQUIRE(s.solution.has_value());
  CHECK(a.multiply(*s.solution) == b);
}

TEST_CASE("parity vectors") {
  Pipeline s3(catalog_group("symmetric:3"));
  const auto& psi = *s3.marks();
  const auto one = BurnsideElement::identity(s3.classes());
  CHECK(parity_vector(one, psi).bits == Ints{0, 0, 0, 0});
  CHECK(parity_vector(-one, psi).bits == Ints{1, 1, 1, 1});
  CHECK(parity_vector(BurnsideElement(s3.classes(), {0, 0, -1, 1}), psi).bits == Ints{1, 0, 1, 0});
  try {
    parity_vector(BurnsideElement::generator(s3.classes(), 1), psi);
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
}

TEST_CASE("parity systems of S3") {
  Pipeline s3(catalog_group("symmetric:3"));
  const auto& d = *s3.fixed_dims();
  CHECK(solve_parity(d, {{0, 0, 0, 0}}).mu == Ints{0, 0, 0});
  CHECK(solve_parity(d, {{1, 0, 1, 0}}).mu == Ints{0, 1, 0});
  CHECK(solve_parity(d, {{1, 1, 1, 0}}).mu == Ints{0, 1, 1});
  CHECK(rank_mod2(d) == 3);
}

TEST_CASE("factorization examples") {
  Pipeline s3(catalog_group("symmetric:3"));
  const auto ctx = factor_context(s3);
  const auto one = BurnsideElement::identity(s3.classes());
  auto neg = factor_unit(-one, ctx);
  CHECK(neg.mu == Ints{1, 0, 0});
  CHECK(neg.verified);
  auto std_deg = factor_unit(BurnsideElement(s3.classes(), {1, -2, 0, 1}), ctx);
  CHECK(std_deg.mu == Ints{0, 0, 1});
  CHECK(std_deg.verified);
  auto mixed = factor_unit(BurnsideElement(s3.classes(), {1, -2, -1, 1}), ctx);
  CHECK(mixed.mu == Ints{0, 1, 1});
  CHECK(mixed.verified);
  CHECK(factor_unit(BurnsideElement(s3.classes(), {1, -2, -1, 1}), ctx).mu == mixed.mu);
}

TEST_CASE("unfactorable units carry a certificate") {
  Pipeline s4(catalog_group("symmetric:4"));
  const auto ctx = factor_context(s4);
  bool found = false;
  for (const auto& u : enumerate_units(*s4.marks())) {
    const auto delta = parity_vector(u, *s4.marks());
    const auto sol = solve_parity(ctx.d, delta);
    if (sol.mu) continue;
    found = true;
    try {
      factor_unit(u, ctx);
      FAIL("expected NoSolution");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoSolution);
    }
    break;
  }
  CHECK(found);
}

TEST_CASE("verification examples") {
  Pipeline c3(catalog_group("cyclic:3"));
  auto r = verify_generation(c3);
  CHECK(r.unit_count == 2);
  CHECK(r.status == VerificationStatus::Success);
  for (const auto& res : r.results) CHECK(res.verified);

  Pipeline s3(catalog_group("symmetric:3"));
  r = verify_generation(s3);
  CHECK(r.unit_count == 8);
  CHECK(r.rank_d_mod2 == 3);
  CHECK(r.status == VerificationStatus::Success);

  Pipeline c2(catalog_group("cyclic:2"));
  r = verify_generation(c2);
  CHECK(r.unit_count == 4);
  CHECK(r.rank_d_mod2 == 2);
  CHECK(r.status == VerificationStatus::Success);
}

TEST_CASE("S4 has more units than products of basic degrees") {
  // Brute-force unit count exceeds 2^r, so generation by basic degrees fails.
  Pipeline s4(catalog_group("symmetric:4"));
  const auto r = verify_generation(s4);
  CHECK(r.unit_count == testing::unit_count_cramer(testing::as_rows(*s4.marks())));
  CHECK(r.unit_count == 64);
  CHECK(r.r == 5);
  CHECK(r.unit_count > (std::size_t{1} << r.r));
  CHECK(r.status == VerificationStatus::Counterexample);
  CHECK_FALSE(r.parities_in_column_space);
}

TEST_CASE("verification report properties on the catalog") {
  for (const auto& g : testing::catalog_groups(16)) {
    CAPTURE(g->name());
    Pipeline p(g, testing::wide_caps());
    const auto report = verify_generation(p);
    CHECK(report.unit_count == (std::size_t{1} << report.parity_rank));
    CHECK(report.rank_d_mod2 <= report.r);
    const auto& d = *p.fixed_dims();
    bool all_verified = true;
    for (const auto& res : report.results) {
      all_verified = all_verified && res.verified;
      CHECK(res.mu.has_value() != res.certificate.has_value());
      if (!res.mu) continue;
      const auto ghost = ghost_degree_linear(*res.mu, d).values();
      for (std::size_t i = 0; i < ghost.size(); ++i) CHECK(ghost[i] == (res.delta[i] ? -1 : 1));
    }
    CHECK((report.status == VerificationStatus::Success) == all_verified);
    CHECK(report.parities_in_column_space == all_verified);
    if (report.status == VerificationStatus::Success) CHECK(report.parity_rank <= report.rank_d_mod2);
  }
}
