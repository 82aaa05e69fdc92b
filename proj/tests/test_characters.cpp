#include <doctest.h>

#include <cmath>

#include "burnside/characters.hpp"
#include "burnside/gset.hpp"
#include "support.hpp"

using namespace burnside;

namespace {

using Ints = std::vector<std::int64_t>;

std::vector<std::size_t> class_sizes(const ConjugacyClasses& c) {
  std::vector<std::size_t> out;
  for (const auto& e : c.classes()) out.push_back(e.size);
  return out;
}

bool close(std::complex<double> a, double re, double im = 0.0) {
  return std::abs(a - std::complex<double>(re, im)) < 1e-9;
}

std::vector<std::vector<std::int64_t>> d_rows(const FixedDimMatrix& d) {
  std::vector<std::vector<std::int64_t>> rows(d.rows(), Ints(d.cols()));
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t k = 0; k < d.cols(); ++k) rows[i][k] = d(i, k);
  return rows;
}

}  // namespace

TEST_CASE("element classes") {
  auto c6 = catalog_group("cyclic:6");
  CHECK(ConjugacyClasses(c6).size() == 6);
  CHECK(class_sizes(ConjugacyClasses(catalog_group("symmetric:3"))) == std::vector<std::size_t>{1, 3, 2});
  CHECK(class_sizes(ConjugacyClasses(catalog_group("quaternion:8"))) == std::vector<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("Dixon prime") {
  CHECK(dixon_prime(6, 6) == 7);
  CHECK(dixon_prime(2, 2) == 3);
  CHECK(dixon_prime(24, 12) == 13);
  CHECK(dixon_prime(8, 4) == 13);
}

TEST_CASE("character table examples") {
  auto trivial = character_table(catalog_group("cyclic:1"));
  REQUIRE(trivial->size() == 1);
  CHECK(close((*trivial)[0][0], 1));

  auto c2 = character_table(catalog_group("cyclic:2"));
  REQUIRE(c2->size() == 2);
  CHECK(close((*c2)[0][1], 1));
  CHECK(close((*c2)[1][1], -1));

  auto s3 = character_table(catalog_group("symmetric:3"));
  CHECK(s3->degrees() == Ints{1, 1, 2});
  CHECK(close((*s3)[2][0], 2));
  CHECK(close((*s3)[2][1], 0));
  CHECK(close((*s3)[2][2], -1));
  CHECK(close((*s3)[1][1], -1));
}

TEST_CASE("character table cap") {
  CHECK_THROWS(character_table(catalog_group("symmetric:4"), 10));
}

TEST_CASE("Frobenius-Schur indicators") {
  auto s3 = character_table(catalog_group("symmetric:3"));
  CHECK(frobenius_schur(*s3, 0) == 1);
  CHECK(frobenius_schur(*s3, 2) == 1);
  auto c3 = character_table(catalog_group("cyclic:3"));
  CHECK(frobenius_schur(*c3, 1) == 0);
  CHECK(frobenius_schur(*c3, 2) == 0);
  auto q8 = character_table(catalog_group("quaternion:8"));
  CHECK(frobenius_schur(*q8, 4) == -1);
}

TEST_CASE("real irreducible examples") {
  auto dims = [](const RealIrrepSet& s) {
    Ints out;
    for (const auto& v : s.irreps()) out.push_back(v.real_dimension);
    return out;
  };
  auto s3 = real_irreducibles(character_table(catalog_group("symmetric:3")));
  CHECK(dims(*s3) == Ints{1, 1, 2});
  for (const auto& v : s3->irreps()) CHECK(v.type == RealType::Orthogonal);

  auto c3 = real_irreducibles(character_table(catalog_group("cyclic:3")));
  CHECK(dims(*c3) == Ints{1, 2});
  CHECK((*c3)[1].type == RealType::Complex);
  CHECK((*c3)[1].provenance.size() == 2);

  auto q8 = real_irreducibles(character_table(catalog_group("quaternion:8")));
  CHECK(dims(*q8) == Ints{1, 1, 1, 1, 4});
  CHECK((*q8)[4].type == RealType::Quaternionic);
}

TEST_CASE("fixed dimensions and D") {
  Pipeline s3(catalog_group("symmetric:3"));
  const auto& t = *s3.classes();
  const auto& irreps = *s3.irreps();
  const auto& conj = irreps.table()->element_classes();
  for (const auto& c : t.classes()) CHECK(fixed_dim(conj, irreps[0].real_character, c.representative) == 1);
  CHECK(fixed_dim(conj, irreps[2].real_character, t[1].representative) == 1);
  CHECK(fixed_dim(conj, irreps[2].real_character, t[2].representative) == 0);
  CHECK(d_rows(*s3.fixed_dims()) == std::vector<Ints>{{1, 1, 2}, {1, 0, 1}, {1, 1, 0}, {1, 0, 0}});

  Pipeline trivial(catalog_group("cyclic:1"));
  CHECK(d_rows(*trivial.fixed_dims()) == std::vector<Ints>{{1}});
  Pipeline c3(catalog_group("cyclic:3"));
  CHECK(d_rows(*c3.fixed_dims()) == std::vector<Ints>{{1, 2}, {1, 0}});
}

TEST_CASE("permutation character decomposition examples") {
  Pipeline s3(catalog_group("symmetric:3"));
  const auto c = perm_character_decomposition(s3.classes(), *s3.characters());
  auto column = [&](std::size_t j) {
    Ints out;
    for (const auto& row : c) out.push_back(row[j]);
    return out;
  };
  CHECK(column(3) == Ints{1, 0, 0});
  CHECK(column(1) == Ints{1, 0, 1});
  CHECK(column(0) == Ints{1, 1, 2});
  const auto& conj = s3.characters()->element_classes();
  CHECK(permutation_character(conj, (*s3.classes())[1].representative) == Ints{3, 1, 0});
}

TEST_CASE("character layer gates on the catalog") {
  for (const auto& g : testing::catalog_groups(24)) {
    CAPTURE(g->name());
    Pipeline p(g);
    const auto& table = *p.characters();
    const auto& conj = table.element_classes();
    CHECK(table.orthogonality_residual() < kOrthogonalityTolerance);
    CHECK(table.size() == conj.size());
    std::int64_t squares = 0;
    for (auto d : table.degrees()) squares += d * d;
    CHECK(squares == static_cast<std::int64_t>(g->order()));

    // Regular character: sum of deg * chi vanishes off the identity.
    for (std::size_t j = 0; j < conj.size(); ++j) {
      std::complex<double> reg = 0;
      for (std::size_t k = 0; k < table.size(); ++k) reg += static_cast<double>(table.degrees()[k]) * table[k][j];
      CHECK(std::abs(reg - (j == 0 ? static_cast<double>(g->order()) : 0.0)) < 1e-8);
    }

    for (std::size_t k = 0; k < table.size(); ++k) {
      const auto fs = frobenius_schur_value(table, k);
      CHECK(std::abs(fs - std::round(fs.real())) < kIntegerTolerance);
    }
    CHECK(perm_character_residual(p.classes(), table) < kIntegerTolerance);

    const auto& irreps = *p.irreps();
    const auto& d = *p.fixed_dims();
    const auto& t = *p.classes();
    std::int64_t real_total = 0;
    for (std::size_t k = 0; k < irreps.size(); ++k) {
      const auto& v = irreps[k];
      real_total += v.real_dimension * (v.type == RealType::Orthogonal ? 1 : 0);
      CHECK(d(0, k) == v.real_dimension);
      CHECK(d(t.size() - 1, k) == (k == 0 ? 1 : 0));
      for (std::size_t i = 0; i < t.size(); ++i) {
        const double x = fixed_dim_value(conj, v.real_character, t[i].representative);
        CHECK(std::abs(x - std::round(x)) < kIntegerTolerance);
        if (v.type != RealType::Orthogonal) CHECK(d(i, k) % 2 == 0);
      }
    }
    CHECK(real_total >= 1);
  }
}

TEST_CASE("orbit-count identity for permutation modules") {
  for (const auto& spec : {"symmetric:3", "dihedral:4", "quaternion:8", "alternating:4", "dihedral:6"}) {
    CAPTURE(spec);
    Pipeline p(load_group(spec));
    const auto& table = *p.characters();
    const auto& t = *p.classes();
    const auto c = perm_character_decomposition(p.classes(), table);
    for (std::size_t j = 0; j < t.size(); ++j) {
      const auto x = coset_space(p.group(), t[j].representative);
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::int64_t total = 0;
        for (std::size_t k = 0; k < table.size(); ++k)
          total += c[k][j] * complex_fixed_dim(table, k, t[i].representative);
        CHECK(total == static_cast<std::int64_t>(orbit_count(x, t[i].representative)));
      }
    }
  }
}
