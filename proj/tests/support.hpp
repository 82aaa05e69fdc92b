#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/group.hpp"
#include "burnside/pipeline.hpp"

namespace testing {

/// Catalog groups of order <= 24, base families first, then direct products.
inline const std::vector<std::string>& catalog_specs() {
  static const std::vector<std::string> specs = [] {
    std::vector<std::string> s;
    for (int n = 1; n <= 24; ++n) s.push_back("cyclic:" + std::to_string(n));
    for (int n = 2; n <= 12; ++n) s.push_back("dihedral:" + std::to_string(n));
    for (int n = 2; n <= 4; ++n) s.push_back("symmetric:" + std::to_string(n));
    s.insert(s.end(), {"alternating:3", "alternating:4", "quaternion:8"});
    s.insert(s.end(), {
                          "product:cyclic:2*cyclic:4",
                          "product:cyclic:2*product:cyclic:2*cyclic:2",
                          "product:cyclic:3*cyclic:3",
                          "product:cyclic:2*symmetric:3",
                          "product:cyclic:2*cyclic:6",
                          "product:cyclic:4*cyclic:4",
                          "product:cyclic:2*cyclic:8",
                          "product:cyclic:2*dihedral:4",
                          "product:cyclic:2*quaternion:8",
                          "product:cyclic:2*product:cyclic:2*product:cyclic:2*cyclic:2",
                          "product:cyclic:3*symmetric:3",
                          "product:cyclic:3*cyclic:6",
                          "product:cyclic:2*dihedral:5",
                          "product:cyclic:2*alternating:4",
                          "product:cyclic:2*dihedral:6",
                          "product:cyclic:3*quaternion:8",
                          "product:cyclic:4*symmetric:3",
                          "product:cyclic:2*cyclic:12",
                          "product:cyclic:2*product:cyclic:2*cyclic:6",
                          "product:cyclic:3*dihedral:4",
                      });
    return s;
  }();
  return specs;
}

inline std::vector<burnside::GroupPtr> catalog_groups(std::size_t max_order) {
  std::vector<burnside::GroupPtr> out;
  for (const auto& spec : catalog_specs()) {
    auto g = burnside::load_group(spec);
    if (g->order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

/// Caps large enough for every catalog group of order <= 24.
inline burnside::PipelineCaps wide_caps() {
  burnside::PipelineCaps caps;
  caps.max_classes = 100;
  return caps;
}

inline burnside::BurnsideElement random_element(const burnside::ClassTablePtr& basis, std::mt19937_64& rng,
                                                int bound = 3) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<std::int64_t> c(basis->size());
  for (auto& x : c) x = dist(rng);
  return burnside::BurnsideElement(basis, std::move(c));
}

// Brute-force oracles on raw permutation tuples. They share no code with the
// library beyond reading the group's permutations.

using Perm = std::vector<std::uint32_t>;
using PermSet = std::set<Perm>;

inline Perm compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) r[x] = f[g[x]];
  return r;
}

inline Perm invert(const Perm& f) {
  Perm r(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) r[f[x]] = static_cast<std::uint32_t>(x);
  return r;
}

inline PermSet close(std::size_t degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  PermSet s{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        auto c = compose(g, a);
        if (s.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return s;
}

inline PermSet perm_set(const burnside::FiniteGroup& g, const std::vector<burnside::Element>& elements) {
  PermSet s;
  for (auto e : elements) s.insert(g.permutation(e));
  return s;
}

inline PermSet conjugate(const PermSet& h, const Perm& g) {
  PermSet out;
  const auto gi = invert(g);
  for (const auto& x : h) out.insert(compose(compose(g, x), gi));
  return out;
}

/// Every subgroup, generated from all subsets of at most four elements.
inline std::set<PermSet> all_subgroups(const burnside::FiniteGroup& g) {
  const auto& perms = g.permutation_images();
  const std::size_t n = perms.size(), d = g.domain_size();
  std::set<PermSet> out;
  std::vector<Perm> gens;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    out.insert(close(d, gens));
    if (gens.size() == 4) return;
    for (std::size_t i = start; i < n; ++i) {
      gens.push_back(perms[i]);
      self(self, i + 1);
      gens.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Conjugacy classes of subgroups, counted by brute force.
inline std::size_t subgroup_class_count(const burnside::FiniteGroup& g, const std::set<PermSet>& subs) {
  std::set<PermSet> seen;
  std::size_t classes = 0;
  for (const auto& h : subs) {
    if (seen.count(h)) continue;
    ++classes;
    for (const auto& x : g.permutation_images()) seen.insert(conjugate(h, x));
  }
  return classes;
}

/// Number of left cosets xK fixed by every element of H, by listing cosets.
inline std::int64_t mark_bruteforce(const burnside::FiniteGroup& g, const PermSet& h, const PermSet& k) {
  std::set<PermSet> cosets;
  for (const auto& x : g.permutation_images()) {
    PermSet c;
    for (const auto& y : k) c.insert(compose(x, y));
    cosets.insert(std::move(c));
  }
  std::int64_t fixed = 0;
  for (const auto& c : cosets) {
    bool all = true;
    for (const auto& a : h) {
      PermSet moved;
      for (const auto& y : c) moved.insert(compose(a, y));
      if (moved != c) {
        all = false;
        break;
      }
    }
    fixed += all;
  }
  return fixed;
}

/// Determinant by fraction-free Bareiss elimination.
inline __int128 bareiss_det(std::vector<std::vector<__int128>> a) {
  const std::size_t n = a.size();
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Units counted by Cramer's rule over all 2^N sign patterns: the pattern is
/// a unit iff every Cramer quotient is an integer.
inline std::size_t unit_count_cramer(const std::vector<std::vector<std::int64_t>>& psi) {
  const std::size_t n = psi.size();
  std::vector<std::vector<__int128>> base(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = psi[i][j];
  const auto det = bareiss_det(base);
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool integral = true;
    for (std::size_t j = 0; j < n && integral; ++j) {
      auto m = base;
      for (std::size_t i = 0; i < n; ++i) m[i][j] = ((mask >> i) & 1) ? -1 : 1;
      integral = bareiss_det(m) % det == 0;
    }
    count += integral;
  }
  return count;
}

inline std::vector<std::vector<std::int64_t>> as_rows(const burnside::MarksMatrix& psi) {
  std::vector<std::vector<std::int64_t>> rows(psi.size(), std::vector<std::int64_t>(psi.size()));
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) rows[i][j] = psi(i, j);
  return rows;
}

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace testing
