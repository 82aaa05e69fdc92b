// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "burnside/cli.hpp"
#include "burnside/error.hpp"
#include "burnside/factorizer.hpp"
#include "burnside/gset.hpp"
#include "support.hpp"

using namespace burnside;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Criterion = std::function<void(Outcome&)>;

// 1. S3 end to end.
void s3_end_to_end(Outcome& out) {
  const auto start = Clock::now();
  Pipeline p(catalog_group("symmetric:3"));
  const auto& g = *p.group();
  const auto& t = *p.classes();
  const auto& psi = *p.marks();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      out.require(psi(i, j) == testing::mark_bruteforce(g, testing::perm_set(g, t[i].representative.elements()),
                                                        testing::perm_set(g, t[j].representative.elements())),
                  "mark mismatch");
  const auto report = verify_generation(p);
  out.require(report.unit_count == 8, "unit count " + std::to_string(report.unit_count));
  out.require(report.r == 3, "basic degree count");
  for (const auto& r : report.results) out.require(r.mu && r.verified, "unit not factored");
  const double secs = seconds_since(start);
  out.require(secs < 1.0, "runtime " + std::to_string(secs));
  out.detail << "units=" << report.unit_count << " runtime=" << secs << "s";
}

// 2. Odd-order groups.
void odd_order(Outcome& out) {
  double worst = 0;
  for (const auto& spec : {"cyclic:3", "cyclic:5", "cyclic:7", "cyclic:9", "product:cyclic:3*cyclic:3"}) {
    const auto start = Clock::now();
    Pipeline p(load_group(spec));
    const auto report = verify_generation(p);
    const double secs = seconds_since(start);
    worst = std::max(worst, secs);
    out.require(report.unit_count == 2, std::string(spec) + " units " + std::to_string(report.unit_count));
    for (const auto& r : report.results) out.require(r.verified, std::string(spec) + " unfactored unit");
    out.require(secs < 1.0, std::string(spec) + " runtime");
  }
  out.detail << "5 groups, slowest " << worst << "s";
}

// 3. Algorithm-1 tensor rows against G-set orbit censuses.
void oracle_equivalence(Outcome& out) {
  std::size_t groups = 0, pairs = 0, mismatches = 0;
  for (const auto& g : testing::catalog_groups(16)) {
    Pipeline p(g);
    const auto& t = p.classes();
    const auto& m = *p.tensor();
    std::vector<GSet> cosets;
    for (const auto& c : t->classes()) cosets.push_back(coset_space(g, c.representative));
    for (std::size_t i = 0; i < t->size(); ++i)
      for (std::size_t j = 0; j < t->size(); ++j) {
        const auto census = burnside_linearization(product(cosets[i], cosets[j]), t).coeffs();
        const auto row = m.row(i, j);
        ++pairs;
        if (!std::equal(row.begin(), row.end(), census.begin(), census.end())) ++mismatches;
      }
    ++groups;
  }
  out.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  out.detail << groups << " groups, " << pairs << " pairs, " << mismatches << " mismatches";
}

// 4. Mark homomorphism.
void mark_homomorphism(Outcome& out) {
  std::mt19937_64 rng(4);
  std::size_t groups = 0, checks = 0;
  for (const auto& g : testing::catalog_groups(24)) {
    Pipeline p(g);
    const auto& psi = *p.marks();
    const auto& m = *p.tensor();
    for (int k = 0; k < 100; ++k) {
      const auto a = testing::random_element(p.classes(), rng);
      const auto b = testing::random_element(p.classes(), rng);
      out.require(ghost_map(psi, multiply(a, b, m)) == ghost_map(psi, a) * ghost_map(psi, b), g->name());
      ++checks;
    }
    ++groups;
  }
  out.detail << groups << " groups, " << checks << " pairs";
}

// 5. Involutions and 2-power unit counts.
void involutions(Outcome& out) {
  std::size_t groups = 0, units = 0;
  for (const auto& g : testing::catalog_groups(24)) {
    Pipeline p(g, testing::wide_caps());
    const auto one = BurnsideElement::identity(p.classes());
    const auto& m = *p.tensor();
    const auto list = enumerate_units(*p.marks(), p.caps().max_classes);
    out.require(testing::is_power_of_two(list.size()), g->name() + " unit count " + std::to_string(list.size()));
    for (const auto& u : list) out.require(multiply(u, u, m) == one, g->name() + " unit not an involution");
    for (const auto& b : p.basic_degrees())
      out.require(multiply(b.element, b.element, m) == one, g->name() + " basic degree not an involution");
    units += list.size();
    ++groups;
  }
  out.detail << groups << " groups, " << units << " units";
}

// 6. Recurrence and ghost-preimage basic degrees agree; all divisions exact.
void two_path(Outcome& out) {
  std::size_t groups = 0, degrees = 0;
  for (const auto& g : testing::catalog_groups(24)) {
    try {
      Pipeline p(g);
      const auto& d = *p.fixed_dims();
      const auto& psi = *p.marks();
      const auto& m = *p.tensor();
      for (std::size_t k = 0; k < d.cols(); ++k) {
        const auto rec = basic_degree(k, d, psi, m);
        std::vector<std::int64_t> signs(d.rows());
        for (std::size_t i = 0; i < d.rows(); ++i) signs[i] = d(i, k) % 2 ? -1 : 1;
        const auto pre = ghost_preimage(psi, GhostVector(p.classes(), signs));
        out.require(pre.integral() && *pre.element == rec.element, g->name() + " two-path mismatch");
        ++degrees;
      }
    } catch (const Error& e) {
      out.require(false, g->name() + ": " + e.what());
    }
    ++groups;
  }
  out.detail << groups << " groups, " << degrees << " basic degrees";
}

// 7. Free Weyl action and orbit-space bijection.
void appendix_oracles(Outcome& out) {
  std::size_t sets = 0;
  for (const auto& g : testing::catalog_groups(16)) {
    const auto t = subgroup_classes(g);
    const auto n = t->size();
    // Normalizers by direct conjugation.
    std::vector<std::vector<Element>> normalizers(n);
    for (std::size_t i = 0; i < n; ++i)
      for (Element x = 0; x < g->order(); ++x)
        if (conjugate_subgroup(*g, (*t)[i].representative, x) == (*t)[i].representative) normalizers[i].push_back(x);

    std::vector<GSet> base;
    for (const auto& c : t->classes()) base.push_back(coset_space(g, c.representative));
    auto check = [&](const GSet& x) {
      std::vector<std::size_t> stab_class(x.size());
      std::vector<ElementSet> stab(x.size());
      for (std::size_t p = 0; p < x.size(); ++p) {
        auto s = stabilizer(x, p);
        stab_class[p] = t->class_of(s);
        stab[p] = s.members();
      }
      for (std::size_t i = 0; i < n; ++i) {
        const auto& h = (*t)[i];
        std::size_t conj_points = 0, exact = 0;
        std::vector<bool> seen(x.size(), false);
        for (std::size_t p = 0; p < x.size(); ++p) {
          conj_points += stab_class[p] == i;
          if (!(stab[p] == h.representative.members())) continue;
          ++exact;
          if (seen[p]) continue;
          std::size_t orbit = 0;
          for (auto e : normalizers[i]) {
            const auto q = x.image(e, p);
            if (!seen[q]) {
              seen[q] = true;
              ++orbit;
            }
          }
          out.require(orbit == h.weyl_order, g->name() + " Weyl orbit size");
        }
        const std::size_t index = g->order() / h.representative.order();
        out.require(conj_points % index == 0 && exact % h.weyl_order == 0 &&
                        conj_points / index == exact / h.weyl_order,
                    g->name() + " orbit-space bijection");
      }
      ++sets;
    };
    for (std::size_t a = 0; a < n; ++a) {
      check(base[a]);
      for (std::size_t b = a; b < n; ++b) check(product(base[a], base[b]));
    }
  }
  out.detail << sets << " G-sets";
}

// 8. Character-layer numerical gates.
void character_gates(Outcome& out) {
  double worst_orth = 0, worst_int = 0;
  std::size_t groups = 0;
  for (const auto& g : testing::catalog_groups(24)) {
    try {
      Pipeline p(g);
      const auto& table = *p.characters();
      const auto& conj = table.element_classes();
      const double orth = table.orthogonality_residual();
      worst_orth = std::max(worst_orth, orth);
      out.require(orth < 1e-8, g->name() + " orthogonality");
      std::int64_t squares = 0;
      for (auto d : table.degrees()) squares += d * d;
      out.require(squares == static_cast<std::int64_t>(g->order()), g->name() + " sum of squared degrees");
      for (std::size_t k = 0; k < table.size(); ++k) {
        const auto fs = frobenius_schur_value(table, k);
        worst_int = std::max(worst_int, std::abs(fs - std::round(fs.real())));
      }
      const auto& irreps = *p.irreps();
      for (const auto& v : irreps.irreps())
        for (const auto& c : p.classes()->classes()) {
          const double x = fixed_dim_value(conj, v.real_character, c.representative);
          worst_int = std::max(worst_int, std::abs(x - std::round(x)));
        }
      worst_int = std::max(worst_int, perm_character_residual(p.classes(), table));
    } catch (const Error& e) {
      out.require(false, g->name() + ": " + e.what());
    }
    ++groups;
  }
  out.require(worst_int < 1e-6, "integer residual " + std::to_string(worst_int));
  out.detail << groups << " groups, max orthogonality residual " << worst_orth << ", max integer residual "
             << worst_int;
}

// 9. verify completes with a structured report.
void verify_reports(Outcome& out) {
  std::size_t groups = 0, counterexamples = 0;
  double worst = 0;
  std::vector<std::string> flagged;
  for (const auto& spec : testing::catalog_specs()) {
    cli::RunConfig config;
    config.group_spec = spec;
    config.command = cli::Command::Verify;
    config.format = cli::Format::Json;
    config.caps = testing::wide_caps();
    const auto start = Clock::now();
    const auto o = cli::run(config);
    const double secs = seconds_since(start);
    worst = std::max(worst, secs);
    out.require(secs < 10.0, spec + " runtime " + std::to_string(secs));
    out.require(o.exit_code == cli::kExitOk || o.exit_code == cli::kExitCounterexample, spec + ": " + o.error);
    if (o.document.empty()) continue;
    const auto j = nlohmann::json::parse(o.document);
    for (const auto* key : {"group", "N", "r", "units", "rank_D_mod2", "results", "status"})
      out.require(j.contains(key), spec + " missing " + key);
    const bool counterexample = j["status"] == "COUNTEREXAMPLE";
    out.require(counterexample == (o.exit_code == cli::kExitCounterexample), spec + " exit code");
    bool unsolved = false;
    for (const auto& r : j["results"])
      if (r["mu"].is_null()) {
        unsolved = true;
        out.require(r.contains("certificate"), spec + " NoSolution without certificate");
      }
    out.require(unsolved == counterexample, spec + " status does not match results");
    if (counterexample) {
      ++counterexamples;
      flagged.push_back(spec);
    }
    ++groups;
  }
  out.detail << groups << " groups, slowest " << worst << "s, " << counterexamples << " COUNTEREXAMPLE";
  if (!flagged.empty()) {
    out.detail << " (";
    for (std::size_t i = 0; i < flagged.size(); ++i) out.detail << (i ? ", " : "") << flagged[i];
    out.detail << ")";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"S3 end-to-end", s3_end_to_end},
      {"odd-order groups have units {+1,-1}", odd_order},
      {"tensor rows equal orbit censuses (order <= 16)", oracle_equivalence},
      {"mark homomorphism (order <= 24)", mark_homomorphism},
      {"units and basic degrees are involutions", involutions},
      {"two-path basic degrees, exact divisions", two_path},
      {"free Weyl action and orbit-space bijection (order <= 16)", appendix_oracles},
      {"character-layer gates", character_gates},
      {"verify completes with a structured report (order <= 24)", verify_reports},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = Clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << out.detail.str() << " [" << secs << "s]";
    for (const auto& f : out.failures) std::cout << "\n    " << f;
    std::cout << std::endl;
    failed += !out.pass;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
