#include "burnside/factorizer.hpp"

#include <algorithm>
#include <sstream>

#include "burnside/error.hpp"
#include "burnside/gf2.hpp"

namespace burnside {

namespace {

gf2::BitMatrix d_mod2(const FixedDimMatrix& d) {
  gf2::BitMatrix a(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t k = 0; k < d.cols(); ++k) a.set(i, k, (d(i, k) & 1) != 0);
  return a;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

}  // namespace

ParityVector parity_vector(const BurnsideElement& unit, const MarksMatrix& psi) {
  const auto ghost = ghost_map(psi, unit);
  ParityVector delta;
  delta.bits.reserve(ghost.size());
  for (auto eps : ghost.values()) {
    if (eps != 1 && eps != -1) fail(ErrorKind::NotAUnit, "element " + join(unit.coeffs()) + " is not a unit");
    delta.bits.push_back(eps == 1 ? 0 : 1);
  }
  return delta;
}

ParitySolution solve_parity(const FixedDimMatrix& d, const ParityVector& delta, bool min_weight) {
  if (delta.bits.size() != d.rows()) fail(ErrorKind::GroupMismatch, "parity vector length mismatch");
  const auto a = d_mod2(d);
  const auto b = gf2::BitVector::from_ints(delta.bits);
  const auto solved = gf2::solve(a, b);
  ParitySolution out;
  out.rank = solved.rank;
  if (solved.certificate) {
    out.certificate = solved.certificate->to_ints();
    return out;
  }
  if (min_weight) {
    if (auto best = gf2::solve_min_weight(a, b)) {
      out.mu = best->to_ints();
      return out;
    }
  }
  out.mu = solved.solution->to_ints();
  return out;
}

std::size_t rank_mod2(const FixedDimMatrix& d) { return gf2::rank(d_mod2(d)); }

FactorContext factor_context(Pipeline& pipeline) {
  return {*pipeline.marks(), *pipeline.tensor(), *pipeline.fixed_dims(), pipeline.basic_degrees()};
}

Factorization factor_unit(const BurnsideElement& unit, const FactorContext& ctx, bool min_weight) {
  const auto delta = parity_vector(unit, ctx.psi);
  const auto solution = solve_parity(ctx.d, delta, min_weight);
  if (!solution.mu)
    fail(ErrorKind::NoSolution, "unit " + join(unit.coeffs()) + " with parity " + join(delta.bits) +
                                    " is not a product of basic degrees; certificate rows " +
                                    join(*solution.certificate));
  const auto product = degree_product(*solution.mu, ctx.basics, ctx.tensor);
  return {*solution.mu, unit, product == unit};
}

VerificationReport verify_generation(Pipeline& pipeline) {
  VerificationReport report;
  report.group = pipeline.group()->name();
  const auto& psi = *pipeline.marks();
  const auto ctx = factor_context(pipeline);
  report.n = psi.size();
  report.r = ctx.d.cols();
  report.rank_d_mod2 = rank_mod2(ctx.d);

  const auto units = enumerate_units(psi, pipeline.caps().max_classes);
  report.unit_count = units.size();

  // Parity vectors of all units, appended to D as extra columns.
  gf2::BitMatrix parities(report.n, units.size());
  gf2::BitMatrix augmented(report.n, report.r + units.size());
  for (std::size_t i = 0; i < report.n; ++i)
    for (std::size_t k = 0; k < report.r; ++k) augmented.set(i, k, (ctx.d(i, k) & 1) != 0);

  for (std::size_t u = 0; u < units.size(); ++u) {
    const auto delta = parity_vector(units[u], psi);
    for (std::size_t i = 0; i < report.n; ++i) {
      parities.set(i, u, delta.bits[i] != 0);
      augmented.set(i, report.r + u, delta.bits[i] != 0);
    }
    UnitResult result{units[u], delta.bits, std::nullopt, false, std::nullopt};
    const auto solution = solve_parity(ctx.d, delta);
    if (solution.mu) {
      result.mu = solution.mu;
      result.verified = degree_product(*solution.mu, ctx.basics, ctx.tensor) == units[u];
    } else {
      result.certificate = solution.certificate;
    }
    if (!result.verified) report.status = VerificationStatus::Counterexample;
    report.results.push_back(std::move(result));
  }

  report.parity_rank = gf2::rank(parities);
  if (report.parity_rank >= 64 || report.unit_count != (std::size_t{1} << report.parity_rank))
    fail(ErrorKind::Internal, "unit count " + std::to_string(report.unit_count) + " is not 2^" +
                                  std::to_string(report.parity_rank));
  report.parities_in_column_space = gf2::rank(augmented) == report.rank_d_mod2;
  return report;
}

}  // namespace burnside
