#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/characters.hpp"
#include "burnside/degree.hpp"
#include "burnside/pipeline.hpp"

namespace burnside {

/// delta_i = (1 - eps_i) / 2 for the ghost signs eps of a unit.
struct ParityVector {
  std::vector<std::int64_t> bits;
};

/// Throws NotAUnit when a ghost component is not +1 or -1.
ParityVector parity_vector(const BurnsideElement& unit, const MarksMatrix& psi);

struct ParitySolution {
  std::optional<std::vector<std::int64_t>> mu;
  /// Rows y with y^T D = 0 and y^T delta = 1 (mod 2) when unsolvable.
  std::optional<std::vector<std::int64_t>> certificate;
  std::size_t rank = 0;
};

/// Solves D mu = delta over GF(2). By default free variables are 0 and pivots
/// are taken in ascending irrep order; with min_weight the lightest solution
/// in the coset is returned instead.
ParitySolution solve_parity(const FixedDimMatrix& d, const ParityVector& delta, bool min_weight = false);

/// Rank of D mod 2.
std::size_t rank_mod2(const FixedDimMatrix& d);

struct FactorContext {
  const MarksMatrix& psi;
  const MultTensor& tensor;
  const FixedDimMatrix& d;
  const std::vector<BasicDegree>& basics;
};

FactorContext factor_context(Pipeline& pipeline);

struct Factorization {
  std::vector<std::int64_t> mu;
  BurnsideElement unit;
  bool verified = false;  // degree_product(mu) == unit coefficientwise
};

/// mu from the parity system, then an exact product comparison. Throws
/// NotAUnit, or NoSolution carrying the unit and delta in its message.
Factorization factor_unit(const BurnsideElement& unit, const FactorContext& ctx, bool min_weight = false);

enum class VerificationStatus { Success, Counterexample };

struct UnitResult {
  BurnsideElement unit;
  std::vector<std::int64_t> delta;
  std::optional<std::vector<std::int64_t>> mu;
  bool verified = false;
  std::optional<std::vector<std::int64_t>> certificate;
};

struct VerificationReport {
  std::string group;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t unit_count = 0;
  std::size_t rank_d_mod2 = 0;
  /// GF(2) rank of the parity vectors of all units; unit_count = 2^parity_rank.
  std::size_t parity_rank = 0;
  /// Whether every parity vector lies in the column space of D mod 2.
  bool parities_in_column_space = false;
  std::vector<UnitResult> results;  // sorted by unit coefficients
  VerificationStatus status = VerificationStatus::Success;
};

/// Enumerates every unit, factors each into basic degrees, and reports.
/// Unfactorable units are recorded, not thrown.
VerificationReport verify_generation(Pipeline& pipeline);

}  // namespace burnside
