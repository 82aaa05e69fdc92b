#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/characters.hpp"
#include "burnside/polynomial.hpp"

namespace burnside {

/// deg_{V_k}: the equivariant degree of -Id on the unit ball of the k-th real
/// irreducible representation (k is 0-based here; the CLI shows 1..r).
struct BasicDegree {
  std::size_t irrep_index = 0;
  BurnsideElement element;
  GhostVector ghost;  // (-1)^{dim V_k^{H_i}}
};

/// Coefficients by the degree recurrence, over classes in descending order:
///   n_i = ((-1)^{D[i][k]} - sum_{j>i} n_j n(H_i,H_j) |W(H_j)|) / |W(H_i)|.
/// Cross-checked against ghost_preimage of the sign vector and required to
/// square to (G). Throws InexactDivision if any division leaves a remainder.
BasicDegree basic_degree(std::size_t k, const FixedDimMatrix& d, const MarksMatrix& psi, const MultTensor& m);

std::vector<BasicDegree> all_basic_degrees(const FixedDimMatrix& d, const MarksMatrix& psi, const MultTensor& m);

/// prod_k deg_{V_k}^{mu_k} in A(G). Only mu_k mod 2 contributes because each
/// basic degree is an involution.
BurnsideElement degree_product(std::span<const std::int64_t> mu, const std::vector<BasicDegree>& basics,
                               const MultTensor& m);

/// Component i is (-1)^{sum_k mu_k D[i][k]}.
GhostVector ghost_degree_linear(std::span<const std::int64_t> mu, const FixedDimMatrix& d);

/// Linear G-isomorphism data per isotypic component: either the number of
/// negative eigenvalues directly, or a matrix on the multiplicity space.
/// Components not listed are zero-dimensional.
struct SpectralInput {
  using Block = std::variant<std::uint64_t, RationalMatrix>;
  std::map<std::size_t, Block> blocks;  // keyed by 0-based irrep index
};

/// mu_k = number of negative real eigenvalues of block k with multiplicity,
/// by exact Sturm counting on the characteristic polynomial. Throws
/// SingularBlock when a block has eigenvalue 0.
std::vector<std::int64_t> negative_eigen_multiplicities(const SpectralInput& input, std::size_t r);

/// Number of negative eigenvalues of one rational block.
std::int64_t negative_eigen_count(const RationalMatrix& block);

BurnsideElement degree_of_linear_iso(const SpectralInput& input, const std::vector<BasicDegree>& basics,
                                     const MultTensor& m);

/// Reads {"blocks": [{"k": int, "matrix": [["p/q", ...], ...]}]} with k 1-based.
SpectralInput spectral_input_from_json(std::string_view json_text, std::size_t r);

}  // namespace burnside
