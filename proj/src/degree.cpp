#include "burnside/degree.hpp"

#include <json.hpp>

#include "burnside/error.hpp"

namespace burnside {

BasicDegree basic_degree(std::size_t k, const FixedDimMatrix& d, const MarksMatrix& psi, const MultTensor& m) {
  if (k >= d.cols()) fail(ErrorKind::MalformedInput, "irrep index " + std::to_string(k) + " out of range");
  const ClassTablePtr& classes = psi.classes();
  require_same_basis(classes, d.classes());
  require_same_basis(classes, m.classes());
  const std::size_t n = classes->size();

  std::vector<std::int64_t> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = (d(i, k) % 2 == 0) ? 1 : -1;

  std::vector<std::int64_t> coeffs(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    std::int64_t numerator = signs[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coeffs[j] == 0) continue;
      const auto weyl = static_cast<std::int64_t>((*classes)[j].weyl_order);
      numerator = checked_sub(numerator, checked_mul(checked_mul(coeffs[j], classes->containment(i, j)), weyl));
    }
    const auto weyl = static_cast<std::int64_t>((*classes)[i].weyl_order);
    if (numerator % weyl != 0)
      fail(ErrorKind::InexactDivision,
           "basic degree " + std::to_string(k) + " is not integral at class " + (*classes)[i].label);
    coeffs[i] = numerator / weyl;
  }

  BasicDegree result{k, BurnsideElement(classes, std::move(coeffs)), GhostVector(classes, std::move(signs))};

  const auto preimage = ghost_preimage(psi, result.ghost);
  if (!preimage.integral() || *preimage.element != result.element)
    fail(ErrorKind::Internal, "recurrence and ghost preimage disagree for basic degree " + std::to_string(k));
  if (multiply(result.element, result.element, m) != BurnsideElement::identity(classes))
    fail(ErrorKind::Internal, "basic degree " + std::to_string(k) + " is not an involution");
  return result;
}

std::vector<BasicDegree> all_basic_degrees(const FixedDimMatrix& d, const MarksMatrix& psi, const MultTensor& m) {
  std::vector<BasicDegree> out;
  out.reserve(d.cols());
  for (std::size_t k = 0; k < d.cols(); ++k) out.push_back(basic_degree(k, d, psi, m));
  return out;
}

BurnsideElement degree_product(std::span<const std::int64_t> mu, const std::vector<BasicDegree>& basics,
                               const MultTensor& m) {
  if (mu.size() != basics.size())
    fail(ErrorKind::GroupMismatch, "exponent vector has " + std::to_string(mu.size()) + " entries, expected " +
                                       std::to_string(basics.size()));
  BurnsideElement result = BurnsideElement::identity(m.classes());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] < 0) fail(ErrorKind::MalformedInput, "negative exponent");
    if (mu[k] % 2 == 1) result = multiply(result, basics[k].element, m);
  }
  return result;
}

GhostVector ghost_degree_linear(std::span<const std::int64_t> mu, const FixedDimMatrix& d) {
  if (mu.size() != d.cols()) fail(ErrorKind::GroupMismatch, "exponent vector length mismatch");
  std::vector<std::int64_t> values(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    std::int64_t parity = 0;
    for (std::size_t k = 0; k < d.cols(); ++k) parity ^= (mu[k] & 1) & (d(i, k) & 1);
    values[i] = parity ? -1 : 1;
  }
  return GhostVector(d.classes(), std::move(values));
}

std::int64_t negative_eigen_count(const RationalMatrix& block) {
  if (block.size() == 0) return 0;
  const Polynomial chi = characteristic_polynomial(block);
  if (chi[0] == 0) fail(ErrorKind::SingularBlock, "block is singular");
  return static_cast<std::int64_t>(count_negative_roots(chi));
}

std::vector<std::int64_t> negative_eigen_multiplicities(const SpectralInput& input, std::size_t r) {
  std::vector<std::int64_t> mu(r, 0);
  for (const auto& [k, block] : input.blocks) {
    if (k >= r) fail(ErrorKind::MalformedInput, "block for irrep " + std::to_string(k + 1) + " out of range");
    if (const auto* count = std::get_if<std::uint64_t>(&block))
      mu[k] = static_cast<std::int64_t>(*count);
    else
      mu[k] = negative_eigen_count(std::get<RationalMatrix>(block));
  }
  return mu;
}

BurnsideElement degree_of_linear_iso(const SpectralInput& input, const std::vector<BasicDegree>& basics,
                                     const MultTensor& m) {
  const auto mu = negative_eigen_multiplicities(input, basics.size());
  return degree_product(mu, basics, m);
}

SpectralInput spectral_input_from_json(std::string_view json_text, std::size_t r) {
  SpectralInput input;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& entry : doc.at("blocks")) {
      const int k = entry.at("k").get<int>();
      if (k < 1 || static_cast<std::size_t>(k) > r)
        fail(ErrorKind::MalformedInput, "block index k=" + std::to_string(k) + " outside 1.." + std::to_string(r));
      const auto& rows = entry.at("matrix");
      const std::size_t n = rows.size();
      std::vector<Rational> values;
      for (const auto& row : rows) {
        if (row.size() != n) fail(ErrorKind::MalformedInput, "block matrix is not square");
        for (const auto& cell : row)
          values.push_back(cell.is_string() ? parse_rational(cell.get<std::string>())
                                            : Rational(cell.get<std::int64_t>()));
      }
      if (!input.blocks.emplace(static_cast<std::size_t>(k - 1), RationalMatrix(n, std::move(values))).second)
        fail(ErrorKind::MalformedInput, "duplicate block for k=" + std::to_string(k));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("blocks file: ") + e.what());
  }
  return input;
}

}  // namespace burnside
