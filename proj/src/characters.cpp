#include "burnside/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "burnside/error.hpp"

namespace burnside {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base = mod(base, p);
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) { return pow_mod(a, p - 2, p); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t primitive_root(std::int64_t p) {
  std::vector<std::int64_t> factors;
  std::int64_t m = p - 1;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < p; ++g)
    if (std::all_of(factors.begin(), factors.end(), [&](std::int64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; }))
      return g;
  fail(ErrorKind::Internal, "no primitive root modulo " + std::to_string(p));
}

// Null space of an r x d matrix (given as d columns of length r) over GF(p).
// Returns basis vectors of length d.
std::vector<Vec> null_space(std::vector<Vec> columns, std::size_t rows, std::int64_t p) {
  const std::size_t d = columns.size();
  // Row-major copy.
  std::vector<Vec> a(rows, Vec(d));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < rows; ++r) a[r][c] = columns[c][r];

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = inv_mod(a[rank][c], p);
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c];
      for (std::size_t cc = 0; cc < d; ++cc) a[r][cc] = mod(a[r][cc] - f * a[rank][cc], p);
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(d, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vec v(d, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = mod(-a[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// The common eigenspaces of the class matrices, split one matrix at a time.
std::vector<Vec> common_eigenvectors(const std::vector<std::vector<Vec>>& matrices, std::size_t r, std::int64_t p) {
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < r; ++i) {
      Vec e(r, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }

  for (const auto& m : matrices) {
    std::vector<std::vector<Vec>> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // Images m * b of the basis vectors.
      std::vector<Vec> images;
      for (const auto& b : basis) {
        Vec y(r, 0);
        for (std::size_t k = 0; k < r; ++k) {
          std::int64_t acc = 0;
          for (std::size_t l = 0; l < r; ++l) acc = (acc + m[k][l] * b[l]) % p;
          y[k] = acc;
        }
        images.push_back(std::move(y));
      }
      std::size_t covered = 0;
      for (std::int64_t lambda = 0; lambda < p && covered < basis.size(); ++lambda) {
        std::vector<Vec> shifted(basis.size(), Vec(r));
        for (std::size_t t = 0; t < basis.size(); ++t)
          for (std::size_t k = 0; k < r; ++k) shifted[t][k] = mod(images[t][k] - lambda * basis[t][k], p);
        auto kernel = null_space(std::move(shifted), r, p);
        if (kernel.empty()) continue;
        std::vector<Vec> piece;
        for (const auto& c : kernel) {
          Vec v(r, 0);
          for (std::size_t t = 0; t < basis.size(); ++t)
            if (c[t] != 0)
              for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + c[t] * basis[t][k]) % p;
          piece.push_back(std::move(v));
        }
        covered += piece.size();
        next.push_back(std::move(piece));
      }
      if (covered != basis.size()) fail(ErrorKind::Internal, "class matrix is not diagonalizable modulo p");
    }
    spaces = std::move(next);
  }

  std::vector<Vec> vectors;
  for (auto& basis : spaces) {
    if (basis.size() != 1) fail(ErrorKind::Internal, "class matrices do not separate the characters");
    vectors.push_back(std::move(basis.front()));
  }
  return vectors;
}

bool value_greater(const Character& a, const Character& b) {
  constexpr double eps = 1e-9;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (std::abs(a[c].real() - b[c].real()) > eps) return a[c].real() > b[c].real();
    if (std::abs(a[c].imag() - b[c].imag()) > eps) return a[c].imag() > b[c].imag();
  }
  return false;
}

}  // namespace

std::int64_t round_checked(double x, ErrorKind kind, const char* what, double* residual_out) {
  const double r = std::round(x);
  const double residual = std::abs(x - r);
  if (residual_out) *residual_out = residual;
  if (!(residual < kIntegerTolerance))
    fail(kind, std::string(what) + " " + std::to_string(x) + " is not an integer");
  return static_cast<std::int64_t>(r);
}

ConjugacyClasses::ConjugacyClasses(const GroupPtr& group) : group_(group) {
  const FiniteGroup& g = *group;
  const std::size_t unassigned = g.order();
  std::vector<std::size_t> raw(g.order(), unassigned);
  std::vector<ElementClass> found;
  for (Element x = 0; x < g.order(); ++x) {
    if (raw[x] != unassigned) continue;
    const std::size_t id = found.size();
    std::size_t size = 0;
    for (Element y = 0; y < g.order(); ++y) {
      const Element c = g.conjugate(y, x);
      if (raw[c] == unassigned) {
        raw[c] = id;
        ++size;
      }
    }
    found.push_back({x, size});
  }
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto oa = g.element_order(found[a].representative), ob = g.element_order(found[b].representative);
    if (oa != ob) return oa < ob;
    if (found[a].size != found[b].size) return found[a].size < found[b].size;
    return found[a].representative < found[b].representative;
  });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    classes_.push_back(found[order[i]]);
  }
  class_of_.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) class_of_[x] = rank[raw[x]];
}

std::vector<ElementClass> element_classes(const GroupPtr& group) { return ConjugacyClasses(group).classes(); }

CharacterTable::CharacterTable(std::shared_ptr<const ConjugacyClasses> classes, std::vector<Character> chars)
    : classes_(std::move(classes)), chars_(std::move(chars)) {
  for (const auto& chi : chars_)
    degrees_.push_back(round_checked(chi.at(0).real(), ErrorKind::Internal, "character degree"));
}

std::complex<double> CharacterTable::inner_product(const Character& a, const Character& b) const {
  std::complex<double> sum = 0;
  for (std::size_t c = 0; c < classes_->size(); ++c)
    sum += static_cast<double>((*classes_)[c].size) * a[c] * std::conj(b[c]);
  return sum / static_cast<double>(classes_->group()->order());
}

double CharacterTable::orthogonality_residual() const {
  double worst = 0;
  for (std::size_t a = 0; a < chars_.size(); ++a)
    for (std::size_t b = 0; b < chars_.size(); ++b) {
      const auto ip = inner_product(chars_[a], chars_[b]);
      worst = std::max(worst, std::abs(ip - std::complex<double>(a == b ? 1.0 : 0.0, 0.0)));
    }
  const double order = static_cast<double>(classes_->group()->order());
  for (std::size_t i = 0; i < classes_->size(); ++i)
    for (std::size_t j = 0; j < classes_->size(); ++j) {
      std::complex<double> sum = 0;
      for (const auto& chi : chars_) sum += chi[i] * std::conj(chi[j]);
      const double expected = (i == j) ? order / static_cast<double>((*classes_)[i].size) : 0.0;
      worst = std::max(worst, std::abs(sum - expected));
    }
  return worst;
}

std::int64_t dixon_prime(std::size_t order, std::size_t exponent) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  const auto e = static_cast<std::int64_t>(exponent);
  for (std::int64_t p = e + 1;; p += e)
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

CharTablePtr character_table(const GroupPtr& group_ptr, std::size_t max_order) {
  const FiniteGroup& g = *group_ptr;
  if (g.order() > max_order)
    fail(ErrorKind::CapExceeded, "group order " + std::to_string(g.order()) + " exceeds character table cap");
  auto classes = std::make_shared<const ConjugacyClasses>(group_ptr);
  const std::size_t r = classes->size();
  const auto order = static_cast<std::int64_t>(g.order());
  const auto exponent = static_cast<std::int64_t>(g.exponent());
  const std::int64_t p = dixon_prime(g.order(), g.exponent());

  // a[j][k][l] = #{x in C_j : x^-1 z_l in C_k}, z_l the representative of C_l.
  std::vector<std::vector<Vec>> matrices(r, std::vector<Vec>(r, Vec(r, 0)));
  for (std::size_t l = 0; l < r; ++l) {
    const Element z = (*classes)[l].representative;
    for (Element x = 0; x < g.order(); ++x) {
      const std::size_t j = classes->class_of(x);
      const std::size_t k = classes->class_of(g.compose(g.inverse(x), z));
      ++matrices[j][k][l];
    }
  }
  for (auto& m : matrices)
    for (auto& row : m)
      for (auto& x : row) x %= p;
  // The identity class matrix is the identity; skip it.
  std::vector<std::vector<Vec>> splitting(matrices.begin() + 1, matrices.end());
  auto vectors = common_eigenvectors(splitting, r, p);

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t j = 0; j < r; ++j) inverse_class[j] = classes->class_of(g.inverse((*classes)[j].representative));

  const std::int64_t z = pow_mod(primitive_root(p), (p - 1) / exponent, p);
  const auto max_degree = static_cast<std::int64_t>(std::sqrt(static_cast<double>(order)) + 1e-9);

  std::vector<Character> chars;
  for (auto& omega : vectors) {
    const std::int64_t scale = inv_mod(omega[0], p);
    for (auto& x : omega) x = x * scale % p;

    std::int64_t s = 0;
    for (std::size_t j = 0; j < r; ++j)
      s = (s + omega[j] * omega[inverse_class[j]] % p * inv_mod(static_cast<std::int64_t>((*classes)[j].size), p)) % p;
    const std::int64_t target = mod(order, p) * inv_mod(s, p) % p;
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d <= max_degree; ++d)
      if (d * d % p == target) {
        degree = d;
        break;
      }
    if (degree == 0) fail(ErrorKind::Internal, "no character degree matches modulo p");

    Vec chi_mod(r);
    for (std::size_t j = 0; j < r; ++j)
      chi_mod[j] = degree * omega[j] % p * inv_mod(static_cast<std::int64_t>((*classes)[j].size), p) % p;

    Character chi(r);
    for (std::size_t j = 0; j < r; ++j) {
      const Element x = (*classes)[j].representative;
      const auto o = static_cast<std::int64_t>(g.element_order(x));
      const std::int64_t root = pow_mod(z, exponent / o, p);
      // chi(x^l) modulo p for l = 0..o-1.
      Vec powers(o);
      Element y = 0;
      for (std::int64_t l = 0; l < o; ++l) {
        powers[l] = chi_mod[classes->class_of(y)];
        y = g.compose(y, x);
      }
      const std::int64_t inv_o = inv_mod(o, p);
      std::int64_t total = 0;
      std::complex<double> value = 0;
      for (std::int64_t k = 0; k < o; ++k) {
        const std::int64_t step = pow_mod(root, mod(-k, o), p);
        std::int64_t acc = 0, w = 1;
        for (std::int64_t l = 0; l < o; ++l) {
          acc = (acc + powers[l] * w) % p;
          w = w * step % p;
        }
        const std::int64_t multiplicity = acc * inv_o % p;
        if (multiplicity > degree) fail(ErrorKind::Internal, "eigenvalue multiplicity exceeds the degree");
        total += multiplicity;
        value += static_cast<double>(multiplicity) *
                 std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(o));
      }
      if (total != degree) fail(ErrorKind::Internal, "eigenvalue multiplicities do not sum to the degree");
      chi[j] = value;
    }
    chars.push_back(std::move(chi));
  }

  std::sort(chars.begin(), chars.end(), [](const Character& a, const Character& b) {
    const double da = a[0].real(), db = b[0].real();
    if (std::abs(da - db) > 0.5) return da < db;
    return value_greater(a, b);
  });

  auto table = std::make_shared<const CharacterTable>(classes, std::move(chars));
  if (!(table->orthogonality_residual() < kOrthogonalityTolerance))
    fail(ErrorKind::Internal, "character table fails orthogonality");
  return table;
}

std::complex<double> frobenius_schur_value(const CharacterTable& table, std::size_t k) {
  const auto& classes = table.element_classes();
  const FiniteGroup& g = *classes.group();
  std::complex<double> sum = 0;
  for (Element x = 0; x < g.order(); ++x) sum += table.value(k, g.compose(x, x));
  return sum / static_cast<double>(g.order());
}

int frobenius_schur(const CharacterTable& table, std::size_t k) {
  const auto value = frobenius_schur_value(table, k);
  if (!(std::abs(value.imag()) < kIntegerTolerance))
    fail(ErrorKind::NonIntegralIndicator, "Frobenius-Schur indicator has an imaginary part");
  const auto fs = round_checked(value.real(), ErrorKind::NonIntegralIndicator, "Frobenius-Schur indicator");
  if (fs < -1 || fs > 1) fail(ErrorKind::NonIntegralIndicator, "Frobenius-Schur indicator outside {-1, 0, 1}");
  return static_cast<int>(fs);
}

RealIrrepsPtr real_irreducibles(const CharTablePtr& table) {
  const std::size_t n = table->size();
  const std::size_t r = table->element_classes().size();
  std::vector<bool> used(n, false);
  std::vector<RealIrrep> irreps;
  for (std::size_t k = 0; k < n; ++k) {
    if (used[k]) continue;
    used[k] = true;
    const Character& chi = (*table)[k];
    RealIrrep irrep;
    irrep.provenance = {k};
    irrep.real_character.resize(r);
    const int fs = frobenius_schur(*table, k);
    if (fs == 1) {
      irrep.type = RealType::Orthogonal;
      for (std::size_t c = 0; c < r; ++c) irrep.real_character[c] = chi[c].real();
    } else {
      irrep.type = fs == 0 ? RealType::Complex : RealType::Quaternionic;
      if (fs == 0) {
        std::size_t partner = n;
        for (std::size_t q = k + 1; q < n && partner == n; ++q) {
          if (used[q]) continue;
          bool conjugate = true;
          for (std::size_t c = 0; c < r && conjugate; ++c)
            conjugate = std::abs((*table)[q][c] - std::conj(chi[c])) < kIntegerTolerance;
          if (conjugate) partner = q;
        }
        if (partner == n)
          fail(ErrorKind::UnpairedComplexCharacter, "no conjugate for complex character " + std::to_string(k));
        used[partner] = true;
        irrep.provenance.push_back(partner);
      }
      for (std::size_t c = 0; c < r; ++c) irrep.real_character[c] = 2.0 * chi[c].real();
    }
    irrep.real_dimension =
        round_checked(irrep.real_character[0], ErrorKind::NonIntegralDimension, "real dimension");
    irreps.push_back(std::move(irrep));
  }
  return std::make_shared<const RealIrrepSet>(table, std::move(irreps));
}

double fixed_dim_value(const ConjugacyClasses& classes, const std::vector<double>& real_char, const Subgroup& h) {
  if (h.group_order() != classes.group()->order()) fail(ErrorKind::GroupMismatch, "subgroup of a different group");
  double sum = 0;
  for (Element e : h.elements()) sum += real_char[classes.class_of(e)];
  return sum / static_cast<double>(h.order());
}

std::int64_t fixed_dim(const ConjugacyClasses& classes, const std::vector<double>& real_char, const Subgroup& h) {
  const auto d = round_checked(fixed_dim_value(classes, real_char, h), ErrorKind::NonIntegralDimension, "fixed dimension");
  if (d < 0) fail(ErrorKind::NonIntegralDimension, "negative fixed dimension");
  return d;
}

std::int64_t complex_fixed_dim(const CharacterTable& table, std::size_t k, const Subgroup& h) {
  std::complex<double> sum = 0;
  for (Element e : h.elements()) sum += table.value(k, e);
  sum /= static_cast<double>(h.order());
  if (!(std::abs(sum.imag()) < kIntegerTolerance))
    fail(ErrorKind::NonIntegralDimension, "invariant dimension has an imaginary part");
  return round_checked(sum.real(), ErrorKind::NonIntegralDimension, "invariant dimension");
}

FixedDimMatrix::FixedDimMatrix(ClassTablePtr classes, RealIrrepsPtr irreps, std::vector<std::int64_t> entries)
    : classes_(std::move(classes)),
      irreps_(std::move(irreps)),
      rows_(classes_->size()),
      cols_(irreps_->size()),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) fail(ErrorKind::MalformedInput, "fixed-dimension matrix has wrong size");
}

FixedDimPtr fixed_dim_matrix(const RealIrrepsPtr& irreps, const ClassTablePtr& classes) {
  const auto& conj = irreps->table()->element_classes();
  if (conj.group() != classes->group()) fail(ErrorKind::GroupMismatch, "irreps and classes of different groups");
  const std::size_t n = classes->size(), r = irreps->size();
  std::vector<std::int64_t> entries(n * r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < r; ++k)
      entries[i * r + k] = fixed_dim(conj, (*irreps)[k].real_character, (*classes)[i].representative);
  return std::make_shared<const FixedDimMatrix>(classes, irreps, std::move(entries));
}

std::vector<std::int64_t> permutation_character(const ConjugacyClasses& classes, const Subgroup& h) {
  const auto order = static_cast<std::int64_t>(classes.group()->order());
  std::vector<std::int64_t> in_h(classes.size(), 0);
  for (Element e : h.elements()) ++in_h[classes.class_of(e)];
  std::vector<std::int64_t> values(classes.size());
  // pi(g) = |C_G(g)| |g^G cap H| / |H|.
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::int64_t numerator = order * in_h[c];
    const std::int64_t denominator = static_cast<std::int64_t>(classes[c].size) * static_cast<std::int64_t>(h.order());
    if (numerator % denominator != 0) fail(ErrorKind::Internal, "permutation character is not integral");
    values[c] = numerator / denominator;
  }
  return values;
}

namespace {

std::complex<double> perm_inner_product(const CharacterTable& table, const std::vector<std::int64_t>& pi,
                                        std::size_t k) {
  Character as_complex(pi.begin(), pi.end());
  return table.inner_product(as_complex, table[k]);
}

}  // namespace

std::vector<std::vector<std::int64_t>> perm_character_decomposition(const ClassTablePtr& classes,
                                                                    const CharacterTable& table) {
  const auto& conj = table.element_classes();
  if (conj.group() != classes->group()) fail(ErrorKind::GroupMismatch, "table and classes of different groups");
  std::vector<std::vector<std::int64_t>> c(table.size(), std::vector<std::int64_t>(classes->size()));
  for (std::size_t j = 0; j < classes->size(); ++j) {
    const auto pi = permutation_character(conj, (*classes)[j].representative);
    for (std::size_t k = 0; k < table.size(); ++k) {
      const auto ip = perm_inner_product(table, pi, k);
      if (!(std::abs(ip.imag()) < kIntegerTolerance))
        fail(ErrorKind::NonIntegralMultiplicity, "multiplicity has an imaginary part");
      c[k][j] = round_checked(ip.real(), ErrorKind::NonIntegralMultiplicity, "multiplicity");
      if (c[k][j] < 0) fail(ErrorKind::NonIntegralMultiplicity, "negative multiplicity");
    }
  }
  return c;
}

double perm_character_residual(const ClassTablePtr& classes, const CharacterTable& table) {
  double worst = 0;
  for (std::size_t j = 0; j < classes->size(); ++j) {
    const auto pi = permutation_character(table.element_classes(), (*classes)[j].representative);
    for (std::size_t k = 0; k < table.size(); ++k) {
      const auto ip = perm_inner_product(table, pi, k);
      worst = std::max({worst, std::abs(ip.real() - std::round(ip.real())), std::abs(ip.imag())});
    }
  }
  return worst;
}

}  // namespace burnside
