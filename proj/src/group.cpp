#include "burnside/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "burnside/error.hpp"

namespace burnside {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCycle: return "MalformedCycle";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::UnknownSpec: return "UnknownSpec";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::IntegerOverflow: return "IntegerOverflow";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NonIntegralIndicator: return "NonIntegralIndicator";
    case ErrorKind::NonIntegralDimension: return "NonIntegralDimension";
    case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::UnpairedComplexCharacter: return "UnpairedComplexCharacter";
    case ErrorKind::SingularBlock: return "SingularBlock";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

}  // namespace

Permutation compose_permutations(const Permutation& f, const Permutation& g) {
  Permutation r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = f[g[x]];
  return r;
}

Permutation permutation_from_cycles(std::size_t domain_size, const CycleList& cycles) {
  Permutation p = identity_permutation(domain_size);
  std::vector<bool> seen(domain_size, false);
  for (const auto& cycle : cycles) {
    for (int point : cycle) {
      if (point < 1 || static_cast<std::size_t>(point) > domain_size)
        fail(ErrorKind::MalformedCycle,
             "point " + std::to_string(point) + " outside 1.." + std::to_string(domain_size));
      if (seen[point - 1])
        fail(ErrorKind::MalformedCycle, "point " + std::to_string(point) + " repeated");
      seen[point - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p[cycle[i] - 1] = static_cast<std::uint32_t>(cycle[(i + 1) % cycle.size()] - 1);
  }
  return p;
}

CycleList parse_cycles(std::string_view text) {
  CycleList cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorKind::MalformedCycle, "expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) fail(ErrorKind::MalformedCycle, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) fail(ErrorKind::MalformedCycle, "bad point in \"" + std::string(text) + "\"");
      i = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

Element FiniteGroup::power(Element a, std::int64_t n) const {
  const auto ord = static_cast<std::int64_t>(element_order_[a]);
  n %= ord;
  if (n < 0) n += ord;
  Element r = 0;
  for (std::int64_t i = 0; i < n; ++i) r = compose(r, a);
  return r;
}

Element FiniteGroup::find(const Permutation& p) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
  if (it == perms_.end() || *it != p) return static_cast<Element>(order_);
  return static_cast<Element>(it - perms_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (compose(a, b) != compose(b, a)) return false;
  return true;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_closed_permutations(std::size_t domain_size,
                                                                         std::vector<Permutation> perms,
                                                                         std::string name) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = perms.size();
  g->domain_size_ = domain_size;
  g->name_ = std::move(name);
  g->perms_ = std::move(perms);
  const std::size_t n = g->order_;
  if (n == 0 || g->perms_[0] != identity_permutation(domain_size))
    fail(ErrorKind::Internal, "permutation set does not contain the identity");

  std::unordered_map<Permutation, Element, PermutationHash> index;
  index.reserve(n * 2);
  for (Element i = 0; i < n; ++i) index.emplace(g->perms_[i], i);

  g->table_.resize(n * n);
  g->inverse_.resize(n);
  Permutation scratch(domain_size);
  for (Element a = 0; a < n; ++a) {
    const auto& f = g->perms_[a];
    for (Element b = 0; b < n; ++b) {
      const auto& h = g->perms_[b];
      for (std::size_t x = 0; x < domain_size; ++x) scratch[x] = f[h[x]];
      auto it = index.find(scratch);
      if (it == index.end()) fail(ErrorKind::Internal, "permutation set not closed");
      g->table_[a * n + b] = it->second;
      if (it->second == 0) g->inverse_[a] = b;
    }
  }

  g->element_order_.assign(n, 0);
  std::size_t exponent = 1;
  for (Element a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = g->compose(x, a)) ++k;
    g->element_order_[a] = k;
    exponent = std::lcm(exponent, g->element_order_[a]);
  }
  g->exponent_ = exponent;
  return g;
}

GroupPtr group_from_generators(std::size_t domain_size, const std::vector<CycleList>& generators,
                               std::string name, std::size_t max_order) {
  if (generators.empty()) fail(ErrorKind::MalformedInput, "generator list is empty");
  std::vector<Permutation> gens;
  gens.reserve(generators.size());
  for (const auto& cycles : generators) gens.push_back(permutation_from_cycles(domain_size, cycles));

  std::vector<Permutation> elements{identity_permutation(domain_size)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{elements[0], 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens) {
      Permutation next = compose_permutations(elements[i], s);
      if (seen.emplace(next, elements.size()).second) {
        elements.push_back(std::move(next));
        if (elements.size() > max_order)
          fail(ErrorKind::GroupTooLarge,
               "closure exceeds " + std::to_string(max_order) + " elements");
      }
    }
  }
  return FiniteGroup::from_closed_permutations(domain_size, std::move(elements), std::move(name));
}

namespace {

int parse_parameter(std::string_view spec, std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(ErrorKind::UnknownSpec, "bad integer parameter in \"" + std::string(spec) + "\"");
  return value;
}

std::vector<int> range_cycle(int first, int last) {
  std::vector<int> c;
  for (int i = first; i <= last; ++i) c.push_back(i);
  return c;
}

// Generating set of g in cycle notation with points shifted by offset, used
// to build direct products on the disjoint union of domains.
std::vector<CycleList> generators_as_cycles(const FiniteGroup& g, int offset) {
  // Every element as generator is wasteful; the group is recovered from a
  // small generating subset found greedily.
  std::vector<Element> chosen;
  std::vector<bool> reached(g.order(), false);
  reached[0] = true;
  std::size_t reached_count = 1;
  for (Element candidate = 1; candidate < g.order() && reached_count < g.order(); ++candidate) {
    if (reached[candidate]) continue;
    chosen.push_back(candidate);
    std::vector<Element> frontier;
    for (Element x = 0; x < g.order(); ++x)
      if (reached[x]) frontier.push_back(x);
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (Element s : chosen) {
        Element y = g.compose(frontier[i], s);
        if (!reached[y]) {
          reached[y] = true;
          ++reached_count;
          frontier.push_back(y);
        }
      }
  }
  std::vector<CycleList> result;
  for (Element e : chosen) {
    const auto& p = g.permutation(e);
    std::vector<bool> done(p.size(), false);
    CycleList cycles;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (done[x] || p[x] == x) continue;
      std::vector<int> cycle;
      for (std::size_t y = x; !done[y]; y = p[y]) {
        done[y] = true;
        cycle.push_back(static_cast<int>(y) + 1 + offset);
      }
      cycles.push_back(std::move(cycle));
    }
    result.push_back(std::move(cycles));
  }
  return result;
}

}  // namespace

GroupPtr catalog_group(std::string_view spec, std::size_t max_order) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) fail(ErrorKind::UnknownSpec, "unknown group spec \"" + std::string(spec) + "\"");
  const auto family = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  const std::string label(spec);

  if (family == "product") {
    const auto star = rest.find('*');
    if (star == std::string_view::npos) fail(ErrorKind::UnknownSpec, "product needs A*B: \"" + label + "\"");
    auto left = catalog_group(rest.substr(0, star), max_order);
    auto right = catalog_group(rest.substr(star + 1), max_order);
    if (left->order() * right->order() > max_order)
      fail(ErrorKind::GroupTooLarge, "product order exceeds " + std::to_string(max_order));
    const int offset = static_cast<int>(left->domain_size());
    std::vector<CycleList> gens = generators_as_cycles(*left, 0);
    for (auto& c : generators_as_cycles(*right, offset)) gens.push_back(std::move(c));
    if (gens.empty()) gens.push_back({});
    return group_from_generators(left->domain_size() + right->domain_size(), gens, label, max_order);
  }

  const int n = parse_parameter(spec, rest);
  if (family == "cyclic") {
    if (n < 1) fail(ErrorKind::UnknownSpec, "cyclic:n needs n >= 1");
    if (static_cast<std::size_t>(n) > max_order) fail(ErrorKind::GroupTooLarge, label + " exceeds order cap");
    return group_from_generators(n, {{range_cycle(1, n)}}, label, max_order);
  }
  if (family == "dihedral") {
    if (n < 2) fail(ErrorKind::UnknownSpec, "dihedral:n needs n >= 2");
    if (2 * static_cast<std::size_t>(n) > max_order) fail(ErrorKind::GroupTooLarge, label + " exceeds order cap");
    if (n == 2) return group_from_generators(4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}}, label, max_order);
    CycleList reflection;
    for (int i = 1; i <= n / 2; ++i) reflection.push_back({i, n + 1 - i});
    return group_from_generators(n, {{range_cycle(1, n)}, reflection}, label, max_order);
  }
  if (family == "symmetric") {
    if (n < 1 || n > 7) fail(ErrorKind::UnknownSpec, "symmetric:n needs 1 <= n <= 7");
    if (n == 1) return group_from_generators(1, {{}}, label, max_order);
    return group_from_generators(n, {{{1, 2}}, {range_cycle(1, n)}}, label, max_order);
  }
  if (family == "alternating") {
    if (n < 1 || n > 7) fail(ErrorKind::UnknownSpec, "alternating:n needs 1 <= n <= 7");
    if (n < 3) return group_from_generators(std::max(n, 1), {{}}, label, max_order);
    std::vector<CycleList> gens;
    for (int i = 3; i <= n; ++i) gens.push_back({{1, 2, i}});
    return group_from_generators(n, gens, label, max_order);
  }
  if (family == "quaternion") {
    if (n != 8) fail(ErrorKind::UnknownSpec, "only quaternion:8 is supported");
    // Left-regular action of i and j on {1, i, -1, -i, j, k, -j, -k}.
    return group_from_generators(8, {{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}}, label,
                                 max_order);
  }
  fail(ErrorKind::UnknownSpec, "unknown group family \"" + std::string(family) + "\"");
}

GroupPtr group_from_json(std::string_view json_text, std::size_t max_order) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("group file: ") + e.what());
  }
  try {
    const auto domain = doc.at("domain").get<int>();
    if (domain < 1) fail(ErrorKind::MalformedInput, "group file: domain must be positive");
    auto generators = doc.at("generators").get<std::vector<CycleList>>();
    std::string name = doc.value("name", std::string("file"));
    return group_from_generators(static_cast<std::size_t>(domain), generators, std::move(name), max_order);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("group file: ") + e.what());
  }
}

GroupPtr load_group(std::string_view spec, std::size_t max_order) {
  if (spec.substr(0, 5) == "file:") {
    const std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) fail(ErrorKind::MalformedInput, "cannot open group file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return group_from_json(buffer.str(), max_order);
  }
  return catalog_group(spec, max_order);
}

}  // namespace burnside
