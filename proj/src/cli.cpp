#include "burnside/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside::cli {

using nlohmann::json;

namespace {

struct CommandName {
  Command command;
  std::string_view name;
};

constexpr CommandName kCommands[] = {
    {Command::Info, "info"},           {Command::Subgroups, "subgroups"},
    {Command::Marks, "marks"},         {Command::Multable, "multable"},
    {Command::Chartable, "chartable"}, {Command::Irreps, "irreps"},
    {Command::BasicDegrees, "basic-degrees"}, {Command::Units, "units"},
    {Command::Factor, "factor"},       {Command::Degree, "degree"},
    {Command::Verify, "verify"},
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Document {
  std::string text;
  int exit_code = kExitOk;
};

std::vector<std::string> class_labels(const SubgroupClassTable& classes) {
  std::vector<std::string> out;
  for (const auto& c : classes.classes()) out.push_back(c.label);
  return out;
}

std::string cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out << '(';
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      out << (x == start ? "" : " ") << x + 1;
    }
    out << ')';
  }
  const auto s = out.str();
  return s.empty() ? "()" : s;
}

std::string_view type_name(RealType t) {
  switch (t) {
    case RealType::Orthogonal: return "orthogonal";
    case RealType::Complex: return "complex";
    case RealType::Quaternionic: return "quaternionic";
  }
  return "?";
}

double clean(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

std::string join(std::span<const std::int64_t> v, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string fmt_double(double x) {
  std::ostringstream out;
  out << std::setprecision(6) << clean(x);
  return out.str();
}

/// Right-aligned grid with a label header row and label column.
std::string grid(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                 const std::function<std::string(std::size_t, std::size_t)>& cell) {
  std::size_t width = 1;
  for (const auto& l : row_labels) width = std::max(width, l.size());
  for (const auto& l : col_labels) width = std::max(width, l.size());
  for (std::size_t i = 0; i < row_labels.size(); ++i)
    for (std::size_t j = 0; j < col_labels.size(); ++j) width = std::max(width, cell(i, j).size());
  std::ostringstream out;
  out << std::setw(static_cast<int>(width)) << "";
  for (const auto& l : col_labels) out << ' ' << std::setw(static_cast<int>(width)) << l;
  out << '\n';
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    out << std::setw(static_cast<int>(width)) << row_labels[i];
    for (std::size_t j = 0; j < col_labels.size(); ++j) out << ' ' << std::setw(static_cast<int>(width)) << cell(i, j);
    out << '\n';
  }
  return out.str();
}

void require_format(const RunConfig& config, bool csv_ok) {
  if (config.format == Format::Csv && !csv_ok)
    throw UsageError("csv output is not available for " + std::string(command_name(config.command)));
}

std::vector<std::int64_t> parse_list_flag(const std::optional<std::string>& value, const char* flag,
                                          std::size_t expected) {
  if (!value) throw UsageError(std::string("missing required flag ") + flag);
  auto list = parse_int_list(*value);
  if (list.size() != expected)
    fail(ErrorKind::MalformedInput, std::string(flag) + " expects " + std::to_string(expected) + " integers, got " +
                                        std::to_string(list.size()));
  return list;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::MalformedInput, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json element_json(const BurnsideElement& a, const MarksMatrix& psi) {
  return {{"coeffs", a.coeffs()}, {"ghost", ghost_map(psi, a).values()}};
}

// Each command returns either a json payload (json format) or text/csv.

Document cmd_info(Pipeline& p, const RunConfig& config) {
  require_format(config, false);
  const auto& g = *p.group();
  const auto& classes = *p.classes();
  const ConjugacyClasses conj(p.group());
  if (config.format == Format::Json) {
    json j = {{"group", g.name()},          {"order", g.order()},
              {"domain", g.domain_size()},  {"exponent", g.exponent()},
              {"abelian", g.is_abelian()},  {"N", classes.size()},
              {"element_classes", conj.size()}, {"subgroups", classes.subgroups().size()}};
    return {j.dump(2)};
  }
  std::ostringstream out;
  out << "group            " << g.name() << '\n'
      << "order            " << g.order() << '\n'
      << "domain           " << g.domain_size() << '\n'
      << "exponent         " << g.exponent() << '\n'
      << "abelian          " << (g.is_abelian() ? "yes" : "no") << '\n'
      << "subgroup classes " << classes.size() << '\n'
      << "subgroups        " << classes.subgroups().size() << '\n'
      << "element classes  " << conj.size() << '\n';
  return {out.str()};
}

Document cmd_subgroups(Pipeline& p, const RunConfig& config) {
  require_format(config, true);
  const auto& classes = *p.classes();
  const auto& g = *p.group();
  const auto labels = class_labels(classes);
  const auto n = classes.size();
  if (config.format == Format::Json) {
    json list = json::array();
    for (const auto& c : classes.classes()) {
      std::vector<std::string> elements;
      for (auto e : c.representative.elements()) elements.push_back(cycle_string(g.permutation(e)));
      list.push_back({{"label", c.label},
                      {"order", c.representative.order()},
                      {"class_size", c.members.size()},
                      {"normalizer_order", c.normalizer_order},
                      {"weyl_order", c.weyl_order},
                      {"representative", elements}});
    }
    json containment = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(classes.containment(i, j));
      containment.push_back(row);
    }
    return {json{{"order", labels}, {"classes", list}, {"containment", containment}}.dump(2)};
  }
  std::ostringstream out;
  if (config.format == Format::Csv) {
    out << "label,order,class_size,normalizer_order,weyl_order\n";
    for (const auto& c : classes.classes())
      out << c.label << ',' << c.representative.order() << ',' << c.members.size() << ',' << c.normalizer_order << ','
          << c.weyl_order << '\n';
    return {out.str()};
  }
  out << "label  order  conjugates  |N(H)|  |W(H)|\n";
  for (const auto& c : classes.classes())
    out << std::left << std::setw(7) << c.label << std::right << std::setw(5) << c.representative.order()
        << std::setw(12) << c.members.size() << std::setw(8) << c.normalizer_order << std::setw(8) << c.weyl_order
        << '\n';
  out << "\ncontainment n(H_i, H_j)\n"
      << grid(labels, labels, [&](std::size_t i, std::size_t j) { return std::to_string(classes.containment(i, j)); });
  return {out.str()};
}

Document cmd_marks(Pipeline& p, const RunConfig& config) {
  require_format(config, true);
  const auto& psi = *p.marks();
  const auto labels = class_labels(*p.classes());
  const auto n = psi.size();
  if (config.format == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(psi(i, j));
      rows.push_back(row);
    }
    return {json{{"order", labels}, {"psi", rows}}.dump(2)};
  }
  if (config.format == Format::Csv) {
    std::ostringstream out;
    out << "H";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      out << labels[i];
      for (std::size_t j = 0; j < n; ++j) out << ',' << psi(i, j);
      out << '\n';
    }
    return {out.str()};
  }
  return {grid(labels, labels, [&](std::size_t i, std::size_t j) { return std::to_string(psi(i, j)); })};
}

Document cmd_multable(Pipeline& p, const RunConfig& config) {
  require_format(config, true);
  const auto& m = *p.tensor();
  const auto labels = class_labels(*p.classes());
  const auto n = m.size();
  if (config.format == Format::Json) {
    json outer = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json middle = json::array();
      for (std::size_t j = 0; j < n; ++j) {
        const auto row = m.row(i, j);
        middle.push_back(std::vector<std::int64_t>(row.begin(), row.end()));
      }
      outer.push_back(middle);
    }
    return {json{{"order", labels}, {"M", outer}}.dump(2)};
  }
  std::ostringstream out;
  if (config.format == Format::Csv) {
    out << "i,j,k,value\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out << i << ',' << j << ',' << k << ',' << m(i, j, k) << '\n';
    return {out.str()};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      out << '(' << labels[i] << ")(" << labels[j] << ") =";
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        const auto c = m(i, j, k);
        if (c == 0) continue;
        out << (any ? (c < 0 ? " - " : " + ") : (c < 0 ? " -" : " "));
        if (std::abs(c) != 1) out << std::abs(c);
        out << '(' << labels[k] << ')';
        any = true;
      }
      out << (any ? "" : " 0") << '\n';
    }
  return {out.str()};
}

Document cmd_chartable(Pipeline& p, const RunConfig& config) {
  require_format(config, false);
  const auto& table = *p.characters();
  const auto& conj = table.element_classes();
  const auto& g = *p.group();
  std::vector<int> fs;
  for (std::size_t k = 0; k < table.size(); ++k) fs.push_back(frobenius_schur(table, k));
  if (config.format == Format::Json) {
    json classes = json::array();
    for (const auto& c : conj.classes())
      classes.push_back({{"representative", cycle_string(g.permutation(c.representative))},
                         {"size", c.size},
                         {"element_order", g.element_order(c.representative)}});
    json values = json::array();
    for (const auto& chi : table.chars()) {
      json row = json::array();
      for (const auto& z : chi) row.push_back({clean(z.real()), clean(z.imag())});
      values.push_back(row);
    }
    return {json{{"classes", classes}, {"degrees", table.degrees()}, {"values", values}, {"fs", fs}}.dump(2)};
  }
  std::ostringstream out;
  std::vector<std::string> rows, cols;
  for (std::size_t k = 0; k < table.size(); ++k) rows.push_back("X" + std::to_string(k + 1));
  for (const auto& c : conj.classes())
    cols.push_back(std::to_string(g.element_order(c.representative)) + "/" + std::to_string(c.size));
  out << "columns: element order / class size\n";
  out << grid(rows, cols, [&](std::size_t k, std::size_t j) {
    const auto z = table[k][j];
    if (std::abs(clean(z.imag())) == 0.0) return fmt_double(z.real());
    return fmt_double(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_double(std::abs(z.imag())) + "i";
  });
  out << "fs:";
  for (auto v : fs) out << ' ' << v;
  out << '\n';
  return {out.str()};
}

Document cmd_irreps(Pipeline& p, const RunConfig& config) {
  require_format(config, true);
  const auto& irreps = *p.irreps();
  const auto& d = *p.fixed_dims();
  const auto labels = class_labels(*p.classes());
  if (config.format == Format::Json) {
    json list = json::array();
    for (std::size_t k = 0; k < irreps.size(); ++k) {
      const auto& v = irreps[k];
      std::vector<std::size_t> prov;
      for (auto c : v.provenance) prov.push_back(c + 1);
      std::vector<double> chi;
      for (auto x : v.real_character) chi.push_back(clean(x));
      list.push_back({{"k", k + 1},
                      {"fs_type", type_name(v.type)},
                      {"dimension", v.real_dimension},
                      {"provenance", prov},
                      {"character", chi}});
    }
    json rows = json::array();
    for (std::size_t i = 0; i < d.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < d.cols(); ++k) row.push_back(d(i, k));
      rows.push_back(row);
    }
    return {json{{"order", labels}, {"irreps", list}, {"D", rows}}.dump(2)};
  }
  std::vector<std::string> cols;
  for (std::size_t k = 0; k < irreps.size(); ++k) cols.push_back("V" + std::to_string(k + 1));
  std::ostringstream out;
  if (config.format == Format::Csv) {
    out << "H";
    for (const auto& c : cols) out << ',' << c;
    out << '\n';
    for (std::size_t i = 0; i < d.rows(); ++i) {
      out << labels[i];
      for (std::size_t k = 0; k < d.cols(); ++k) out << ',' << d(i, k);
      out << '\n';
    }
    return {out.str()};
  }
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    const auto& v = irreps[k];
    out << cols[k] << "  dim " << v.real_dimension << "  " << type_name(v.type) << "  from X";
    for (std::size_t c = 0; c < v.provenance.size(); ++c) out << (c ? ",X" : "") << v.provenance[c] + 1;
    out << '\n';
  }
  out << "\nD[i][k] = dim V_k^H_i\n"
      << grid(labels, cols, [&](std::size_t i, std::size_t k) { return std::to_string(d(i, k)); });
  return {out.str()};
}

Document cmd_basic_degrees(Pipeline& p, const RunConfig& config) {
  require_format(config, true);
  const auto& basics = p.basic_degrees();
  const auto& irreps = *p.irreps();
  const auto labels = class_labels(*p.classes());
  if (config.format == Format::Json) {
    json list = json::array();
    for (const auto& b : basics)
      list.push_back({{"k", b.irrep_index + 1},
                      {"fs_type", type_name(irreps[b.irrep_index].type)},
                      {"coeffs", b.element.coeffs()},
                      {"ghost", b.ghost.values()}});
    return {json{{"order", labels}, {"basic_degrees", list}}.dump(2)};
  }
  std::ostringstream out;
  if (config.format == Format::Csv) {
    out << "k";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (const auto& b : basics) out << b.irrep_index + 1 << ',' << join(b.element.coeffs()) << '\n';
    return {out.str()};
  }
  out << "basis:";
  for (const auto& l : labels) out << " " << l;
  out << '\n';
  for (const auto& b : basics)
    out << "deg V" << b.irrep_index + 1 << " (" << type_name(irreps[b.irrep_index].type) << ")  coeffs ["
        << join(b.element.coeffs(), " ") << "]  ghost [" << join(b.ghost.values(), " ") << "]\n";
  return {out.str()};
}

Document cmd_units(Pipeline& p, const RunConfig& config) {
  require_format(config, true);
  const auto& psi = *p.marks();
  const auto units = enumerate_units(psi, config.caps.max_classes);
  const auto labels = class_labels(*p.classes());
  if (config.format == Format::Json) {
    json list = json::array();
    for (const auto& u : units) list.push_back(element_json(u, psi));
    return {json{{"order", labels}, {"units", list}}.dump(2)};
  }
  std::ostringstream out;
  if (config.format == Format::Csv) {
    out << "kind";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (const auto& u : units)
      out << "coeffs," << join(u.coeffs()) << "\nghost," << join(ghost_map(psi, u).values()) << '\n';
    return {out.str()};
  }
  out << units.size() << " units\n";
  for (const auto& u : units)
    out << "coeffs [" << join(u.coeffs(), " ") << "]  ghost [" << join(ghost_map(psi, u).values(), " ") << "]\n";
  return {out.str()};
}

Document cmd_factor(Pipeline& p, const RunConfig& config) {
  require_format(config, false);
  const auto& psi = *p.marks();
  const auto coeffs = parse_list_flag(config.coeffs, "--coeffs", psi.size());
  const BurnsideElement unit(p.classes(), coeffs);
  const auto ctx = factor_context(p);
  const auto delta = parity_vector(unit, psi);
  const auto solution = solve_parity(ctx.d, delta, config.min_weight);
  json j = {{"coeffs", coeffs}, {"delta", delta.bits}};
  bool verified = false;
  if (solution.mu) {
    verified = degree_product(*solution.mu, ctx.basics, ctx.tensor) == unit;
    j["mu"] = *solution.mu;
  } else {
    j["mu"] = nullptr;
    j["certificate"] = *solution.certificate;
  }
  j["verified"] = verified;
  const int code = verified ? kExitOk : kExitCounterexample;
  if (config.format == Format::Json) return {j.dump(2), code};
  std::ostringstream out;
  out << "unit   [" << join(coeffs, " ") << "]\n"
      << "delta  [" << join(delta.bits, " ") << "]\n";
  if (solution.mu)
    out << "mu     [" << join(*solution.mu, " ") << "]\n";
  else
    out << "mu     none (certificate rows [" << join(*solution.certificate, " ") << "])\n";
  out << "status " << (verified ? "verified" : "COUNTEREXAMPLE") << '\n';
  return {out.str(), code};
}

Document cmd_degree(Pipeline& p, const RunConfig& config) {
  require_format(config, false);
  if (config.mu && config.blocks) throw UsageError("--mu and --blocks are mutually exclusive");
  if (!config.mu && !config.blocks) throw UsageError("degree needs --mu or --blocks");
  const auto& psi = *p.marks();
  const auto r = p.fixed_dims()->cols();
  std::vector<std::int64_t> mu;
  if (config.mu) {
    mu = parse_list_flag(config.mu, "--mu", r);
    for (auto m : mu)
      if (m < 0) fail(ErrorKind::MalformedInput, "--mu entries must be nonnegative");
  } else {
    mu = negative_eigen_multiplicities(spectral_input_from_json(read_file(*config.blocks), r), r);
  }
  const auto element = degree_product(mu, p.basic_degrees(), *p.tensor());
  const auto ghost = ghost_map(psi, element);
  if (config.format == Format::Json)
    return {json{{"mu", mu}, {"coeffs", element.coeffs()}, {"ghost", ghost.values()}}.dump(2)};
  std::ostringstream out;
  out << "mu     [" << join(mu, " ") << "]\n"
      << "coeffs [" << join(element.coeffs(), " ") << "]\n"
      << "ghost  [" << join(ghost.values(), " ") << "]\n";
  return {out.str()};
}

Document cmd_verify(Pipeline& p, const RunConfig& config) {
  require_format(config, false);
  const auto report = verify_generation(p);
  const int code = report.status == VerificationStatus::Success ? kExitOk : kExitCounterexample;
  if (config.format == Format::Json) return {report_json(report).dump(2), code};
  std::ostringstream out;
  out << "group        " << report.group << '\n'
      << "N            " << report.n << '\n'
      << "r            " << report.r << '\n'
      << "units        " << report.unit_count << '\n'
      << "rank D mod 2 " << report.rank_d_mod2 << '\n';
  for (const auto& res : report.results) {
    out << "  [" << join(res.unit.coeffs(), " ") << "]  delta [" << join(res.delta, " ") << "]  ";
    if (res.mu)
      out << "mu [" << join(*res.mu, " ") << "]  " << (res.verified ? "ok" : "MISMATCH") << '\n';
    else
      out << "no solution, certificate [" << join(*res.certificate, " ") << "]\n";
  }
  out << "status       " << (code == kExitOk ? "SUCCESS" : "COUNTEREXAMPLE") << '\n';
  return {out.str(), code};
}

Document dispatch(Pipeline& p, const RunConfig& config) {
  switch (config.command) {
    case Command::Info: return cmd_info(p, config);
    case Command::Subgroups: return cmd_subgroups(p, config);
    case Command::Marks: return cmd_marks(p, config);
    case Command::Multable: return cmd_multable(p, config);
    case Command::Chartable: return cmd_chartable(p, config);
    case Command::Irreps: return cmd_irreps(p, config);
    case Command::BasicDegrees: return cmd_basic_degrees(p, config);
    case Command::Units: return cmd_units(p, config);
    case Command::Factor: return cmd_factor(p, config);
    case Command::Degree: return cmd_degree(p, config);
    case Command::Verify: return cmd_verify(p, config);
  }
  throw UsageError("unknown command");
}

void add_meta(std::string& document, double elapsed_ms) {
  auto j = json::parse(document);
  j["meta"] = {{"version", kVersion}, {"elapsed_ms", std::round(elapsed_ms * 1000.0) / 1000.0}};
  document = j.dump(2);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& c : kCommands)
    if (c.name == name) return c.command;
  return std::nullopt;
}

std::string_view command_name(Command command) {
  for (const auto& c : kCommands)
    if (c.command == command) return c.name;
  return "?";
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(pos, end - pos));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) fail(ErrorKind::MalformedInput, "empty entry in integer list \"" + std::string(text) + "\"");
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) fail(ErrorKind::MalformedInput, "not an integer: \"" + item + "\"");
    pos = end + 1;
  }
  return out;
}

json report_json(const VerificationReport& report) {
  json results = json::array();
  for (const auto& res : report.results) {
    json r = {{"coeffs", res.unit.coeffs()}, {"delta", res.delta}};
    r["mu"] = res.mu ? json(*res.mu) : json(nullptr);
    r["verified"] = res.verified;
    if (res.certificate) r["certificate"] = *res.certificate;
    results.push_back(r);
  }
  return {{"group", report.group},
          {"N", report.n},
          {"r", report.r},
          {"units", report.unit_count},
          {"rank_D_mod2", report.rank_d_mod2},
          {"results", results},
          {"status", report.status == VerificationStatus::Success ? "SUCCESS" : "COUNTEREXAMPLE"}};
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (config.group_spec.empty()) throw UsageError("missing required flag --group");
    auto pipeline = Pipeline::from_spec(config.group_spec, config.caps);
    auto doc = dispatch(pipeline, config);
    if (config.format == Format::Json) {
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      add_meta(doc.text, elapsed.count());
    }
    if (!doc.text.empty() && doc.text.back() != '\n') doc.text.push_back('\n');
    outcome.document = std::move(doc.text);
    outcome.exit_code = doc.exit_code;
    if (config.out_path) {
      std::ofstream out(*config.out_path, std::ios::binary);
      if (!out) fail(ErrorKind::MalformedInput, "cannot write " + *config.out_path);
      out << outcome.document;
    }
    if (outcome.exit_code == kExitCounterexample)
      outcome.error = "error: COUNTEREXAMPLE: some unit is not a verified product of basic degrees";
  } catch (const UsageError& e) {
    outcome = {kExitUsage, "", std::string("error: Usage: ") + e.what()};
  } catch (const Error& e) {
    outcome = {kExitComputation, "", "error: " + std::string(to_string(e.kind())) + ": " + e.what()};
  } catch (const json::exception& e) {
    outcome = {kExitComputation, "", std::string("error: MalformedInput: ") + e.what()};
  } catch (const std::exception& e) {
    outcome = {kExitComputation, "", std::string("error: Internal: ") + e.what()};
  }
  for (auto& c : outcome.error)
    if (c == '\n') c = ' ';
  return outcome;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burnside ring units and equivariant basic degrees of finite groups"};
  app.set_version_flag("--version", kVersion);

  std::string command;
  std::string format = "text";
  RunConfig config;
  std::string out_path, coeffs, mu, blocks;

  std::vector<std::string> names;
  for (const auto& c : kCommands) names.emplace_back(c.name);
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(names));
  app.add_option("--group", config.group_spec, "Group spec (cyclic:n, dihedral:n, symmetric:n, alternating:n, "
                                               "quaternion:8, product:A*B, file:PATH)")
      ->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "Write the document to this file");
  app.add_option("--coeffs", coeffs, "Unit coefficients for factor, comma separated");
  app.add_option("--mu", mu, "Irrep multiplicities for degree, comma separated");
  app.add_option("--blocks", blocks, "Spectral blocks JSON file for degree");
  app.add_option("--max-order", config.caps.max_order, "Largest group order accepted");
  app.add_option("--max-classes", config.caps.max_classes, "Largest class count for unit enumeration");
  app.add_option("--max-subgroups", config.caps.max_subgroups, "Largest subgroup count for enumeration");
  app.add_flag("--min-weight", config.min_weight, "factor: return the lightest solution mu");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == '\n') c = ' ';
    err << "error: Usage: " << msg << '\n';
    return kExitUsage;
  }

  config.command = *parse_command(command);
  config.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  if (!out_path.empty()) config.out_path = out_path;
  if (!coeffs.empty()) config.coeffs = coeffs;
  if (!mu.empty()) config.mu = mu;
  if (!blocks.empty()) config.blocks = blocks;

  const auto outcome = run(config);
  if (!config.out_path) out << outcome.document;
  if (!outcome.error.empty()) err << outcome.error << '\n';
  return outcome.exit_code;
}

}  // namespace burnside::cli
