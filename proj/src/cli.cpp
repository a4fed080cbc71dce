#include "nilhecke/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "nilhecke/errors.hpp"
#include "nilhecke/fixtures.hpp"
#include "nilhecke/homogeneous.hpp"
#include "nilhecke/invariants.hpp"
#include "nilhecke/json_io.hpp"
#include "nilhecke/schubert.hpp"
#include "nilhecke/verify.hpp"

namespace nilhecke {

namespace {

using json_io::json;

// Input errors detected after argument parsing (bad group, ring, relation
// text) are usage errors rather than computation errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::string datum_file;
  std::string ring = "Z";
  int max_degree = 8;
  std::string format = "text";
  int generator = 0;
  std::string subgroup = "trivial";
  std::string suite = "all";
  std::string relations;
  std::string which = "both";
  std::string strategy = "preset";
  std::string series = "quotient";
  std::string route = "integral";
  int samples = 100;
};

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

RootDatum resolve_datum(const Options& o) {
  return as_usage([&] {
    if (!o.datum_file.empty()) return json_io::read_datum_file(o.datum_file);
    if (o.group.empty()) throw UsageError("one of --group or --datum-file is required");
    return preset_datum(o.group);
  });
}

Ring resolve_ring(const std::string& text) {
  return as_usage([&] { return Ring::parse(text); });
}

std::vector<Polynomial> parse_relations(const std::string& text, const RootDatum& d, const Ring& ring) {
  return as_usage([&] {
    std::vector<Polynomial> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.find_first_not_of(' ') == std::string::npos) continue;
      out.push_back(parse_polynomial(item, d.var_names, ring));
    }
    return out;
  });
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string bracket(const WeylGroup& g, std::size_t w) {
  std::string s = "[";
  for (int i : g.element(w).word) s += std::to_string(i + 1);
  return s + "]";
}

int cmd_schubert(const Options& o, std::ostream& out) {
  const auto g = std::make_shared<const WeylGroup>(resolve_datum(o));
  const Ring ring = resolve_ring(o.ring);
  const TopStrategy strategy = as_usage([&] { return parse_strategy(o.strategy); });
  const auto family = schubert_family(g, ring, strategy);
  if (o.format == "json") {
    print_json(out, json_io::to_json(family));
    return kExitOk;
  }
  for (std::size_t w : matrix_basis_order(*g)) {
    out << "S_{" << g->word_string(w) << "} = " << family[w].to_string(g->datum().var_names) << "\n";
  }
  return kExitOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const auto g = std::make_shared<const WeylGroup>(resolve_datum(o));
  const Ring ring = resolve_ring(o.ring);
  if (o.generator < 1 || o.generator > static_cast<int>(g->num_simple())) {
    throw UsageError("--generator must be between 1 and " + std::to_string(g->num_simple()));
  }
  const auto basis = std::make_shared<const SWBasis>(g, ring);
  const SchubertExpander ex(schubert_family(g, ring), basis);
  const auto order = matrix_basis_order(*g);
  const auto m = reflection_matrix(ex, o.generator - 1, order);
  if (o.format == "json") {
    print_json(out, json_io::matrix_json(*g, o.generator, order, m, basis->names()));
    return kExitOk;
  }
  out << "basis:";
  for (std::size_t w : order) out << " " << bracket(*g, w);
  out << "\n";
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : m) {
    cells.emplace_back();
    for (const auto& p : row) {
      cells.back().push_back(p.to_string(basis->names()));
      width = std::max(width, cells.back().back().size());
    }
  }
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "  " : "") << std::setw(static_cast<int>(width)) << row[j];
    out << "\n";
  }
  return kExitOk;
}

int cmd_torsion(const Options& o, std::ostream& out) {
  const WeylGroup g(resolve_datum(o));
  const long t = torsion_index(g);
  if (o.format == "json") {
    print_json(out, {{"group", g.datum().name}, {"torsion_index", t}});
  } else {
    out << t << "\n";
  }
  return kExitOk;
}

json subspace_json(const GradedSubspace& s, const std::vector<std::string>& names) {
  json basis = json::array();
  for (const auto& level : s.basis) {
    json l = json::array();
    for (const auto& p : level) l.push_back(json_io::to_json(p, names));
    basis.push_back(l);
  }
  return {{"dims", s.dims()}, {"basis", basis}};
}

void print_subspace(std::ostream& out, const std::string& label, const GradedSubspace& s,
                    const std::vector<std::string>& names) {
  out << label << " dims:";
  for (auto d : s.dims()) out << " " << d;
  out << "\n";
  for (std::size_t d = 0; d < s.basis.size(); ++d) {
    if (s.basis[d].empty()) continue;
    out << "  degree " << d << ":";
    for (std::size_t k = 0; k < s.basis[d].size(); ++k) out << (k ? ", " : " ") << s.basis[d][k].to_string(names);
    out << "\n";
  }
}

json relations_json(const std::vector<Polynomial>& rel, const std::vector<std::string>& names) {
  json r = json::array();
  for (const auto& p : rel) r.push_back(p.to_string(names));
  return r;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const auto g = std::make_shared<const WeylGroup>(resolve_datum(o));
  const Ring ring = resolve_ring(o.ring);
  if (o.which != "W" && o.which != "ID" && o.which != "both") throw UsageError("--which must be W, ID or both");
  const auto& names = g->datum().var_names;
  const auto rel = parse_relations(o.relations, g->datum(), ring);
  const QuotientModule module(std::make_shared<const DemazureCalculus>(g, ring), rel, o.max_degree);
  json j = {{"group", g->datum().name}, {"ring", ring.to_string()}, {"relations", relations_json(rel, names)}};
  if (o.format == "text") out << g->datum().name << " over " << ring.to_string() << "\n";
  for (const auto& [label, kind] : {std::pair{"W", InvariantKind::W}, std::pair{"ID", InvariantKind::ID}}) {
    if (o.which != "both" && o.which != label) continue;
    const auto s = invariants_graded(module, kind);
    if (o.format == "json") {
      j[label] = subspace_json(s, names);
    } else {
      print_subspace(out, std::string("A^") + (kind == InvariantKind::W ? "W" : "I(D)"), s, names);
    }
  }
  if (o.format == "json") print_json(out, j);
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto g = std::make_shared<const WeylGroup>(resolve_datum(o));
  const Ring ring = resolve_ring(o.ring);
  const auto& names = g->datum().var_names;
  const auto rel = parse_relations(o.relations, g->datum(), ring);
  const auto family = schubert_family(g, ring);
  const QuotientModule module(family.calc, rel, o.max_degree);
  const auto dec = decompose_AW(module, family);
  if (o.format == "json") {
    print_json(out, {{"group", g->datum().name},
                     {"ring", ring.to_string()},
                     {"relations", relations_json(rel, names)},
                     {"id_part", subspace_json(dec.id_part, names)},
                     {"j_part", subspace_json(dec.j_part, names)}});
    return kExitOk;
  }
  out << g->datum().name << " over " << ring.to_string() << "\n";
  print_subspace(out, "psi(A^W)", dec.id_part, names);
  print_subspace(out, "A^J", dec.j_part, names);
  return kExitOk;
}

int cmd_table_check(const Options& o, std::ostream& out) {
  std::vector<TableRow> rows;
  if (o.group.empty()) {
    rows = fixtures::table_rows();
  } else {
    rows.push_back(as_usage([&] { return fixtures::table_row(o.group); }));
  }
  bool all = true;
  json reports = json::array();
  for (const auto& row : rows) {
    const auto r = table_row_check(row, o.max_degree);
    all = all && r.pass();
    if (o.format == "json") {
      reports.push_back(json_io::to_json(r));
      continue;
    }
    out << row.group << ": " << (r.pass() ? "PASS" : "FAIL") << " (forward " << (r.forward_ok ? "ok" : "failed")
        << ", converse " << (r.converse_ok ? "ok" : "failed") << ")\n";
    if (!r.pass()) out << "  first failure: " << r.first_failure << "\n";
    for (const auto& d : r.details) out << "  " << d << "\n";
  }
  if (o.format == "json") print_json(out, reports);
  return all ? kExitOk : kExitComputation;
}

void print_series(std::ostream& out, const Options& o, const HilbertSeries& s) {
  if (o.format == "json") {
    print_json(out, json_io::to_json(s));
    return;
  }
  out << s.to_string() << "\n";
  if (!s.closed_form.empty() && s.closed_form != s.to_string()) out << "closed form: " << s.closed_form << "\n";
  for (const auto& w : s.warnings) out << "warning: " << w << "\n";
}

int cmd_poincare(const Options& o, std::ostream& out) {
  const WeylGroup g(resolve_datum(o));
  const Ring ring = resolve_ring(o.ring);
  const auto sub = as_usage([&] { return parse_subgroup(g, o.subgroup); });
  HilbertSeries s;
  if (o.series == "quotient") {
    s = quotient_poincare(g, sub, ring, o.max_degree);
  } else if (o.series == "coset") {
    s = coset_length_series(g, sub);
  } else if (o.series == "flag") {
    s = flag_poincare(g);
  } else if (o.series == "invariants") {
    s = invariant_series(g, sub, ring, o.max_degree);
  } else {
    throw UsageError("--series must be quotient, coset, flag or invariants");
  }
  print_series(out, o, s);
  return kExitOk;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  const WeylGroup g(resolve_datum(o));
  const Ring ring = resolve_ring(o.ring);
  const auto sub = as_usage([&] { return parse_subgroup(g, o.subgroup); });
  if (o.route != "integral" && o.route != "direct") throw UsageError("--route must be integral or direct");
  print_series(out, o,
               tensor_square_dims(g, sub, ring, o.max_degree,
                                  o.route == "direct" ? TensorRoute::Direct : TensorRoute::Integral));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.bound = o.max_degree;
  vo.samples = o.samples;
  if (!o.group.empty() || !o.datum_file.empty()) vo.data.push_back(resolve_datum(o));
  if (o.suite == "orthogonality") {
    std::vector<RootDatum> data = vo.data;
    if (data.empty()) {
      for (const auto& n : preset_names()) data.push_back(preset_datum(n));
    }
    const auto lines = orthogonality_experiment(data);
    if (o.format == "json") {
      print_json(out, {{"experiment", "orthogonality"}, {"results", lines}});
    } else {
      for (const auto& l : lines) out << l << "\n";
    }
    return kExitOk;
  }
  const auto names = suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  const auto results = run_suite(o.suite, vo);
  bool all = true;
  json j = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    j.push_back({{"criterion", r.criterion}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (o.format == "text") {
      out << std::setw(2) << r.criterion << "  " << std::left << std::setw(40) << r.name << std::right << "  "
          << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << "\n";
    }
  }
  if (o.format == "json") print_json(out, j);
  return all ? kExitOk : kExitComputation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divided-difference calculus for compact Lie groups", "nilhecke"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* c) {
    auto* g = c->add_option("--group", o.group, "Preset group (U2..U6, SU2..SU7, SO3, PSU3, Sp2)");
    auto* f = c->add_option("--datum-file", o.datum_file, "Root datum JSON file");
    g->excludes(f);
  };
  auto add_common = [&](CLI::App* c, const std::string& ring_default) {
    o.ring = ring_default;
    c->add_option("--ring", o.ring, "Z, Q, Z/m or Z[1/n,...]")->capture_default_str();
    c->add_option("--max-degree", o.max_degree, "Polynomial degree bound")->capture_default_str();
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomials of a group");
  add_group(schubert);
  add_common(schubert, "Z");
  add_format(schubert);
  schubert->add_option("--strategy", o.strategy, "Top class: preset, solve or discriminant")->capture_default_str();

  auto* matrix = app.add_subcommand("matrix", "Matrix of a simple reflection on the Schubert basis");
  add_group(matrix);
  add_common(matrix, "Z");
  add_format(matrix);
  matrix->add_option("--generator", o.generator, "Simple reflection index (1-based)")->required();

  auto* torsion = app.add_subcommand("torsion", "Torsion index");
  add_group(torsion);
  add_format(torsion);

  auto* invariants = app.add_subcommand("invariants", "W- and I(D)-invariants of S/(relations)");
  add_group(invariants);
  add_common(invariants, "Q");
  add_format(invariants);
  invariants->add_option("--relations", o.relations, "Comma-separated relations in the datum variables");
  invariants->add_option("--which", o.which, "W, ID or both")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Split A^W into psi(A^W) and A^J");
  add_group(decompose);
  add_common(decompose, "Q");
  add_format(decompose);
  decompose->add_option("--relations", o.relations, "Comma-separated relations in the datum variables");

  auto* table = app.add_subcommand("table-check", "Check rows of the invariant table");
  table->add_option("--group", o.group, "Row to check (default: all rows)");
  table->add_option("--max-degree", o.max_degree, "Polynomial degree bound")->capture_default_str();
  add_format(table);

  auto* poincare = app.add_subcommand("poincare", "Hilbert series of a homogeneous space");
  add_group(poincare);
  add_common(poincare, "Q");
  add_format(poincare);
  poincare->add_option("--subgroup", o.subgroup, "Comma-separated roots, 'trivial' or 'full'")->capture_default_str();
  poincare->add_option("--series", o.series, "quotient, coset, flag or invariants")->capture_default_str();

  auto* tensor = app.add_subcommand("tensor", "Tensor square of S^{W_U} over S^W");
  add_group(tensor);
  add_common(tensor, "Q");
  add_format(tensor);
  tensor->add_option("--subgroup", o.subgroup, "Comma-separated roots, 'trivial' or 'full'")->capture_default_str();
  tensor->add_option("--route", o.route, "integral or direct")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  add_group(verify);
  add_format(verify);
  verify->add_option("--suite", o.suite, "Suite name, 'all' or 'orthogonality'")->capture_default_str();
  verify->add_option("--max-degree", o.max_degree, "Polynomial degree bound")->capture_default_str();
  verify->add_option("--samples", o.samples, "Random samples per check")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  // The ring default depends on the verb; add_common above set the last one.
  const std::vector<std::pair<CLI::App*, std::string>> ring_defaults = {
      {schubert, "Z"}, {matrix, "Z"}, {invariants, "Q"}, {decompose, "Q"}, {poincare, "Q"}, {tensor, "Q"}};
  for (const auto& [cmd, def] : ring_defaults) {
    if (cmd->parsed() && cmd->count("--ring") == 0) o.ring = def;
  }
  if (o.max_degree < 0) {
    err << "error: --max-degree must be nonnegative\n";
    return kExitUsage;
  }

  try {
    if (schubert->parsed()) return cmd_schubert(o, out);
    if (matrix->parsed()) return cmd_matrix(o, out);
    if (torsion->parsed()) return cmd_torsion(o, out);
    if (invariants->parsed()) return cmd_invariants(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (table->parsed()) return cmd_table_check(o, out);
    if (poincare->parsed()) return cmd_poincare(o, out);
    if (tensor->parsed()) return cmd_tensor(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace nilhecke
