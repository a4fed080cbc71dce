#include "nilhecke/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "nilhecke/errors.hpp"

namespace nilhecke::json_io {

json to_json(const Polynomial& f, const std::vector<std::string>& names) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"exp", e.to_vector()}, {"coeff", scalar_to_string(c)}});
  }
  return {{"vars", names}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j, const Ring& ring) {
  try {
    const auto names = j.at("vars").get<std::vector<std::string>>();
    Polynomial f(ring, names.size());
    for (const auto& t : j.at("terms")) {
      const auto exp = t.at("exp").get<std::vector<int>>();
      if (exp.size() != names.size()) throw ParseError("exponent length does not match vars");
      f.add_term(Exponent(exp), ring.normalize(scalar_from_string(t.at("coeff").get<std::string>())));
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

json to_json(const RootDatum& datum) {
  return {{"name", datum.name},
          {"rank", datum.rank},
          {"simple_roots", datum.simple_roots},
          {"simple_coroots", datum.simple_coroots},
          {"vars", datum.var_names}};
}

RootDatum datum_from_json(const json& j) {
  try {
    auto roots = j.at("simple_roots").get<std::vector<IntVec>>();
    auto coroots = j.at("simple_coroots").get<std::vector<IntVec>>();
    std::vector<std::string> vars;
    if (j.contains("vars")) vars = j.at("vars").get<std::vector<std::string>>();
    RootDatum d = make_datum(j.value("name", std::string("custom")), std::move(roots), std::move(coroots),
                             std::move(vars));
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != d.rank) {
      throw InvalidCartanData("rank field disagrees with the root coordinates");
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("root datum JSON: ") + e.what());
  }
}

RootDatum read_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return datum_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json word_json(const Word& word) {
  json w = json::array();
  for (int i : word) w.push_back(i + 1);
  return w;
}

std::vector<std::size_t> family_order(const WeylGroup& group) {
  std::vector<std::size_t> order(group.order());
  for (std::size_t w = 0; w < order.size(); ++w) order[w] = w;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = group.element(a);
    const auto& y = group.element(b);
    if (x.length != y.length) return x.length < y.length;
    return x.word < y.word;
  });
  return order;
}

json to_json(const DemazureElement& x, const WeylGroup& group) {
  json terms = json::array();
  for (std::size_t w : family_order(group)) {
    auto it = x.terms.find(w);
    if (it == x.terms.end() || it->second.is_zero()) continue;
    terms.push_back({{"word", word_json(group.element(w).word)}, {"coeff", to_json(it->second, group.datum().var_names)}});
  }
  return {{"terms", terms}};
}

json to_json(const SchubertFamily& family) {
  const WeylGroup& g = family.group();
  json members = json::array();
  for (std::size_t w : family_order(g)) {
    members.push_back({{"word", word_json(g.element(w).word)}, {"poly", to_json(family[w], g.datum().var_names)}});
  }
  return {{"group", g.datum().name},
          {"ring", family.ring().to_string()},
          {"torsion_index", family.torsion},
          {"members", members}};
}

json matrix_json(const WeylGroup& group, int generator, const std::vector<std::size_t>& order,
                 const PolyMatrix& entries, const std::vector<std::string>& names) {
  json basis = json::array();
  for (std::size_t w : order) basis.push_back(word_json(group.element(w).word));
  json rows = json::array();
  for (const auto& row : entries) {
    json r = json::array();
    for (const auto& p : row) r.push_back(to_json(p, names));
    rows.push_back(r);
  }
  return {{"group", group.datum().name}, {"generator", generator}, {"basis_order", basis}, {"entries", rows}};
}

json to_json(const HilbertSeries& s) {
  return {{"coeffs", s.coeffs}, {"closed_form", s.closed_form}, {"warnings", s.warnings}};
}

json to_json(const TableRowReport& report) {
  return {{"group", report.group},
          {"pass", report.pass()},
          {"forward", report.forward_ok},
          {"converse", report.converse_ok},
          {"first_failure", report.first_failure},
          {"details", report.details}};
}

}  // namespace nilhecke::json_io
