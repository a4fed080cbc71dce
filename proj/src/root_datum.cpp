#include "nilhecke/root_datum.hpp"

#include <regex>

#include "nilhecke/errors.hpp"

namespace nilhecke {

long RootDatum::pair_with_coroot(const IntVec& lambda, std::size_t i) const {
  long s = 0;
  for (std::size_t k = 0; k < rank; ++k) s += lambda[k] * simple_coroots[i][k];
  return s;
}

IntMat RootDatum::cartan_matrix() const {
  const std::size_t n = num_simple();
  IntMat c(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c[i][j] = pair_with_coroot(simple_roots[i], j);
  }
  return c;
}

void RootDatum::validate() const {
  if (rank == 0 || rank > Exponent::kMaxVars) {
    throw InvalidCartanData("rank must be between 1 and " + std::to_string(Exponent::kMaxVars));
  }
  if (var_names.size() != rank) throw InvalidCartanData("need one variable name per basis character");
  if (simple_roots.size() != simple_coroots.size()) {
    throw InvalidCartanData("number of roots and coroots differ");
  }
  for (std::size_t i = 0; i < num_simple(); ++i) {
    if (simple_roots[i].size() != rank || simple_coroots[i].size() != rank) {
      throw InvalidCartanData("root or coroot " + std::to_string(i + 1) + " has wrong length");
    }
  }
  const IntMat c = cartan_matrix();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i][i] != 2) throw InvalidCartanData("<alpha_i, alpha_i^vee> != 2 for i=" + std::to_string(i + 1));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) throw InvalidCartanData("positive off-diagonal Cartan entry");
      if ((c[i][j] == 0) != (c[j][i] == 0)) throw InvalidCartanData("Cartan zero pattern not symmetric");
      if (c[i][j] * c[j][i] > 3) throw InvalidCartanData("non-crystallographic Cartan product");
    }
  }
}

Polynomial RootDatum::character(const IntVec& lambda, const Ring& ring) const {
  return Polynomial::linear_form(ring, lambda);
}

Polynomial RootDatum::simple_root(std::size_t i, const Ring& ring) const {
  return character(simple_roots.at(i), ring);
}

RootDatum make_datum(std::string name, std::vector<IntVec> roots, std::vector<IntVec> coroots,
                     std::vector<std::string> var_names) {
  RootDatum d;
  d.name = std::move(name);
  d.rank = roots.empty() ? (coroots.empty() ? var_names.size() : coroots[0].size()) : roots[0].size();
  d.var_names = var_names.empty() ? default_var_names(d.rank) : std::move(var_names);
  d.simple_roots = std::move(roots);
  d.simple_coroots = std::move(coroots);
  d.validate();
  return d;
}

namespace {

RootDatum unitary(std::size_t n) {
  std::vector<IntVec> roots;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVec a(n, 0);
    a[i] = 1;
    a[i + 1] = -1;
    roots.push_back(a);
  }
  return make_datum("U" + std::to_string(n), roots, roots);
}

// X(T) = Z^n / (1,...,1) with basis the images of e_1..e_{n-1}; e_n = -(e_1+...+e_{n-1}).
RootDatum special_unitary(std::size_t n) {
  const std::size_t r = n - 1;
  std::vector<IntVec> roots, coroots;
  for (std::size_t i = 0; i < r; ++i) {
    IntVec a(r, 0), c(r, 0);
    a[i] = 1;
    c[i] = 1;
    if (i + 1 < r) {
      a[i + 1] = -1;
      c[i + 1] = -1;
    } else {
      for (auto& x : a) x += 1;  // subtracting e_n adds e_1+...+e_{n-1}
    }
    roots.push_back(a);
    coroots.push_back(c);
  }
  return make_datum("SU" + std::to_string(n), roots, coroots);
}

}  // namespace

RootDatum preset_datum(const std::string& name) {
  static const std::regex family(R"((S?U)([1-9]))");
  std::smatch m;
  if (std::regex_match(name, m, family)) {
    const std::size_t n = std::stoul(m[2]);
    if (m[1] == "U" && n >= 2 && n <= 6) return unitary(n);
    if (m[1] == "SU" && n >= 2 && n <= 7) return special_unitary(n);
  }
  if (name == "SO3") return make_datum("SO3", {{1}}, {{2}}, {"a"});
  if (name == "PSU3") return make_datum("PSU3", {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}}, {"a1", "a2"});
  if (name == "Sp2") return make_datum("Sp2", {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}});
  throw UnknownPreset("no preset named '" + name + "'");
}

std::vector<std::string> preset_names() { return {"U2", "U3", "U4", "SU2", "SU3", "SO3", "PSU3", "Sp2"}; }

bool is_preset_name(const std::string& name) {
  try {
    preset_datum(name);
    return true;
  } catch (const UnknownPreset&) {
    return false;
  }
}

std::string matching_preset(const RootDatum& d) {
  if (d.name.empty() || !is_preset_name(d.name)) return "";
  const RootDatum p = preset_datum(d.name);
  if (p.simple_roots != d.simple_roots || p.simple_coroots != d.simple_coroots) return "";
  return d.name;
}

IntVec parse_character(const std::string& text, const RootDatum& datum) {
  Polynomial p = parse_polynomial(text, datum.var_names, Ring::integers());
  IntVec v(datum.rank, 0);
  for (const auto& [e, c] : p.terms()) {
    if (e.degree() != 1) throw ParseError("'" + text + "' is not a linear form");
    std::size_t k = 0;
    while (e[k] == 0) ++k;
    v[k] = c.get_num().get_si();
  }
  return v;
}

}  // namespace nilhecke
