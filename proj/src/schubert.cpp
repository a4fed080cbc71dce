#include "nilhecke/schubert.hpp"

#include <functional>
#include <numeric>

#include "nilhecke/errors.hpp"
#include "nilhecke/graded.hpp"

namespace nilhecke {

namespace {

std::shared_ptr<const WeylGroup> borrow(const WeylGroup& g) {
  return std::shared_ptr<const WeylGroup>(&g, [](const WeylGroup*) {});
}

// Builds a polynomial over `ring` from rational coefficients.
Polynomial coerce(const Polynomial& over_q, const Ring& ring) {
  Polynomial out(ring, over_q.nvars());
  for (const auto& [e, c] : over_q.terms()) out.add_term(e, ring.normalize(c));
  return out;
}

Polynomial elementary_symmetric(std::size_t nvars, std::size_t k) {
  Polynomial p(Ring::integers(), nvars);
  std::vector<int> pick(nvars, 0);
  std::fill(pick.end() - static_cast<long>(k), pick.end(), 1);
  do {
    Exponent e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) e.set(i, pick[i]);
    p.add_term(e, 1);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return p;
}

// e_n -> -(e_1 + ... + e_{n-1})
Polynomial restrict_to_su(const Polynomial& f, std::size_t n) {
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k + 1 < n; ++k) images.push_back(Polynomial::variable(f.ring(), n - 1, k));
  images.push_back(-Polynomial::linear_form(f.ring(), IntVec(n - 1, 1)));
  return f.substitute(images);
}

// SU3 coordinates in terms of the root lattice basis a1, a2:
// e1 = (2 a1 + a2)/3, e2 = (-a1 + a2)/3.
Polynomial su3_to_psu3(const Polynomial& f) {
  const Ring q = Ring::rationals();
  Polynomial g = change_ring(f, q);
  return g.substitute({Polynomial::linear_form(q, std::vector<Scalar>{Scalar(2, 3), Scalar(1, 3)}),
                       Polynomial::linear_form(q, std::vector<Scalar>{Scalar(-1, 3), Scalar(1, 3)})});
}

Polynomial staircase(std::size_t nvars, std::size_t l) {
  Exponent e(nvars);
  for (std::size_t k = 0; k < l; ++k) e.set(k, static_cast<int>(l - k));
  return Polynomial::monomial(Ring::rationals(), e);
}

std::optional<Polynomial> preset_top_over_q(const RootDatum& d) {
  const std::string name = matching_preset(d);
  if (name.empty()) return std::nullopt;
  if (name[0] == 'U') return staircase(d.rank, d.rank - 1);
  if (name.rfind("SU", 0) == 0) return staircase(d.rank, d.rank);
  if (name == "Sp2") return Polynomial::monomial(Ring::rationals(), Exponent{3, 1});
  if (name == "SO3") return Polynomial::monomial(Ring::rationals(), Exponent{1}, Scalar(1, 2));
  if (name == "PSU3") return su3_to_psu3(staircase(2, 2));
  return std::nullopt;
}

Polynomial solve_top_over_q(const WeylGroup& g, long t) {
  DemazureCalculus calc(borrow(g), Ring::integers());
  const int n = static_cast<int>(g.num_positive_roots());
  mpz_class acc = 0;
  Polynomial combo(Ring::integers(), g.rank());
  for (const Exponent& e : monomials_of_degree(g.rank(), n)) {
    const Polynomial m = Polynomial::monomial(Ring::integers(), e);
    const mpz_class v = calc.partial(g.longest(), m).constant_term().get_num();
    if (v == 0) continue;
    mpz_class gcd, x, y;
    mpz_gcdext(gcd.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
    combo = combo * Scalar(x) + m * Scalar(y);
    acc = gcd;
  }
  if (acc != t) throw InternalError("extended gcd did not reach the torsion index");
  return change_ring(combo, Ring::rationals()) * Scalar(1, t);
}

}  // namespace

long torsion_index(const WeylGroup& group) {
  DemazureCalculus calc(borrow(group), Ring::integers());
  mpz_class g = 0;
  for (const Exponent& e : monomials_of_degree(group.rank(), static_cast<int>(group.num_positive_roots()))) {
    const Scalar v = calc.partial(group.longest(), Polynomial::monomial(Ring::integers(), e)).constant_term();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0) throw InternalError("d_{w0} vanishes on all top-degree monomials");
  return g.get_si();
}

TopStrategy parse_strategy(const std::string& text) {
  if (text == "preset") return TopStrategy::Preset;
  if (text == "solve") return TopStrategy::Solve;
  if (text == "discriminant") return TopStrategy::Discriminant;
  throw ParseError("unknown top-class strategy '" + text + "'");
}

std::string to_string(TopStrategy s) {
  switch (s) {
    case TopStrategy::Preset: return "preset";
    case TopStrategy::Solve: return "solve";
    case TopStrategy::Discriminant: return "discriminant";
  }
  return "?";
}

Polynomial top_class(const WeylGroup& group, const Ring& ring, TopStrategy strategy) {
  const long t = torsion_index(group);
  if (!ring.inverts(t)) {
    throw TorsionNotInvertible("torsion index " + std::to_string(t) + " is not a unit in " + ring.to_string());
  }
  Polynomial over_q(Ring::rationals(), group.rank());
  if (strategy == TopStrategy::Discriminant) {
    const long order = static_cast<long>(group.order());
    if (!ring.inverts(order)) {
      throw TorsionNotInvertible("|W| = " + std::to_string(order) + " is not a unit in " + ring.to_string());
    }
    over_q = group.discriminant(Ring::rationals()) * Scalar(1, order);
  } else if (auto p = strategy == TopStrategy::Preset ? preset_top_over_q(group.datum()) : std::nullopt) {
    over_q = *p;
  } else {
    over_q = solve_top_over_q(group, t);
  }
  Polynomial top = coerce(over_q, ring);
  DemazureCalculus calc(borrow(group), ring);
  if (calc.partial(group.longest(), top) != calc.one()) throw InternalError("top class does not satisfy d_{w0} = 1");
  return top;
}

SchubertFamily schubert_family(std::shared_ptr<const WeylGroup> group, const Ring& ring, TopStrategy strategy) {
  SchubertFamily fam;
  fam.strategy = strategy;
  fam.torsion = torsion_index(*group);
  fam.top = top_class(*group, ring, strategy);
  fam.calc = std::make_shared<const DemazureCalculus>(group, ring);
  const WeylGroup& g = *group;
  fam.members.reserve(g.order());
  for (std::size_t w = 0; w < g.order(); ++w) {
    fam.members.push_back(fam.calc->partial(g.multiply(g.inverse(w), g.longest()), fam.top));
  }
  if (fam.members[0] != fam.calc->one()) throw InternalError("S_1 != 1");
  return fam;
}

// ---------------------------------------------------------------------------

std::vector<Polynomial> computed_fundamental_invariants(const WeylGroup& group) {
  const std::size_t r = group.rank();
  const auto gens = simple_reflection_elements(group);
  std::vector<Polynomial> found;
  std::vector<int> degrees;
  for (int d = 1; found.size() < r; ++d) {
    if (d > 64) throw InternalError("fundamental invariants not found below degree 64");
    const MonomialBasis basis(r, d);
    linalg::EchelonBasis span(Ring::rationals(), basis.size());
    // Products of the generators found so far.
    std::function<void(std::size_t, int, Polynomial)> products = [&](std::size_t j, int left, Polynomial acc) {
      if (left == 0) {
        span.insert(basis.coords(acc));
        return;
      }
      for (std::size_t k = j; k < found.size(); ++k) {
        if (degrees[k] <= left) products(k, left - degrees[k], acc * found[k]);
      }
    };
    products(0, d, Polynomial::constant(Ring::integers(), r, 1));
    for (const auto& row : invariant_lattice(group, gens, d)) {
      linalg::Vector v(row.begin(), row.end());
      if (span.insert(v)) {
        found.push_back(basis.polynomial(v, Ring::integers()));
        degrees.push_back(d);
      }
    }
  }
  return found;
}

SWBasis::SWBasis(std::shared_ptr<const WeylGroup> group, const Ring& ring) : group_(std::move(group)), ring_(ring) {
  const RootDatum& d = group_->datum();
  const std::string name = matching_preset(d);
  std::vector<Polynomial> over_q;
  if (!name.empty() && name[0] == 'U') {
    for (std::size_t k = 1; k <= d.rank; ++k) {
      over_q.push_back(elementary_symmetric(d.rank, k));
      names_.push_back("p" + std::to_string(k));
    }
  } else if (name.rfind("SU", 0) == 0) {
    for (std::size_t k = 2; k <= d.rank + 1; ++k) {
      over_q.push_back(restrict_to_su(elementary_symmetric(d.rank + 1, k), d.rank + 1));
      names_.push_back("q" + std::to_string(k));
    }
  } else if (name == "Sp2") {
    over_q.push_back(parse_polynomial("e1^2+e2^2", d.var_names, Ring::integers()));
    over_q.push_back(parse_polynomial("e1^2*e2^2", d.var_names, Ring::integers()));
    names_ = {"p1", "p2"};
  } else if (name == "SO3") {
    over_q.push_back(parse_polynomial("a^2", d.var_names, Ring::integers()));
    names_ = {"p1"};
  } else if (name == "PSU3") {
    for (std::size_t k = 2; k <= 3; ++k) {
      over_q.push_back(su3_to_psu3(restrict_to_su(elementary_symmetric(3, k), 3)));
      names_.push_back("q" + std::to_string(k));
    }
  }
  bool fits = !over_q.empty();
  for (const auto& p : over_q) {
    for (const auto& [e, c] : p.terms()) fits = fits && ring_.contains(c);
  }
  if (!fits) {
    preset_ = false;
    names_.clear();
    over_q = computed_fundamental_invariants(*group_);
    for (std::size_t k = 0; k < over_q.size(); ++k) names_.push_back("f" + std::to_string(k + 1));
  }
  for (const auto& p : over_q) {
    gens_.push_back(coerce(p, ring_));
    degrees_.push_back(p.degree());
  }
}

std::vector<Exponent> SWBasis::generator_monomials(int d) const {
  std::vector<Exponent> out;
  if (d < 0) return out;
  const std::size_t k = gens_.size();
  Exponent e(k);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j == k) {
      if (left == 0) out.push_back(e);
      return;
    }
    for (int a = left / degrees_[j]; a >= 0; --a) {
      e.set(j, a);
      rec(j + 1, left - a * degrees_[j]);
    }
    e.set(j, 0);
  };
  rec(0, d);
  return out;
}

Polynomial SWBasis::evaluate_monomial(const Exponent& e) const {
  Polynomial p = Polynomial::constant(ring_, group_->rank(), 1);
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (e[j] > 0) p *= gens_[j].pow(static_cast<unsigned>(e[j]));
  }
  return p;
}

Polynomial SWBasis::evaluate(const Polynomial& in_generators) const {
  Polynomial out(ring_, group_->rank());
  for (const auto& [e, c] : in_generators.terms()) out += evaluate_monomial(e) * c;
  return out;
}

Polynomial SWBasis::to_generators(const Polynomial& invariant) const {
  const Ring field = solving_field(ring_);
  Polynomial out(ring_, gens_.size());
  if (invariant.is_zero()) return out;
  for (int d = 0; d <= invariant.degree(); ++d) {
    const Polynomial part = invariant.homogeneous_part(d);
    if (part.is_zero()) continue;
    const MonomialBasis basis(group_->rank(), d);
    const auto monos = generator_monomials(d);
    linalg::Matrix a(basis.size(), linalg::Vector(monos.size()));
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const linalg::Vector col = basis.coords(evaluate_monomial(monos[j]));
      for (std::size_t i = 0; i < basis.size(); ++i) a[i][j] = col[i];
    }
    auto x = linalg::solve(a, monos.size(), basis.coords(part), field);
    if (!x) throw ExpansionFailed("polynomial of degree " + std::to_string(d) + " is not in the span of the generators");
    for (std::size_t j = 0; j < monos.size(); ++j) {
      if ((*x)[j] == 0) continue;
      if (!ring_.contains((*x)[j])) throw ExpansionFailed("coefficient " + scalar_to_string((*x)[j]) + " not in " + ring_.to_string());
      out.add_term(monos[j], ring_.normalize((*x)[j]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SchubertExpander::SchubertExpander(SchubertFamily family, std::shared_ptr<const SWBasis> basis)
    : family_(std::move(family)), basis_(std::move(basis)) {
  if (family_.ring() != basis_->ring()) throw RingMismatch("family and S^W basis use different rings");
}

Ring SchubertExpander::solve_field() const { return solving_field(family_.ring()); }

std::shared_ptr<const SchubertExpander::Degree> SchubertExpander::degree_data(int d) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
  }
  auto data = std::make_shared<Degree>();
  const WeylGroup& g = family_.group();
  const MonomialBasis basis(g.rank(), d);
  data->monomials = basis.monomials();
  linalg::Matrix cols;
  for (std::size_t w = 0; w < g.order(); ++w) {
    for (const Exponent& b : basis_->generator_monomials(d - g.element(w).length)) {
      data->columns.emplace_back(w, b);
      cols.push_back(basis.coords(basis_->evaluate_monomial(b) * family_[w]));
    }
  }
  if (cols.size() != basis.size()) {
    throw ExpansionFailed("degree " + std::to_string(d) + ": " + std::to_string(cols.size()) +
                          " products for " + std::to_string(basis.size()) + " monomials");
  }
  linalg::Matrix a(basis.size(), linalg::Vector(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) a[i][j] = cols[j][i];
  }
  auto inv = linalg::inverse(a, solve_field());
  if (!inv) throw ExpansionFailed("Schubert products are dependent in degree " + std::to_string(d));
  data->inverse = std::move(*inv);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(d, data).first->second;
}

std::map<std::size_t, Polynomial> SchubertExpander::expand(const Polynomial& f) const {
  const Ring& ring = family_.ring();
  std::map<std::size_t, Polynomial> out;
  if (f.is_zero()) return out;
  for (int d = 0; d <= f.degree(); ++d) {
    const Polynomial part = f.homogeneous_part(d);
    if (part.is_zero()) continue;
    auto data = degree_data(d);
    const MonomialBasis basis(family_.group().rank(), d);
    const linalg::Vector x = linalg::mat_vec(data->inverse, basis.coords(part), solve_field());
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] == 0) continue;
      if (!ring.contains(x[j])) {
        throw ExpansionFailed("coefficient " + scalar_to_string(x[j]) + " not in " + ring.to_string());
      }
      const auto& [w, b] = data->columns[j];
      auto it = out.try_emplace(w, Polynomial(ring, basis_->size())).first;
      it->second.add_term(b, ring.normalize(x[j]));
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

Polynomial SchubertExpander::recombine(const std::map<std::size_t, Polynomial>& coeffs) const {
  Polynomial out(family_.ring(), family_.group().rank());
  for (const auto& [w, p] : coeffs) out += basis_->evaluate(p) * family_[w];
  return out;
}

bool is_unitary_datum(const RootDatum& datum) {
  if (datum.rank < 2) return false;
  RootDatum u = preset_datum("U" + std::to_string(datum.rank));
  return datum.simple_roots == u.simple_roots && datum.simple_coroots == u.simple_coroots;
}

std::vector<Polynomial> dual_family(const SchubertFamily& family) {
  const WeylGroup& g = family.group();
  if (!is_unitary_datum(g.datum()) || family.strategy != TopStrategy::Preset) {
    throw NotTypeA("dual Schubert classes are only available for U(n) with the staircase top class");
  }
  std::vector<Polynomial> out;
  for (std::size_t w = 0; w < g.order(); ++w) {
    const std::size_t ww0 = g.multiply(w, g.longest());
    Polynomial p = family.calc->weyl_act(g.longest(), family[ww0]);
    out.push_back(g.element(ww0).det > 0 ? p : -p);
  }
  return out;
}

std::map<std::size_t, Polynomial> expand_by_duality(const SchubertFamily& family, const SWBasis& basis,
                                                    const Polynomial& f) {
  const auto dual = dual_family(family);
  std::map<std::size_t, Polynomial> out;
  for (std::size_t w = 0; w < dual.size(); ++w) {
    Polynomial c = basis.to_generators(family.calc->pairing(f, dual[w]));
    if (!c.is_zero()) out.emplace(w, std::move(c));
  }
  return out;
}

std::vector<std::vector<Polynomial>> pairing_gram(const SchubertFamily& family) {
  const std::size_t n = family.members.size();
  std::vector<std::vector<Polynomial>> gram(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i].push_back(family.calc->pairing(family[i], family[j]));
  }
  return gram;
}

}  // namespace nilhecke
