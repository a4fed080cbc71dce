#include "nilhecke/graded.hpp"

#include "nilhecke/errors.hpp"

namespace nilhecke {

MonomialBasis::MonomialBasis(std::size_t nvars, int degree)
    : nvars_(nvars), degree_(degree), monomials_(degree < 0 ? std::vector<Exponent>{} : monomials_of_degree(nvars, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw InternalError("monomial not in basis");
  return it->second;
}

linalg::Vector MonomialBasis::coords(const Polynomial& f) const {
  linalg::Vector v(size(), Scalar(0));
  for (const auto& [e, c] : f.terms()) {
    if (e.degree() == degree_) v[index_of(e)] = c;
  }
  return v;
}

Polynomial MonomialBasis::polynomial(const linalg::Vector& v, const Ring& ring) const {
  Polynomial p(ring, nvars_);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) p.add_term(monomials_[i], ring.normalize(v[i]));
  }
  return p;
}

linalg::IntMatrix fixed_point_equations(const WeylGroup& group, const std::vector<std::size_t>& elements,
                                        const MonomialBasis& basis) {
  DemazureCalculus calc(std::shared_ptr<const WeylGroup>(&group, [](const WeylGroup*) {}), Ring::integers());
  const std::size_t n = basis.size();
  linalg::IntMatrix rows(elements.size() * n, linalg::IntVector(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial m = Polynomial::monomial(Ring::integers(), basis.monomials()[j]);
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const linalg::Vector c = basis.coords(calc.weyl_act(elements[b], m) - m);
      for (std::size_t i = 0; i < n; ++i) {
        if (c[i] != 0) rows[b * n + i][j] = c[i].get_num();
      }
    }
  }
  return rows;
}

linalg::IntMatrix simple_partial_equations(const DemazureCalculus& calc, const MonomialBasis& basis) {
  const std::size_t n = basis.size();
  const MonomialBasis lower(calc.nvars(), basis.degree() - 1);
  const std::size_t k = calc.group().num_simple();
  linalg::IntMatrix rows(k * lower.size(), linalg::IntVector(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial m = Polynomial::monomial(Ring::integers(), basis.monomials()[j]);
    for (std::size_t i = 0; i < k; ++i) {
      const linalg::Vector c = lower.coords(calc.delta_simple(static_cast<int>(i), m));
      for (std::size_t r = 0; r < lower.size(); ++r) {
        if (c[r] != 0) rows[i * lower.size() + r][j] = c[r].get_num();
      }
    }
  }
  return rows;
}

linalg::IntMatrix invariant_lattice(const WeylGroup& group, const std::vector<std::size_t>& generators, int d) {
  const MonomialBasis basis(group.rank(), d);
  return linalg::integer_kernel(fixed_point_equations(group, generators, basis), basis.size());
}

std::vector<std::size_t> simple_reflection_elements(const WeylGroup& group) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.num_simple(); ++i) out.push_back(group.simple_reflection(static_cast<int>(i)));
  return out;
}

Ring solving_field(const Ring& ring) {
  if (ring.kind() == Ring::Kind::IntegersMod) {
    if (!ring.is_field()) throw UnsupportedRing("exact solving over " + ring.to_string() + " (modulus not prime)");
    return ring;
  }
  return Ring::rationals();
}

}  // namespace nilhecke
