#pragma once

#include <map>
#include <vector>

#include "nilhecke/demazure.hpp"
#include "nilhecke/linalg.hpp"

namespace nilhecke {

/// Monomial basis of the homogeneous polynomials of one degree, used to turn
/// polynomials into coordinate vectors and back.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, int degree);

  std::size_t size() const { return monomials_.size(); }
  int degree() const { return degree_; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::size_t index_of(const Exponent& e) const;

  /// Coordinates of the degree-d part of f (other degrees are ignored).
  linalg::Vector coords(const Polynomial& f) const;
  Polynomial polynomial(const linalg::Vector& v, const Ring& ring) const;

 private:
  std::size_t nvars_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
};

/// Integer matrix of f -> w(f) - f on degree-d polynomials, one block of rows
/// per element of `elements`. Its kernel is the space of invariants.
linalg::IntMatrix fixed_point_equations(const WeylGroup& group, const std::vector<std::size_t>& elements,
                                        const MonomialBasis& basis);

/// Integer matrix of f -> d_{s_i}(f) from degree d to degree d-1, one block
/// per simple reflection. Its kernel is the space killed by every d_w, w != 1.
linalg::IntMatrix simple_partial_equations(const DemazureCalculus& calc_over_z, const MonomialBasis& basis);

/// Saturated Z-basis (Hermite normal form) of the invariant polynomials of
/// degree d under the subgroup generated by `generators`.
linalg::IntMatrix invariant_lattice(const WeylGroup& group, const std::vector<std::size_t>& generators, int d);

/// Simple reflections of the group as element indices.
std::vector<std::size_t> simple_reflection_elements(const WeylGroup& group);

/// Field used for exact solving over `ring`: Q, or F_p for Z/p.
Ring solving_field(const Ring& ring);

}  // namespace nilhecke
