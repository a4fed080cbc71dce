#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nilhecke/demazure.hpp"
#include "nilhecke/linalg.hpp"

namespace nilhecke {

/// Positive generator of the ideal d_{w0}(S^N) in Z: the gcd of d_{w0}(m)
/// over all degree-N monomials m. In top degree the characteristic map sends
/// u to d_{w0}(u) times the fundamental class, so this is the order of its cokernel.
long torsion_index(const WeylGroup& group);

enum class TopStrategy { Preset, Solve, Discriminant };
TopStrategy parse_strategy(const std::string& text);
std::string to_string(TopStrategy s);

/// A class of degree N with d_{w0} = 1 in `ring`. Throws TorsionNotInvertible.
Polynomial top_class(const WeylGroup& group, const Ring& ring, TopStrategy strategy);

struct SchubertFamily {
  std::shared_ptr<const DemazureCalculus> calc;
  TopStrategy strategy = TopStrategy::Preset;
  long torsion = 1;
  Polynomial top{Ring::integers(), 0};
  std::vector<Polynomial> members;  // indexed by Weyl element

  const WeylGroup& group() const { return calc->group(); }
  const Ring& ring() const { return calc->ring(); }
  const Polynomial& operator[](std::size_t w) const { return members.at(w); }
};

/// S_w = d_{w^{-1} w0}(top) for every w.
SchubertFamily schubert_family(std::shared_ptr<const WeylGroup> group, const Ring& ring,
                               TopStrategy strategy = TopStrategy::Preset);

/// Generators of S^W (fundamental invariants) used to write coefficients.
class SWBasis {
 public:
  SWBasis(std::shared_ptr<const WeylGroup> group, const Ring& ring);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t size() const { return gens_.size(); }
  const Ring& ring() const { return ring_; }
  /// True when the generators come from the built-in list rather than from
  /// degreewise linear algebra.
  bool is_preset() const { return preset_; }

  /// Exponent vectors e with sum e_j deg_j = d, in lexicographically descending order.
  std::vector<Exponent> generator_monomials(int d) const;
  Polynomial evaluate_monomial(const Exponent& e) const;
  /// Substitutes the generators into a polynomial written in them.
  Polynomial evaluate(const Polynomial& in_generators) const;
  /// Writes an element of S^W as a polynomial in the generators. Throws
  /// ExpansionFailed when it is not in the subring they generate.
  Polynomial to_generators(const Polynomial& invariant) const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  Ring ring_;
  bool preset_ = true;
  std::vector<std::string> names_;
  std::vector<Polynomial> gens_;
  std::vector<int> degrees_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const std::vector<Polynomial>>> monomial_cache_;
};

/// Fundamental invariants over Q found degreewise, scaled to primitive integer
/// polynomials. Used for raw root data.
std::vector<Polynomial> computed_fundamental_invariants(const WeylGroup& group);

/// Expansion of polynomials in the Schubert basis with S^W coefficients.
class SchubertExpander {
 public:
  SchubertExpander(SchubertFamily family, std::shared_ptr<const SWBasis> basis);

  /// Coefficients p_w (polynomials in the basis generators) with f = sum p_w S_w.
  std::map<std::size_t, Polynomial> expand(const Polynomial& f) const;
  Polynomial recombine(const std::map<std::size_t, Polynomial>& coeffs) const;

  const SchubertFamily& family() const { return family_; }
  const SWBasis& basis() const { return *basis_; }

 private:
  struct Degree {
    std::vector<Exponent> monomials;                             // rows
    std::vector<std::pair<std::size_t, Exponent>> columns;       // (w, generator monomial)
    linalg::Matrix inverse;
  };
  std::shared_ptr<const Degree> degree_data(int d) const;
  Ring solve_field() const;

  SchubertFamily family_;
  std::shared_ptr<const SWBasis> basis_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const Degree>> cache_;
};

/// Dual classes S^w = det(w w0) w0(S_{w w0}); type A with the preset top class only.
std::vector<Polynomial> dual_family(const SchubertFamily& family);

/// Coefficients via the dual basis, p_w = B(f, S^w), converted to generators.
std::map<std::size_t, Polynomial> expand_by_duality(const SchubertFamily& family, const SWBasis& basis,
                                                    const Polynomial& f);

/// Gram matrix B(S_w, S_{w'}) in the default element order.
std::vector<std::vector<Polynomial>> pairing_gram(const SchubertFamily& family);

bool is_unitary_datum(const RootDatum& datum);

}  // namespace nilhecke
