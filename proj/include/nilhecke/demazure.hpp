#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "nilhecke/weyl_group.hpp"

namespace nilhecke {

/// Finite sum  sum_w u_w d_w  of basis operators with polynomial coefficients.
struct DemazureElement {
  std::map<std::size_t, Polynomial> terms;  // Weyl element index -> u_w, never zero

  bool is_zero() const { return terms.empty(); }
  void add(std::size_t w, const Polynomial& u);
  friend bool operator==(const DemazureElement& a, const DemazureElement& b) { return a.terms == b.terms; }
};

/// Divided-difference calculus for a Weyl group over a coefficient ring.
/// Thread-safe: the only mutable state is a memo table guarded by a mutex.
class DemazureCalculus {
 public:
  DemazureCalculus(std::shared_ptr<const WeylGroup> group, Ring ring);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return group_->rank(); }

  Polynomial zero() const { return Polynomial(ring_, nvars()); }
  Polynomial one() const { return Polynomial::constant(ring_, nvars(), 1); }
  Polynomial root_form(std::size_t root) const;

  Polynomial weyl_act(std::size_t w, const Polynomial& f) const;
  Polynomial reflect(std::size_t root, const Polynomial& f) const;  // s_beta
  Polynomial delta(std::size_t root, const Polynomial& f) const;    // (f - s_beta f) / beta
  Polynomial delta_simple(int i, const Polynomial& f) const;
  /// d_w along the cached reduced word, rightmost letter first.
  Polynomial partial(std::size_t w, const Polynomial& f) const;
  /// Composition of simple divided differences along an arbitrary word.
  Polynomial partial_word(const Word& word, const Polynomial& f) const;

  Polynomial discriminant() const;
  /// sum_w det(w) w(f)
  Polynomial antisymmetrize(const Polynomial& f) const;
  /// d * d_{w0}(f) == sum_w det(w) w(f)
  bool antisymmetrizer_identity_check(const Polynomial& f) const;

  // Demazure algebra.
  DemazureElement basis(std::size_t w) const;
  DemazureElement scalar(const Polynomial& u) const;
  DemazureElement reflection_element(std::size_t w) const;  // w written in the d-basis
  Polynomial apply(const DemazureElement& d, const Polynomial& f) const;
  DemazureElement add(const DemazureElement& a, const DemazureElement& b) const;
  DemazureElement left_mul_poly(const Polynomial& u, const DemazureElement& d) const;
  DemazureElement left_mul_simple_partial(int i, const DemazureElement& d) const;
  DemazureElement left_mul_simple_reflection(int i, const DemazureElement& d) const;
  DemazureElement left_mul_weyl(std::size_t w, const DemazureElement& d) const;
  /// Product through the structure constants
  /// (u d_w)(u' d_w') = sum_{w''} u w''(d_{w/w''} u') d_{w''w'}.
  DemazureElement multiply(const DemazureElement& a, const DemazureElement& b) const;
  /// Product by expanding the left factor into generators; independent of multiply().
  DemazureElement multiply_by_generators(const DemazureElement& a, const DemazureElement& b) const;

  /// d_{w/w'} = w'^{-1} sum_t phi(s, t) over reduced subwords t of the cached
  /// word s of w with product w'. Memoized. Throws NotBruhatComparable.
  DemazureElement relative_operator(std::size_t w, std::size_t wp) const;

  /// Right-hand side of the generalized Leibniz rule,
  /// sum_{w' <= w} w'(d_{w/w'} a1) d_{w'} a2.
  Polynomial leibniz_expansion(std::size_t w, const Polynomial& a1, const Polynomial& a2) const;

  /// psi(f) = d_{w0}(top * f) for a top class with d_{w0}(top) = 1.
  Polynomial psi(const Polynomial& top, const Polynomial& f) const;
  /// d (1 - psi) f == sum_w det(w) w(top) (1 - w) f
  bool discriminant_identity_check(const Polynomial& top, const Polynomial& f) const;

  /// The pairing B(f, g) = d_{w0}(f g).
  Polynomial pairing(const Polynomial& f, const Polynomial& g) const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  Ring ring_;
  std::vector<std::size_t> simple_roots_;  // root indices of the simple roots
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const DemazureElement>> relative_cache_;
};

}  // namespace nilhecke
