#include "nilhecke/demazure.hpp"

#include <algorithm>

#include "nilhecke/errors.hpp"

namespace nilhecke {

void DemazureElement::add(std::size_t w, const Polynomial& u) {
  if (u.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, u);
    return;
  }
  it->second += u;
  if (it->second.is_zero()) terms.erase(it);
}

DemazureCalculus::DemazureCalculus(std::shared_ptr<const WeylGroup> group, Ring ring)
    : group_(std::move(group)), ring_(std::move(ring)) {
  for (std::size_t i = 0; i < group_->num_simple(); ++i) {
    simple_roots_.push_back(group_->find_root(group_->datum().simple_roots[i]));
  }
}

Polynomial DemazureCalculus::root_form(std::size_t root) const {
  return Polynomial::linear_form(ring_, group_->roots().at(root).vec);
}

namespace {

// Substitution e_k -> w(e_k) for an integer action matrix.
Polynomial act_by_matrix(const IntMat& m, const Polynomial& f) {
  const std::size_t r = m.size();
  // Signed permutation matrices map monomials to monomials.
  std::vector<std::size_t> target(r);
  std::vector<int> sign(r);
  bool monomial = true;
  for (std::size_t k = 0; k < r && monomial; ++k) {
    int nonzero = 0;
    for (std::size_t l = 0; l < r; ++l) {
      if (m[l][k] == 0) continue;
      ++nonzero;
      target[k] = l;
      sign[k] = static_cast<int>(m[l][k]);
    }
    if (nonzero != 1 || (sign[k] != 1 && sign[k] != -1)) monomial = false;
  }
  if (monomial) {
    Polynomial out(f.ring(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
      Exponent e2(r);
      int odd = 0;
      for (std::size_t k = 0; k < r; ++k) {
        e2.set(target[k], e[k]);
        if (sign[k] < 0 && (e[k] & 1)) odd ^= 1;
      }
      out.add_term(e2, odd ? f.ring().neg(c) : c);
    }
    return out;
  }
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < r; ++k) {
    IntVec col(r);
    for (std::size_t l = 0; l < r; ++l) col[l] = m[l][k];
    images.push_back(Polynomial::linear_form(f.ring(), col));
  }
  return f.substitute(images);
}

}  // namespace

Polynomial DemazureCalculus::weyl_act(std::size_t w, const Polynomial& f) const {
  if (w == 0) return f;
  return act_by_matrix(group_->element(w).action, f);
}

Polynomial DemazureCalculus::reflect(std::size_t root, const Polynomial& f) const {
  return weyl_act(group_->reflection_of_root(root), f);
}

Polynomial DemazureCalculus::delta(std::size_t root, const Polynomial& f) const {
  if (f.ring() != ring_ || f.nvars() != nvars()) throw RingMismatch("polynomial does not match the calculus");
  if (f.is_zero()) return f;
  const IntMat& m = group_->element(group_->reflection_of_root(root)).action;
  if (ring_.kind() == Ring::Kind::IntegersMod) {
    // The integer operator is Z-linear, so lifting residues is well defined.
    Polynomial g = lift_to_integers(f);
    Polynomial q = exact_divide_linear(g - act_by_matrix(m, g),
                                       Polynomial::linear_form(Ring::integers(), group_->roots()[root].vec));
    return change_ring(q, ring_);
  }
  return exact_divide_linear(f - act_by_matrix(m, f), root_form(root));
}

Polynomial DemazureCalculus::delta_simple(int i, const Polynomial& f) const {
  return delta(simple_roots_.at(i), f);
}

Polynomial DemazureCalculus::partial_word(const Word& word, const Polynomial& f) const {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) g = delta_simple(*it, g);
  return g;
}

Polynomial DemazureCalculus::partial(std::size_t w, const Polynomial& f) const {
  return partial_word(group_->element(w).word, f);
}

Polynomial DemazureCalculus::discriminant() const { return group_->discriminant(ring_); }

Polynomial DemazureCalculus::antisymmetrize(const Polynomial& f) const {
  Polynomial s = zero();
  for (const auto& w : group_->elements()) {
    if (w.det > 0) {
      s += weyl_act(w.index, f);
    } else {
      s -= weyl_act(w.index, f);
    }
  }
  return s;
}

bool DemazureCalculus::antisymmetrizer_identity_check(const Polynomial& f) const {
  return discriminant() * partial(group_->longest(), f) == antisymmetrize(f);
}

DemazureElement DemazureCalculus::basis(std::size_t w) const {
  DemazureElement d;
  d.add(w, one());
  return d;
}

DemazureElement DemazureCalculus::scalar(const Polynomial& u) const {
  DemazureElement d;
  d.add(0, u);
  return d;
}

DemazureElement DemazureCalculus::reflection_element(std::size_t w) const {
  return left_mul_weyl(w, basis(0));
}

Polynomial DemazureCalculus::apply(const DemazureElement& d, const Polynomial& f) const {
  Polynomial out = zero();
  for (const auto& [w, u] : d.terms) {
    Polynomial g = partial(w, f);
    if (!g.is_zero()) out += u * g;
  }
  return out;
}

DemazureElement DemazureCalculus::add(const DemazureElement& a, const DemazureElement& b) const {
  DemazureElement out = a;
  for (const auto& [w, u] : b.terms) out.add(w, u);
  return out;
}

DemazureElement DemazureCalculus::left_mul_poly(const Polynomial& u, const DemazureElement& d) const {
  DemazureElement out;
  for (const auto& [w, c] : d.terms) out.add(w, u * c);
  return out;
}

// d_i (u d_w) = d_i(u) d_w + s_i(u) d_i d_w, and d_i d_w = d_{s_i w} or 0.
DemazureElement DemazureCalculus::left_mul_simple_partial(int i, const DemazureElement& d) const {
  DemazureElement out;
  const std::size_t root = simple_roots_.at(i);
  for (const auto& [w, u] : d.terms) {
    out.add(w, delta(root, u));
    if (!group_->is_left_descent(w, i)) out.add(group_->left_mul_simple(w, i), reflect(root, u));
  }
  return out;
}

// s_i = 1 - alpha_i d_i
DemazureElement DemazureCalculus::left_mul_simple_reflection(int i, const DemazureElement& d) const {
  DemazureElement out = d;
  const Polynomial alpha = root_form(simple_roots_.at(i));
  for (const auto& [w, u] : left_mul_simple_partial(i, d).terms) out.add(w, -(alpha * u));
  return out;
}

DemazureElement DemazureCalculus::left_mul_weyl(std::size_t w, const DemazureElement& d) const {
  DemazureElement out = d;
  const Word& word = group_->element(w).word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = left_mul_simple_reflection(*it, out);
  return out;
}

DemazureElement DemazureCalculus::relative_operator(std::size_t w, std::size_t wp) const {
  const auto key = std::make_pair(w, wp);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = relative_cache_.find(key);
    if (it != relative_cache_.end()) return *it->second;
  }
  if (!group_->bruhat_leq(wp, w)) {
    throw NotBruhatComparable(group_->word_string(wp) + " is not below " + group_->word_string(w));
  }
  const Word& s = group_->element(w).word;
  const std::size_t k = s.size();
  const int target_len = group_->element(wp).length;
  DemazureElement sum;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    if (__builtin_popcountl(mask) != target_len) continue;
    std::size_t prod = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (1UL << j)) prod = group_->right_mul_simple(prod, s[j]);
    }
    if (prod != wp) continue;  // length matches, so the subword is reduced
    DemazureElement phi = basis(0);
    for (std::size_t j = k; j-- > 0;) {
      phi = (mask & (1UL << j)) ? left_mul_simple_reflection(s[j], phi) : left_mul_simple_partial(s[j], phi);
    }
    sum = add(sum, phi);
  }
  DemazureElement result = left_mul_weyl(group_->inverse(wp), sum);
  std::lock_guard<std::mutex> lock(mutex_);
  return *relative_cache_.emplace(key, std::make_shared<const DemazureElement>(std::move(result))).first->second;
}

DemazureElement DemazureCalculus::multiply(const DemazureElement& a, const DemazureElement& b) const {
  DemazureElement out;
  const WeylGroup& g = *group_;
  for (const auto& [w, u] : a.terms) {
    for (std::size_t w2 = 0; w2 < g.order(); ++w2) {
      if (g.element(w2).length > g.element(w).length || !g.bruhat_leq(w2, w)) continue;
      const DemazureElement rel = relative_operator(w, w2);
      for (const auto& [wp, up] : b.terms) {
        const std::size_t prod = g.multiply(w2, wp);
        if (g.element(prod).length != g.element(w2).length + g.element(wp).length) continue;
        Polynomial c = apply(rel, up);
        if (c.is_zero()) continue;
        out.add(prod, u * weyl_act(w2, c));
      }
    }
  }
  return out;
}

DemazureElement DemazureCalculus::multiply_by_generators(const DemazureElement& a,
                                                         const DemazureElement& b) const {
  DemazureElement out;
  for (const auto& [w, u] : a.terms) {
    DemazureElement t = b;
    const Word& word = group_->element(w).word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = left_mul_simple_partial(*it, t);
    out = add(out, left_mul_poly(u, t));
  }
  return out;
}

Polynomial DemazureCalculus::leibniz_expansion(std::size_t w, const Polynomial& a1,
                                               const Polynomial& a2) const {
  Polynomial out = zero();
  for (std::size_t wp = 0; wp < group_->order(); ++wp) {
    if (!group_->bruhat_leq(wp, w)) continue;
    Polynomial right = partial(wp, a2);
    if (right.is_zero()) continue;
    out += weyl_act(wp, apply(relative_operator(w, wp), a1)) * right;
  }
  return out;
}

Polynomial DemazureCalculus::psi(const Polynomial& top, const Polynomial& f) const {
  return partial(group_->longest(), top * f);
}

bool DemazureCalculus::discriminant_identity_check(const Polynomial& top, const Polynomial& f) const {
  const Polynomial lhs = discriminant() * (f - psi(top, f));
  Polynomial rhs = zero();
  for (const auto& w : group_->elements()) {
    const Polynomial term = weyl_act(w.index, top) * (f - weyl_act(w.index, f));
    if (w.det > 0) {
      rhs += term;
    } else {
      rhs -= term;
    }
  }
  return lhs == rhs;
}

Polynomial DemazureCalculus::pairing(const Polynomial& f, const Polynomial& g) const {
  return partial(group_->longest(), f * g);
}

}  // namespace nilhecke
