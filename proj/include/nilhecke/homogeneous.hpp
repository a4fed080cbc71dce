#pragma once

#include <string>
#include <vector>

#include "nilhecke/weyl_group.hpp"

namespace nilhecke {

/// Dimensions indexed by cohomological degree (twice the polynomial degree).
struct HilbertSeries {
  std::vector<long> coeffs;
  std::string closed_form;
  std::vector<std::string> warnings;

  long total() const;
  std::string to_string() const;  // e.g. "1 + t^2 + 2t^4"
  bool is_palindromic() const;
};

/// Parses "2e1,2e2" (roots in the datum variables), "trivial" or "full".
ReflectionSubgroup parse_subgroup(const WeylGroup& group, const std::string& text);

/// sum_w t^{2 l(w)} with the product formula over the exponents.
HilbertSeries flag_poincare(const WeylGroup& group);

/// Graded dimensions of (S^{W_U} / S^W_+ S^{W_U}) tensored with `ring`, up to
/// polynomial degree `bound`. Throws RankDeficientSubgroup.
HilbertSeries quotient_poincare(const WeylGroup& group, const ReflectionSubgroup& sub, const Ring& ring, int bound);

/// Lengths of minimal coset representatives of W / W_U.
HilbertSeries coset_length_series(const WeylGroup& group, const ReflectionSubgroup& sub);

/// Graded dimensions of S^{W_U} over `ring` (base change of the integral invariants).
HilbertSeries invariant_series(const WeylGroup& group, const ReflectionSubgroup& sub, const Ring& ring, int bound);

enum class TensorRoute {
  Integral,  // (S^{W_U} ⊗_{S^W} S^{W_U}) over Z, then tensored with the ring
  Direct     // invariants of S_k itself (fields only)
};

/// Graded dimensions of S^{W_U} ⊗_{S^W} S^{W_U} up to polynomial degree `bound`.
HilbertSeries tensor_square_dims(const WeylGroup& group, const ReflectionSubgroup& sub, const Ring& ring, int bound,
                                 TensorRoute route = TensorRoute::Integral);

/// Truncated product of two series.
HilbertSeries series_product(const HilbertSeries& a, const HilbertSeries& b, std::size_t length);

}  // namespace nilhecke
