#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nilhecke/root_datum.hpp"

namespace nilhecke {

using Word = std::vector<int>;  // 0-based simple-reflection indices

struct WeylElement {
  std::size_t index = 0;
  IntMat action;  // action[l][k] = coefficient of basis character l in w(e_k)
  Word word;      // lexicographically smallest reduced word
  int length = 0;
  int det = 1;
};

struct Root {
  IntVec vec;       // in X(T) coordinates
  IntVec coroot;    // in dual coordinates
  IntVec simple;    // coefficients on the simple roots
  int height = 0;
  bool positive = false;
};

struct ReflectionSubgroup {
  std::vector<std::size_t> elements;        // indices into the parent group, ascending
  std::vector<std::size_t> positive_roots;  // indices into WeylGroup::roots()
  std::vector<std::size_t> simple_roots;    // simple system of the subgroup's root system
  bool is_parabolic = false;
  bool is_closed = true;                    // root subsystem closed under addition
  std::size_t order() const { return elements.size(); }
};

/// The Weyl group of a root datum, fully enumerated. Elements are ordered by
/// length, then by their lexicographically smallest reduced word; element 0 is
/// the identity. Immutable after construction apart from internal caches.
class WeylGroup {
 public:
  static constexpr std::size_t kMaxOrder = 1000000;
  static constexpr std::size_t kMaxRoots = 10000;

  explicit WeylGroup(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t rank() const { return datum_.rank; }
  std::size_t num_simple() const { return datum_.num_simple(); }
  const WeylElement& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<WeylElement>& elements() const { return elements_; }

  std::size_t identity() const { return 0; }
  std::size_t longest() const { return elements_.size() - 1; }
  std::size_t simple_reflection(int i) const { return right_simple_[0][i]; }
  int max_length() const { return elements_.back().length; }

  std::size_t find(const IntMat& action) const;  // throws InternalError if absent
  std::size_t from_word(const Word& word) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t right_mul_simple(std::size_t w, int i) const { return right_simple_[w][i]; }
  std::size_t left_mul_simple(std::size_t w, int i) const { return left_simple_[w][i]; }
  bool is_right_descent(std::size_t w, int i) const;
  bool is_left_descent(std::size_t w, int i) const;

  /// All roots, positive ones first (by height, then descending coefficient
  /// vectors), then their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t num_positive_roots() const { return npos_; }
  std::size_t find_root(const IntVec& vec) const;  // throws NotARoot
  IntVec apply(std::size_t w, const IntVec& lambda) const;
  std::size_t reflection_of_root(std::size_t root) const;

  /// Number of positive roots sent to negative roots, computed from the action.
  int inversion_count(std::size_t w) const;

  std::vector<Word> all_reduced_words(std::size_t w) const;

  /// Subword criterion on the cached reduced word of `b`; memoized.
  bool bruhat_leq(std::size_t a, std::size_t b) const;

  Polynomial discriminant(const Ring& ring) const;

  ReflectionSubgroup reflection_subgroup(const std::vector<std::size_t>& root_indices) const;
  ReflectionSubgroup trivial_subgroup() const;
  ReflectionSubgroup full_subgroup() const;

  std::string word_string(std::size_t w) const;  // e.g. "s1s2", "1" for identity

 private:
  IntMat simple_matrix(int i) const;
  void enumerate_roots();
  void enumerate_elements();

  RootDatum datum_;
  std::vector<IntMat> simple_mats_;
  std::vector<WeylElement> elements_;
  std::map<IntMat, std::size_t> index_;
  std::vector<std::vector<std::size_t>> right_simple_, left_simple_;
  std::vector<std::size_t> inverse_;
  std::vector<Root> roots_;
  std::size_t npos_ = 0;
  std::map<IntVec, std::size_t> root_index_;

  mutable std::mutex bruhat_mutex_;
  mutable std::map<std::size_t, std::shared_ptr<const std::vector<bool>>> bruhat_cache_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_matrix(std::size_t n);

}  // namespace nilhecke
