#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "nilhecke/ring.hpp"

namespace nilhecke {

/// Exponent tuple of a monomial. Fixed capacity keeps term maps cheap; the
/// largest polynomial rings used here (doubled variable sets for tensor
/// products of rank-4 data) need eight variables.
class Exponent {
 public:
  static constexpr std::size_t kMaxVars = 12;

  Exponent() = default;
  explicit Exponent(std::size_t nvars);
  Exponent(std::initializer_list<int> powers);
  explicit Exponent(const std::vector<int>& powers);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value) { e_[i] = static_cast<std::uint16_t>(value); }
  int degree() const;
  std::vector<int> to_vector() const;

  Exponent operator+(const Exponent& other) const;
  /// True when every entry of `other` is at most the matching entry here.
  bool divisible_by(const Exponent& other) const;
  Exponent operator-(const Exponent& other) const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

struct LexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const { return b < a; }
};

/// Sparse multivariate polynomial with exact coefficients in a Ring. Terms are
/// kept in lexicographically descending exponent order and never store zero
/// coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Scalar, LexDescending>;

  Polynomial(Ring ring, std::size_t nvars);

  static Polynomial constant(const Ring& ring, std::size_t nvars, const Scalar& c);
  static Polynomial variable(const Ring& ring, std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Ring& ring, const Exponent& e, const Scalar& c = 1);
  /// Degree-one form sum_k coeffs[k] x_k.
  static Polynomial linear_form(const Ring& ring, const std::vector<long>& coeffs);
  static Polynomial linear_form(const Ring& ring, const std::vector<Scalar>& coeffs);

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int d) const;
  Scalar coefficient(const Exponent& e) const;
  /// Constant term as a scalar.
  Scalar constant_term() const;

  /// Adds c x^e, merging with an existing term and dropping zeros.
  void add_term(const Exponent& e, const Scalar& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned k) const;

  /// Ring endomorphism x_k -> images[k].
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Human readable form, e.g. "e1^2*e2 - 3*e1 + 1".
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_compatible(const Polynomial& other) const;

  Ring ring_;
  std::size_t nvars_;
  TermMap terms_;
};

/// All exponent tuples in `nvars` variables of total degree `d`, in
/// lexicographically descending order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d);

/// Quotient q with q * alpha == f, for a homogeneous linear alpha over Z,
/// Q or a localization. Throws NotDivisible when no such q exists in the ring.
Polynomial exact_divide_linear(const Polynomial& f, const Polynomial& alpha);

/// Extension of scalars along the canonical map, if any.
Polynomial change_ring(const Polynomial& f, const Ring& target);

/// Reads the same integer-valued coefficients over Z (residues mod m become
/// their representatives in {0,...,m-1}). Used to lift operators defined over Z.
Polynomial lift_to_integers(const Polynomial& f);

/// Parses expressions such as "e1^2*e2 - 3*e1*e2 + 1/2" over the given names.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names,
                            const Ring& ring);

/// Default variable names e1, ..., en.
std::vector<std::string> default_var_names(std::size_t nvars, const std::string& stem = "e");

/// Writes f with the default names e1, e2, ... (diagnostics only).
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace nilhecke
