#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nilhecke {

/// Exact scalars are stored as GMP rationals in every ring. A Ring decides
/// which rationals are legal elements and how to put them in canonical form:
/// residues mod m live in {0,...,m-1}, integers have denominator 1, and
/// localized fractions have denominators built from the inverted primes.
using Scalar = mpq_class;

/// A coefficient ring: Z, Z/m, Z[1/p : p in P] or Q.
class Ring {
 public:
  enum class Kind { Integers, IntegersMod, Localized, Rationals };

  static Ring integers();
  static Ring rationals();
  static Ring integers_mod(long modulus);
  /// Z[1/p1,...]. Every entry must be prime; an empty set gives Z.
  static Ring localized(std::vector<long> primes);
  /// Z[1/n1,1/n2,...] from arbitrary positive integers (factored into primes).
  static Ring localized_at(const std::vector<long>& denominators);

  /// Parses `Z`, `Q`, `Z/m` and `Z[1/n1,1/n2,...]`.
  static Ring parse(const std::string& text);

  Kind kind() const { return kind_; }
  long modulus() const { return modulus_; }
  const std::vector<long>& primes() const { return primes_; }

  bool is_field() const;
  /// Characteristic of the ring (0 unless Z/m).
  long characteristic() const { return kind_ == Kind::IntegersMod ? modulus_ : 0; }

  /// True when `q` names an element of this ring (Z/m accepts any rational
  /// whose denominator is prime to m).
  bool contains(const Scalar& q) const;
  /// Canonical representative; throws NotInRing when `q` is not an element.
  Scalar normalize(const Scalar& q) const;
  bool is_unit(const Scalar& q) const;
  /// Inverse of a unit; throws NotInRing otherwise.
  Scalar inverse(const Scalar& q) const;
  /// True when the integer n is invertible in this ring.
  bool inverts(long n) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }

  /// Canonical ring map from this ring to `target`, if one exists.
  bool has_map_to(const Ring& target) const;

  std::string to_string() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.primes_ == b.primes_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  Ring(Kind kind, long modulus, std::vector<long> primes)
      : kind_(kind), modulus_(modulus), primes_(std::move(primes)) {}

  bool denominator_supported(const mpz_class& den) const;

  Kind kind_;
  long modulus_ = 0;
  std::vector<long> primes_;
};

/// Prime factors of |n| in increasing order, without repetition.
std::vector<long> prime_factors(long n);
bool is_prime(long n);

/// Decimal text for a scalar: "-3", "5/6".
std::string scalar_to_string(const Scalar& q);
Scalar scalar_from_string(const std::string& text);

}  // namespace nilhecke
