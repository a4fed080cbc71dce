#include "nilhecke/ring.hpp"

#include <algorithm>
#include <sstream>

#include "nilhecke/errors.hpp"

namespace nilhecke {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  if (n < 0) n = -n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Ring Ring::integers() { return Ring(Kind::Integers, 0, {}); }
Ring Ring::rationals() { return Ring(Kind::Rationals, 0, {}); }

Ring Ring::integers_mod(long modulus) {
  if (modulus < 2) throw ParseError("modulus must be at least 2, got " + std::to_string(modulus));
  return Ring(Kind::IntegersMod, modulus, {});
}

Ring Ring::localized(std::vector<long> primes) {
  for (long p : primes) {
    if (!is_prime(p)) throw ParseError("localization set contains non-prime " + std::to_string(p));
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.empty()) return integers();
  return Ring(Kind::Localized, 0, std::move(primes));
}

Ring Ring::localized_at(const std::vector<long>& denominators) {
  std::vector<long> primes;
  for (long n : denominators) {
    if (n == 0) throw ParseError("cannot invert 0");
    for (long p : prime_factors(n)) primes.push_back(p);
  }
  return localized(std::move(primes));
}

Ring Ring::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ') text.push_back(c);
  }
  if (text == "Z" || text == "ZZ") return integers();
  if (text == "Q" || text == "QQ") return rationals();
  try {
    if (text.rfind("Z/", 0) == 0) return integers_mod(std::stol(text.substr(2)));
    if (text.rfind("F", 0) == 0 && text.size() > 1) {
      long p = std::stol(text.substr(1));
      if (!is_prime(p)) throw ParseError("F_p needs a prime, got " + text);
      return integers_mod(p);
    }
    if (text.rfind("Z[", 0) == 0 && text.back() == ']') {
      std::vector<long> dens;
      std::stringstream body(text.substr(2, text.size() - 3));
      std::string item;
      while (std::getline(body, item, ',')) {
        if (item.rfind("1/", 0) != 0) throw ParseError("expected 1/n in " + text);
        dens.push_back(std::stol(item.substr(2)));
      }
      return localized_at(dens);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed ring descriptor '" + raw + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("ring descriptor out of range '" + raw + "'");
  }
  throw ParseError("unknown ring descriptor '" + raw + "' (expected Z, Q, Z/m or Z[1/n,...])");
}

bool Ring::is_field() const {
  return kind_ == Kind::Rationals || (kind_ == Kind::IntegersMod && is_prime(modulus_));
}

bool Ring::denominator_supported(const mpz_class& den) const {
  mpz_class d = den;
  for (long p : primes_) {
    mpz_class pz(p);
    while (mpz_divisible_p(d.get_mpz_t(), pz.get_mpz_t())) d /= pz;
  }
  return d == 1;
}

bool Ring::contains(const Scalar& q) const {
  switch (kind_) {
    case Kind::Rationals:
      return true;
    case Kind::Integers:
      return q.get_den() == 1;
    case Kind::Localized:
      return denominator_supported(q.get_den());
    case Kind::IntegersMod: {
      mpz_class g;
      mpz_gcd_ui(g.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(modulus_));
      return g == 1;
    }
  }
  return false;
}

Scalar Ring::normalize(const Scalar& q) const {
  if (!contains(q)) throw NotInRing(scalar_to_string(q) + " is not an element of " + to_string());
  if (kind_ != Kind::IntegersMod) return q;
  mpz_class m(modulus_);
  mpz_class num = q.get_num() % m;
  if (q.get_den() != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t());
    num = (num * inv) % m;
  }
  if (num < 0) num += m;
  return Scalar(num);
}

bool Ring::is_unit(const Scalar& q) const {
  if (q == 0) return false;
  switch (kind_) {
    case Kind::Rationals:
      return true;
    case Kind::Integers:
      return q == 1 || q == -1;
    case Kind::Localized:
      return denominator_supported(q.get_num()) && denominator_supported(q.get_den());
    case Kind::IntegersMod: {
      mpz_class g;
      mpz_class num = q.get_num();
      mpz_gcd_ui(g.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(modulus_));
      return g == 1 && contains(q);
    }
  }
  return false;
}

Scalar Ring::inverse(const Scalar& q) const {
  if (!is_unit(q)) throw NotInRing(scalar_to_string(q) + " is not a unit in " + to_string());
  if (kind_ == Kind::IntegersMod) {
    Scalar r = normalize(q);
    mpz_class inv;
    mpz_class m(modulus_);
    mpz_invert(inv.get_mpz_t(), r.get_num().get_mpz_t(), m.get_mpz_t());
    return Scalar(inv);
  }
  Scalar r = 1 / q;
  r.canonicalize();
  return r;
}

bool Ring::inverts(long n) const { return is_unit(Scalar(n)); }

bool Ring::has_map_to(const Ring& target) const {
  if (*this == target) return true;
  switch (kind_) {
    case Kind::Integers:
      return true;
    case Kind::Rationals:
      return false;
    case Kind::IntegersMod:
      return target.kind_ == Kind::IntegersMod && modulus_ % target.modulus_ == 0;
    case Kind::Localized:
      if (target.kind_ == Kind::Rationals) return true;
      if (target.kind_ == Kind::Localized) {
        return std::includes(target.primes_.begin(), target.primes_.end(), primes_.begin(),
                             primes_.end());
      }
      if (target.kind_ == Kind::IntegersMod) {
        for (long p : primes_) {
          if (target.modulus_ % p == 0) return false;
        }
        return true;
      }
      return false;
  }
  return false;
}

std::string Ring::to_string() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::IntegersMod:
      return "Z/" + std::to_string(modulus_);
    case Kind::Localized: {
      std::string s = "Z[";
      for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i) s += ",";
        s += "1/" + std::to_string(primes_[i]);
      }
      return s + "]";
    }
  }
  return "?";
}

std::string scalar_to_string(const Scalar& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar scalar_from_string(const std::string& text) {
  Scalar q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad scalar '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace nilhecke
