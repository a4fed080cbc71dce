#include "nilhecke/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nilhecke/errors.hpp"

namespace nilhecke {

Exponent::Exponent(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw InternalError("too many variables: " + std::to_string(nvars));
}

Exponent::Exponent(std::initializer_list<int> powers) : Exponent(powers.size()) {
  std::size_t i = 0;
  for (int p : powers) e_[i++] = static_cast<std::uint16_t>(p);
}

Exponent::Exponent(const std::vector<int>& powers) : Exponent(powers.size()) {
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] < 0) throw ParseError("negative exponent");
    e_[i] = static_cast<std::uint16_t>(powers[i]);
  }
}

int Exponent::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

std::vector<int> Exponent::to_vector() const {
  return std::vector<int>(e_.begin(), e_.begin() + n_);
}

Exponent Exponent::operator+(const Exponent& other) const {
  Exponent r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + other.e_[i]);
  return r;
}

bool Exponent::divisible_by(const Exponent& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (other.e_[i] > e_[i]) return false;
  }
  return true;
}

Exponent Exponent::operator-(const Exponent& other) const {
  Exponent r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - other.e_[i]);
  return r;
}

Polynomial::Polynomial(Ring ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {
  if (nvars > Exponent::kMaxVars) throw InternalError("too many variables");
}

Polynomial Polynomial::constant(const Ring& ring, std::size_t nvars, const Scalar& c) {
  Polynomial p(ring, nvars);
  p.add_term(Exponent(nvars), c);
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t nvars, std::size_t index) {
  Exponent e(nvars);
  e.set(index, 1);
  return monomial(ring, e);
}

Polynomial Polynomial::monomial(const Ring& ring, const Exponent& e, const Scalar& c) {
  Polynomial p(ring, e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear_form(const Ring& ring, const std::vector<long>& coeffs) {
  std::vector<Scalar> q(coeffs.begin(), coeffs.end());
  return linear_form(ring, q);
}

Polynomial Polynomial::linear_form(const Ring& ring, const std::vector<Scalar>& coeffs) {
  Polynomial p(ring, coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponent e(coeffs.size());
    e.set(k, 1);
    p.add_term(e, coeffs[k]);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(ring_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.degree() == d) p.terms_.emplace_hint(p.terms_.end(), e, c);
  }
  return p;
}

Scalar Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Polynomial::constant_term() const { return coefficient(Exponent(nvars_)); }

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw RingMismatch("exponent length differs from variable count");
  Scalar v = ring_.normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second = ring_.normalize(it->second + v);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (ring_ != other.ring_) {
    throw RingMismatch("rings differ: " + ring_.to_string() + " vs " + other.ring_.to_string());
  }
  if (nvars_ != other.nvars_) {
    throw RingMismatch("variable counts differ: " + std::to_string(nvars_) + " vs " +
                       std::to_string(other.nvars_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.ring_, a.nvars_);
  std::map<Exponent, Scalar, LexDescending> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      acc[ea + eb] += ca * cb;
    }
  }
  for (auto& [e, c] : acc) {
    Scalar v = a.ring_.normalize(c);
    if (v != 0) out.terms_.emplace_hint(out.terms_.end(), e, std::move(v));
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  Scalar k = ring_.normalize(c);
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = ring_.normalize(it->second * k);
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = ring_.normalize(-c);
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, nvars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw RingMismatch("substitution needs one image per variable");
  std::size_t target_vars = images.empty() ? 0 : images.front().nvars();
  Polynomial out(ring_, target_vars);
  // powers[k][j] = images[k]^j, grown on demand
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (std::size_t k = 0; k < nvars_; ++k) {
    powers[k].push_back(constant(ring_, target_vars, 1));
  }
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(ring_, target_vars, c);
    for (std::size_t k = 0; k < nvars_; ++k) {
      while (static_cast<int>(powers[k].size()) <= e[k]) {
        powers[k].push_back(powers[k].back() * images[k]);
      }
      if (e[k] > 0) term *= powers[k][e[k]];
    }
    out += term;
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Scalar mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool is_unit_coeff = mag == 1;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += k < names.size() ? names[k] : "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      os << scalar_to_string(mag);
    } else if (is_unit_coeff) {
      os << mono;
    } else {
      os << scalar_to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Exponent e(nvars);
  // Walk compositions of d in lexicographically descending order.
  auto rec = [&](auto& self, std::size_t k, int left) -> void {
    if (k + 1 == nvars) {
      e.set(k, left);
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e.set(k, v);
      self(self, k + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

namespace {

// Rational content: the positive rational c with alpha / c primitive integral.
Scalar rational_content(const Polynomial& p) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Scalar q(num_gcd, den_lcm);
  q.canonicalize();
  return q;
}

struct PivotFirst {
  std::size_t pivot;
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a[pivot] != b[pivot]) return a[pivot] > b[pivot];
    return b < a;
  }
};

}  // namespace

Polynomial exact_divide_linear(const Polynomial& f, const Polynomial& alpha) {
  const Ring& ring = f.ring();
  if (ring != alpha.ring() || f.nvars() != alpha.nvars()) {
    throw RingMismatch("dividend and divisor live in different polynomial rings");
  }
  if (ring.kind() == Ring::Kind::IntegersMod) {
    throw UnsupportedRing("exact_divide_linear is defined over Z, Q and localizations only");
  }
  if (alpha.is_zero() || alpha.degree() != 1 || !alpha.is_homogeneous()) {
    throw NotDivisible("divisor is not a nonzero homogeneous linear form");
  }
  const std::size_t n = f.nvars();
  Scalar content = rational_content(alpha);
  Polynomial primitive(Ring::rationals(), n);
  for (const auto& [e, c] : alpha.terms()) primitive.add_term(e, c / content);

  // Prefer a variable whose coefficient is a unit so no fractions appear.
  std::size_t pivot = n;
  Scalar lead;
  for (const auto& [e, c] : primitive.terms()) {
    std::size_t k = 0;
    while (e[k] == 0) ++k;
    if (pivot == n || abs(c) == 1) {
      pivot = k;
      lead = c;
      if (abs(c) == 1) break;
    }
  }

  std::map<Exponent, Scalar, PivotFirst> rem(PivotFirst{pivot});
  for (const auto& [e, c] : f.terms()) rem.emplace(e, c);
  Polynomial quotient(Ring::rationals(), n);
  Exponent unit(n);
  unit.set(pivot, 1);
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->first[pivot] == 0) throw NotDivisible("nonzero remainder in linear division");
    Exponent qe = it->first - unit;
    Scalar qc = it->second / lead;
    quotient.add_term(qe, qc);
    for (const auto& [ae, ac] : primitive.terms()) {
      Exponent te = qe + ae;
      auto [slot, inserted] = rem.try_emplace(te, 0);
      slot->second -= qc * ac;
      if (slot->second == 0) rem.erase(slot);
    }
  }

  Polynomial result(ring, n);
  for (const auto& [e, c] : quotient.terms()) {
    Scalar v = c / content;
    if (!ring.contains(v)) {
      throw NotDivisible("quotient coefficient " + scalar_to_string(v) + " not in " +
                         ring.to_string());
    }
    result.add_term(e, v);
  }
  return result;
}

Polynomial change_ring(const Polynomial& f, const Ring& target) {
  if (!f.ring().has_map_to(target)) {
    throw NoCanonicalMap("no canonical map " + f.ring().to_string() + " -> " + target.to_string());
  }
  Polynomial out(target, f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (!target.contains(c)) {
      throw NoCanonicalMap(scalar_to_string(c) + " has no image in " + target.to_string());
    }
    out.add_term(e, c);
  }
  return out;
}

Polynomial lift_to_integers(const Polynomial& f) {
  if (f.ring().kind() == Ring::Kind::Integers) return f;
  if (f.ring().kind() != Ring::Kind::IntegersMod) {
    throw UnsupportedRing("only residues mod m can be lifted to Z");
  }
  Polynomial out(Ring::integers(), f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, c);
  return out;
}

std::vector<std::string> default_var_names(std::size_t nvars, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << f.to_string(default_var_names(f.nvars()));
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, const std::vector<std::string>& names,
                   const Ring& ring)
      : text_(text), names_(names), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc(ring_, names_.size());
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        ++pos_;
        sign = -1;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      if (sign < 0) t = -t;
      acc += t;
      first = false;
      skip_space();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (peek('/')) {
        ++pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        acc *= ring_.inverse(d.constant_term());
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek('^')) {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
    }
    return b;
  }

  Polynomial base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(ring_, names_.size(),
                                  scalar_from_string(text_.substr(start, pos_ - start)));
    }
    // Longest known variable name at this position, so "p1p2" reads as p1*p2.
    std::size_t best = names_.size();
    std::size_t best_len = 0;
    for (std::size_t k = 0; k < names_.size(); ++k) {
      const std::string& nm = names_[k];
      if (nm.size() > best_len && text_.compare(pos_, nm.size(), nm) == 0) {
        best = k;
        best_len = nm.size();
      }
    }
    if (best == names_.size()) fail("unknown variable");
    pos_ += best_len;
    return Polynomial::variable(ring_, names_.size(), best);
  }

  const std::string& text_;
  const std::vector<std::string>& names_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names,
                            const Ring& ring) {
  return PolynomialParser(text, names, ring).parse();
}

}  // namespace nilhecke
