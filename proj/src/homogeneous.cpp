#include "nilhecke/homogeneous.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nilhecke/errors.hpp"
#include "nilhecke/graded.hpp"

namespace nilhecke {

long HilbertSeries::total() const {
  long s = 0;
  for (long c : coeffs) s += c;
  return s;
}

std::string HilbertSeries::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string c = coeffs[k] == 1 && k > 0 ? "" : std::to_string(coeffs[k]);
    s += c + (k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k)));
  }
  return s.empty() ? "0" : s;
}

bool HilbertSeries::is_palindromic() const {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == 0) --top;
  for (std::size_t k = 0; k < top; ++k) {
    if (coeffs[k] != coeffs[top - 1 - k]) return false;
  }
  return true;
}

ReflectionSubgroup parse_subgroup(const WeylGroup& group, const std::string& text) {
  if (text.empty() || text == "trivial" || text == "none") return group.trivial_subgroup();
  if (text == "full") return group.full_subgroup();
  std::vector<std::size_t> roots;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) roots.push_back(group.find_root(parse_character(item, group.datum())));
  return group.reflection_subgroup(roots);
}

namespace {

std::string bracket_factor(int m) {
  std::string s = "(1";
  for (int k = 1; k <= m; ++k) s += "+t^" + std::to_string(2 * k);
  return s + ")";
}

// A graded family of lattices or subspaces with a coordinate map. Rows are in
// Hermite normal form over Z or reduced echelon form over a field.
struct GradedBasis {
  std::vector<linalg::Matrix> rows;           // per polynomial degree
  std::vector<std::vector<std::size_t>> pivots;

  // Coordinates of x (monomial coordinates) in the basis of degree d.
  linalg::Vector coordinates(int d, const linalg::Vector& x, const Ring& field) const {
    const auto& r = rows[d];
    linalg::Vector c(r.size(), Scalar(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
      Scalar v = x[pivots[d][i]];
      for (std::size_t j = 0; j < i; ++j) v -= c[j] * r[j][pivots[d][i]];
      c[i] = field.normalize(v / r[i][pivots[d][i]]);
    }
    return c;
  }
};

void set_pivots(GradedBasis& g) {
  g.pivots.clear();
  for (const auto& m : g.rows) {
    std::vector<std::size_t> p;
    for (const auto& row : m) {
      std::size_t k = 0;
      while (row[k] == 0) ++k;
      p.push_back(k);
    }
    g.pivots.push_back(std::move(p));
  }
}

// Invariants of the group generated by `gens`, degrees 0..bound. Over a
// field with route Direct they are computed over that field, otherwise as
// saturated integer lattices.
GradedBasis invariant_basis(const WeylGroup& group, const std::vector<std::size_t>& gens, int bound,
                            const Ring* direct_field) {
  GradedBasis g;
  for (int d = 0; d <= bound; ++d) {
    if (direct_field) {
      const MonomialBasis basis(group.rank(), d);
      const auto eq = linalg::to_scalar(fixed_point_equations(group, gens, basis));
      linalg::EchelonBasis e(*direct_field, basis.size());
      for (const auto& v : linalg::kernel(eq, basis.size(), *direct_field)) e.insert(v);
      g.rows.push_back(e.rows());
    } else {
      g.rows.push_back(linalg::to_scalar(invariant_lattice(group, gens, d)));
    }
  }
  set_pivots(g);
  return g;
}

std::vector<std::size_t> subgroup_generators(const WeylGroup& group, const ReflectionSubgroup& sub) {
  std::vector<std::size_t> gens;
  for (std::size_t r : sub.simple_roots) gens.push_back(group.reflection_of_root(r));
  return gens;
}

Polynomial row_polynomial(const WeylGroup& group, int d, const linalg::Vector& row) {
  return MonomialBasis(group.rank(), d).polynomial(row, Ring::rationals());
}

// Rank of integer or rational vectors after tensoring with `ring`, plus the
// invariant factors that are not units in `ring`.
std::size_t rank_over(const linalg::Matrix& vecs, std::size_t ncols, const Ring& ring,
                      std::vector<mpz_class>* torsion) {
  if (ring.kind() == Ring::Kind::IntegersMod) {
    linalg::EchelonBasis e(ring, ncols);
    for (const auto& v : vecs) {
      linalg::Vector w(ncols);
      for (std::size_t j = 0; j < ncols; ++j) w[j] = ring.normalize(v[j]);
      e.insert(std::move(w));
    }
    return e.rank();
  }
  const std::size_t r = linalg::rank(vecs, ncols, Ring::rationals());
  if (torsion && ring.kind() != Ring::Kind::Rationals && !vecs.empty()) {
    for (const auto& f : linalg::smith_invariants(linalg::to_integer(vecs), ncols)) {
      if (f != 1 && !ring.inverts(f.get_si())) torsion->push_back(f);
    }
  }
  return r;
}

// Every reflection subgroup of W is the Weyl group of a subgroup containing
// the maximal torus, so the only failure is a subgroup from another group.
void check_maximal_rank(const WeylGroup& group, const ReflectionSubgroup& sub, HilbertSeries& s) {
  bool ok = !sub.elements.empty() && sub.elements.front() == 0 && group.order() % sub.order() == 0;
  for (std::size_t w : sub.elements) ok = ok && w < group.order();
  for (std::size_t r : sub.positive_roots) ok = ok && r < group.num_positive_roots();
  if (!ok) throw RankDeficientSubgroup("subgroup does not share the maximal torus of " + group.datum().name);
  if (!sub.is_closed) s.warnings.push_back("root subsystem is not closed: not the Weyl group of a subgroup");
}

}  // namespace

HilbertSeries flag_poincare(const WeylGroup& group) {
  HilbertSeries s;
  s.coeffs.assign(2 * static_cast<std::size_t>(group.max_length()) + 1, 0);
  for (const auto& w : group.elements()) s.coeffs[2 * w.length] += 1;
  // Exponents: the partition dual to the numbers of positive roots of each height.
  std::map<int, int> by_height;
  for (std::size_t b = 0; b < group.num_positive_roots(); ++b) by_height[group.roots()[b].height] += 1;
  std::vector<int> exps;
  for (int j = 1; j <= static_cast<int>(group.num_simple()); ++j) {
    int m = 0;
    for (const auto& [h, count] : by_height) {
      if (count >= j) m = std::max(m, h);
    }
    exps.push_back(m);
  }
  std::sort(exps.begin(), exps.end());
  for (int m : exps) s.closed_form += bracket_factor(m);
  if (s.closed_form.empty()) s.closed_form = "1";
  return s;
}

HilbertSeries quotient_poincare(const WeylGroup& group, const ReflectionSubgroup& sub, const Ring& ring, int bound) {
  HilbertSeries s;
  check_maximal_rank(group, sub, s);
  if (ring.kind() == Ring::Kind::IntegersMod && !ring.is_field()) {
    throw UnsupportedRing("Hilbert series over " + ring.to_string());
  }
  const GradedBasis lu = invariant_basis(group, subgroup_generators(group, sub), bound, nullptr);
  const GradedBasis lw = invariant_basis(group, simple_reflection_elements(group), bound, nullptr);
  s.coeffs.assign(2 * static_cast<std::size_t>(bound) + 1, 0);
  const Ring q = Ring::rationals();
  for (int d = 0; d <= bound; ++d) {
    const MonomialBasis basis(group.rank(), d);
    linalg::Matrix ideal;
    for (int k = 1; k <= d; ++k) {
      for (const auto& u : lw.rows[k]) {
        const Polynomial pu = row_polynomial(group, k, u);
        for (const auto& b : lu.rows[d - k]) {
          ideal.push_back(lu.coordinates(d, basis.coords(pu * row_polynomial(group, d - k, b)), q));
        }
      }
    }
    std::vector<mpz_class> torsion;
    const std::size_t n = lu.rows[d].size();
    s.coeffs[2 * d] = static_cast<long>(n - rank_over(ideal, n, ring, &torsion));
    for (const auto& t : torsion) {
      s.warnings.push_back("torsion of order " + t.get_str() + " in degree " + std::to_string(2 * d));
    }
  }
  const std::size_t expected = group.order() / sub.order();
  const int top = static_cast<int>(group.num_positive_roots() - sub.positive_roots.size());
  if (bound >= top) {
    if (s.total() != static_cast<long>(expected)) {
      s.warnings.push_back("total dimension " + std::to_string(s.total()) + " differs from |W|/|W_U| = " +
                           std::to_string(expected));
    }
    s.closed_form = s.to_string();
  }
  return s;
}

HilbertSeries coset_length_series(const WeylGroup& group, const ReflectionSubgroup& sub) {
  HilbertSeries s;
  std::set<std::size_t> reps;
  for (std::size_t w = 0; w < group.order(); ++w) {
    std::size_t best = w;
    for (std::size_t u : sub.elements) {
      const std::size_t x = group.multiply(w, u);
      if (group.element(x).length < group.element(best).length ||
          (group.element(x).length == group.element(best).length && x < best)) {
        best = x;
      }
    }
    reps.insert(best);
  }
  int top = 0;
  for (std::size_t r : reps) top = std::max(top, group.element(r).length);
  s.coeffs.assign(2 * static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t r : reps) s.coeffs[2 * group.element(r).length] += 1;
  s.closed_form = s.to_string();
  if (!sub.is_parabolic) s.warnings.push_back("non-parabolic subgroup: coset series is not the Poincare series");
  return s;
}

HilbertSeries invariant_series(const WeylGroup& group, const ReflectionSubgroup& sub, const Ring& ring, int bound) {
  HilbertSeries s;
  s.coeffs.assign(2 * static_cast<std::size_t>(bound) + 1, 0);
  const GradedBasis lu = invariant_basis(group, subgroup_generators(group, sub), bound, nullptr);
  for (int d = 0; d <= bound; ++d) {
    // A saturated lattice stays independent after reduction mod p.
    (void)ring;
    s.coeffs[2 * d] = static_cast<long>(lu.rows[d].size());
  }
  return s;
}

HilbertSeries tensor_square_dims(const WeylGroup& group, const ReflectionSubgroup& sub, const Ring& ring, int bound,
                                 TensorRoute route) {
  HilbertSeries s;
  check_maximal_rank(group, sub, s);
  const bool direct = route == TensorRoute::Direct;
  if (direct && !ring.is_field()) throw UnsupportedRing("direct tensor route needs a field, got " + ring.to_string());
  if (ring.kind() == Ring::Kind::IntegersMod && !ring.is_field()) {
    throw UnsupportedRing("Hilbert series over " + ring.to_string());
  }
  const Ring coord_field = direct ? ring : Ring::rationals();
  const Ring* df = direct ? &ring : nullptr;
  const GradedBasis lu = invariant_basis(group, subgroup_generators(group, sub), bound, df);
  const GradedBasis lw = invariant_basis(group, simple_reflection_elements(group), bound, df);
  // Products u * b for u in (S^W)_k and b in the degree-a basis, in coordinates
  // of the degree a+k basis.
  std::map<std::tuple<int, std::size_t, int, std::size_t>, linalg::Vector> prod;
  auto product_coords = [&](int k, std::size_t ui, int a, std::size_t bi) -> const linalg::Vector& {
    auto key = std::make_tuple(k, ui, a, bi);
    auto it = prod.find(key);
    if (it != prod.end()) return it->second;
    const MonomialBasis basis(group.rank(), a + k);
    const Polynomial p = row_polynomial(group, k, lw.rows[k][ui]) * row_polynomial(group, a, lu.rows[a][bi]);
    return prod.emplace(key, lu.coordinates(a + k, basis.coords(change_ring(p, Ring::rationals())), coord_field))
        .first->second;
  };
  s.coeffs.assign(2 * static_cast<std::size_t>(bound) + 1, 0);
  for (int d = 0; d <= bound; ++d) {
    // Basis of the degree-d part of the tensor square: pairs (a, i) x (d-a, j).
    std::vector<std::size_t> offset(d + 2, 0);
    for (int a = 0; a <= d; ++a) offset[a + 1] = offset[a] + lu.rows[a].size() * lu.rows[d - a].size();
    const std::size_t n = offset[d + 1];
    auto index = [&](int a, std::size_t i, std::size_t j) { return offset[a] + i * lu.rows[d - a].size() + j; };
    linalg::Matrix rel;
    for (int k = 1; k <= d; ++k) {
      for (std::size_t ui = 0; ui < lw.rows[k].size(); ++ui) {
        for (int a = 0; a + k <= d; ++a) {
          const int b = d - k - a;
          for (std::size_t i = 0; i < lu.rows[a].size(); ++i) {
            for (std::size_t j = 0; j < lu.rows[b].size(); ++j) {
              // (u ⊗ 1 - 1 ⊗ u)(x_i ⊗ y_j)
              linalg::Vector v(n, Scalar(0));
              const auto& left = product_coords(k, ui, a, i);
              for (std::size_t i2 = 0; i2 < left.size(); ++i2) v[index(a + k, i2, j)] += left[i2];
              const auto& right = product_coords(k, ui, b, j);
              for (std::size_t j2 = 0; j2 < right.size(); ++j2) v[index(a, i, j2)] -= right[j2];
              rel.push_back(std::move(v));
            }
          }
        }
      }
    }
    std::vector<mpz_class> torsion;
    s.coeffs[2 * d] = static_cast<long>(n - rank_over(rel, n, ring, direct ? nullptr : &torsion));
    for (const auto& t : torsion) {
      s.warnings.push_back("torsion of order " + t.get_str() + " in degree " + std::to_string(2 * d));
    }
  }
  return s;
}

HilbertSeries series_product(const HilbertSeries& a, const HilbertSeries& b, std::size_t length) {
  HilbertSeries s;
  s.coeffs.assign(length, 0);
  for (std::size_t i = 0; i < a.coeffs.size() && i < length; ++i) {
    for (std::size_t j = 0; j < b.coeffs.size() && i + j < length; ++j) s.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return s;
}

}  // namespace nilhecke
