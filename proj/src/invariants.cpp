#include "nilhecke/invariants.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "nilhecke/errors.hpp"

namespace nilhecke {

QuotientModule::QuotientModule(std::shared_ptr<const DemazureCalculus> calc, std::vector<Polynomial> relations,
                               int bound)
    : calc_(std::move(calc)), relations_(std::move(relations)), bound_(bound) {
  const Ring& ring = calc_->ring();
  if (ring.kind() == Ring::Kind::IntegersMod && !ring.is_field()) {
    throw UnsupportedRing("graded invariants over " + ring.to_string() + " (modulus not prime)");
  }
  if (!relations_.empty() && !ring.is_field()) {
    throw UnsupportedRing("relations are only supported over fields, got " + ring.to_string());
  }
  for (const auto& r : relations_) {
    if (r.ring() != ring || r.nvars() != calc_->nvars()) throw RingMismatch("relation does not match the module");
    if (r.is_zero() || !r.is_homogeneous()) throw InvalidRelation("relations must be nonzero and homogeneous");
    for (std::size_t i = 0; i < calc_->group().num_simple(); ++i) {
      if (!calc_->delta_simple(static_cast<int>(i), r).is_zero()) {
        throw InvalidRelation("relation is not W-invariant: " + r.to_string(calc_->group().datum().var_names));
      }
    }
  }
  for (int d = 0; d <= bound_; ++d) {
    Level level;
    level.monomials = std::make_unique<MonomialBasis>(calc_->nvars(), d);
    const auto& monos = level.monomials->monomials();
    if (ring.is_field()) {
      level.ideal = std::make_unique<linalg::EchelonBasis>(ring, monos.size());
      for (const auto& r : relations_) {
        const int dr = r.degree();
        if (dr > d) continue;
        for (const Exponent& e : monomials_of_degree(calc_->nvars(), d - dr)) {
          level.ideal->insert(level.monomials->coords(Polynomial::monomial(ring, e) * r));
        }
      }
      level.basis_columns = level.ideal->free_columns();
    } else {
      level.basis_columns.resize(monos.size());
      std::iota(level.basis_columns.begin(), level.basis_columns.end(), 0);
    }
    for (std::size_t c : level.basis_columns) level.basis.push_back(monos[c]);
    levels_.push_back(std::move(level));
  }
}

std::size_t QuotientModule::dim(int d) const {
  if (d < 0) return 0;
  return levels_.at(d).basis.size();
}

linalg::Vector QuotientModule::coords(const Polynomial& f, int d) const {
  if (d < 0) return {};
  const Level& level = levels_.at(d);
  linalg::Vector full = level.monomials->coords(f);
  if (level.ideal) full = level.ideal->reduce(std::move(full));
  linalg::Vector out;
  out.reserve(level.basis_columns.size());
  for (std::size_t c : level.basis_columns) out.push_back(full[c]);
  return out;
}

Polynomial QuotientModule::representative(const linalg::Vector& v, int d) const {
  Polynomial p(ring(), calc_->nvars());
  const auto& basis = levels_.at(d).basis;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) p.add_term(basis[j], ring().normalize(v[j]));
  }
  return p;
}

Polynomial QuotientModule::reduce(const Polynomial& f) const {
  Polynomial out(ring(), calc_->nvars());
  if (f.is_zero()) return out;
  if (f.degree() > bound_) throw InternalError("polynomial degree exceeds the module's degree bound");
  for (int d = 0; d <= f.degree(); ++d) out += representative(coords(f, d), d);
  return out;
}

std::vector<std::size_t> GradedSubspace::dims() const {
  std::vector<std::size_t> out;
  for (const auto& b : basis) out.push_back(b.size());
  return out;
}

namespace {

// Multiplies each row by the lcm of its denominators.
linalg::IntMatrix clear_row_denominators(const linalg::Matrix& m) {
  linalg::IntMatrix out;
  for (const auto& row : m) {
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    linalg::IntVector r;
    for (const auto& x : row) r.push_back(mpq_class(x * l).get_num());
    out.push_back(std::move(r));
  }
  return out;
}

// Kernel of a matrix whose columns are indexed by the module basis.
linalg::Matrix module_kernel(const linalg::Matrix& equations, std::size_t ncols, const Ring& ring) {
  if (ring.is_field()) return linalg::kernel(equations, ncols, ring);
  return linalg::to_scalar(linalg::integer_kernel(clear_row_denominators(equations), ncols));
}

// Basis of the span of vectors (row HNF over Z, echelon rows over a field).
linalg::Matrix module_span(const linalg::Matrix& vectors, std::size_t ncols, const Ring& ring) {
  if (ring.is_field()) {
    linalg::EchelonBasis e(ring, ncols);
    for (const auto& v : vectors) e.insert(v);
    return e.rows();
  }
  return linalg::to_scalar(linalg::row_hnf(clear_row_denominators(vectors), ncols));
}

}  // namespace

GradedSubspace invariants_graded(const QuotientModule& module, InvariantKind which) {
  const DemazureCalculus& calc = module.calc();
  const std::size_t k = calc.group().num_simple();
  GradedSubspace out;
  for (int d = 0; d <= module.bound(); ++d) {
    const std::size_t n = module.dim(d);
    linalg::Matrix eq;
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial b = Polynomial::monomial(module.ring(), module.basis_monomials(d)[j]);
      for (std::size_t i = 0; i < k; ++i) {
        linalg::Vector c;
        if (which == InvariantKind::W) {
          c = module.coords(calc.weyl_act(calc.group().simple_reflection(static_cast<int>(i)), b) - b, d);
        } else {
          if (d == 0) continue;
          c = module.coords(calc.delta_simple(static_cast<int>(i), b), d - 1);
        }
        const std::size_t block = c.size();
        if (eq.size() < k * block) eq.resize(k * block, linalg::Vector(n, Scalar(0)));
        for (std::size_t r = 0; r < block; ++r) eq[i * block + r][j] = c[r];
      }
    }
    std::vector<Polynomial> basis;
    for (const auto& v : module_kernel(eq, n, module.ring())) basis.push_back(module.representative(v, d));
    out.basis.push_back(std::move(basis));
  }
  return out;
}

Polynomial module_psi(const QuotientModule& module, const SchubertFamily& family, const Polynomial& a) {
  if (family.ring() != module.ring()) throw RingMismatch("family and module use different rings");
  return module.reduce(module.calc().psi(family.top, a));
}

Decomposition decompose_AW(const QuotientModule& module, const SchubertFamily& family) {
  const GradedSubspace aw = invariants_graded(module, InvariantKind::W);
  Decomposition out;
  for (int d = 0; d <= module.bound(); ++d) {
    const std::size_t n = module.dim(d);
    const auto& vs = aw.basis[d];
    linalg::Matrix images;
    for (const auto& v : vs) images.push_back(module.coords(module_psi(module, family, v), d));
    std::vector<Polynomial> id_part;
    for (const auto& row : module_span(images, n, module.ring())) id_part.push_back(module.representative(row, d));
    // Combinations x with sum x_j psi(v_j) = 0.
    linalg::Matrix eq(n, linalg::Vector(vs.size(), Scalar(0)));
    for (std::size_t j = 0; j < vs.size(); ++j) {
      for (std::size_t r = 0; r < n; ++r) eq[r][j] = images[j][r];
    }
    std::vector<Polynomial> j_part;
    for (const auto& x : module_kernel(eq, vs.size(), module.ring())) {
      Polynomial p(module.ring(), module.calc().nvars());
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (x[j] != 0) p += vs[j] * module.ring().normalize(x[j]);
      }
      j_part.push_back(std::move(p));
    }
    out.id_part.basis.push_back(std::move(id_part));
    out.j_part.basis.push_back(std::move(j_part));
  }
  return out;
}

BaseComparison base_vs_invariants(std::shared_ptr<const WeylGroup> group, const Ring& ring, int bound) {
  const long t = torsion_index(*group);
  if (!ring.inverts(t)) {
    throw TorsionNotInvertible("torsion index " + std::to_string(t) + " is not a unit in " + ring.to_string());
  }
  auto calc = std::make_shared<const DemazureCalculus>(group, ring);
  QuotientModule module(calc, {}, bound);
  BaseComparison out;
  out.invariants = invariants_graded(module, InvariantKind::W).dims();
  out.killed = invariants_graded(module, InvariantKind::ID).dims();
  const auto gens = simple_reflection_elements(*group);
  for (int d = 0; d <= bound; ++d) {
    const auto lattice = invariant_lattice(*group, gens, d);
    std::size_t r = lattice.size();
    if (ring.is_field() && ring.kind() == Ring::Kind::IntegersMod) {
      r = linalg::rank(linalg::to_scalar(lattice), MonomialBasis(group->rank(), d).size(), ring);
    }
    out.base.push_back(r);
    if (out.base.back() != out.invariants[d]) out.strict_degrees.push_back(d);
  }
  return out;
}

std::vector<std::size_t> matrix_basis_order(const WeylGroup& group) {
  const std::string name = matching_preset(group.datum());
  std::vector<Word> words;
  if (name == "U3" || name == "SU3" || name == "PSU3") {
    words = {{0, 1, 0}, {0, 1}, {1, 0}, {1}, {0}, {}};
  } else if (name == "Sp2") {
    words = {{0, 1, 0, 1}, {1, 0, 1}, {0, 1, 0}, {0, 1}, {1, 0}, {1}, {0}, {}};
  }
  std::vector<std::size_t> order;
  if (!words.empty()) {
    for (const auto& w : words) order.push_back(group.from_word(w));
    return order;
  }
  for (std::size_t w = 0; w < group.order(); ++w) order.push_back(w);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return group.element(a).length > group.element(b).length;
  });
  return order;
}

PolyMatrix reflection_matrix(const SchubertExpander& expander, int i, const std::vector<std::size_t>& order) {
  const SchubertFamily& fam = expander.family();
  const Polynomial zero(fam.ring(), expander.basis().size());
  PolyMatrix m(order.size(), std::vector<Polynomial>(order.size(), zero));
  std::vector<std::size_t> position(fam.group().order());
  for (std::size_t r = 0; r < order.size(); ++r) position[order[r]] = r;
  const std::size_t s = fam.group().simple_reflection(i);
  for (std::size_t c = 0; c < order.size(); ++c) {
    for (const auto& [w, p] : expander.expand(fam.calc->weyl_act(s, fam[order[c]]))) m[position[w]][c] = p;
  }
  return m;
}

PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial(a[0][0].ring(), a[0][0].nvars())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

PolyMatrix word_matrix(const SchubertExpander& expander, const Word& word, const std::vector<std::size_t>& order) {
  const SchubertFamily& fam = expander.family();
  const std::size_t n = order.size(), k = expander.basis().size();
  PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial(fam.ring(), k)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Polynomial::constant(fam.ring(), k, 1);
  for (int letter : word) m = matrix_product(m, reflection_matrix(expander, letter, order));
  return m;
}

// ---------------------------------------------------------------------------

std::string SimpleIdeal::to_string() const {
  std::string s = "(";
  if (m != 0) s += std::to_string(m);
  if (!g.empty()) s += (m != 0 ? ", " : "") + g;
  if (m == 0 && g.empty()) s += "0";
  return s + ")";
}

bool ideal_contains(const SimpleIdeal& ideal, const Polynomial& h, const std::vector<std::string>& names) {
  if (ideal.m == 1 || ideal.m == -1) return true;
  Ring target = h.ring();
  if (h.ring().kind() == Ring::Kind::IntegersMod) {
    const long q = h.ring().modulus();
    if (ideal.m != 0 && std::gcd(ideal.m, q) == 1) return true;
    if (ideal.m != 0 && ideal.m % q != 0) {
      throw MembershipUndecidable("ideal " + ideal.to_string() + " over " + h.ring().to_string());
    }
  } else if (ideal.m != 0) {
    target = Ring::integers_mod(std::abs(ideal.m));
  }
  Polynomial hh = change_ring(h, target);
  if (ideal.g.empty()) return hh.is_zero();
  const Polynomial g = parse_polynomial(ideal.g, names, target);
  auto pos = std::find(names.begin(), names.end(), ideal.designated);
  if (pos == names.end()) throw MembershipUndecidable("unknown designated generator '" + ideal.designated + "'");
  const std::size_t k = static_cast<std::size_t>(pos - names.begin());
  // g = a x_k + b with a a unit constant and b free of x_k.
  Scalar a = 0;
  Polynomial b(target, names.size());
  for (const auto& [e, c] : g.terms()) {
    if (e[k] == 0) {
      b.add_term(e, c);
    } else if (e[k] == 1 && e.degree() == 1) {
      a = c;
    } else {
      throw MembershipUndecidable(ideal.g + " is not linear in " + ideal.designated + " with constant coefficient");
    }
  }
  if (a == 0 || !target.is_unit(a)) {
    throw MembershipUndecidable("coefficient of " + ideal.designated + " in " + ideal.g + " is not a unit");
  }
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < names.size(); ++j) images.push_back(Polynomial::variable(target, names.size(), j));
  images[k] = -(b * target.inverse(a));
  return hh.substitute(images).is_zero();
}

Ring table_ring(long torsion) { return torsion == 1 ? Ring::integers() : Ring::localized_at({torsion}); }

namespace {

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t d : dims) s += (s.empty() ? "" : ",") + std::to_string(d);
  return "[" + s + "]";
}

Polynomial generator_element(const TableGenerator& gen, const SchubertFamily& fam, const SWBasis& basis) {
  Polynomial v(fam.ring(), fam.group().rank());
  for (const auto& [word, text] : gen.coeffs) {
    v += basis.evaluate(parse_polynomial(text, basis.names(), fam.ring())) * fam[fam.group().from_word(word)];
  }
  return v;
}

}  // namespace

TableRowReport table_row_check(const TableRow& row, int bound) {
  TableRowReport rep;
  rep.group = row.group;
  auto group = std::make_shared<const WeylGroup>(preset_datum(row.group));
  const long t = torsion_index(*group);
  if (t != row.torsion) {
    rep.forward_ok = false;
    rep.first_failure = "torsion index " + std::to_string(t) + " differs from " + std::to_string(row.torsion);
    return rep;
  }
  const Ring ring = table_ring(t);
  const auto fam = schubert_family(group, ring);
  const auto basis = std::make_shared<const SWBasis>(group, ring);
  const SchubertExpander expander(fam, basis);
  const auto order = matrix_basis_order(*group);
  std::vector<PolyMatrix> mats;
  for (std::size_t i = 0; i < group->num_simple(); ++i) mats.push_back(reflection_matrix(expander, static_cast<int>(i), order));

  // Forward: every entry of (M_i - Id) v lies in the stated ideal.
  for (std::size_t j = 0; j < row.generators.size(); ++j) {
    const auto& gen = row.generators[j];
    std::vector<Polynomial> v(order.size(), Polynomial(ring, basis->size()));
    for (const auto& [word, text] : gen.coeffs) {
      const std::size_t w = group->from_word(word);
      const std::size_t pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), w) - order.begin());
      v[pos] = parse_polynomial(text, basis->names(), ring);
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
      for (std::size_t r = 0; r < order.size(); ++r) {
        Polynomial entry = -v[r];
        for (std::size_t c = 0; c < order.size(); ++c) entry += mats[i][r][c] * v[c];
        if (!ideal_contains(gen.ideal, entry, basis->names())) {
          if (rep.forward_ok) {
            rep.first_failure = row.group + " generator " + std::to_string(j + 1) + ", s" + std::to_string(i + 1) +
                                ", row " + group->word_string(order[r]) + ": " + entry.to_string(basis->names()) +
                                " not in " + gen.ideal.to_string();
          }
          rep.forward_ok = false;
        }
      }
    }
  }

  // Converse: on the witnesses S_{F_p}/(g), the J-part equals the span of the
  // generators whose annihilator ideal vanishes on the witness.
  for (long p : {2L, 3L}) {
    if (t % p == 0) continue;
    const Ring fp = Ring::integers_mod(p);
    auto group_ptr = group;
    const auto famp = schubert_family(group_ptr, fp);
    const SWBasis basisp(group_ptr, fp);
    std::vector<std::pair<std::string, std::string>> witnesses{{"", ""}};
    for (const auto& gen : row.generators) {
      std::pair<std::string, std::string> w{gen.ideal.g, gen.ideal.designated};
      if (!w.first.empty() && std::find(witnesses.begin(), witnesses.end(), w) == witnesses.end()) {
        witnesses.push_back(w);
      }
    }
    for (const auto& [g, designated] : witnesses) {
      std::vector<Polynomial> rels;
      if (!g.empty()) rels.push_back(basisp.evaluate(parse_polynomial(g, basisp.names(), fp)));
      const QuotientModule module(famp.calc, rels, bound);
      const auto dec = decompose_AW(module, famp);
      std::vector<std::size_t> jdims = dec.j_part.dims(), pdims, udims;
      std::vector<Polynomial> predicted_elems;
      std::vector<int> predicted_deg;
      for (const auto& gen : row.generators) {
        const bool m_ok = gen.ideal.m == 0 || gen.ideal.m % p == 0;
        bool g_ok = gen.ideal.g.empty();
        if (!g_ok && !g.empty()) {
          g_ok = ideal_contains(SimpleIdeal{p, g, designated},
                                parse_polynomial(gen.ideal.g, basisp.names(), fp), basisp.names());
        }
        if (!(m_ok && g_ok)) continue;
        const Polynomial v = generator_element(gen, famp, basisp);
        predicted_elems.push_back(v);
        predicted_deg.push_back(v.degree());
      }
      // The listed elements span a complement of B in A^W; A^J is their image
      // under 1 - psi. Check invariance, injectivity of 1 - psi on the span,
      // and that the projected span is all of A^J.
      bool ok = true;
      const auto& calc = *famp.calc;
      for (int d = 0; d <= bound; ++d) {
        linalg::EchelonBasis raw(fp, module.dim(d)), pred(fp, module.dim(d));
        for (std::size_t e = 0; e < predicted_elems.size(); ++e) {
          for (const Exponent& b : basisp.generator_monomials(d - predicted_deg[e])) {
            const Polynomial x = module.reduce(basisp.evaluate_monomial(b) * predicted_elems[e]);
            for (std::size_t i = 0; i < group->num_simple(); ++i) {
              const Polynomial moved = calc.weyl_act(group->simple_reflection(static_cast<int>(i)), x) - x;
              if (!module.reduce(moved).is_zero()) ok = false;
            }
            raw.insert(module.coords(x, d));
            pred.insert(module.coords(x - module_psi(module, famp, x), d));
          }
        }
        pdims.push_back(pred.rank());
        linalg::EchelonBasis uni = pred;
        for (const auto& a : dec.j_part.basis[d]) uni.insert(module.coords(a, d));
        udims.push_back(uni.rank());
        if (raw.rank() != pred.rank() || pred.rank() != jdims[d] || uni.rank() != jdims[d]) ok = false;
      }
      std::ostringstream line;
      line << "F" << p << ", witness " << (g.empty() ? std::string("S") : "S/(" + g + ")") << ": J dims "
           << dims_string(jdims) << ", predicted " << dims_string(pdims) << ", union " << dims_string(udims)
           << (ok ? " ok" : " MISMATCH");
      rep.details.push_back(line.str());
      if (!ok) {
        if (rep.converse_ok && rep.first_failure.empty()) rep.first_failure = line.str();
        rep.converse_ok = false;
      }
    }
  }
  return rep;
}

}  // namespace nilhecke
