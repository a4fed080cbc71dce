#include "nilhecke/verify.hpp"

#include <functional>
#include <memory>
#include <sstream>

#include "nilhecke/errors.hpp"
#include "nilhecke/fixtures.hpp"
#include "nilhecke/graded.hpp"
#include "nilhecke/homogeneous.hpp"
#include "nilhecke/invariants.hpp"
#include "nilhecke/schubert.hpp"

namespace nilhecke {

RootDatum g2_datum() { return make_datum("G2", {{1, 0}, {0, 1}}, {{2, -3}, {-1, 2}}, {"x1", "x2"}); }

Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, std::size_t nvars, int max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Polynomial f(ring, nvars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(nvars);
    for (int k = deg(rng); k > 0; --k) {
      const std::size_t i = var(rng);
      e.set(i, e[i] + 1);
    }
    f.add_term(e, ring.normalize(coeff(rng)));
  }
  return f;
}

namespace {

using Groups = std::vector<RootDatum>;

Groups presets(const std::vector<std::string>& names) {
  Groups out;
  for (const auto& n : names) out.push_back(preset_datum(n));
  return out;
}

const Groups& chosen(const VerifyOptions& o, const Groups& defaults) { return o.data.empty() ? defaults : o.data; }

std::shared_ptr<const WeylGroup> weyl(const RootDatum& d) { return std::make_shared<const WeylGroup>(d); }

// Collects failures; the first few are kept as the detail line.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures == 0) first = what;
    ++failures;
  }
  CheckResult result(int criterion, const std::string& name, const std::string& summary) const {
    CheckResult r{criterion, name, failures == 0, ""};
    r.detail = failures == 0 ? summary + " (" + std::to_string(checks) + " checks)"
                             : std::to_string(failures) + "/" + std::to_string(checks) + " failed; first: " + first;
    return r;
  }
};

std::string names_of(const Groups& gs) {
  std::string s;
  for (const auto& g : gs) s += (s.empty() ? "" : ",") + g.name;
  return s;
}

CheckResult check_schubert(const VerifyOptions&) {
  Tally t;
  for (const auto& shown : fixtures::displayed_families()) {
    const auto g = weyl(preset_datum(shown.group));
    const auto family = schubert_family(g, Ring::integers());
    t.expect(shown.members.size() == g->order(), shown.group + ": family size");
    for (const auto& [word, text] : shown.members) {
      const std::size_t w = g->from_word(word);
      const Polynomial expected = parse_polynomial(text, g->datum().var_names, Ring::integers());
      t.expect(family[w] == expected, shown.group + " S_" + g->word_string(w) + " = " +
                                          family[w].to_string(g->datum().var_names) + ", expected " + text);
    }
  }
  return t.result(1, "Schubert lists", "U2, U3, Sp2 families match");
}

CheckResult check_matrices(const VerifyOptions&) {
  Tally t;
  for (const auto& shown : fixtures::displayed_matrices()) {
    const auto g = weyl(preset_datum(shown.group));
    const auto basis = std::make_shared<const SWBasis>(g, Ring::integers());
    const SchubertExpander ex(schubert_family(g, Ring::integers()), basis);
    const auto m = reflection_matrix(ex, shown.generator - 1, matrix_basis_order(*g));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        const Polynomial expected = parse_polynomial(shown.entries[i][j], basis->names(), Ring::integers());
        t.expect(m[i][j] == expected, shown.group + " M" + std::to_string(shown.generator) + "[" +
                                          std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " +
                                          m[i][j].to_string(basis->names()) + ", expected " + shown.entries[i][j]);
      }
    }
  }
  return t.result(2, "Reflection matrices", "U2 M, U3 M1 M2, Sp2 M1 M2 match");
}

CheckResult check_torsion(const VerifyOptions&) {
  const std::vector<std::pair<std::string, long>> expected = {{"U2", 1},  {"U3", 1},   {"SU2", 1}, {"SU3", 1},
                                                              {"SO3", 2}, {"PSU3", 3}, {"Sp2", 1}};
  Tally t;
  std::string got;
  for (const auto& [name, value] : expected) {
    const long ti = torsion_index(WeylGroup(preset_datum(name)));
    got += (got.empty() ? "" : ",") + std::to_string(ti);
    t.expect(ti == value, name + ": " + std::to_string(ti) + ", expected " + std::to_string(value));
  }
  return t.result(3, "Torsion indices", "(" + got + ")");
}

CheckResult check_antisymmetrizer(const VerifyOptions& o) {
  const Groups defaults = presets(preset_names());
  const auto& gs = chosen(o, defaults);
  std::mt19937_64 rng(o.seed);
  Tally t;
  for (const auto& d : gs) {
    const DemazureCalculus calc(weyl(d), Ring::integers());
    for (int k = 0; k < o.samples; ++k) {
      const Polynomial f = random_polynomial(rng, Ring::integers(), d.rank, 6);
      t.expect(calc.antisymmetrizer_identity_check(f), d.name + ": f = " + f.to_string(d.var_names));
    }
  }
  return t.result(4, "Antisymmetrizer", names_of(gs));
}

CheckResult check_braid(const VerifyOptions& o) {
  const Groups defaults = {preset_datum("U3"), preset_datum("Sp2"), g2_datum()};
  const auto& gs = chosen(o, defaults);
  Tally t;
  for (const auto& d : gs) {
    const auto g = weyl(d);
    const DemazureCalculus calc(g, Ring::integers());
    for (std::size_t w = 0; w < g->order(); ++w) {
      const auto words = g->all_reduced_words(w);
      const int len = g->element(w).length;
      for (int deg = 0; deg <= len + 3; ++deg) {
        for (const auto& e : monomials_of_degree(d.rank, deg)) {
          const Polynomial m = Polynomial::monomial(Ring::integers(), e);
          const Polynomial ref = calc.partial(w, m);
          for (const auto& word : words) {
            t.expect(calc.partial_word(word, m) == ref,
                     d.name + " " + g->word_string(w) + " on " + m.to_string(d.var_names));
          }
        }
      }
    }
    // d_i^2 = 0.
    for (int i = 0; i < static_cast<int>(g->num_simple()); ++i) {
      for (const auto& e : monomials_of_degree(d.rank, 4)) {
        const Polynomial m = Polynomial::monomial(Ring::integers(), e);
        t.expect(calc.partial_word({i, i}, m).is_zero(), d.name + " d_" + std::to_string(i + 1) + "^2");
      }
    }
  }
  return t.result(5, "Word independence and braid relations", names_of(gs));
}

CheckResult check_nilhecke(const VerifyOptions& o) {
  const Groups defaults = presets({"U3", "Sp2"});
  const auto& gs = chosen(o, defaults);
  std::mt19937_64 rng(o.seed + 6);
  Tally t;
  for (const auto& d : gs) {
    const auto g = weyl(d);
    const DemazureCalculus calc(g, Ring::integers());
    std::vector<Polynomial> samples;
    for (int k = 0; k < 5; ++k) samples.push_back(random_polynomial(rng, Ring::integers(), d.rank, 6, 8));
    for (std::size_t a = 0; a < g->order(); ++a) {
      for (std::size_t b = 0; b < g->order(); ++b) {
        const std::size_t ab = g->multiply(a, b);
        const bool reduced = g->element(ab).length == g->element(a).length + g->element(b).length;
        const DemazureElement expected = reduced ? calc.basis(ab) : DemazureElement{};
        const std::string label = d.name + " " + g->word_string(a) + " * " + g->word_string(b);
        t.expect(calc.multiply(calc.basis(a), calc.basis(b)) == expected, label + " (structure constants)");
        t.expect(calc.multiply_by_generators(calc.basis(a), calc.basis(b)) == expected, label + " (generators)");
        for (const auto& f : samples) {
          const Polynomial lhs = calc.partial(a, calc.partial(b, f));
          t.expect(lhs == (reduced ? calc.partial(ab, f) : calc.zero()), label + " (composition)");
        }
      }
    }
  }
  return t.result(6, "Nil-Hecke relations", names_of(gs));
}

CheckResult check_leibniz(const VerifyOptions& o) {
  const Groups defaults = presets({"U3"});
  const auto& gs = chosen(o, defaults);
  std::mt19937_64 rng(o.seed + 7);
  Tally t;
  for (const auto& d : gs) {
    const auto g = weyl(d);
    const DemazureCalculus calc(g, Ring::integers());
    for (std::size_t w = 0; w < g->order(); ++w) {
      for (int k = 0; k < o.samples; ++k) {
        const Polynomial a1 = random_polynomial(rng, Ring::integers(), d.rank, 4);
        const Polynomial a2 = random_polynomial(rng, Ring::integers(), d.rank, 4);
        t.expect(calc.partial(w, a1 * a2) == calc.leibniz_expansion(w, a1, a2),
                 d.name + " w = " + g->word_string(w) + ", a1 = " + a1.to_string(d.var_names) +
                     ", a2 = " + a2.to_string(d.var_names));
      }
    }
  }
  return t.result(7, "Leibniz rule", names_of(gs));
}

CheckResult check_duality(const VerifyOptions& o) {
  const Groups defaults = presets({"U2", "U3", "U4"});
  const auto& gs = chosen(o, defaults);
  std::mt19937_64 rng(o.seed + 8);
  Tally t;
  for (const auto& d : gs) {
    const auto g = weyl(d);
    const auto family = schubert_family(g, Ring::integers());
    const auto& calc = *family.calc;
    const auto dual = dual_family(family);
    for (std::size_t a = 0; a < g->order(); ++a) {
      for (std::size_t b = 0; b < g->order(); ++b) {
        const Polynomial expected = a == b ? calc.one() : calc.zero();
        t.expect(calc.pairing(family[a], dual[b]) == expected,
                 d.name + " B(S_" + g->word_string(a) + ", S^" + g->word_string(b) + ")");
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
    for (int k = 0; k < o.samples; ++k) {
      const std::size_t w = pick(rng);
      const std::size_t wi = g->inverse(w);
      const Polynomial a1 = random_polynomial(rng, Ring::integers(), d.rank, 5);
      const Polynomial a2 = random_polynomial(rng, Ring::integers(), d.rank, 5);
      t.expect(calc.pairing(calc.partial(w, a1), a2) == calc.pairing(a1, calc.partial(wi, a2)),
               d.name + " partial adjoint, w = " + g->word_string(w));
      t.expect(calc.pairing(calc.weyl_act(w, a1), a2) ==
                   Scalar(g->element(w).det) * calc.pairing(a1, calc.weyl_act(wi, a2)),
               d.name + " reflection adjoint, w = " + g->word_string(w));
    }
  }
  return t.result(8, "Dual basis and adjoints", names_of(gs));
}

CheckResult check_psi(const VerifyOptions& o) {
  const Groups defaults = presets(preset_names());
  const auto& gs = chosen(o, defaults);
  const Ring q = Ring::rationals();
  std::mt19937_64 rng(o.seed + 9);
  Tally t;
  for (const auto& d : gs) {
    const auto g = weyl(d);
    const auto calc = std::make_shared<const DemazureCalculus>(g, q);
    const Polynomial top = top_class(*g, q, TopStrategy::Preset);
    const auto cz = std::make_shared<const DemazureCalculus>(g, Ring::integers());
    for (int deg = 0; deg <= o.bound; ++deg) {
      const MonomialBasis basis(d.rank, deg);
      // Matrix of psi on this degree, one column per monomial.
      linalg::Matrix cols;
      for (const auto& e : basis.monomials()) cols.push_back(basis.coords(calc->psi(top, Polynomial::monomial(q, e))));
      for (std::size_t j = 0; j < cols.size(); ++j) {
        linalg::Vector sq(basis.size(), Scalar(0));
        for (std::size_t k = 0; k < basis.size(); ++k) {
          if (cols[j][k] == 0) continue;
          for (std::size_t r = 0; r < basis.size(); ++r) sq[r] += cols[j][k] * cols[k][r];
        }
        t.expect(sq == cols[j], d.name + ": psi^2 != psi in degree " + std::to_string(deg));
      }
      // Image of psi equals the common kernel of the simple divided differences.
      const auto eq = linalg::to_scalar(simple_partial_equations(*cz, basis));
      const auto ker = deg == 0 ? std::vector<linalg::Vector>{linalg::Vector(1, Scalar(1))}
                                : linalg::kernel(eq, basis.size(), q);
      const std::size_t image_rank = linalg::rank(cols, basis.size(), q);
      t.expect(image_rank == ker.size(), d.name + ": rank of psi != dim ker in degree " + std::to_string(deg));
      for (const auto& c : cols) {
        if (deg == 0) break;
        for (const auto& row : eq) {
          Scalar s = 0;
          for (std::size_t k = 0; k < c.size(); ++k) s += row[k] * c[k];
          if (s != 0) {
            t.expect(false, d.name + ": image of psi not killed by simple partials in degree " + std::to_string(deg));
            break;
          }
        }
      }
    }
    // With the top class d/|W|, psi is the averaging operator.
    const Scalar order(static_cast<long>(g->order()));
    const Polynomial avg_top = calc->discriminant() * (Scalar(1) / order);
    t.expect(calc->partial(g->longest(), avg_top) == calc->one(), d.name + ": d_{w0}(d/|W|) != 1");
    for (int k = 0; k < 20; ++k) {
      const Polynomial f = random_polynomial(rng, q, d.rank, 5);
      Polynomial avg = calc->zero();
      for (std::size_t w = 0; w < g->order(); ++w) avg += calc->weyl_act(w, f);
      t.expect(calc->psi(avg_top, f) == avg * (Scalar(1) / order), d.name + ": psi != average");
    }
  }
  return t.result(9, "psi projection", names_of(gs) + " to degree " + std::to_string(o.bound));
}

CheckResult check_discriminant(const VerifyOptions& o) {
  const Groups defaults = presets(preset_names());
  const auto& gs = chosen(o, defaults);
  std::mt19937_64 rng(o.seed + 10);
  Tally t;
  for (const auto& d : gs) {
    const auto g = weyl(d);
    const long ti = torsion_index(*g);
    const Ring ring = table_ring(ti);
    const DemazureCalculus calc(g, ring);
    const Polynomial top = top_class(*g, ring, TopStrategy::Preset);
    for (int k = 0; k < o.samples; ++k) {
      const Polynomial f = random_polynomial(rng, ring, d.rank, 5);
      t.expect(calc.discriminant_identity_check(top, f), d.name + ": f = " + f.to_string(d.var_names));
    }
  }
  return t.result(10, "Discriminant identity", names_of(gs) + " over Z[1/t]");
}

CheckResult check_table(const VerifyOptions& o) {
  Tally t;
  for (const auto& row : fixtures::table_rows()) {
    const auto report = table_row_check(row, o.bound);
    t.expect(report.pass(), row.group + ": " + report.first_failure);
  }
  return t.result(11, "Invariant table", "7 rows, forward and converse, to degree " + std::to_string(o.bound));
}

std::string dims_string(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

CheckResult check_strictness(const VerifyOptions& o) {
  Tally t;
  std::ostringstream summary;
  {
    // (i) U2 over F2 modulo p1: the W-invariants strictly contain the I(D)-invariants in degree 1.
    const auto g = weyl(preset_datum("U2"));
    const Ring f2 = Ring::integers_mod(2);
    const auto calc = std::make_shared<const DemazureCalculus>(g, f2);
    const Polynomial p1 = parse_polynomial("e1 + e2", g->datum().var_names, f2);
    const QuotientModule module(calc, {p1}, 3);
    const auto aw = invariants_graded(module, InvariantKind::W).dims();
    const auto aid = invariants_graded(module, InvariantKind::ID).dims();
    t.expect(aw[1] > aid[1], "U2 F2/(p1): A^W and A^I(D) agree in degree 1");
    for (std::size_t k = 0; k < aw.size(); ++k) t.expect(aw[k] >= aid[k], "U2 F2/(p1): A^I(D) not inside A^W");
    summary << "(i) dims A^W " << dims_string(aw) << " vs A^I(D) " << dims_string(aid) << "; ";
  }
  {
    // (ii) SU2 over F2: the image of the integral invariants is strictly smaller.
    const auto cmp = base_vs_invariants(weyl(preset_datum("SU2")), Ring::integers_mod(2), o.bound);
    for (int d = 0; d <= o.bound; ++d) {
      t.expect(cmp.base[d] == (d % 2 == 0 ? 1u : 0u), "SU2 F2: base dimension pattern in degree " + std::to_string(d));
      t.expect(cmp.invariants[d] == 1u, "SU2 F2: invariant dimension in degree " + std::to_string(d));
    }
    summary << "(ii) " << dims_string(cmp.base) << " vs " << dims_string(cmp.invariants) << "; ";
  }
  {
    // (iii) No J-part over Q or over Z[1/t].
    const Groups defaults = presets(preset_names());
    for (const auto& d : chosen(o, defaults)) {
      const auto g = weyl(d);
      for (const Ring& ring : {Ring::rationals(), table_ring(torsion_index(*g))}) {
        const auto family = schubert_family(g, ring);
        const QuotientModule module(family.calc, {}, o.bound);
        const auto dec = decompose_AW(module, family);
        std::size_t total = 0;
        for (auto x : dec.j_part.dims()) total += x;
        t.expect(total == 0, d.name + " over " + ring.to_string() + ": nonzero J-part");
      }
    }
    summary << "(iii) J-part = 0";
  }
  return t.result(12, "Strictness witnesses", summary.str());
}

CheckResult check_homogeneous(const VerifyOptions&) {
  Tally t;
  const WeylGroup sp(preset_datum("Sp2"));
  const auto quat = parse_subgroup(sp, "2e1,2e2");
  const auto q = quotient_poincare(sp, quat, Ring::rationals(), 8);
  t.expect(q.coeffs == std::vector<long>{1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           "Sp2/Sp(1)^2 = " + q.to_string());
  t.expect(q.total() == static_cast<long>(sp.order() / quat.order()), "Sp2/Sp(1)^2 total");
  const WeylGroup u3(preset_datum("U3"));
  const auto p2 = quotient_poincare(u3, parse_subgroup(u3, "e1-e2"), Ring::integers(), 8);
  t.expect(p2.to_string() == "1 + t^2 + t^4", "U3/U(2)xU(1) = " + p2.to_string());
  const auto coset = coset_length_series(sp, quat);
  t.expect(coset.to_string() == "1 + t^2" && !coset.warnings.empty(), "Sp2 coset series = " + coset.to_string());
  t.expect(coset.coeffs != std::vector<long>(q.coeffs.begin(), q.coeffs.begin() + coset.coeffs.size()),
           "coset and quotient series agree for the non-parabolic subgroup");
  // Char-2 failure of the tensor square to degree 12.
  const Ring f2 = Ring::integers_mod(2);
  const auto integral = tensor_square_dims(sp, quat, f2, 6, TensorRoute::Integral);
  const auto direct = tensor_square_dims(sp, quat, f2, 6, TensorRoute::Direct);
  const auto rational = tensor_square_dims(sp, quat, Ring::rationals(), 6, TensorRoute::Integral);
  const auto product = series_product(q, invariant_series(sp, quat, Ring::rationals(), 6), 13);
  t.expect(rational.coeffs == product.coeffs, "Q tensor square != quotient * invariant series");
  t.expect(integral.coeffs == rational.coeffs, "F2 tensor square via Z != Q dims");
  bool larger = false;
  for (std::size_t k = 0; k < direct.coeffs.size(); ++k) {
    t.expect(direct.coeffs[k] >= integral.coeffs[k], "direct F2 tensor square smaller in degree " + std::to_string(k));
    larger = larger || direct.coeffs[k] > integral.coeffs[k];
  }
  t.expect(larger, "no char-2 discrepancy");
  return t.result(13, "Homogeneous spaces",
                  "Sp2/Sp(1)^2: " + q.to_string() + "; coset " + coset.to_string() + "; F2 tensor " +
                      integral.to_string() + " vs direct " + direct.to_string());
}

CheckResult check_expansion(const VerifyOptions& o) {
  const Groups defaults = presets(preset_names());
  const auto& gs = chosen(o, defaults);
  std::mt19937_64 rng(o.seed + 14);
  Tally t;
  for (const auto& d : gs) {
    const auto g = weyl(d);
    for (const Ring& ring : {Ring::rationals(), Ring::integers_mod(5)}) {
      const SchubertExpander ex(schubert_family(g, ring), std::make_shared<const SWBasis>(g, ring));
      for (int k = 0; k < o.samples; ++k) {
        const Polynomial f = random_polynomial(rng, ring, d.rank, 6);
        t.expect(ex.recombine(ex.expand(f)) == f, d.name + " over " + ring.to_string() + ": f = " +
                                                      f.to_string(d.var_names));
      }
    }
    // dim S_D = sum_w dim (S^W)_{D - l(w)} over Q.
    std::vector<std::size_t> inv;
    for (int k = 0; k <= o.bound; ++k) inv.push_back(invariant_lattice(*g, simple_reflection_elements(*g), k).size());
    for (int deg = 0; deg <= o.bound; ++deg) {
      std::size_t sum = 0;
      for (const auto& w : g->elements()) {
        if (w.length <= deg) sum += inv[deg - w.length];
      }
      t.expect(sum == monomials_of_degree(d.rank, deg).size(), d.name + ": rank identity fails in degree " +
                                                                   std::to_string(deg));
    }
  }
  return t.result(14, "Schubert expansion", names_of(gs) + " over Q and F5");
}

struct Suite {
  std::string name;
  std::function<CheckResult(const VerifyOptions&)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"schubert", check_schubert},   {"matrices", check_matrices},         {"torsion", check_torsion},
      {"antisymmetrizer", check_antisymmetrizer}, {"braid", check_braid}, {"nilhecke", check_nilhecke},
      {"leibniz", check_leibniz},     {"duality", check_duality},           {"psi", check_psi},
      {"discriminant", check_discriminant}, {"table", check_table},       {"strictness", check_strictness},
      {"homogeneous", check_homogeneous}, {"expansion", check_expansion},
  };
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.name);
  out.push_back("orthogonality");
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (std::size_t k = 0; k < suites().size(); ++k) {
    const auto& s = suites()[k];
    if (suite != "all" && suite != s.name) continue;
    try {
      out.push_back(s.run(options));
    } catch (const Error& e) {
      out.push_back({static_cast<int>(k + 1), s.name, false, e.what()});
    }
  }
  if (out.empty()) throw UnknownPreset("unknown suite '" + suite + "'");
  return out;
}

std::vector<std::string> orthogonality_experiment(const std::vector<RootDatum>& data) {
  std::vector<std::string> lines;
  for (const auto& d : data) {
    const auto g = weyl(d);
    const long ti = torsion_index(*g);
    const auto family = schubert_family(g, table_ring(ti));
    const auto gram = pairing_gram(family);
    bool antidiagonal = true;
    std::size_t off = 0;
    for (std::size_t a = 0; a < g->order(); ++a) {
      for (std::size_t b = 0; b < g->order(); ++b) {
        const bool partner = g->multiply(g->longest(), a) == b;
        const Polynomial expected = partner ? family.calc->one() : family.calc->zero();
        if (gram[a][b] != expected) {
          antidiagonal = false;
          ++off;
        }
      }
    }
    lines.push_back(d.name + ": B(S_w, S_w') = [w' = w0 w] " + (antidiagonal ? "holds" : "fails") + " (" +
                    std::to_string(off) + " entries differ)");
  }
  return lines;
}

}  // namespace nilhecke
