#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nilhecke/graded.hpp"
#include "nilhecke/schubert.hpp"

namespace nilhecke {

/// S_k modulo the ideal generated by W-invariant homogeneous relations,
/// truncated at a polynomial degree bound. Over a field the quotient has the
/// monomials outside the pivot columns of the ideal as basis; over Z and its
/// localizations only the module S_k itself (no relations) is supported.
class QuotientModule {
 public:
  QuotientModule(std::shared_ptr<const DemazureCalculus> calc, std::vector<Polynomial> relations, int bound);

  const DemazureCalculus& calc() const { return *calc_; }
  const Ring& ring() const { return calc_->ring(); }
  bool over_field() const { return ring().is_field(); }
  int bound() const { return bound_; }
  const std::vector<Polynomial>& relations() const { return relations_; }

  std::size_t dim(int d) const;
  /// Coordinates of the degree-d part of f in the quotient basis.
  linalg::Vector coords(const Polynomial& f, int d) const;
  /// Polynomial representative (a combination of basis monomials).
  Polynomial representative(const linalg::Vector& v, int d) const;
  /// Normal form of f modulo the relations, degree by degree.
  Polynomial reduce(const Polynomial& f) const;
  const std::vector<Exponent>& basis_monomials(int d) const { return levels_.at(d).basis; }

 private:
  struct Level {
    std::unique_ptr<MonomialBasis> monomials;
    std::unique_ptr<linalg::EchelonBasis> ideal;  // only over fields
    std::vector<Exponent> basis;
    std::vector<std::size_t> basis_columns;
  };
  std::shared_ptr<const DemazureCalculus> calc_;
  std::vector<Polynomial> relations_;
  int bound_;
  std::vector<Level> levels_;
};

struct GradedSubspace {
  std::vector<std::vector<Polynomial>> basis;  // per polynomial degree 0..bound
  std::vector<std::size_t> dims() const;
};

enum class InvariantKind { W, ID };

/// Per degree, {a : s_i a = a for all i} (W) or {a : d_{s_i} a = 0 for all i} (ID).
GradedSubspace invariants_graded(const QuotientModule& module, InvariantKind which);

struct Decomposition {
  GradedSubspace id_part;  // psi(A^W)
  GradedSubspace j_part;   // A^W intersected with ker(psi)
};

/// Splits A^W by the idempotent psi(u) = d_{w0}(S_{w0} u).
Decomposition decompose_AW(const QuotientModule& module, const SchubertFamily& family);

/// Applies psi on the module.
Polynomial module_psi(const QuotientModule& module, const SchubertFamily& family, const Polynomial& a);

struct BaseComparison {
  std::vector<std::size_t> base;        // span of (S^W)_Z in S_k
  std::vector<std::size_t> invariants;  // (S_k)^W
  std::vector<std::size_t> killed;      // (S_k)^{I(D)}
  std::vector<int> strict_degrees;      // degrees where base != invariants
};

BaseComparison base_vs_invariants(std::shared_ptr<const WeylGroup> group, const Ring& ring, int bound);

/// Row/column order of the displayed reflection matrices: descending length,
/// ties in the order the classes are listed for the named groups.
std::vector<std::size_t> matrix_basis_order(const WeylGroup& group);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// M[row][col] = coefficient of basis[row] in s_i(S_{basis[col]}), written in
/// the S^W generators.
PolyMatrix reflection_matrix(const SchubertExpander& expander, int i, const std::vector<std::size_t>& order);

/// Ordered product of the simple reflection matrices along a word.
PolyMatrix word_matrix(const SchubertExpander& expander, const Word& word, const std::vector<std::size_t>& order);

PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b);

// ---------------------------------------------------------------------------
// Ideals of the form (m, g) in S^W with g linear in a designated generator.

struct SimpleIdeal {
  long m = 0;              // 0: no integer generator
  std::string g;           // "" when absent; written in the generator names
  std::string designated;  // generator variable g is solved for

  std::string to_string() const;
};

/// Decides h in (m, g) by reducing mod m and eliminating the designated
/// variable through g. Throws MembershipUndecidable for other shapes.
bool ideal_contains(const SimpleIdeal& ideal, const Polynomial& h, const std::vector<std::string>& names);

struct TableGenerator {
  std::vector<std::pair<Word, std::string>> coeffs;  // Schubert class -> coefficient
  SimpleIdeal ideal;
};

struct TableRow {
  std::string group;
  long torsion = 1;
  std::vector<TableGenerator> generators;
  std::string j_ideal;
};

struct TableRowReport {
  std::string group;
  bool forward_ok = true;
  bool converse_ok = true;
  std::string first_failure;
  std::vector<std::string> details;
  bool pass() const { return forward_ok && converse_ok; }
};

/// Coefficient ring used for a group's table computations: Z[1/t].
Ring table_ring(long torsion);

TableRowReport table_row_check(const TableRow& row, int bound);

}  // namespace nilhecke
