#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "nilhecke/ring.hpp"

namespace nilhecke::linalg {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major
using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

/// Incrementally maintained reduced row echelon basis of a subspace of
/// field^n. Used for ranks, spans, normal forms modulo a subspace and
/// membership tests.
class EchelonBasis {
 public:
  EchelonBasis(Ring field, std::size_t ncols);

  /// Reduces `v` modulo the current span. The result has zeros in every pivot column.
  Vector reduce(Vector v) const;
  /// Adds `v` to the span; returns false when it was already dependent.
  bool insert(Vector v);
  bool contains(const Vector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const Matrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Columns that are not pivots, in increasing order.
  std::vector<std::size_t> free_columns() const;
  const Ring& field() const { return field_; }

 private:
  Ring field_;
  std::size_t ncols_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& m, std::size_t ncols, const Ring& field);

/// Basis of { x : m x = 0 } over a field.
Matrix kernel(const Matrix& m, std::size_t ncols, const Ring& field);

/// Some solution of a x = b over a field, if one exists.
std::optional<Vector> solve(const Matrix& a, std::size_t ncols, const Vector& b,
                            const Ring& field);

/// Inverse of a square matrix over a field; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a, const Ring& field);

Vector mat_vec(const Matrix& a, const Vector& x, const Ring& ring);

/// Saturated Z-basis of { x in Z^n : m x = 0 } in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& m, std::size_t ncols);

/// Hermite normal form (row style, positive pivots, reduced above pivots) of
/// the lattice spanned by the rows; zero rows removed.
IntMatrix row_hnf(IntMatrix rows, std::size_t ncols);

/// Nonzero invariant factors d1 | d2 | ... of an integer matrix.
std::vector<mpz_class> smith_invariants(IntMatrix m, std::size_t ncols);

IntMatrix to_integer(const Matrix& m);
Matrix to_scalar(const IntMatrix& m);

}  // namespace nilhecke::linalg
