#include "nilhecke/linalg.hpp"

#include <algorithm>

#include "nilhecke/errors.hpp"

namespace nilhecke::linalg {

EchelonBasis::EchelonBasis(Ring field, std::size_t ncols) : field_(std::move(field)), ncols_(ncols) {
  if (!field_.is_field()) throw UnsupportedRing("echelon basis needs a field, got " + field_.to_string());
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != ncols_) throw InternalError("vector length mismatch in echelon reduction");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    Scalar f = v[p];
    for (std::size_t j = p; j < ncols_; ++j) {
      if (rows_[r][j] != 0) v[j] = field_.normalize(v[j] - f * rows_[r][j]);
    }
  }
  return v;
}

bool EchelonBasis::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ncols_ && v[p] == 0) ++p;
  if (p == ncols_) return false;
  Scalar inv = field_.inverse(v[p]);
  for (std::size_t j = p; j < ncols_; ++j) {
    if (v[j] != 0) v[j] = field_.normalize(v[j] * inv);
  }
  // Clear the new pivot column from existing rows to stay fully reduced.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    Scalar f = row[p];
    for (std::size_t j = p; j < ncols_; ++j) {
      if (v[j] != 0) row[j] = field_.normalize(row[j] - f * v[j]);
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool EchelonBasis::contains(const Vector& v) const {
  Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s == 0; });
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

std::size_t rank(const Matrix& m, std::size_t ncols, const Ring& field) {
  EchelonBasis b(field, ncols);
  for (const auto& row : m) {
    Vector v(ncols);
    for (std::size_t j = 0; j < ncols; ++j) v[j] = field.normalize(row[j]);
    b.insert(std::move(v));
  }
  return b.rank();
}

Matrix kernel(const Matrix& m, std::size_t ncols, const Ring& field) {
  EchelonBasis b(field, ncols);
  for (const auto& row : m) {
    Vector v(ncols);
    for (std::size_t j = 0; j < ncols; ++j) v[j] = field.normalize(row[j]);
    b.insert(std::move(v));
  }
  Matrix out;
  for (std::size_t f : b.free_columns()) {
    Vector x(ncols, Scalar(0));
    x[f] = 1;
    for (std::size_t r = 0; r < b.rank(); ++r) {
      x[b.pivots()[r]] = field.neg(b.rows()[r][f]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vector> solve(const Matrix& a, std::size_t ncols, const Vector& b,
                            const Ring& field) {
  // Row reduce the augmented matrix [a | b].
  EchelonBasis e(field, ncols + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vector v(ncols + 1);
    for (std::size_t j = 0; j < ncols; ++j) v[j] = field.normalize(a[i][j]);
    v[ncols] = field.normalize(b[i]);
    e.insert(std::move(v));
  }
  Vector x(ncols, Scalar(0));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    std::size_t p = e.pivots()[r];
    if (p == ncols) return std::nullopt;
    x[p] = e.rows()[r][ncols];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a, const Ring& field) {
  const std::size_t n = a.size();
  Matrix m(n, Vector(2 * n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = field.normalize(a[i][j]);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    Scalar inv = field.inverse(m[c][c]);
    for (auto& x : m[c]) {
      if (x != 0) x = field.normalize(x * inv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Scalar f = m[r][c];
      for (std::size_t j = c; j < 2 * n; ++j) {
        if (m[c][j] != 0) m[r][j] = field.normalize(m[r][j] - f * m[c][j]);
      }
    }
  }
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + n, m[i].end());
  return out;
}

Vector mat_vec(const Matrix& a, const Vector& x, const Ring& ring) {
  Vector y(a.size(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (a[i][j] != 0 && x[j] != 0) s += a[i][j] * x[j];
    }
    y[i] = ring.normalize(s);
  }
  return y;
}

namespace {

// Integer row echelon on the first `ncols` columns of `rows` with unimodular
// row operations applied to whole rows. Returns the number of pivot rows;
// these come first, zero rows (in the first ncols columns) after.
std::size_t integer_echelon(IntMatrix& rows, std::size_t ncols, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    while (true) {
      // Smallest nonzero absolute value in column c at or below r.
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) {
        if (rows[r][c] < 0) {
          for (auto& x : rows[r]) x = -x;
        }
        if (pivots) pivots->push_back(c);
        ++r;
        break;
      }
    }
  }
  return r;
}

}  // namespace

IntMatrix row_hnf(IntMatrix rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = integer_echelon(rows, ncols, &pivots);
  rows.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t c = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[k][c].get_mpz_t(), rows[i][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < ncols; ++j) rows[k][j] -= q * rows[i][j];
    }
  }
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& m, std::size_t ncols) {
  const std::size_t neq = m.size();
  IntMatrix aug(ncols, IntVector(neq + ncols, 0));
  for (std::size_t i = 0; i < ncols; ++i) {
    for (std::size_t e = 0; e < neq; ++e) aug[i][e] = m[e][i];
    aug[i][neq + i] = 1;
  }
  std::size_t r = integer_echelon(aug, neq, nullptr);
  IntMatrix basis;
  for (std::size_t i = r; i < ncols; ++i) {
    basis.emplace_back(aug[i].begin() + neq, aug[i].end());
  }
  return row_hnf(std::move(basis), ncols);
}

std::vector<mpz_class> smith_invariants(IntMatrix m, std::size_t ncols) {
  const std::size_t nrows = m.size();
  std::size_t t = 0;
  while (t < nrows && t < ncols) {
    // Find a nonzero entry of minimal absolute value in the lower-right block.
    std::size_t bi = nrows, bj = ncols;
    for (std::size_t i = t; i < nrows; ++i) {
      for (std::size_t j = t; j < ncols; ++j) {
        if (m[i][j] != 0 && (bi == nrows || abs(m[i][j]) < abs(m[bi][bj]))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == nrows) break;
    std::swap(m[t], m[bi]);
    for (auto& row : m) std::swap(row[t], row[bj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < nrows; ++i) {
      if (m[i][t] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
      for (std::size_t j = t; j < ncols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < ncols; ++j) {
      if (m[t][j] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
      for (std::size_t i = t; i < nrows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility condition: fold any offending entry into row t.
    bool divides = true;
    for (std::size_t i = t + 1; i < nrows && divides; ++i) {
      for (std::size_t j = t + 1; j < ncols; ++j) {
        if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
          for (std::size_t k = t; k < ncols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
      }
    }
    if (!divides) continue;
    ++t;
  }
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < t; ++i) out.push_back(abs(m[i][i]));
  return out;
}

IntMatrix to_integer(const Matrix& m) {
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    IntVector r;
    r.reserve(row.size());
    for (const auto& x : row) {
      if (x.get_den() != 1) throw InternalError("non-integral entry in integer matrix");
      r.push_back(x.get_num());
    }
    out.push_back(std::move(r));
  }
  return out;
}

Matrix to_scalar(const IntMatrix& m) {
  Matrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Vector r;
    r.reserve(row.size());
    for (const auto& x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nilhecke::linalg
