#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilhecke/invariants.hpp"

namespace nilhecke::fixtures {

/// Rows of the table of Weyl invariants for the low-rank groups.
const std::vector<TableRow>& table_rows();
const TableRow& table_row(const std::string& group);

/// Displayed reflection matrices: entries written in the S^W generators, rows
/// and columns in matrix_basis_order.
struct DisplayedMatrix {
  std::string group;
  int generator;  // 1-based
  std::vector<std::vector<std::string>> entries;
};
const std::vector<DisplayedMatrix>& displayed_matrices();

/// Displayed Schubert polynomials, word -> polynomial in the datum variables.
struct DisplayedFamily {
  std::string group;
  std::vector<std::pair<Word, std::string>> members;
};
const std::vector<DisplayedFamily>& displayed_families();

}  // namespace nilhecke::fixtures
