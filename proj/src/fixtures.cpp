#include "nilhecke/fixtures.hpp"

#include "nilhecke/errors.hpp"

namespace nilhecke::fixtures {

// Words are 0-based: {0, 1} is s1 s2.
const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {"U2", 1, {{{{{0}, "1"}}, {2, "p1", "p1"}}}, "(2, d)"},
      {"U3",
       1,
       {{{{{0, 1, 0}, "1"}, {{1, 0}, "p1"}, {{1}, "p2"}, {{0}, "p1^2"}}, {2, "p1*p2 + p3", "p3"}}},
       "(2, d)"},
      {"SU2", 1, {{{{{0}, "1"}}, {2, "", ""}}}, "(2)"},
      {"SU3", 1, {{{{{0, 1, 0}, "1"}, {{1}, "q2"}}, {2, "q3", "q3"}}}, "(2, d)"},
      {"SO3", 2, {}, "(1)"},
      {"PSU3", 3, {{{{{0, 1, 0}, "1"}, {{1}, "q2"}}, {2, "q3", "q3"}}}, "(2, d)"},
      {"Sp2",
       1,
       {{{{{0, 1, 0, 1}, "1"}}, {2, "p1", "p1"}},
        {{{{1, 0, 1}, "1"}}, {2, "", ""}},
        {{{{0, 1}, "1"}}, {2, "", ""}},
        {{{{1, 0}, "1"}}, {2, "p1", "p1"}},
        {{{{1}, "1"}}, {2, "", ""}}},
       "(2)"},
  };
  return rows;
}

const TableRow& table_row(const std::string& group) {
  for (const auto& r : table_rows()) {
    if (r.group == group) return r;
  }
  throw UnknownPreset("no table row for '" + group + "'");
}

const std::vector<DisplayedMatrix>& displayed_matrices() {
  static const std::vector<DisplayedMatrix> mats = {
      {"U2", 1, {{"-1", "0"}, {"p1", "1"}}},
      {"U3",
       1,
       {{"-1", "0", "0", "0", "0", "0"},
        {"p1", "1", "-1", "0", "0", "0"},
        {"0", "0", "-1", "0", "0", "0"},
        {"0", "0", "p1", "1", "1", "0"},
        {"0", "0", "0", "0", "-1", "0"},
        {"-p3", "0", "-p2", "0", "0", "1"}}},
      {"U3",
       2,
       {{"-1", "0", "0", "0", "0", "0"},
        {"0", "-1", "0", "0", "0", "0"},
        {"0", "-1", "1", "0", "0", "0"},
        {"0", "0", "0", "-1", "0", "0"},
        {"p2", "p1", "0", "1", "1", "0"},
        {"-p3", "0", "0", "p1", "0", "1"}}},
      {"Sp2",
       1,
       {{"-1", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "1", "-1", "0", "0", "0", "0", "0"},
        {"0", "0", "-1", "0", "0", "0", "0", "0"},
        {"p1", "0", "0", "1", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "-1", "0", "0", "0"},
        {"0", "0", "p1", "0", "0", "1", "1", "0"},
        {"0", "0", "0", "0", "0", "0", "-1", "0"},
        {"-p1^2", "0", "0", "0", "p1", "0", "0", "1"}}},
      {"Sp2",
       2,
       {{"-1", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "-1", "0", "0", "0", "0", "0", "0"},
        {"0", "-2", "1", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "-1", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "1", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "-1", "0", "0"},
        {"0", "2*p1", "0", "0", "0", "2", "1", "0"},
        {"0", "0", "0", "2*p1", "0", "0", "0", "1"}}},
  };
  return mats;
}

const std::vector<DisplayedFamily>& displayed_families() {
  static const std::vector<DisplayedFamily> fams = {
      {"U2", {{{0}, "e1"}, {{}, "1"}}},
      {"U3",
       {{{0, 1, 0}, "e1^2*e2"},
        {{0, 1}, "e1*e2"},
        {{1, 0}, "e1^2"},
        {{1}, "e1 + e2"},
        {{0}, "e1"},
        {{}, "1"}}},
      {"Sp2",
       {{{0, 1, 0, 1}, "e1^3*e2"},
        {{1, 0, 1}, "e1^2*e2 + e1*e2^2"},
        {{0, 1, 0}, "e1^3"},
        {{0, 1}, "e1^2 + e1*e2 + e2^2"},
        {{1, 0}, "e1^2"},
        {{1}, "e1 + e2"},
        {{0}, "e1"},
        {{}, "1"}}},
  };
  return fams;
}

}  // namespace nilhecke::fixtures
